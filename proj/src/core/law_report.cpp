#include "barrlab/core/law_report.hpp"

#include <algorithm>

#include "barrlab/error.hpp"
#include "barrlab/kernels.hpp"

namespace barrlab {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Skipped: return "skipped";
  }
  return "?";
}

bool LawReport::passed() const {
  return std::all_of(results.begin(), results.end(),
                     [](const LawResult& r) { return r.verdict == Verdict::Pass; });
}

bool LawReport::failed() const {
  return std::any_of(results.begin(), results.end(),
                     [](const LawResult& r) { return r.verdict == Verdict::Fail; });
}

bool LawReport::complete() const {
  return std::none_of(results.begin(), results.end(),
                      [](const LawResult& r) { return r.verdict == Verdict::Skipped; });
}

std::uint64_t LawReport::checked() const {
  std::uint64_t total = 0;
  for (const auto& r : results) total += r.checked;
  return total;
}

void LawReport::append(const LawReport& other) {
  results.insert(results.end(), other.results.begin(), other.results.end());
}

const LawResult* LawReport::find(std::string_view law, std::string_view scope) const {
  for (const auto& r : results) {
    if (r.law == law && (scope.empty() || r.scope == scope)) return &r;
  }
  return nullptr;
}

LawResult check_pointwise(const PointwiseLaw& law) {
  LawResult result{law.law, law.scope, Verdict::Pass, 0, std::nullopt, {}};
  if (law.count > blowup_guard()) {
    result.verdict = Verdict::Skipped;
    result.note = law.carrier + " has " + std::to_string(law.count) +
                  " elements, above the enumeration guard of " + std::to_string(blowup_guard());
    return result;
  }
  const auto bad = kernels::first_violation(law.count, [&](Element e) {
    const auto [lhs, rhs] = law.sides(e);
    return lhs != rhs;
  });
  if (!bad) {
    result.checked = law.count;
    return result;
  }
  result.verdict = Verdict::Fail;
  result.checked = *bad + 1;
  const auto [lhs, rhs] = law.sides(*bad);
  Counterexample c;
  c.carrier = law.carrier;
  c.element = *bad;
  c.label = law.element_label ? law.element_label(*bad) : std::to_string(*bad);
  c.lhs = law.value_label ? law.value_label(lhs) : std::to_string(lhs);
  c.rhs = law.value_label ? law.value_label(rhs) : std::to_string(rhs);
  if (law.context) c.context = law.context(*bad);
  result.counterexample = std::move(c);
  return result;
}

LawResult check_or_skip(const std::string& law, const std::string& scope,
                        const std::function<PointwiseLaw()>& build) {
  try {
    return check_pointwise(build());
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::BlowUpGuard && e.kind() != ErrorKind::NonFinitePreserving) throw;
    return LawResult{law, scope, Verdict::Skipped, 0, std::nullopt, e.what()};
  }
}

std::string scope_of(Card n) { return "|X|=" + std::to_string(n); }

std::string scope_of(Card n, Card m) {
  return "|X|=" + std::to_string(n) + ",|Y|=" + std::to_string(m);
}

}  // namespace barrlab
