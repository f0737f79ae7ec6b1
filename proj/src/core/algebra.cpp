#include "barrlab/core/algebra.hpp"

#include "barrlab/error.hpp"

namespace barrlab {

EMAlgebra algebra_from_table(const FinFn& structure) {
  return EMAlgebra{structure.cod(), structure.arrow()};
}

FinFn structure_table(const FinMonad& m, const EMAlgebra& a) {
  const FinSet dom = monad_obj(m, a.carrier);
  return FinFn::tabulate(dom, a.carrier, a.structure.apply);
}

EMAlgebra free_algebra(const MonadPtr& m, const FinSet& x) {
  const FinSet mx = monad_obj(*m, x);
  if (mx.size() > blowup_guard()) {
    throw Error(ErrorKind::NonFinitePreserving,
                mx.name() + " has " + std::to_string(mx.size()) +
                    " elements, above the enumeration guard");
  }
  const Card mmx = monad_size(*m, mx.size());
  const Card n = x.size();
  return EMAlgebra{mx, Arrow{mmx, mx.size(), [m, n](Element tt) { return m->mult(n, tt); }}};
}

EMAlgebra terminal_algebra(const MonadPtr& m) {
  return EMAlgebra{FinSet::labelled("1", {"*"}),
                   Arrow{monad_size(*m, 1), 1, [](Element) -> Element { return 0; }}};
}

Card function_count(Card n, Card k) {
  auto c = checked_pow(k, n);
  if (!c || *c > blowup_guard()) {
    throw Error(ErrorKind::BlowUpGuard, "too many functions " + std::to_string(n) + " -> " +
                                            std::to_string(k) + " to enumerate");
  }
  return *c;
}

Arrow function_at(Card n, Card k, Element index) {
  auto table = std::make_shared<std::vector<Element>>(n);
  for (Card i = n; i-- > 0;) {
    (*table)[i] = index % k;
    index /= k;
  }
  return Arrow{n, k, [table](Element x) { return (*table)[x]; }};
}

std::string describe_arrow(const Arrow& f) {
  std::string s = "[";
  for (Card x = 0; x < f.dom; ++x) s += (x ? "," : "") + std::to_string(f.apply(x));
  return s + "]";
}

namespace {

// Merges per-instance results of one law into a single line.
LawResult merge(const std::string& law, const std::string& scope,
                const std::vector<LawResult>& parts) {
  LawResult out{law, scope, Verdict::Pass, 0, std::nullopt, {}};
  for (const auto& p : parts) {
    out.checked += p.checked;
    if (p.verdict == Verdict::Fail && out.verdict != Verdict::Fail) {
      out.verdict = Verdict::Fail;
      out.counterexample = p.counterexample;
      if (out.counterexample && !p.scope.empty()) {
        out.counterexample->context = p.scope + (out.counterexample->context.empty()
                                                     ? ""
                                                     : " " + out.counterexample->context);
      }
    } else if (p.verdict == Verdict::Skipped && out.verdict == Verdict::Pass) {
      out.verdict = Verdict::Skipped;
      out.note = p.note;
    }
  }
  return out;
}

// Law instantiated at every function f: X -> Y, with the element index of the
// check domain running fastest.
LawResult per_function(const std::string& law, Card n, Card max_size,
                       const std::function<PointwiseLaw(Card m)>& build) {
  std::vector<LawResult> parts;
  for (Card k = 0; k <= max_size; ++k) {
    parts.push_back(check_or_skip(law, scope_of(n, k), [&] { return build(k); }));
  }
  return merge(law, scope_of(n), parts);
}

}  // namespace

LawReport check_monad_laws(const MonadPtr& m, Card max_size) {
  if (max_size < 1) throw Error(ErrorKind::InvalidInput, "max_size must be at least 1");
  LawReport report;
  report.subject = "monad " + m->name();
  for (Card n = 0; n <= max_size; ++n) {
    const FinSet x = FinSet::canonical(n);
    const FinSet mx = monad_obj(*m, x);
    if (mx.size() > blowup_guard()) {
      throw Error(ErrorKind::NonFinitePreserving,
                  "|" + mx.name() + "| = " + std::to_string(mx.size()) +
                      " exceeds the blow-up guard of " + std::to_string(blowup_guard()));
    }
    const std::string scope = scope_of(n);
    auto mx_label = [mx](Element t) { return mx.label(t); };

    report.results.push_back(check_or_skip("functor identity", scope, [&] {
      const Arrow id{n, n, [](Element e) { return e; }};
      return PointwiseLaw{"functor identity", scope, mx.name(), mx.size(),
                          [m, id](Element t) { return std::pair{m->map(id, t), t}; },
                          mx_label, mx_label, {}};
    }));

    std::vector<LawResult> composition;
    for (Card k = 0; k <= max_size; ++k) {
      for (Card p = 0; p <= max_size; ++p) {
        const std::string sub = "|X|=" + std::to_string(n) + ",|Y|=" + std::to_string(k) +
                                ",|Z|=" + std::to_string(p);
        composition.push_back(check_or_skip("functor composition", sub, [&] {
          const Card fs = function_count(n, k);
          const Card gs = function_count(k, p);
          const FinSet mz = monad_obj(*m, FinSet::canonical(p));
          const Card block = mx.size();
          const Card total = *checked_mul(*checked_mul(fs, gs), block);
          return PointwiseLaw{
              "functor composition", sub, mx.name() + " x functions", total,
              [=](Element e) {
                const Element t = e % block;
                const Element fg = e / block;
                const Arrow f = function_at(n, k, fg / gs);
                const Arrow g = function_at(k, p, fg % gs);
                const Element lhs = m->map(compose(g, f), t);
                const Element rhs = m->map(g, m->map(f, t));
                return std::pair{lhs, rhs};
              },
              [mx, block](Element e) { return mx.label(e % block); },
              [mz](Element v) { return mz.label(v); },
              [=](Element e) {
                const Element fg = e / block;
                return "f=" + describe_arrow(function_at(n, k, fg / gs)) +
                       " g=" + describe_arrow(function_at(k, p, fg % gs));
              }};
        }));
      }
    }
    report.results.push_back(merge("functor composition", scope, composition));

    report.results.push_back(per_function("unit naturality", n, max_size, [&](Card k) {
      const Card fs = function_count(n, k);
      const FinSet my = monad_obj(*m, FinSet::canonical(k));
      const Card block = n;
      return PointwiseLaw{
          "unit naturality", scope_of(n, k), "X x functions", fs * block,
          [=](Element e) {
            const Arrow f = function_at(n, k, e / std::max<Card>(block, 1));
            const Element x = e % block;
            return std::pair{m->map(f, m->unit(n, x)), m->unit(k, f.apply(x))};
          },
          [block](Element e) { return std::to_string(e % block); },
          [my](Element v) { return my.label(v); },
          [=](Element e) { return "f=" + describe_arrow(function_at(n, k, e / block)); }};
    }));

    report.results.push_back(per_function("multiplication naturality", n, max_size, [&](Card k) {
      const Card fs = function_count(n, k);
      const FinSet mmx = monad_obj(*m, mx);
      const FinSet my = monad_obj(*m, FinSet::canonical(k));
      monad_size(*m, my.size());
      const Card block = mmx.size();
      auto total = checked_mul(fs, block);
      if (!total) throw Error(ErrorKind::BlowUpGuard, "naturality domain not representable");
      return PointwiseLaw{
          "multiplication naturality", scope_of(n, k), mmx.name() + " x functions", *total,
          [=](Element e) {
            const Arrow f = function_at(n, k, e / block);
            const Element tt = e % block;
            const Arrow mf = monad_arrow(m, f);
            return std::pair{m->map(f, m->mult(n, tt)), m->mult(k, m->map(mf, tt))};
          },
          [mmx, block](Element e) { return mmx.label(e % block); },
          [my](Element v) { return my.label(v); },
          [=](Element e) { return "f=" + describe_arrow(function_at(n, k, e / block)); }};
    }));

    report.results.push_back(check_or_skip("left unit", scope, [&] {
      monad_size(*m, mx.size());
      const Card mn = mx.size();
      return PointwiseLaw{"left unit", scope, mx.name(), mx.size(),
                          [m, n, mn](Element t) {
                            return std::pair{m->mult(n, m->unit(mn, t)), t};
                          },
                          mx_label, mx_label, {}};
    }));

    report.results.push_back(check_or_skip("right unit", scope, [&] {
      monad_size(*m, mx.size());
      const Arrow u{n, mx.size(), [m, n](Element x) { return m->unit(n, x); }};
      return PointwiseLaw{"right unit", scope, mx.name(), mx.size(),
                          [m, n, u](Element t) { return std::pair{m->mult(n, m->map(u, t)), t}; },
                          mx_label, mx_label, {}};
    }));

    report.results.push_back(check_or_skip("associativity", scope, [&] {
      const FinSet mmx = monad_obj(*m, mx);
      const FinSet mmmx = monad_obj(*m, mmx);
      const Arrow mult_x{mmx.size(), mx.size(), [m, n](Element tt) { return m->mult(n, tt); }};
      const Card mn = mx.size();
      return PointwiseLaw{"associativity", scope, mmmx.name(), mmmx.size(),
                          [m, n, mn, mult_x](Element ttt) {
                            return std::pair{m->mult(n, m->map(mult_x, ttt)),
                                             m->mult(n, m->mult(mn, ttt))};
                          },
                          [mmmx](Element e) { return mmmx.label(e); }, mx_label, {}};
    }));
  }
  return report;
}

LawReport check_em_algebra(const MonadPtr& m, const EMAlgebra& a) {
  const Card c = a.carrier.size();
  const auto mc = m->size(c);
  if (!mc || a.structure.dom != *mc || a.structure.cod != c) {
    throw Error(ErrorKind::DomainMismatch,
                "algebra structure on " + a.carrier.name() + " must map " + m->name() + "(" +
                    a.carrier.name() + ") to " + a.carrier.name());
  }
  LawReport report;
  report.subject = "algebra on " + a.carrier.name() + " for " + m->name();
  const std::string scope = "carrier " + a.carrier.name();
  const FinSet carrier = a.carrier;
  auto value_label = [carrier](Element e) { return carrier.label(e); };

  report.results.push_back(check_or_skip("algebra unit", scope, [&] {
    return PointwiseLaw{"algebra unit", scope, carrier.name(), c,
                        [m, c, s = a.structure](Element x) {
                          return std::pair{s.apply(m->unit(c, x)), x};
                        },
                        value_label, value_label, {}};
  }));

  report.results.push_back(check_or_skip("algebra multiplication", scope, [&] {
    const FinSet mcs = monad_obj(*m, carrier);
    const FinSet mmc = monad_obj(*m, mcs);
    return PointwiseLaw{"algebra multiplication", scope, mmc.name(), mmc.size(),
                        [m, c, s = a.structure](Element tt) {
                          return std::pair{s.apply(m->mult(c, tt)), s.apply(m->map(s, tt))};
                        },
                        [mmc](Element e) { return mmc.label(e); }, value_label, {}};
  }));
  return report;
}

}  // namespace barrlab
