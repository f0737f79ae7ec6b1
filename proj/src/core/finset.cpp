#include "barrlab/core/finset.hpp"

#include <algorithm>
#include <set>

#include "barrlab/error.hpp"
#include "barrlab/kernels.hpp"

namespace barrlab {

FinSet::FinSet(std::string name, Card size, Labeler labeler)
    : name_(std::move(name)), size_(size) {
  if (labeler) labeler_ = std::make_shared<const Labeler>(std::move(labeler));
}

FinSet FinSet::canonical(Card n) {
  return FinSet(std::to_string(n), n);
}

FinSet FinSet::labelled(std::string name, std::vector<std::string> labels) {
  std::set<std::string> seen;
  for (const auto& l : labels) {
    if (!seen.insert(l).second) {
      throw Error(ErrorKind::InvalidInput,
                  "set '" + name + "' has duplicate element '" + l + "'");
    }
  }
  auto shared = std::make_shared<const std::vector<std::string>>(std::move(labels));
  const Card n = shared->size();
  return FinSet(std::move(name), n, [shared](Element e) { return (*shared)[e]; });
}

std::string FinSet::label(Element e) const {
  if (labeler_) return (*labeler_)(e);
  return std::to_string(e);
}

std::optional<Element> FinSet::find(std::string_view wanted) const {
  for (Element e = 0; e < size_; ++e) {
    if (label(e) == wanted) return e;
  }
  return std::nullopt;
}

void FinSet::require_enumerable(std::string_view what) const {
  if (size_ > blowup_guard()) {
    throw Error(ErrorKind::BlowUpGuard,
                std::string(what) + " has " + std::to_string(size_) +
                    " elements, above the enumeration guard of " +
                    std::to_string(blowup_guard()));
  }
}

FinFn::FinFn(FinSet dom, FinSet cod, std::vector<Element> table)
    : dom_(std::move(dom)), cod_(std::move(cod)) {
  if (table.size() != dom_.size()) {
    throw Error(ErrorKind::DomainMismatch,
                "function table has " + std::to_string(table.size()) +
                    " entries but its domain has " + std::to_string(dom_.size()));
  }
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (!cod_.contains(table[i])) {
      throw Error(ErrorKind::DomainMismatch,
                  "function maps element " + std::to_string(i) + " outside its codomain");
    }
  }
  table_ = std::make_shared<const std::vector<Element>>(std::move(table));
}

FinFn FinFn::identity(const FinSet& set) {
  set.require_enumerable("identity domain");
  std::vector<Element> t(set.size());
  for (Element i = 0; i < set.size(); ++i) t[i] = i;
  return FinFn(set, set, std::move(t));
}

FinFn FinFn::constant(const FinSet& dom, const FinSet& cod, Element value) {
  dom.require_enumerable("constant-map domain");
  return FinFn(dom, cod, std::vector<Element>(dom.size(), value));
}

FinFn FinFn::tabulate(const FinSet& dom, const FinSet& cod,
                      const std::function<Element(Element)>& fn) {
  dom.require_enumerable("domain of " + cod.name() + "-valued table");
  return FinFn(dom, cod, kernels::tabulate(dom.size(), fn));
}

Arrow FinFn::arrow() const {
  auto table = table_;
  return Arrow{dom_.size(), cod_.size(), [table](Element x) { return (*table)[x]; }};
}

bool FinFn::is_bijection() const {
  if (dom_.size() != cod_.size()) return false;
  std::vector<bool> hit(cod_.size(), false);
  for (Element y : *table_) {
    if (hit[y]) return false;
    hit[y] = true;
  }
  return true;
}

bool operator==(const FinFn& a, const FinFn& b) {
  return a.dom_.size() == b.dom_.size() && a.cod_.size() == b.cod_.size() &&
         *a.table_ == *b.table_;
}

FinFn compose(const FinFn& g, const FinFn& f) {
  if (f.cod().size() != g.dom().size()) {
    throw Error(ErrorKind::DomainMismatch,
                "cannot compose: codomain of size " + std::to_string(f.cod().size()) +
                    " vs domain of size " + std::to_string(g.dom().size()));
  }
  std::vector<Element> t(f.dom().size());
  for (Element x = 0; x < f.dom().size(); ++x) t[x] = g(f(x));
  return FinFn(f.dom(), g.cod(), std::move(t));
}

Arrow compose(const Arrow& g, const Arrow& f) {
  if (f.cod != g.dom) {
    throw Error(ErrorKind::DomainMismatch, "cannot compose arrows of mismatched sizes");
  }
  return Arrow{f.dom, g.cod, [g, f](Element x) { return g.apply(f.apply(x)); }};
}

std::vector<FinFn> all_functions(const FinSet& dom, const FinSet& cod) {
  auto count = checked_pow(cod.size(), dom.size());
  if (!count || *count > blowup_guard()) {
    throw Error(ErrorKind::BlowUpGuard, "too many functions " + dom.name() + " -> " +
                                            cod.name() + " to enumerate");
  }
  std::vector<FinFn> out;
  out.reserve(*count);
  std::vector<Element> digits(dom.size(), 0);
  for (Card k = 0; k < *count; ++k) {
    out.emplace_back(dom, cod, digits);
    // increment, last position least significant
    for (std::size_t i = digits.size(); i-- > 0;) {
      if (++digits[i] < cod.size()) break;
      digits[i] = 0;
    }
  }
  return out;
}

std::optional<Element> first_difference(const FinFn& a, const FinFn& b) {
  if (a.dom().size() != b.dom().size()) {
    throw Error(ErrorKind::DomainMismatch, "comparing functions with different domains");
  }
  for (Element x = 0; x < a.dom().size(); ++x) {
    if (a(x) != b(x)) return x;
  }
  return std::nullopt;
}

}  // namespace barrlab
