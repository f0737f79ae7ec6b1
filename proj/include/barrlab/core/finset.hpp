#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "barrlab/core/card.hpp"

namespace barrlab {

/// A finite set whose elements are the canonical integers 0..size-1, each
/// with a display label. Derived sets (functor images, monad images) compute
/// labels on demand so that large carriers never materialize strings.
class FinSet {
 public:
  using Labeler = std::function<std::string(Element)>;

  FinSet() = default;
  FinSet(std::string name, Card size, Labeler labeler = {});

  /// {0, ..., n-1} labelled by the decimal digits of each element.
  static FinSet canonical(Card n);
  /// Labels must be pairwise distinct; element i carries labels[i].
  static FinSet labelled(std::string name, std::vector<std::string> labels);

  const std::string& name() const { return name_; }
  Card size() const { return size_; }
  bool empty() const { return size_ == 0; }
  bool contains(Element e) const { return e < size_; }

  std::string label(Element e) const;
  /// Linear search by label; intended for parsing user input.
  std::optional<Element> find(std::string_view label) const;

  /// Throws BlowUpGuard when the set is larger than the enumeration guard.
  void require_enumerable(std::string_view what) const;

 private:
  std::string name_;
  Card size_ = 0;
  std::shared_ptr<const Labeler> labeler_;
};

/// A function given pointwise, used where materializing a table would be
/// wasteful (e.g. the inner arrow of a composed functor).
struct Arrow {
  Card dom = 0;
  Card cod = 0;
  std::function<Element(Element)> apply;
};

/// A total function between finite sets stored as a table.
class FinFn {
 public:
  FinFn() = default;
  FinFn(FinSet dom, FinSet cod, std::vector<Element> table);

  static FinFn identity(const FinSet& set);
  static FinFn constant(const FinSet& dom, const FinSet& cod, Element value);
  /// Materializes fn over dom (parallel, guarded).
  static FinFn tabulate(const FinSet& dom, const FinSet& cod,
                        const std::function<Element(Element)>& fn);

  const FinSet& dom() const { return dom_; }
  const FinSet& cod() const { return cod_; }
  const std::vector<Element>& table() const { return *table_; }
  Element operator()(Element x) const { return (*table_)[x]; }

  Arrow arrow() const;
  bool is_bijection() const;

  friend bool operator==(const FinFn& a, const FinFn& b);

 private:
  FinSet dom_;
  FinSet cod_;
  std::shared_ptr<const std::vector<Element>> table_ =
      std::make_shared<const std::vector<Element>>();
};

/// g after f.
FinFn compose(const FinFn& g, const FinFn& f);
Arrow compose(const Arrow& g, const Arrow& f);

/// Every function dom -> cod in lexicographic order of their tables
/// (first element most significant). Guarded by the blow-up bound.
std::vector<FinFn> all_functions(const FinSet& dom, const FinSet& cod);

/// Smallest element where the tables differ, if any.
std::optional<Element> first_difference(const FinFn& a, const FinFn& b);

}  // namespace barrlab
