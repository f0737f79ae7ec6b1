#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "barrlab/core/finset.hpp"

namespace barrlab {

/// Syntax tree of a polynomial Set-endofunctor.
///
/// Elements of H(X) are enumerated in lexicographic order of their
/// construction tuples: products and powers put the first component in the
/// most significant position, coproducts list summands in order.
class FunctorExpr {
 public:
  enum class Kind { Const, Id, Prod, Coprod, Pow, Compose };

  static FunctorExpr constant(FinSet value);
  static FunctorExpr id();
  static FunctorExpr prod(std::vector<FunctorExpr> factors);
  static FunctorExpr coprod(std::vector<FunctorExpr> summands);
  static FunctorExpr pow(FinSet exponent, FunctorExpr body);
  static FunctorExpr compose(FunctorExpr outer, FunctorExpr inner);

  Kind kind() const;
  /// Constant value for Const, exponent for Pow.
  const FinSet& set() const;
  /// Factors, summands, {body} for Pow, {outer, inner} for Compose.
  const std::vector<FunctorExpr>& children() const;

  std::string to_string() const;

 private:
  struct Node;
  explicit FunctorExpr(std::shared_ptr<const Node> node);
  std::shared_ptr<const Node> node_;
};

/// |H(X)| for |X| = n, or nullopt when it does not fit in 64 bits.
std::optional<Card> functor_size(const FunctorExpr& expr, Card n);

/// H on objects. Throws BlowUpGuard when |H(X)| is not representable.
FinSet eval_functor(const FunctorExpr& expr, const FinSet& x);

/// H on arrows, pointwise.
Element functor_map_element(const FunctorExpr& expr, const Arrow& f, Element e);
Arrow eval_functor_arrow(const FunctorExpr& expr, const Arrow& f);

/// H on arrows, materialized (guarded, parallel).
FinFn eval_functor_map(const FunctorExpr& expr, const FinFn& f);

/// Component sizes of a Prod or Pow node applied to a set of size n.
std::vector<Card> factor_sizes(const FunctorExpr& expr, Card n);
/// Splits an element of a Prod/Pow image into its components.
std::vector<Element> split_tuple(const std::vector<Card>& sizes, Element e);
Element join_tuple(const std::vector<Card>& sizes, const std::vector<Element>& parts);

/// Splits an element of a Coprod image into (summand index, inner element).
std::pair<std::size_t, Element> split_coproduct(const FunctorExpr& expr, Card n, Element e);
Element inject_coproduct(const FunctorExpr& expr, Card n, std::size_t summand, Element inner);

}  // namespace barrlab
