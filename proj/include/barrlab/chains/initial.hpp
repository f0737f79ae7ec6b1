#pragma once

#include <functional>

#include "barrlab/chains/chain.hpp"
#include "barrlab/lifting/distlaw.hpp"

namespace barrlab {

/// The chain 1 = M0 -> H1 -> H^2 1 -> ... with forward maps H^n !, where
/// ! : M0 -> H M0 is the unique algebra map. Requires |M0| = 1.
class InitialChain {
 public:
  /// Throws ZeroObjectViolation when |M0| != 1.
  InitialChain(DistLawEMPtr law, ChainPtr chain);

  const ChainPtr& chain() const { return chain_; }
  const DistLawEM& law() const { return *law_; }

  /// !(*) in H1.
  Element bang() const { return bang_; }
  /// H^n ! : H^n 1 -> H^{n+1} 1.
  const FinFn& forward_map(Card n) const;
  Element forward(Card n, Element x) const { return forward_map(n)(x); }
  Element push(Element x, Card from, Card to) const;

  /// f(i_n(x)): pushed to the top of the chain, then read off at every level.
  LimitPoint colim_to_lim(Element x, Card n) const;
  /// h_n(x) = f(i_{n+1}(H^n !(p_n x))). Needs n + 1 <= depth.
  LimitPoint density(const LimitPoint& x, Card n) const;

 private:
  DistLawEMPtr law_;
  ChainPtr chain_;
  Element bang_ = 0;
  std::vector<FinFn> forward_;
};

/// |M0|, reported when the zero-object condition fails.
Card empty_free_algebra_size(const FinMonad& m);

/// The point with representative seq(n).rep(n) at level n <= depth. The
/// sequence must satisfy p_i(seq(i)) = p_i(seq(j)) for i < j <= depth;
/// otherwise NotCauchy names the first offending pair.
LimitPoint cauchy_limit_point(const std::function<LimitPoint(Card)>& seq, Card depth);

}  // namespace barrlab
