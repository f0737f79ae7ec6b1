#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "barrlab/chains/chain.hpp"
#include "barrlab/core/algebra.hpp"
#include "barrlab/lifting/distlaw.hpp"

namespace barrlab {

/// The algebras a_n : M(H^n 1) -> H^n 1 with a_0 the unique map and
/// a_{n+1} = H(a_n) o lambda_{H^n 1}. Evaluation is pointwise, so a level is
/// usable as long as M(H^n 1) is representable; levels small enough to
/// enumerate are tabulated once.
class LevelAlgebras {
 public:
  LevelAlgebras(DistLawEMPtr law, ChainPtr chain);

  const DistLawEM& law() const { return *law_; }
  const MonadPtr& monad() const { return law_->monad(); }
  const ChainPtr& chain() const { return chain_; }

  Element apply(Card n, Element t) const;
  EMAlgebra algebra(Card n) const;
  /// Throws BlowUpGuard when M(H^n 1) is too large.
  std::shared_ptr<const FinFn> table(Card n) const;

 private:
  Element apply_pointwise(Card n, Element t) const;
  bool enumerable(Card n) const;

  DistLawEMPtr law_;
  ChainPtr chain_;
  mutable std::mutex mutex_;
  mutable std::map<Card, std::shared_ptr<const FinFn>> tables_;
};

/// gamma at level n of an element u of M(points): a_n(M p_n (u)).
Element gamma_level(const LevelAlgebras& levels, const std::vector<LimitPoint>& points,
                    Element u, Card n);
/// The limit point gamma(u) for u in M(points).
LimitPoint gamma(std::shared_ptr<const LevelAlgebras> levels, std::vector<LimitPoint> points,
                 Element u);

}  // namespace barrlab
