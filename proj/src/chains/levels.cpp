#include "barrlab/chains/levels.hpp"

#include "barrlab/error.hpp"

namespace barrlab {

LevelAlgebras::LevelAlgebras(DistLawEMPtr law, ChainPtr chain)
    : law_(std::move(law)), chain_(std::move(chain)) {
  if (law_->functor().to_string() != chain_->functor().to_string()) {
    throw Error(ErrorKind::DomainMismatch, "law for " + law_->functor().to_string() +
                                               " used with the chain of " +
                                               chain_->functor().to_string());
  }
}

bool LevelAlgebras::enumerable(Card n) const {
  auto s = monad()->size(chain_->size(n));
  return s && *s <= blowup_guard();
}

Element LevelAlgebras::apply_pointwise(Card n, Element t) const {
  if (n == 0) return 0;
  const Card below = chain_->size(n - 1);
  const Card m_below = monad_size(*monad(), below);
  const Arrow prev{m_below, below, [this, n](Element s) { return apply(n - 1, s); }};
  return functor_map_element(chain_->functor(), prev, law_->apply(below, t));
}

Element LevelAlgebras::apply(Card n, Element t) const {
  chain_->level(n);
  if (enumerable(n)) return (*table(n))(t);
  return apply_pointwise(n, t);
}

std::shared_ptr<const FinFn> LevelAlgebras::table(Card n) const {
  {
    std::lock_guard lock(mutex_);
    auto it = tables_.find(n);
    if (it != tables_.end()) return it->second;
  }
  // fill lower levels first so the parallel fill below only reads cached tables
  if (n > 0 && enumerable(n - 1)) table(n - 1);
  const FinSet& level = chain_->level(n);
  const FinSet dom = monad_obj(*monad(), level);
  auto built = std::make_shared<const FinFn>(
      FinFn::tabulate(dom, level, [&](Element t) { return apply_pointwise(n, t); }));
  std::lock_guard lock(mutex_);
  return tables_.emplace(n, std::move(built)).first->second;
}

EMAlgebra LevelAlgebras::algebra(Card n) const {
  const FinSet& level = chain_->level(n);
  return EMAlgebra{level, Arrow{monad_size(*monad(), level.size()), level.size(),
                                [this, n](Element t) { return apply(n, t); }}};
}

Element gamma_level(const LevelAlgebras& levels, const std::vector<LimitPoint>& points,
                    Element u, Card n) {
  const Card k = points.size();
  const Arrow pn{k, levels.chain()->size(n), [&points, n](Element i) { return points[i].rep(n); }};
  return levels.apply(n, levels.monad()->map(pn, u));
}

LimitPoint gamma(std::shared_ptr<const LevelAlgebras> levels, std::vector<LimitPoint> points,
                 Element u) {
  const auto k = monad_size(*levels->monad(), points.size());
  if (u >= k) throw Error(ErrorKind::DomainMismatch, "element outside M(points)");
  auto shared = std::make_shared<const std::vector<LimitPoint>>(std::move(points));
  return LimitPoint(levels->chain(), [levels, shared, u](Card n) {
    return gamma_level(*levels, *shared, u, n);
  });
}

}  // namespace barrlab
