#include "barrlab/chains/initial.hpp"

#include "barrlab/error.hpp"

namespace barrlab {

Card empty_free_algebra_size(const FinMonad& m) { return monad_size(m, 0); }

InitialChain::InitialChain(DistLawEMPtr law, ChainPtr chain)
    : law_(std::move(law)), chain_(std::move(chain)) {
  const MonadPtr& m = law_->monad();
  const Card zero = empty_free_algebra_size(*m);
  if (zero != 1) {
    throw Error(ErrorKind::ZeroObjectViolation,
                "|" + m->name() + "(0)| = " + std::to_string(zero) + ", not 1");
  }
  if (chain_->depth() < 1) {
    throw Error(ErrorKind::DepthExceeded, "the initial chain needs depth at least 1");
  }
  const FunctorExpr& h = chain_->functor();
  const Card h1 = chain_->size(1);
  // ! = a_1 o M(0 -> H1) on the single element of M0, a_1 = H(a_0) o lambda_1
  const Arrow empty{0, h1, [](Element e) { return e; }};
  const Element w = m->map(empty, 0);
  const Arrow a0{monad_size(*m, 1), 1, [](Element) -> Element { return 0; }};
  bang_ = functor_map_element(h, a0, law_->apply(1, w));

  forward_.push_back(FinFn::constant(chain_->level(0), chain_->level(1), bang_));
  for (Card n = 1; n < chain_->depth(); ++n) {
    const FinFn lifted = eval_functor_map(h, forward_.back());
    forward_.emplace_back(chain_->level(n), chain_->level(n + 1), lifted.table());
  }
}

const FinFn& InitialChain::forward_map(Card n) const {
  if (n >= forward_.size()) {
    throw Error(ErrorKind::DepthExceeded, "no forward map out of level " + std::to_string(n) +
                                              " in a chain of depth " +
                                              std::to_string(chain_->depth()));
  }
  return forward_[n];
}

Element InitialChain::push(Element x, Card from, Card to) const {
  for (Card n = from; n < to; ++n) x = forward(n, x);
  return x;
}

LimitPoint InitialChain::colim_to_lim(Element x, Card n) const {
  const Card top = chain_->depth();
  if (!chain_->level(n).contains(x)) {
    throw Error(ErrorKind::DomainMismatch, "element outside level " + std::to_string(n));
  }
  const Element pushed = push(x, n, top);
  return LimitPoint::from_top(chain_, pushed);
}

LimitPoint InitialChain::density(const LimitPoint& x, Card n) const {
  if (x.chain() != chain_) {
    throw Error(ErrorKind::DomainMismatch, "limit point lives on a different chain");
  }
  if (n + 1 > chain_->depth()) {
    throw Error(ErrorKind::DepthExceeded, "h_" + std::to_string(n) + " needs level " +
                                              std::to_string(n + 1) + " but the chain has depth " +
                                              std::to_string(chain_->depth()));
  }
  return colim_to_lim(forward(n, x.rep(n)), n + 1);
}

LimitPoint cauchy_limit_point(const std::function<LimitPoint(Card)>& seq, Card depth) {
  std::vector<LimitPoint> terms;
  for (Card n = 0; n <= depth; ++n) terms.push_back(seq(n));
  for (Card i = 0; i <= depth; ++i) {
    for (Card j = i + 1; j <= depth; ++j) {
      if (terms[i].rep(i) != terms[j].rep(i)) {
        throw Error(ErrorKind::NotCauchy, "terms " + std::to_string(i) + " and " +
                                              std::to_string(j) + " differ at level " +
                                              std::to_string(i));
      }
    }
  }
  auto shared = std::make_shared<const std::vector<LimitPoint>>(std::move(terms));
  return LimitPoint(shared->front().chain(), [shared, depth](Card n) {
    if (n > depth) {
      throw Error(ErrorKind::DepthExceeded, "the limit was only validated to depth " +
                                                std::to_string(depth));
    }
    return (*shared)[n].rep(n);
  });
}

}  // namespace barrlab
