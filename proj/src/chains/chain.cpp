#include "barrlab/chains/chain.hpp"

#include "barrlab/error.hpp"

namespace barrlab {

TerminalChain::TerminalChain(FunctorExpr h, Card depth) : h_(std::move(h)) {
  levels_.push_back(FinSet::labelled("1", {"*"}));
  for (Card n = 1; n <= depth; ++n) {
    auto s = functor_size(h_, levels_.back().size());
    if (!s || *s > blowup_guard()) {
      throw Error(ErrorKind::BlowUpGuard,
                  "level " + std::to_string(n) + " of the chain for " + h_.to_string() +
                      " is above the enumeration guard of " + std::to_string(blowup_guard()));
    }
    FinSet next = eval_functor(h_, levels_.back());
    levels_.push_back(FinSet("H^" + std::to_string(n) + "1", next.size(),
                             [next](Element e) { return next.label(e); }));
  }
  for (Card n = 0; n < depth; ++n) {
    if (n == 0) {
      connect_.push_back(FinFn::constant(levels_[1], levels_[0], 0));
    } else {
      connect_.push_back(eval_functor_map(h_, connect_[n - 1]));
      connect_.back() = FinFn(levels_[n + 1], levels_[n], connect_.back().table());
    }
  }
}

const FinSet& TerminalChain::level(Card n) const {
  if (n >= levels_.size()) {
    throw Error(ErrorKind::DepthExceeded, "level " + std::to_string(n) +
                                              " is beyond the chain depth " +
                                              std::to_string(depth()));
  }
  return levels_[n];
}

const FinFn& TerminalChain::connect_map(Card n) const {
  if (n >= connect_.size()) {
    throw Error(ErrorKind::DepthExceeded, "no connecting map out of level " +
                                              std::to_string(n + 1));
  }
  return connect_[n];
}

Element TerminalChain::connect(Card n, Element e) const { return connect_map(n)(e); }

Element TerminalChain::project(Element e, Card from, Card to) const {
  if (to > from) throw Error(ErrorKind::InvalidInput, "projection must go down the chain");
  level(from);
  for (Card n = from; n > to; --n) e = connect(n - 1, e);
  return e;
}

LimitPoint::LimitPoint(ChainPtr chain, Generator gen)
    : chain_(std::move(chain)), gen_(std::move(gen)), cache_(std::make_shared<Cache>()) {}

LimitPoint LimitPoint::from_top(ChainPtr chain, Element top) {
  const Card d = chain->depth();
  if (!chain->level(d).contains(top)) {
    throw Error(ErrorKind::DomainMismatch, "element outside the top level of the chain");
  }
  const TerminalChain* c = chain.get();
  return LimitPoint(chain, [c, top, d](Card n) { return c->project(top, d, n); });
}

LimitPoint LimitPoint::random(ChainPtr chain, std::mt19937_64& rng) {
  std::uniform_int_distribution<Element> pick(0, chain->size(chain->depth()) - 1);
  return from_top(chain, pick(rng));
}

Element LimitPoint::rep(Card n) const {
  if (n > chain_->depth()) {
    throw Error(ErrorKind::DepthExceeded, "representative at depth " + std::to_string(n) +
                                              " requested from a chain of depth " +
                                              std::to_string(chain_->depth()));
  }
  {
    std::lock_guard lock(cache_->mutex);
    auto it = cache_->reps.find(n);
    if (it != cache_->reps.end()) return it->second;
  }
  const Element value = gen_(n);
  std::lock_guard lock(cache_->mutex);
  cache_->reps.emplace(n, value);
  return value;
}

std::optional<Card> LimitPoint::incompatibility(Card up_to) const {
  for (Card n = 0; n < up_to && n < chain_->depth(); ++n) {
    if (chain_->connect(n, rep(n + 1)) != rep(n)) return n;
  }
  return std::nullopt;
}

DyadicDist distance(const LimitPoint& x, const LimitPoint& y, Card probe_depth) {
  for (Card n = 0; n <= probe_depth; ++n) {
    if (x.rep(n) != y.rep(n)) return DyadicDist::at(n);
  }
  return DyadicDist::beyond(probe_depth);
}

std::vector<FinFn> anamorphism_cone(const FinFn& xi, Card n, const TerminalChain& chain) {
  const FinSet& c = xi.dom();
  const auto hc = functor_size(chain.functor(), c.size());
  if (!hc || *hc != xi.cod().size()) {
    throw Error(ErrorKind::DomainMismatch, "coalgebra structure must map " + c.name() +
                                               " into " + chain.functor().to_string());
  }
  if (n > chain.depth()) {
    throw Error(ErrorKind::DepthExceeded, "anamorphism level " + std::to_string(n) +
                                              " is beyond the chain depth " +
                                              std::to_string(chain.depth()));
  }
  std::vector<FinFn> cone;
  cone.push_back(FinFn::constant(c, chain.level(0), 0));
  const FunctorExpr& h = chain.functor();
  for (Card k = 1; k <= n; ++k) {
    const Arrow prev = cone.back().arrow();
    const Arrow x = xi.arrow();
    cone.push_back(FinFn::tabulate(c, chain.level(k), [&](Element e) {
      return functor_map_element(h, prev, x.apply(e));
    }));
  }
  return cone;
}

FinFn anamorphism(const FinFn& xi, Card n, const TerminalChain& chain) {
  return anamorphism_cone(xi, n, chain).back();
}

}  // namespace barrlab
