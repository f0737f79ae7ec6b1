#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <random>
#include <vector>

#include "barrlab/chains/dyadic.hpp"
#include "barrlab/core/functor.hpp"

namespace barrlab {

/// Levels H^0 1 ... H^N 1 with t_n = H^n t : H^{n+1} 1 -> H^n 1.
class TerminalChain {
 public:
  /// Throws BlowUpGuard when a level is too large to enumerate.
  TerminalChain(FunctorExpr h, Card depth);

  const FunctorExpr& functor() const { return h_; }
  Card depth() const { return levels_.size() - 1; }
  const FinSet& level(Card n) const;
  Card size(Card n) const { return level(n).size(); }

  /// t_n applied to an element of H^{n+1} 1.
  Element connect(Card n, Element e) const;
  const FinFn& connect_map(Card n) const;
  /// Image of an element of H^from 1 in H^to 1 (to <= from).
  Element project(Element e, Card from, Card to) const;

 private:
  FunctorExpr h_;
  std::vector<FinSet> levels_;
  std::vector<FinFn> connect_;
};

using ChainPtr = std::shared_ptr<const TerminalChain>;

/// A point of the limit given by its representatives x_n in H^n 1, computed on
/// demand and cached. Queries beyond the chain depth raise DepthExceeded.
class LimitPoint {
 public:
  using Generator = std::function<Element(Card n)>;

  LimitPoint(ChainPtr chain, Generator gen);

  /// The point whose representative at the top level is `top`.
  static LimitPoint from_top(ChainPtr chain, Element top);
  static LimitPoint random(ChainPtr chain, std::mt19937_64& rng);

  Element rep(Card n) const;
  const ChainPtr& chain() const { return chain_; }
  Card depth() const { return chain_->depth(); }
  /// First level n <= up_to with t_n(x_{n+1}) != x_n.
  std::optional<Card> incompatibility(Card up_to) const;

 private:
  struct Cache {
    std::mutex mutex;
    std::map<Card, Element> reps;
  };
  ChainPtr chain_;
  Generator gen_;
  std::shared_ptr<Cache> cache_;
};

/// 2^-n for the first level n <= probe_depth where the representatives
/// differ, otherwise an upper bound at the probe depth.
DyadicDist distance(const LimitPoint& x, const LimitPoint& y, Card probe_depth);

/// alpha_n : C -> H^n 1 for a coalgebra xi : C -> HC. Throws DepthExceeded
/// when n is deeper than the chain.
FinFn anamorphism(const FinFn& xi, Card n, const TerminalChain& chain);
/// The whole cone alpha_0 .. alpha_n.
std::vector<FinFn> anamorphism_cone(const FinFn& xi, Card n, const TerminalChain& chain);

}  // namespace barrlab
