#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>

#include "barrlab/core/algebra.hpp"
#include "barrlab/core/functor.hpp"
#include "barrlab/core/monad.hpp"

namespace barrlab {

/// Component at a carrier of size n, applied to one element.
using ComponentFn = std::function<Element(Card n, Element e)>;

/// Shared implementation of both law directions: a functor F, a monad M and
/// pointwise components between F M X and M F X in one of the two orders.
class NaturalFamily {
 public:
  NaturalFamily(std::string name, FunctorExpr functor, MonadPtr monad, ComponentFn fn,
                bool monad_outside_in_domain);

  const std::string& name() const { return name_; }
  const FunctorExpr& functor() const { return functor_; }
  const MonadPtr& monad() const { return monad_; }

  Card dom_size(Card n) const;
  Card cod_size(Card n) const;
  Element apply(Card n, Element e) const;
  Arrow component(Card n) const;
  /// Materialized component, memoized per carrier size (guarded).
  std::shared_ptr<const FinFn> table(Card n) const;

 private:
  std::string name_;
  FunctorExpr functor_;
  MonadPtr monad_;
  ComponentFn fn_;
  bool monad_outside_in_domain_;
  mutable std::mutex memo_mutex_;
  mutable std::map<Card, std::shared_ptr<const FinFn>> memo_;
};

/// lambda: M H => H M. Corresponds to a lifting of H to algebras.
class DistLawEM : public NaturalFamily {
 public:
  DistLawEM(std::string name, FunctorExpr h, MonadPtr m, ComponentFn fn)
      : NaturalFamily(std::move(name), std::move(h), std::move(m), std::move(fn), true) {}
  /// Source and target of the component at |X| = n.
  FinSet source(const FinSet& x) const;
  FinSet target(const FinSet& x) const;
};

/// varsigma: T M => M T. Corresponds to a lifting of T to the Kleisli category.
class DistLawKl : public NaturalFamily {
 public:
  DistLawKl(std::string name, FunctorExpr t, MonadPtr m, ComponentFn fn)
      : NaturalFamily(std::move(name), std::move(t), std::move(m), std::move(fn), false) {}
  FinSet source(const FinSet& x) const;
  FinSet target(const FinSet& x) const;
};

using DistLawEMPtr = std::shared_ptr<const DistLawEM>;
using DistLawKlPtr = std::shared_ptr<const DistLawKl>;

/// Algebras chosen for the constant parts of a polynomial functor, by set name.
using ConstantAlgebras = std::map<std::string, EMAlgebra>;

/// An algebra on a constant set for the builtin monads: linear combination for
/// a semimodule monad on a set the size of its semiring, pointed at the first
/// element for exception monads, trivial action for writer monads.
EMAlgebra default_constant_algebra(const MonadPtr& m, const FinSet& a);

/// The law induced by the algebras on the constants of a functor built from
/// constants, identity, products, powers and composition. Coproducts have no
/// such law and raise MissingComponent.
DistLawEMPtr product_law(const FunctorExpr& h, const MonadPtr& m,
                         ConstantAlgebras algebras = {});

/// The law with explicit component tables per carrier size.
DistLawEMPtr table_law_em(std::string name, const FunctorExpr& h, const MonadPtr& m,
                          std::map<Card, std::vector<Element>> tables);
DistLawKlPtr table_law_kl(std::string name, const FunctorExpr& t, const MonadPtr& m,
                          std::map<Card, std::vector<Element>> tables);

/// H = Id and lambda = id.
DistLawEMPtr identity_law_em(const MonadPtr& m);
DistLawKlPtr identity_law_kl(const MonadPtr& m);

/// The two laws for HX = G x X over the writer monad of G, from
/// f1(x,y) = (xy, x) and f2(x,y) = (x y x^-1, x).
std::pair<DistLawEMPtr, DistLawEMPtr> gset_distlaws(const Group& g);

/// Overrides a single component entry.
DistLawEMPtr corrupt_law(const DistLawEMPtr& law, Card n, Element at, Element value);
DistLawKlPtr corrupt_law(const DistLawKlPtr& law, Card n, Element at, Element value);

/// The monad with entries a and b of m_X swapped at |X| = n.
MonadPtr swap_mult_entries(const MonadPtr& m, Card n, Element a, Element b);

}  // namespace barrlab
