#include "barrlab/lifting/distlaw.hpp"

#include "barrlab/error.hpp"

namespace barrlab {

namespace {

Card functor_card(const FunctorExpr& f, Card n) {
  auto s = functor_size(f, n);
  if (!s) {
    throw Error(ErrorKind::BlowUpGuard,
                "|" + f.to_string() + "| at size " + std::to_string(n) + " is not representable");
  }
  return *s;
}

}  // namespace

NaturalFamily::NaturalFamily(std::string name, FunctorExpr functor, MonadPtr monad,
                             ComponentFn fn, bool monad_outside_in_domain)
    : name_(std::move(name)),
      functor_(std::move(functor)),
      monad_(std::move(monad)),
      fn_(std::move(fn)),
      monad_outside_in_domain_(monad_outside_in_domain) {}

Card NaturalFamily::dom_size(Card n) const {
  if (monad_outside_in_domain_) return monad_size(*monad_, functor_card(functor_, n));
  return functor_card(functor_, monad_size(*monad_, n));
}

Card NaturalFamily::cod_size(Card n) const {
  if (monad_outside_in_domain_) return functor_card(functor_, monad_size(*monad_, n));
  return monad_size(*monad_, functor_card(functor_, n));
}

Element NaturalFamily::apply(Card n, Element e) const { return fn_(n, e); }

Arrow NaturalFamily::component(Card n) const {
  auto fn = fn_;
  return Arrow{dom_size(n), cod_size(n), [fn, n](Element e) { return fn(n, e); }};
}

std::shared_ptr<const FinFn> NaturalFamily::table(Card n) const {
  {
    std::lock_guard lock(memo_mutex_);
    auto it = memo_.find(n);
    if (it != memo_.end()) return it->second;
  }
  const FinSet dom("dom", dom_size(n));
  const FinSet cod("cod", cod_size(n));
  auto fn = fn_;
  auto built = std::make_shared<const FinFn>(
      FinFn::tabulate(dom, cod, [&](Element e) { return fn(n, e); }));
  std::lock_guard lock(memo_mutex_);
  // a concurrent fill computed the same table; keep the first
  return memo_.emplace(n, std::move(built)).first->second;
}

FinSet DistLawEM::source(const FinSet& x) const {
  return monad_obj(*monad(), eval_functor(functor(), x));
}

FinSet DistLawEM::target(const FinSet& x) const {
  return eval_functor(functor(), monad_obj(*monad(), x));
}

FinSet DistLawKl::source(const FinSet& x) const {
  return eval_functor(functor(), monad_obj(*monad(), x));
}

FinSet DistLawKl::target(const FinSet& x) const {
  return monad_obj(*monad(), eval_functor(functor(), x));
}

EMAlgebra default_constant_algebra(const MonadPtr& m, const FinSet& a) {
  const Card size = a.size();
  const Card msize = monad_size(*m, size);
  if (const auto* sm = dynamic_cast<const SemimoduleMonad*>(m.get())) {
    const Semiring& k = *sm->semiring();
    if (k.size() == size) {
      return EMAlgebra{a, Arrow{msize, size, [m, sm, size](Element phi) {
                                  const Semiring& k = *sm->semiring();
                                  const auto c = sm->coefficients(size, phi);
                                  Scalar sum = k.zero();
                                  for (Card v = 0; v < size; ++v) sum = k.add(sum, k.mul(c[v], v));
                                  return sum;
                                }}};
    }
  }
  if (dynamic_cast<const ExceptionMonad*>(m.get()) && size > 0) {
    const Card e = monad_size(*m, 0);
    return EMAlgebra{a, Arrow{msize, size, [e](Element t) { return t < e ? 0 : t - e; }}};
  }
  if (dynamic_cast<const WriterMonad*>(m.get()) && size > 0) {
    return EMAlgebra{a, Arrow{msize, size, [size](Element t) { return t % size; }}};
  }
  throw Error(ErrorKind::MissingComponent,
              "no default " + m->name() + "-algebra on constant set " + a.name());
}

namespace {

Element product_component(const FunctorExpr& f, const MonadPtr& m,
                          const ConstantAlgebras& algebras, Card n, Element w) {
  using Kind = FunctorExpr::Kind;
  switch (f.kind()) {
    case Kind::Const: {
      auto it = algebras.find(f.set().name());
      if (it == algebras.end()) {
        throw Error(ErrorKind::MissingComponent, "no algebra for constant " + f.set().name());
      }
      return it->second.structure.apply(w);
    }
    case Kind::Id: return w;
    case Kind::Prod:
    case Kind::Pow: {
      const Card fx = functor_card(f, n);
      const auto sizes_x = factor_sizes(f, n);
      const auto sizes_mx = factor_sizes(f, monad_size(*m, n));
      std::vector<Element> parts(sizes_x.size());
      for (std::size_t i = 0; i < parts.size(); ++i) {
        const Arrow proj{fx, sizes_x[i],
                         [&sizes_x, i](Element e) { return split_tuple(sizes_x, e)[i]; }};
        const auto& child = f.kind() == Kind::Prod ? f.children()[i] : f.children()[0];
        parts[i] = product_component(child, m, algebras, n, m->map(proj, w));
      }
      return join_tuple(sizes_mx, parts);
    }
    case Kind::Compose: {
      const FunctorExpr& outer = f.children()[0];
      const FunctorExpr& inner = f.children()[1];
      const Card ix = functor_card(inner, n);
      const Element step = product_component(outer, m, algebras, ix, w);
      const Arrow inner_law{monad_size(*m, ix), functor_card(inner, monad_size(*m, n)),
                            [&](Element e) { return product_component(inner, m, algebras, n, e); }};
      return functor_map_element(outer, inner_law, step);
    }
    case Kind::Coprod:
      throw Error(ErrorKind::MissingComponent,
                  "coproducts have no canonical distributive law over " + m->name());
  }
  return w;
}

void collect_constants(const FunctorExpr& f, const MonadPtr& m, ConstantAlgebras& algebras) {
  if (f.kind() == FunctorExpr::Kind::Const) {
    if (!algebras.count(f.set().name())) {
      algebras.emplace(f.set().name(), default_constant_algebra(m, f.set()));
    }
    return;
  }
  if (f.kind() == FunctorExpr::Kind::Coprod) {
    throw Error(ErrorKind::MissingComponent,
                "coproducts have no canonical distributive law over " + m->name());
  }
  for (const auto& c : f.children()) collect_constants(c, m, algebras);
}

}  // namespace

DistLawEMPtr product_law(const FunctorExpr& h, const MonadPtr& m, ConstantAlgebras algebras) {
  collect_constants(h, m, algebras);
  auto shared = std::make_shared<const ConstantAlgebras>(std::move(algebras));
  return std::make_shared<DistLawEM>(
      "product:" + h.to_string(), h, m, [h, m, shared](Card n, Element w) {
        return product_component(h, m, *shared, n, w);
      });
}

namespace {

ComponentFn table_component(std::string name, std::map<Card, std::vector<Element>> tables) {
  auto shared = std::make_shared<const std::map<Card, std::vector<Element>>>(std::move(tables));
  return [name = std::move(name), shared](Card n, Element e) -> Element {
    auto it = shared->find(n);
    if (it == shared->end()) {
      throw Error(ErrorKind::MissingComponent,
                  name + " has no component at carrier size " + std::to_string(n));
    }
    if (e >= it->second.size()) {
      throw Error(ErrorKind::MissingComponent, name + " component at size " +
                                                   std::to_string(n) + " has no entry " +
                                                   std::to_string(e));
    }
    return it->second[e];
  };
}

}  // namespace

DistLawEMPtr table_law_em(std::string name, const FunctorExpr& h, const MonadPtr& m,
                          std::map<Card, std::vector<Element>> tables) {
  auto fn = table_component(name, std::move(tables));
  return std::make_shared<DistLawEM>(std::move(name), h, m, std::move(fn));
}

DistLawKlPtr table_law_kl(std::string name, const FunctorExpr& t, const MonadPtr& m,
                          std::map<Card, std::vector<Element>> tables) {
  auto fn = table_component(name, std::move(tables));
  return std::make_shared<DistLawKl>(std::move(name), t, m, std::move(fn));
}

DistLawEMPtr identity_law_em(const MonadPtr& m) {
  return std::make_shared<DistLawEM>("identity", FunctorExpr::id(), m,
                                     [](Card, Element e) { return e; });
}

DistLawKlPtr identity_law_kl(const MonadPtr& m) {
  return std::make_shared<DistLawKl>("identity", FunctorExpr::id(), m,
                                     [](Card, Element e) { return e; });
}

std::pair<DistLawEMPtr, DistLawEMPtr> gset_distlaws(const Group& g) {
  auto monad = std::make_shared<const WriterMonad>(g.monoid, "writer:" + g.carrier().name());
  const FunctorExpr h = FunctorExpr::prod({FunctorExpr::constant(g.carrier()), FunctorExpr::id()});
  auto group = std::make_shared<const Group>(g);
  // M H X = G x (G x X) and H M X = G x (G x X) share one index layout.
  auto make = [&](const std::string& name, auto f) {
    return std::make_shared<const DistLawEM>(
        name, h, monad, [group, f](Card n, Element w) {
          const Card order = group->carrier().size();
          const Element z = w % n;
          const Element y = (w / n) % order;
          const Element x = w / (n * order);
          const auto [p, q] = f(*group, x, y);
          return (p * order + q) * n + z;
        });
  };
  auto f1 = [](const Group& gr, Element x, Element y) {
    return std::pair{gr.mul(x, y), x};
  };
  auto f2 = [](const Group& gr, Element x, Element y) {
    return std::pair{gr.mul(gr.mul(x, y), gr.inverse[x]), x};
  };
  return {make("gset1:" + g.carrier().name(), f1), make("gset2:" + g.carrier().name(), f2)};
}

DistLawEMPtr corrupt_law(const DistLawEMPtr& law, Card n, Element at, Element value) {
  return std::make_shared<const DistLawEM>(
      law->name() + "*", law->functor(), law->monad(), [law, n, at, value](Card k, Element e) {
        return k == n && e == at ? value : law->apply(k, e);
      });
}

DistLawKlPtr corrupt_law(const DistLawKlPtr& law, Card n, Element at, Element value) {
  return std::make_shared<const DistLawKl>(
      law->name() + "*", law->functor(), law->monad(), [law, n, at, value](Card k, Element e) {
        return k == n && e == at ? value : law->apply(k, e);
      });
}

namespace {

class SwappedMonad : public FinMonad {
 public:
  SwappedMonad(MonadPtr base, Card n, Element a, Element b)
      : base_(std::move(base)), n_(n), a_(a), b_(b) {}
  std::string name() const override { return base_->name() + "*"; }
  std::optional<Card> size(Card n) const override { return base_->size(n); }
  Element unit(Card n, Element x) const override { return base_->unit(n, x); }
  Element map(const Arrow& f, Element t) const override { return base_->map(f, t); }
  Element mult(Card n, Element tt) const override {
    if (n == n_ && tt == a_) return base_->mult(n, b_);
    if (n == n_ && tt == b_) return base_->mult(n, a_);
    return base_->mult(n, tt);
  }
  std::string label(const FinSet& x, Element t) const override { return base_->label(x, t); }
  bool biproducts() const override { return base_->biproducts(); }
  const Semiring* semiring() const override { return base_->semiring(); }

 private:
  MonadPtr base_;
  Card n_;
  Element a_;
  Element b_;
};

}  // namespace

MonadPtr swap_mult_entries(const MonadPtr& m, Card n, Element a, Element b) {
  return std::make_shared<const SwappedMonad>(m, n, a, b);
}

}  // namespace barrlab
