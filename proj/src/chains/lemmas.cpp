#include "barrlab/chains/lemmas.hpp"

#include <algorithm>

#include "barrlab/error.hpp"
#include "barrlab/lifting/checks.hpp"

namespace barrlab {

StandIn initial_stand_in(const InitialChain& ic, Card levels) {
  const TerminalChain& chain = *ic.chain();
  chain.level(levels);
  std::vector<Card> offset;
  std::vector<Card> level_of;
  std::vector<std::string> labels;
  for (Card n = 0; n <= levels; ++n) {
    offset.push_back(level_of.size());
    for (Element x = 0; x < chain.size(n); ++x) {
      level_of.push_back(n);
      labels.push_back(std::to_string(n) + ":" + chain.level(n).label(x));
    }
  }
  const FinSet c = FinSet::labelled("C" + std::to_string(levels), labels);
  const FinSet hc = eval_functor(chain.functor(), c);
  const FunctorExpr& h = chain.functor();
  std::vector<Element> table(c.size());
  for (Element e = 0; e < c.size(); ++e) {
    const Card n = level_of[e];
    const Element x = e - offset[n];
    // x in H^n 1 = H(H^{n-1} 1); level 0 unfolds through !
    const Card below = n == 0 ? 0 : n - 1;
    const Element hx = n == 0 ? ic.bang() : x;
    const Arrow inj{chain.size(below), c.size(),
                    [base = offset[below]](Element y) { return base + y; }};
    table[e] = functor_map_element(h, inj, hx);
  }
  return StandIn{FinFn(c, hc, std::move(table)), std::move(level_of)};
}

namespace {

struct Prepared {
  MonadPtr m;
  FinSet mc;
  std::vector<FinFn> alpha_c;   // C -> H^n 1
  std::vector<FinFn> alpha_mc;  // MC -> H^n 1
  FinFn xi_mc;
};

Prepared prepare(const LevelAlgebras& levels, const FinFn& xi, Card depth) {
  const TerminalChain& chain = *levels.chain();
  if (depth > chain.depth()) {
    throw Error(ErrorKind::DepthExceeded, "lemma depth " + std::to_string(depth) +
                                              " exceeds the chain depth " +
                                              std::to_string(chain.depth()));
  }
  const MonadPtr m = levels.monad();
  const FinFn xi_mc = lift_coalgebra(levels.law(), xi);
  return Prepared{m, xi_mc.dom(), anamorphism_cone(xi, depth, chain),
                  anamorphism_cone(xi_mc, depth, chain), xi_mc};
}

std::string level_scope(Card n) { return "n=" + std::to_string(n); }

}  // namespace

LawReport check_lemma1(const LevelAlgebras& levels, const FinFn& xi, Card depth) {
  LawReport report;
  report.subject = "lemma1 for " + levels.law().name() + " on " + xi.dom().name();
  const Prepared p = prepare(levels, xi, depth);
  const TerminalChain& chain = *levels.chain();
  for (Card n = 0; n <= depth; ++n) {
    const FinSet& level = chain.level(n);
    const FinFn& amc = p.alpha_mc[n];
    const Arrow ac = p.alpha_c[n].arrow();
    const Card cn = xi.dom().size();
    report.results.push_back(check_or_skip("cone of MC", level_scope(n), [&] {
      return PointwiseLaw{"cone of MC", level_scope(n), p.mc.name(), p.mc.size(),
                          [&levels, &amc, m = p.m, ac, n](Element u) {
                            return std::pair{amc(u), levels.apply(n, m->map(ac, u))};
                          },
                          [mc = p.mc](Element u) { return mc.label(u); },
                          [level](Element v) { return level.label(v); },
                          [cn](Element) { return "|C|=" + std::to_string(cn); }};
    }));
  }
  return report;
}

LawReport check_lemma2(const LevelAlgebras& levels, const FinFn& xi, Card depth) {
  LawReport report;
  report.subject = "lemma2 for " + levels.law().name() + " on " + xi.dom().name();
  const Prepared p = prepare(levels, xi, depth);
  const TerminalChain& chain = *levels.chain();
  const FunctorExpr& h = chain.functor();
  const Card cn = xi.dom().size();
  const MonadPtr m = p.m;
  auto gamma_at = [&levels, &p, m](Card n, Element u) {
    return levels.apply(n, m->map(p.alpha_c[n].arrow(), u));
  };
  auto mc_label = [mc = p.mc](Element u) { return mc.label(u); };

  // tabulate gamma_n once; every check below reads these tables
  std::vector<std::vector<Element>> gam;
  for (Card n = 0; n <= depth; ++n) {
    p.mc.require_enumerable("MC");
    gam.push_back(FinFn::tabulate(p.mc, chain.level(n),
                                  [&](Element u) { return gamma_at(n, u); })
                      .table());
  }

  for (Card n = 0; n <= depth; ++n) {
    const FinSet& level = chain.level(n);
    auto value_label = [level](Element v) { return level.label(v); };
    if (n < depth) {
      report.results.push_back(check_pointwise(PointwiseLaw{
          "compatibility", level_scope(n), p.mc.name(), p.mc.size(),
          [&gam, &chain, n](Element u) {
            return std::pair{chain.connect(n, gam[n + 1][u]), gam[n][u]};
          },
          mc_label, value_label, {}}));
      const FinSet& up = chain.level(n + 1);
      const Arrow gn{p.mc.size(), level.size(), [&gam, n](Element u) { return gam[n][u]; }};
      report.results.push_back(check_pointwise(PointwiseLaw{
          "coalgebra map", level_scope(n + 1), p.mc.name(), p.mc.size(),
          [&gam, &p, h, gn, n](Element u) {
            return std::pair{gam[n + 1][u], functor_map_element(h, gn, p.xi_mc(u))};
          },
          mc_label, [up](Element v) { return up.label(v); }, {}}));
    }
    report.results.push_back(check_pointwise(PointwiseLaw{
        "unit", level_scope(n), xi.dom().name(), cn,
        [&gam, &p, m, cn, n](Element c) {
          return std::pair{gam[n][m->unit(cn, c)], p.alpha_c[n](c)};
        },
        [c = xi.dom()](Element e) { return c.label(e); }, value_label, {}}));
  }
  return report;
}

namespace {

template <class Check>
LawReport run_on_stand_in(const DistLawEMPtr& law, Card depth, Check check) {
  auto chain = std::make_shared<const TerminalChain>(law->functor(), std::max<Card>(depth, 1));
  const InitialChain ic(law, chain);
  const StandIn c = initial_stand_in(ic, depth);
  const LevelAlgebras levels(law, chain);
  return check(levels, c.xi, depth);
}

}  // namespace

LawReport check_lemma1(const DistLawEMPtr& law, Card depth) {
  return run_on_stand_in(law, depth, [](const LevelAlgebras& l, const FinFn& xi, Card d) {
    return check_lemma1(l, xi, d);
  });
}

LawReport check_lemma2(const DistLawEMPtr& law, Card depth) {
  return run_on_stand_in(law, depth, [](const LevelAlgebras& l, const FinFn& xi, Card d) {
    return check_lemma2(l, xi, d);
  });
}

}  // namespace barrlab
