#include "barrlab/lifting/checks.hpp"

#include "barrlab/error.hpp"

namespace barrlab {

namespace {

Card require(std::optional<Card> s, const std::string& what) {
  if (!s) throw Error(ErrorKind::BlowUpGuard, what + " is not representable");
  return *s;
}

LawResult merge_functions(const std::string& law, Card n, Card max_size,
                          const std::function<PointwiseLaw(Card k)>& build) {
  LawResult out{law, scope_of(n), Verdict::Pass, 0, std::nullopt, {}};
  for (Card k = 0; k <= max_size; ++k) {
    const LawResult r = check_or_skip(law, scope_of(n, k), [&] { return build(k); });
    out.checked += r.checked;
    if (r.verdict == Verdict::Fail && out.verdict != Verdict::Fail) {
      out.verdict = Verdict::Fail;
      out.counterexample = r.counterexample;
    } else if (r.verdict == Verdict::Skipped && out.verdict == Verdict::Pass) {
      out.verdict = Verdict::Skipped;
      out.note = r.note;
    }
  }
  return out;
}

}  // namespace

LawReport check_distlaw_em(const DistLawEM& law, Card max_size) {
  if (max_size < 1) throw Error(ErrorKind::InvalidInput, "max_size must be at least 1");
  const MonadPtr m = law.monad();
  const FunctorExpr h = law.functor();
  LawReport report;
  report.subject = "distributive law " + law.name() + " (" + m->name() + " over " +
                   h.to_string() + ")";
  for (Card n = 0; n <= max_size; ++n) {
    const FinSet x = FinSet::canonical(n);
    const std::string scope = scope_of(n);

    report.results.push_back(check_or_skip("unit", scope, [&] {
      const FinSet hx = eval_functor(h, x);
      const FinSet target = law.target(x);
      const Card hn = hx.size();
      const Arrow u{n, monad_size(*m, n), [m, n](Element e) { return m->unit(n, e); }};
      return PointwiseLaw{"unit", scope, hx.name(), hx.size(),
                          [&law, m, h, n, hn, u](Element e) {
                            return std::pair{law.apply(n, m->unit(hn, e)),
                                             functor_map_element(h, u, e)};
                          },
                          [hx](Element e) { return hx.label(e); },
                          [target](Element v) { return target.label(v); }, {}};
    }));

    report.results.push_back(check_or_skip("multiplication", scope, [&] {
      const FinSet hx = eval_functor(h, x);
      const FinSet mhx = monad_obj(*m, hx);
      const FinSet mmhx = monad_obj(*m, mhx);
      const FinSet target = law.target(x);
      const Card mn = monad_size(*m, n);
      const Card hn = hx.size();
      const Arrow lam = law.component(n);
      const Arrow mult{monad_size(*m, mn), mn, [m, n](Element t) { return m->mult(n, t); }};
      require(functor_size(h, mn), "H(M X)");
      return PointwiseLaw{"multiplication", scope, mmhx.name(), mmhx.size(),
                          [&law, m, h, n, mn, hn, lam, mult](Element w) {
                            // H m . lambda_M . M lambda  vs  lambda . m_H
                            const Element lhs = functor_map_element(
                                h, mult, law.apply(mn, m->map(lam, w)));
                            return std::pair{lhs, law.apply(n, m->mult(hn, w))};
                          },
                          [mmhx](Element e) { return mmhx.label(e); },
                          [target](Element v) { return target.label(v); }, {}};
    }));

    report.results.push_back(merge_functions("naturality", n, max_size, [&](Card k) {
      const FinSet hx = eval_functor(h, x);
      const FinSet mhx = monad_obj(*m, hx);
      const FinSet target = law.target(FinSet::canonical(k));
      const Card fs = function_count(n, k);
      const Card block = mhx.size();
      auto total = checked_mul(fs, block);
      if (!total) throw Error(ErrorKind::BlowUpGuard, "naturality domain not representable");
      return PointwiseLaw{
          "naturality", scope_of(n, k), mhx.name() + " x functions", *total,
          [&law, m, h, n, k, block](Element e) {
            const Arrow f = function_at(n, k, e / block);
            const Element w = e % block;
            const Arrow mf = monad_arrow(m, f);
            const Arrow hf = eval_functor_arrow(h, f);
            return std::pair{functor_map_element(h, mf, law.apply(n, w)),
                             law.apply(k, m->map(hf, w))};
          },
          [mhx, block](Element e) { return mhx.label(e % block); },
          [target](Element v) { return target.label(v); },
          [n, k, block](Element e) { return "f=" + describe_arrow(function_at(n, k, e / block)); }};
    }));
  }
  return report;
}

LawReport check_distlaw_kl(const DistLawKl& law, Card max_size) {
  if (max_size < 1) throw Error(ErrorKind::InvalidInput, "max_size must be at least 1");
  const MonadPtr m = law.monad();
  const FunctorExpr t = law.functor();
  LawReport report;
  report.subject = "Kleisli law " + law.name() + " (" + t.to_string() + " over " + m->name() + ")";
  for (Card n = 0; n <= max_size; ++n) {
    const FinSet x = FinSet::canonical(n);
    const std::string scope = scope_of(n);

    report.results.push_back(check_or_skip("unit", scope, [&] {
      const FinSet tx = eval_functor(t, x);
      const FinSet target = law.target(x);
      const Card tn = tx.size();
      const Arrow u{n, monad_size(*m, n), [m, n](Element e) { return m->unit(n, e); }};
      return PointwiseLaw{"unit", scope, tx.name(), tn,
                          [&law, m, t, n, tn, u](Element e) {
                            return std::pair{law.apply(n, functor_map_element(t, u, e)),
                                             m->unit(tn, e)};
                          },
                          [tx](Element e) { return tx.label(e); },
                          [target](Element v) { return target.label(v); }, {}};
    }));

    report.results.push_back(check_or_skip("multiplication", scope, [&] {
      const FinSet mx = monad_obj(*m, x);
      const FinSet mmx = monad_obj(*m, mx);
      const FinSet tmmx = eval_functor(t, mmx);
      const FinSet target = law.target(x);
      const Card mn = mx.size();
      const Card tn = require(functor_size(t, n), "T X");
      const Arrow mult{mmx.size(), mn, [m, n](Element e) { return m->mult(n, e); }};
      const Arrow sig = law.component(n);
      return PointwiseLaw{"multiplication", scope, tmmx.name(), tmmx.size(),
                          [&law, m, t, n, mn, tn, mult, sig](Element w) {
                            // varsigma . T m  vs  m_T . M varsigma . varsigma_M
                            const Element lhs = law.apply(n, functor_map_element(t, mult, w));
                            const Element rhs = m->mult(tn, m->map(sig, law.apply(mn, w)));
                            return std::pair{lhs, rhs};
                          },
                          [tmmx](Element e) { return tmmx.label(e); },
                          [target](Element v) { return target.label(v); }, {}};
    }));

    report.results.push_back(merge_functions("naturality", n, max_size, [&](Card k) {
      const FinSet tmx = eval_functor(t, monad_obj(*m, x));
      const FinSet target = law.target(FinSet::canonical(k));
      const Card fs = function_count(n, k);
      const Card block = tmx.size();
      auto total = checked_mul(fs, block);
      if (!total) throw Error(ErrorKind::BlowUpGuard, "naturality domain not representable");
      return PointwiseLaw{
          "naturality", scope_of(n, k), tmx.name() + " x functions", *total,
          [&law, m, t, n, k, block](Element e) {
            const Arrow f = function_at(n, k, e / block);
            const Element w = e % block;
            const Arrow mf = monad_arrow(m, f);
            const Arrow tf = eval_functor_arrow(t, f);
            return std::pair{m->map(tf, law.apply(n, w)),
                             law.apply(k, functor_map_element(t, mf, w))};
          },
          [tmx, block](Element e) { return tmx.label(e % block); },
          [target](Element v) { return target.label(v); },
          [n, k, block](Element e) { return "f=" + describe_arrow(function_at(n, k, e / block)); }};
    }));
  }
  return report;
}

EMAlgebra lift_algebra(const DistLawEM& law, const EMAlgebra& a) {
  const MonadPtr m = law.monad();
  const FunctorExpr h = law.functor();
  const Card c = a.carrier.size();
  if (a.structure.dom != monad_size(*m, c) || a.structure.cod != c) {
    throw Error(ErrorKind::DomainMismatch, "algebra structure has the wrong shape");
  }
  const FinSet hc = eval_functor(h, a.carrier);
  const Arrow lam = law.component(c);
  const Arrow ha = eval_functor_arrow(h, a.structure);
  return EMAlgebra{hc, compose(ha, lam)};
}

FinFn lift_coalgebra(const DistLawEM& law, const FinFn& xi) {
  const MonadPtr m = law.monad();
  const FunctorExpr h = law.functor();
  const FinSet& c = xi.dom();
  const auto hc = functor_size(h, c.size());
  if (!hc || xi.cod().size() != *hc) {
    throw Error(ErrorKind::DomainMismatch,
                "coalgebra structure on " + c.name() + " must land in " + h.to_string());
  }
  const FinSet mc = monad_obj(*m, c);
  const FinSet hmc = eval_functor(h, mc);
  const Arrow x = xi.arrow();
  const Card n = c.size();
  return FinFn::tabulate(mc, hmc, [&](Element t) { return law.apply(n, m->map(x, t)); });
}

LiftingDiff diff_liftings(const DistLawEM& a, const DistLawEM& b, const EMAlgebra& algebra) {
  const MonadPtr m = a.monad();
  const FinFn first = structure_table(*m, lift_algebra(a, algebra));
  const FinFn second = structure_table(*m, lift_algebra(b, algebra));
  return LiftingDiff{first, second, first_difference(first, second)};
}

}  // namespace barrlab
