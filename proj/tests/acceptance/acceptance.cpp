// One line per acceptance criterion; exit status 1 when any of them fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "barrlab/chains/initial.hpp"
#include "barrlab/chains/lemmas.hpp"
#include "barrlab/compair/compair.hpp"
#include "barrlab/core/algebra.hpp"
#include "barrlab/error.hpp"
#include "barrlab/lifting/checks.hpp"
#include "barrlab/series/series.hpp"

using namespace barrlab;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail = what;
    pass = pass && ok;
  }
};

std::string summary(const LawReport& r) {
  std::size_t fail = 0, skip = 0;
  for (const auto& x : r.results) {
    fail += x.verdict == Verdict::Fail;
    skip += x.verdict == Verdict::Skipped;
  }
  return r.subject + ": " + std::to_string(fail) + " failed, " + std::to_string(skip) + " skipped";
}

void require_complete(Outcome& o, const LawReport& r) {
  o.require(r.passed() && r.complete(), summary(r));
}

FunctorExpr times(const FinSet& k) {
  return FunctorExpr::prod({FunctorExpr::constant(k), FunctorExpr::id()});
}

const FinSet& letter_t() {
  static const FinSet s = FinSet::labelled("A", {"t"});
  return s;
}

// 1. monad and algebra laws for the bundled monads at |X| <= 3
Outcome law_suites() {
  Outcome o;
  std::size_t skipped = 0;
  std::string first_skip;
  for (const char* name :
       {"maybe", "exception:2", "writer:S3", "powerset", "semimodule:z2", "semimodule:z4"}) {
    const MonadPtr m = make_builtin_monad(name);
    LawReport r = check_monad_laws(m, 3);
    r.append(check_em_algebra(m, terminal_algebra(m)));
    for (Card n = 0; n <= 3; ++n) {
      try {
        r.append(check_em_algebra(m, free_algebra(m, FinSet::canonical(n))));
      } catch (const Error& e) {
        r.results.push_back(LawResult{"free algebra", scope_of(n), Verdict::Skipped, 0, {}, e.what()});
      }
    }
    o.require(!r.failed(), summary(r));
    for (const auto& x : r.results) {
      if (x.verdict != Verdict::Skipped) continue;
      if (first_skip.empty()) first_skip = std::string(name) + " " + x.law + " " + x.scope;
      ++skipped;
    }
  }
  o.require(skipped == 0, std::to_string(skipped) + " checks skipped as not enumerable, first " +
                              first_skip);
  return o;
}

// 2. the two G-set laws
Outcome gset() {
  Outcome o;
  const Group s3 = symmetric_group3();
  auto [l1, l2] = gset_distlaws(s3);
  require_complete(o, check_distlaw_em(*l1, 2));
  require_complete(o, check_distlaw_em(*l2, 2));
  const MonadPtr w = l1->monad();
  const EMAlgebra g = free_algebra(w, FinSet::labelled("1", {"*"}));
  o.require(diff_liftings(*l1, *l2, g).difference.has_value(), "S3 liftings on H(G) coincide");

  auto [z1, z2] = gset_distlaws(cyclic_group(2));
  const auto dz = diff_liftings(*z1, *z2, free_algebra(z1->monad(), FinSet::labelled("1", {"*"})));
  std::string where;
  if (dz.difference) {
    const Element e = *dz.difference;
    where = "Z/2 liftings on H(G) differ at " + dz.first.dom().label(e) + ": " +
            dz.first.cod().label(dz.first(e)) + " vs " + dz.second.cod().label(dz.second(e));
  }
  o.require(!dz.difference.has_value(), where);
  return o;
}

// 3. the lemma1 and lemma2 checks with a mutation
Outcome lemmas() {
  Outcome o;
  const FinSet two = FinSet::labelled("2", {"0", "1"});
  const FunctorExpr zx = times(semiring_set(Semiring::zmod(2)));
  const auto maybe = product_law(times(two), make_builtin_monad("maybe"));
  const auto z2 = product_law(zx, make_builtin_monad("semimodule:z2"));
  for (const auto& law : {maybe, z2}) {
    require_complete(o, check_lemma1(law, 3));
    require_complete(o, check_lemma2(law, 3));
  }
  // just (1, x0) at |X| = 2 should go to (1, just x0)
  const auto broken = corrupt_law(maybe, 2, 3, 1);
  o.require(check_lemma1(broken, 3).failed() || check_lemma2(broken, 3).failed(),
            "mutation not detected");
  return o;
}

// 4. comparison maps, density maps and Cauchy limits at depth 8
Outcome density() {
  Outcome o;
  const FunctorExpr h = times(semiring_set(Semiring::zmod(2)));
  // h_8 looks one level past the depth
  auto chain = std::make_shared<const TerminalChain>(h, 9);
  const InitialChain ic(product_law(h, make_builtin_monad("semimodule:z2")), chain);
  for (Card n = 0; n <= 8; ++n) {
    for (Element x = 0; x < chain->size(n); ++x) {
      o.require(ic.colim_to_lim(x, n).rep(n) == x, "p_n f i_n != id at n=" + std::to_string(n));
    }
  }
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 100; ++i) {
    const LimitPoint x = LimitPoint::random(chain, rng);
    for (Card n = 0; n <= 8; ++n) {
      const LimitPoint y = ic.density(x, n);
      o.require(y.rep(n) == x.rep(n), "p_n h_n(x) != p_n x");
      o.require(distance(y, x, 8).within(n), "d(h_n x, x) > 2^-n");
    }
    const LimitPoint lim = cauchy_limit_point([&](Card n) { return ic.density(x, n); }, 8);
    for (Card n = 0; n <= 8; ++n) o.require(lim.rep(n) == x.rep(n), "limit of h_n(x) is not x");
  }
  return o;
}

// 5. the stabilization construction for k[[t]]
Outcome stabilization() {
  Outcome o;
  const Semiring k = Semiring::zmod(5);
  const Card depth = 8;
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<Scalar> coeff(0, 4);
  std::uniform_int_distribution<Card> gap(1, 3);

  std::vector<Scalar> a(depth);
  std::vector<Card> nr(depth);
  for (Card j = 0; j < depth; ++j) {
    a[j] = coeff(rng);
    nr[j] = (j ? nr[j - 1] : 0) + gap(rng);
  }
  const Card horizon = nr[depth - 1] + 4;
  // term n carries a_j once n >= n_j and noise on every other degree below 12
  std::vector<Polynomial> terms;
  for (Card n = 0; n <= horizon; ++n) {
    Polynomial p(k, letter_t());
    for (Card j = 0; j < 12; ++j) p.set(Word(j, 0), j < depth && n >= nr[j] ? a[j] : coeff(rng));
    terms.push_back(p);
  }
  CauchySequence seq{[&](Card n) { return terms[n]; }, [&](Card r) { return nr[r]; }, horizon};
  const TruncatedSeries f = cauchy_limit_series(seq, depth);
  seq.modulus = {};
  const TruncatedSeries g = cauchy_limit_series(seq, depth);

  // diagonal extraction: the coefficient of t^j read off the first term after
  // which it never changes again
  for (Card j = 0; j < depth; ++j) {
    const Word w(j, 0);
    Card settle = horizon;
    while (settle > 0) {
      bool same = true;
      for (Card n = settle - 1; n <= horizon; ++n) {
        for (Card i = 0; i <= j; ++i) same = same && terms[n].at(Word(i, 0)) == terms[horizon].at(Word(i, 0));
      }
      if (!same) break;
      --settle;
    }
    const Scalar oracle = terms[settle].at(w);
    o.require(f.at(w) == oracle && g.at(w) == oracle && oracle == terms[nr[j]].at(w) && oracle == a[j],
              "coefficient of t^" + std::to_string(j) + " differs from a_j^{n_j}");
  }
  return o;
}

// 6. behavior of random Boolean automata against word simulation
Outcome behaviors() {
  Outcome o;
  std::mt19937_64 rng(6);
  for (int i = 0; i < 20; ++i) {
    const Card states = 1 + rng() % 4;
    const Card letters = 1 + rng() % 2;
    std::vector<std::string> names{"a", "b"};
    names.resize(letters);
    MooreAutomaton aut{Semiring::boolean(), FinSet::canonical(states), FinSet::labelled("A", names), {}, {}};
    for (Card s = 0; s < states; ++s) {
      aut.output.push_back(rng() % 2);
      aut.step.emplace_back();
      for (Card l = 0; l < letters; ++l) aut.step.back().push_back(rng() % states);
    }
    for (Element s = 0; s < states; ++s) {
      const TruncatedSeries f = behavior(aut, s, 6);
      for (const Word& w : words_up_to(letters, 6)) {
        Element q = s;
        for (auto l : w) q = aut.step[q][l];
        o.require(f.at(w) == aut.output[q], "automaton " + std::to_string(i) + " at " +
                                                format_word(aut.alphabet, w));
      }
    }
  }
  return o;
}

// 7. the commuting pair for Moore automata over Z/2
Outcome commuting() {
  Outcome o;
  const MonadPtr z2 = make_builtin_monad("semimodule:z2");
  const auto kl = kleisli_lift_poly(letter_t(), z2);
  require_complete(o, check_distlaw_kl(*kl.law, 2));
  const auto pair = partner_for_product(PartnerCase::Moore, letter_t(), z2);
  require_complete(o, check_commuting(pair.candidate, *pair.h_law, 2));
  for (Card n = 0; n <= 4; ++n) {
    const Card hmx = *functor_size(pair.candidate.h, monad_size(*z2, n));
    const Card mtx = monad_size(*z2, *functor_size(pair.candidate.t, n));
    o.require(hmx == mtx, "|HMX| != |MTX| at |X|=" + std::to_string(n));
  }
  return o;
}

// 8. the free algebra on the initial T-algebra is dense
Outcome corollary() {
  Outcome o;
  const Semiring k = Semiring::zmod(2);
  auto chain = std::make_shared<const TerminalChain>(moore_functor(k, letter_t()), 8);
  std::mt19937_64 rng(8);
  for (int i = 0; i < 100; ++i) {
    const LimitPoint x = LimitPoint::random(chain, rng);
    const TruncatedSeries xs = point_series(x, 8, k, letter_t());
    for (Card n = 0; n <= 8; ++n) {
      const TruncatedSeries y = embed_free_element(k, letter_t(), free_approximant(xs, n), n, 8);
      o.require(series_distance(xs, y).within(n), "series distance above 2^-n");
      o.require(distance(x, series_point(chain, y), 8).within(n), "chain distance above 2^-n");
    }
  }
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
    double seconds;  // time budget, 0 when there is none
  };
  const std::vector<Criterion> criteria{
      {"law suites for the bundled monads, |X| <= 3", law_suites, 60},
      {"G-set laws and their liftings", gset, 0},
      {"lemma1 and lemma2 checks with a mutation", lemmas, 0},
      {"density maps at depth 8", density, 30},
      {"stabilized limit of a Cauchy sequence", stabilization, 0},
      {"behavior against word simulation", behaviors, 0},
      {"Moore commuting pair over Z/2", commuting, 60},
      {"free algebra on words is dense", corollary, 0},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].run();
    } catch (const std::exception& e) {
      o = Outcome{false, e.what()};
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (criteria[i].seconds > 0) o.require(s < criteria[i].seconds, "over the time budget");
    std::printf("criterion %zu: %s  %s (%.2f s)%s%s\n", i + 1, o.pass ? "PASS" : "FAIL",
                criteria[i].name, s, o.pass ? "" : "  ", o.detail.c_str());
    std::fflush(stdout);
    failures += !o.pass;
  }
  return failures ? 1 : 0;
}
