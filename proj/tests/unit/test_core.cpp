#include <catch_amalgamated.hpp>

#include <random>

#include "barrlab/core/algebra.hpp"
#include "barrlab/error.hpp"
#include "barrlab/kernels.hpp"
#include "barrlab/lifting/distlaw.hpp"

using namespace barrlab;

namespace {

FunctorExpr k_times_pow(Card k, Card a) {
  return FunctorExpr::prod({FunctorExpr::constant(FinSet::canonical(k)),
                            FunctorExpr::pow(FinSet::canonical(a), FunctorExpr::id())});
}

std::vector<FunctorExpr> corpus() {
  using F = FunctorExpr;
  const FinSet two = FinSet::labelled("2", {"0", "1"});
  return {F::id(),
          F::constant(two),
          F::prod({F::id(), F::id()}),
          F::coprod({F::prod({}), F::prod({F::constant(two), F::id()})}),
          F::pow(two, F::id()),
          k_times_pow(2, 1),
          F::compose(F::coprod({F::prod({}), F::id()}), F::prod({F::id(), F::id()}))};
}

}  // namespace

TEST_CASE("eval_functor follows polynomial arithmetic", "[core]") {
  const FinSet x = FinSet::canonical(3);
  const FinSet a = FinSet::labelled("A", {"p", "q"});
  CHECK(eval_functor(FunctorExpr::constant(a), x).size() == 2);
  CHECK(eval_functor(FunctorExpr::id(), x).size() == 3);
  CHECK(eval_functor(k_times_pow(2, 1), x).size() == 6);
  CHECK(eval_functor(k_times_pow(2, 2), x).size() == 18);
  CHECK(eval_functor(FunctorExpr::coprod({}), x).size() == 0);
  CHECK(eval_functor(FunctorExpr::prod({}), x).size() == 1);
}

TEST_CASE("enumeration order is deterministic", "[core]") {
  const auto h = corpus()[3];
  const FinSet a = eval_functor(h, FinSet::canonical(2));
  const FinSet b = eval_functor(h, FinSet::canonical(2));
  REQUIRE(a.size() == b.size());
  for (Element e = 0; e < a.size(); ++e) CHECK(a.label(e) == b.label(e));
  CHECK(a.label(0) == "in0(())");
  CHECK(a.label(4) == "in1((1,1))");
}

TEST_CASE("Prod(Id,Id) acts componentwise", "[core]") {
  const FinSet x = FinSet::canonical(2);
  const FinFn swap(x, x, {1, 0});
  const FinFn img = eval_functor_map(FunctorExpr::prod({FunctorExpr::id(), FunctorExpr::id()}), swap);
  // pairs (x, y) encoded as 2x + y
  CHECK(img.table() == std::vector<Element>{3, 2, 1, 0});
}

TEST_CASE("functor laws on the corpus", "[core][property]") {
  for (const auto& h : corpus()) {
    for (Card n = 0; n <= 3; ++n) {
      const FinSet x = FinSet::canonical(n);
      CHECK(eval_functor_map(h, FinFn::identity(x)) == FinFn::identity(eval_functor(h, x)));
      for (Card k = 0; k <= 2; ++k) {
        for (Element fi = 0; fi < function_count(n, k); ++fi) {
          for (Element gi = 0; gi < function_count(k, 2); ++gi) {
            const Arrow f = function_at(n, k, fi);
            const Arrow g = function_at(k, 2, gi);
            const Arrow hf = eval_functor_arrow(h, f);
            const Arrow hg = eval_functor_arrow(h, g);
            const Arrow hgf = eval_functor_arrow(h, compose(g, f));
            for (Element e = 0; e < hf.dom; ++e) REQUIRE(hgf.apply(e) == hg.apply(hf.apply(e)));
          }
        }
      }
    }
  }
}

TEST_CASE("bundled monads pass their laws", "[core]") {
  CHECK(check_monad_laws(make_builtin_monad("maybe"), 3).passed());
  CHECK(check_monad_laws(make_builtin_monad("exception:2"), 3).passed());
  CHECK(check_monad_laws(make_builtin_monad("writer:S3"), 2).passed());
  CHECK(check_monad_laws(make_builtin_monad("powerset"), 2).passed());
  CHECK(check_monad_laws(make_builtin_monad("semimodule:z2"), 2).passed());
}

TEST_CASE("swapped multiplication entries are caught", "[core]") {
  const auto maybe = make_builtin_monad("maybe");
  // m_X for |X| = 1: nothing, just nothing, just just x
  const auto broken = swap_mult_entries(maybe, 1, 0, 2);
  const LawReport r = check_monad_laws(broken, 2);
  REQUIRE(r.failed());
  // m(u(just *)) = m(just just *) now gives nothing
  const LawResult* left = r.find("left unit", "|X|=1");
  REQUIRE(left);
  CHECK(left->verdict == Verdict::Fail);
  REQUIRE(left->counterexample);
  CHECK(left->counterexample->element == 1);
  // m(M u(nothing)) = m(nothing) now gives just *
  const LawResult* right = r.find("right unit", "|X|=1");
  REQUIRE(right);
  REQUIRE(right->counterexample);
  CHECK(right->counterexample->element == 0);
}

TEST_CASE("free, terminal and broken algebras", "[core]") {
  const auto pw = make_builtin_monad("powerset");
  CHECK(check_em_algebra(pw, free_algebra(pw, FinSet::canonical(2))).passed());
  CHECK(check_em_algebra(pw, terminal_algebra(pw)).passed());

  const FinSet x = FinSet::canonical(2);
  const FinSet px = monad_obj(*pw, x);
  // subsets as bit strings 00, 01, 10, 11 with element 0 most significant
  CHECK(check_em_algebra(pw, algebra_from_table(FinFn(px, x, {0, 1, 0, 1}))).passed());
  CHECK(check_em_algebra(pw, algebra_from_table(FinFn(px, x, {1, 1, 0, 0}))).passed());
  CHECK(check_em_algebra(pw, algebra_from_table(FinFn(px, x, {0, 1, 0, 0}))).failed());

  const EMAlgebra wrong{x, Arrow{3, 2, [](Element e) { return e % 2; }}};
  CHECK_THROWS_AS(check_em_algebra(pw, wrong), Error);
}

TEST_CASE("free algebra on the empty set", "[core]") {
  CHECK(free_algebra(make_builtin_monad("maybe"), FinSet::canonical(0)).carrier.size() == 1);
  CHECK(free_algebra(make_builtin_monad("writer:S3"), FinSet::canonical(0)).carrier.size() == 0);
  CHECK(free_algebra(make_builtin_monad("semimodule:z2"), FinSet::labelled("1", {"*"}))
            .carrier.size() == 2);
}

TEST_CASE("non-finite and oversized monads are rejected", "[core]") {
  try {
    make_builtin_monad("list");
    FAIL("list accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NonFinitePreserving);
  }
  ScopedBlowupGuard guard(10);
  try {
    check_monad_laws(make_builtin_monad("powerset"), 4);
    FAIL("guard not enforced");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NonFinitePreserving);
  }
}

TEST_CASE("groups are validated", "[core]") {
  Monoid m{FinSet::canonical(2), {{0, 1}, {1, 1}}, 0};
  try {
    make_group(m);
    FAIL("monoid accepted as a group");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotAGroup);
  }
  CHECK_FALSE(symmetric_group3().abelian());
  CHECK(cyclic_group(4).abelian());
}

TEST_CASE("semiring axioms", "[core]") {
  for (const auto& k : {Semiring::boolean(), Semiring::zmod(2), Semiring::zmod(4),
                        Semiring::zmod(6), Semiring::min_plus(5)}) {
    const auto r = check_semiring_axioms(k);
    CHECK(r.exhaustive);
    CHECK(r.ok());
  }
  const auto nat = check_semiring_axioms(Semiring::natural(), 11, 500);
  CHECK_FALSE(nat.exhaustive);
  CHECK(nat.ok());
  // "max" as multiplication does not distribute over xor
  const auto bad = Semiring::table("bad", {{0, 1}, {1, 0}}, {{0, 1}, {1, 1}}, 0, 0);
  CHECK_FALSE(check_semiring_axioms(bad).ok());
}

TEST_CASE("serial and parallel kernels agree", "[core][kernels]") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 50; ++trial) {
    const Element count = rng() % 20000;
    const Element hole = count ? rng() % count : 0;
    auto pred = [hole](Element i) { return i >= hole && (i * 2654435761u) % 7 == 0; };
    CHECK(kernels::serial::first_violation(count, pred) ==
          kernels::parallel::first_violation(count, pred));
    auto fn = [](Element i) { return (i * 40503u) ^ (i >> 3); };
    CHECK(kernels::serial::tabulate(count, fn) == kernels::parallel::tabulate(count, fn));
  }
}

TEST_CASE("parallel kernels rethrow the earliest failure", "[core][kernels]") {
  auto thrower = [](Element i) -> bool {
    if (i == 777 || i == 9000) throw std::runtime_error(std::to_string(i));
    return false;
  };
  try {
    kernels::parallel::first_violation(10000, thrower);
    FAIL("no exception");
  } catch (const std::runtime_error& e) {
    CHECK(std::string(e.what()) == "777");
  }
  // a violation before the throwing index wins
  auto early = [](Element i) -> bool {
    if (i == 500) throw std::runtime_error("late");
    return i == 10;
  };
  CHECK(kernels::parallel::first_violation(1000, early) == Element{10});
}
