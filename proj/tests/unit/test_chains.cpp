#include <catch_amalgamated.hpp>

#include <random>

#include "barrlab/chains/lemmas.hpp"
#include "barrlab/error.hpp"
#include "barrlab/series/series.hpp"

using namespace barrlab;

namespace {

FunctorExpr times(const FinSet& k) {
  return FunctorExpr::prod({FunctorExpr::constant(k), FunctorExpr::id()});
}

const FinSet& two() {
  static const FinSet s = FinSet::labelled("2", {"0", "1"});
  return s;
}

FunctorExpr z2_stream() { return times(semiring_set(Semiring::zmod(2))); }

ChainPtr make_chain(const FunctorExpr& h, Card depth) {
  return std::make_shared<const TerminalChain>(h, depth);
}

// Level n of Z/2 x X is the binary word c_0 c_1 ... c_{n-1}, c_0 most significant.
Element bits(std::initializer_list<int> b) {
  Element e = 0;
  for (int x : b) e = 2 * e + x;
  return e;
}

}  // namespace

TEST_CASE("chain level sizes", "[chains]") {
  const auto c = make_chain(times(two()), 4);
  for (Card n = 0; n <= 4; ++n) CHECK(c->size(n) == (Card{1} << n));

  const auto k = make_chain(FunctorExpr::constant(FinSet::canonical(3)), 4);
  CHECK(k->size(0) == 1);
  for (Card n = 1; n <= 4; ++n) CHECK(k->size(n) == 3);
  for (Card n = 1; n < 4; ++n) CHECK(k->connect_map(n).is_bijection());

  const auto g = make_chain(times(symmetric_group3().carrier()), 2);
  CHECK(g->size(2) == 36);

  ScopedBlowupGuard guard(100);
  try {
    make_chain(times(two()), 10);
    FAIL("guard ignored");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::BlowUpGuard);
  }
}

TEST_CASE("anamorphism of a one-state stream coalgebra", "[chains]") {
  const auto c = make_chain(times(two()), 6);
  const FinSet one = FinSet::labelled("C", {"c"});
  const FinFn xi(one, eval_functor(times(two()), one), {1});  // c -> (1, c)
  const auto cone = anamorphism_cone(xi, 6, *c);
  for (Card n = 0; n <= 6; ++n) CHECK(cone[n](0) == (Card{1} << n) - 1);  // all ones
  for (Card n = 0; n < 6; ++n) CHECK(c->connect(n, cone[n + 1](0)) == cone[n](0));
  try {
    anamorphism(xi, 7, *c);
    FAIL("depth not checked");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DepthExceeded);
  }
}

TEST_CASE("distance between limit points", "[chains]") {
  const auto c = make_chain(times(two()), 6);
  // 1 and 1 + t
  const LimitPoint one = LimitPoint::from_top(c, bits({1, 0, 0, 0, 0, 0}));
  const LimitPoint one_t = LimitPoint::from_top(c, bits({1, 1, 0, 0, 0, 0}));
  CHECK(distance(one, one, 6) == DyadicDist::beyond(6));
  CHECK(distance(one, one_t, 6) == DyadicDist::at(2));
  CHECK(distance(one, one_t, 1) == DyadicDist::beyond(1));
}

TEST_CASE("ultrametric on random triples", "[chains][property]") {
  const auto c = make_chain(times(two()), 6);
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<Element> top(0, 7);  // only the last three bits vary
  for (int i = 0; i < 200; ++i) {
    const LimitPoint x = LimitPoint::from_top(c, top(rng));
    const LimitPoint y = LimitPoint::from_top(c, top(rng));
    const LimitPoint z = LimitPoint::from_top(c, top(rng));
    const DyadicDist xy = distance(x, y, 6), yz = distance(y, z, 6), xz = distance(x, z, 6);
    CHECK(xy == distance(y, x, 6));
    CHECK(DyadicDist::at_most(xz, DyadicDist::max(xy, yz)));
    CHECK((xy == DyadicDist::beyond(6)) == (x.rep(6) == y.rep(6)));
  }
}

TEST_CASE("limit points are compatible", "[chains][property]") {
  const auto c = make_chain(times(symmetric_group3().carrier()), 3);
  std::mt19937_64 rng(5);
  for (int i = 0; i < 20; ++i) {
    const LimitPoint x = LimitPoint::random(c, rng);
    CHECK_FALSE(x.incompatibility(2).has_value());
  }
  const LimitPoint bad(c, [](Card n) { return n == 2 ? Element{7} : Element{0}; });
  CHECK(bad.incompatibility(2).has_value());
}

TEST_CASE("level algebras for Z/2 x X are sums of bit strings", "[chains]") {
  const auto c = make_chain(z2_stream(), 3);
  const auto law = product_law(z2_stream(), make_builtin_monad("semimodule:z2"));
  const LevelAlgebras levels(law, c);
  const auto* z2 = dynamic_cast<const SemimoduleMonad*>(law->monad().get());
  REQUIRE(z2);
  for (Card n = 0; n <= 3; ++n) {
    const auto table = levels.table(n);
    const Card size = c->size(n);
    for (Element phi = 0; phi < table->dom().size(); ++phi) {
      const auto coeff = z2->coefficients(size, phi);
      Element sum = 0;
      for (Element s = 0; s < size; ++s) {
        if (coeff[s]) sum ^= s;
      }
      REQUIRE((*table)(phi) == sum);
    }
    CHECK_FALSE(check_em_algebra(law->monad(), levels.algebra(n)).failed());
  }
}

TEST_CASE("the first G-set level algebra multiplies", "[chains]") {
  const Group g = symmetric_group3();
  auto [l1, l2] = gset_distlaws(g);
  const auto c = make_chain(l1->functor(), 2);
  const LevelAlgebras levels(l1, c);
  // M(H1) = G x G as g*6 + h; a_1 (g, h) = g h
  for (Element x = 0; x < 6; ++x) {
    for (Element y = 0; y < 6; ++y) CHECK(levels.apply(1, x * 6 + y) == g.mul(x, y));
  }
  for (Card n = 1; n < 2; ++n) {
    // connecting maps are algebra maps
    const MonadPtr m = l1->monad();
    const Arrow t = c->connect_map(n).arrow();
    for (Element w = 0; w < monad_size(*m, c->size(n + 1)); ++w) {
      CHECK(c->connect(n, levels.apply(n + 1, w)) == levels.apply(n, m->map(t, w)));
    }
  }
}

TEST_CASE("gamma_level", "[chains]") {
  const auto c = make_chain(z2_stream(), 4);
  const auto law = product_law(z2_stream(), make_builtin_monad("semimodule:z2"));
  auto levels = std::make_shared<const LevelAlgebras>(law, c);
  const std::vector<LimitPoint> pts{LimitPoint::from_top(c, bits({1, 0, 1, 1})),
                                    LimitPoint::from_top(c, bits({0, 1, 1, 0})),
                                    LimitPoint::from_top(c, bits({1, 1, 1, 1}))};
  const MonadPtr m = law->monad();
  for (Card n = 0; n <= 4; ++n) {
    // unit: a point mass gives the point back
    for (Element i = 0; i < 3; ++i) CHECK(gamma_level(*levels, pts, m->unit(3, i), n) == pts[i].rep(n));
    // all three points: coefficientwise sum
    CHECK(gamma_level(*levels, pts, 7, n) == (pts[0].rep(n) ^ pts[1].rep(n) ^ pts[2].rep(n)));
    // the empty combination is the zero series
    CHECK(gamma_level(*levels, pts, 0, n) == 0);
  }
  const LimitPoint g = gamma(levels, pts, 6);
  CHECK_FALSE(g.incompatibility(3).has_value());
  CHECK(g.rep(4) == (pts[0].rep(4) ^ pts[1].rep(4)));
}

TEST_CASE("gamma is levelwise continuous", "[chains][property]") {
  const auto c = make_chain(z2_stream(), 3);
  const auto law = product_law(z2_stream(), make_builtin_monad("semimodule:z2"));
  const LevelAlgebras levels(law, c);
  std::vector<LimitPoint> pts;
  for (Element top = 0; top < 8; ++top) pts.push_back(LimitPoint::from_top(c, top));
  const MonadPtr m = law->monad();
  for (Card n = 0; n <= 3; ++n) {
    const Arrow pn{8, c->size(n), [&](Element i) { return pts[i].rep(n); }};
    for (Element u = 0; u < 256; ++u) {
      for (Element v = u + 1; v < 256; v += 17) {
        if (m->map(pn, u) == m->map(pn, v)) {
          REQUIRE(gamma_level(levels, pts, u, n) == gamma_level(levels, pts, v, n));
        }
      }
    }
  }
}

TEST_CASE("lemmas on the bundled examples", "[chains]") {
  const auto maybe = product_law(times(two()), make_builtin_monad("maybe"));
  const auto z2 = product_law(z2_stream(), make_builtin_monad("semimodule:z2"));
  for (const auto& law : {maybe, z2}) {
    INFO(law->name());
    const LawReport l1 = check_lemma1(law, 3);
    const LawReport l2 = check_lemma2(law, 3);
    CHECK(l1.passed());
    CHECK(l2.passed());
    const LawResult* base = l1.find("cone of MC", "n=0");
    REQUIRE(base);
    CHECK(base->verdict == Verdict::Pass);
  }
}

TEST_CASE("a corrupted law is caught by the lemma checks", "[chains]") {
  const auto law = product_law(times(two()), make_builtin_monad("maybe"));
  // lambda at |X| = 2: just (1, x0) should go to (1, just x0) = 4
  const auto broken = corrupt_law(law, 2, 1 + 2, 1);
  const bool caught = check_lemma1(broken, 3).failed() || check_lemma2(broken, 3).failed();
  CHECK(caught);
}

TEST_CASE("the initial chain", "[chains]") {
  const auto c = make_chain(times(two()), 4);
  const InitialChain ic(product_law(times(two()), make_builtin_monad("maybe")), c);
  // t o ! = id on H1 and every forward map is split by the connecting map
  for (Card n = 0; n < 4; ++n) {
    for (Element x = 0; x < c->size(n); ++x) CHECK(c->connect(n, ic.forward(n, x)) == x);
  }
  for (Card n = 0; n <= 4; ++n) {
    for (Element x = 0; x < c->size(n); ++x) CHECK(ic.colim_to_lim(x, n).rep(n) == x);
  }
  CHECK(ic.colim_to_lim(0, 0).rep(4) == ic.push(0, 0, 4));

  try {
    const auto g = make_chain(times(symmetric_group3().carrier()), 2);
    InitialChain bad(gset_distlaws(symmetric_group3()).first, g);
    FAIL("writer monad accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ZeroObjectViolation);
  }
  CHECK(empty_free_algebra_size(*make_builtin_monad("writer:S3")) == 0);
}

TEST_CASE("colim_to_lim pads with zeros", "[chains]") {
  const auto c = make_chain(z2_stream(), 6);
  const InitialChain ic(product_law(z2_stream(), make_builtin_monad("semimodule:z2")), c);
  const LimitPoint p = ic.colim_to_lim(bits({1, 1, 0}), 3);  // 1 + t
  CHECK(p.rep(3) == bits({1, 1, 0}));
  CHECK(p.rep(6) == bits({1, 1, 0, 0, 0, 0}));
  CHECK(p.rep(1) == 1);
}

TEST_CASE("density maps", "[chains]") {
  const auto c = make_chain(z2_stream(), 9);
  const InitialChain ic(product_law(z2_stream(), make_builtin_monad("semimodule:z2")), c);
  const LimitPoint ones = LimitPoint::from_top(c, (Element{1} << 9) - 1);
  const LimitPoint h0 = ic.density(ones, 0);
  CHECK(h0.rep(9) == 0);
  const LimitPoint h3 = ic.density(ones, 3);
  CHECK(h3.rep(3) == ones.rep(3));
  CHECK(h3.rep(9) == bits({1, 1, 1, 0, 0, 0, 0, 0, 0}));

  std::mt19937_64 rng(11);
  for (int i = 0; i < 25; ++i) {
    const LimitPoint x = LimitPoint::random(c, rng);
    for (Card n = 0; n <= 8; ++n) {
      const LimitPoint y = ic.density(x, n);
      REQUIRE(y.rep(n) == x.rep(n));
      REQUIRE(distance(x, y, 8).within(n));
    }
  }
  try {
    ic.density(ones, 9);
    FAIL("depth not checked");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DepthExceeded);
  }
}

TEST_CASE("Cauchy limits of limit points", "[chains]") {
  const auto c = make_chain(z2_stream(), 9);
  const InitialChain ic(product_law(z2_stream(), make_builtin_monad("semimodule:z2")), c);
  std::mt19937_64 rng(13);
  const LimitPoint x = LimitPoint::random(c, rng);

  const LimitPoint same = cauchy_limit_point([&](Card) { return x; }, 9);
  CHECK(same.rep(9) == x.rep(9));

  const LimitPoint back = cauchy_limit_point([&](Card n) { return ic.density(x, n); }, 8);
  for (Card n = 0; n <= 8; ++n) CHECK(back.rep(n) == x.rep(n));

  // partial sums 1, 1 + t, 1 + t + t^2, ... converge to the all-ones series
  auto partial = [&](Card n) {
    Element top = 0;
    for (Card j = 0; j < n; ++j) top |= Element{1} << (8 - j);
    return LimitPoint::from_top(c, top);
  };
  const LimitPoint all = cauchy_limit_point(partial, 9);
  CHECK(all.rep(9) == (Element{1} << 9) - 1);

  try {
    cauchy_limit_point([&](Card n) { return LimitPoint::from_top(c, n % 2 ? 0 : (Element{1} << 9) - 1); }, 4);
    FAIL("oscillation accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotCauchy);
  }
}
