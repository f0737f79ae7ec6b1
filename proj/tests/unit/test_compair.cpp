#include <catch_amalgamated.hpp>

#include <random>

#include "barrlab/compair/compair.hpp"
#include "barrlab/error.hpp"
#include "barrlab/lifting/checks.hpp"

using namespace barrlab;

namespace {

const FinSet& letter_t() {
  static const FinSet s = FinSet::labelled("A", {"t"});
  return s;
}

Verdict verdict_at(const LawReport& r, std::string_view law, Card n) {
  const LawResult* x = r.find(law, scope_of(n));
  REQUIRE(x);
  return x->verdict;
}

}  // namespace

TEST_CASE("Kleisli lift of 1 + A x X", "[compair]") {
  for (const char* name : {"maybe", "exception:2", "writer:S3", "powerset", "semimodule:z2"}) {
    INFO(name);
    const auto k = kleisli_lift_poly(letter_t(), make_builtin_monad(name));
    const LawReport r = check_distlaw_kl(*k.law, 2);
    CHECK(r.passed());
  }
  // Z/4 at |X| = 2 exceeds the guard; nothing may fail
  const auto z4 = kleisli_lift_poly(letter_t(), make_builtin_monad("semimodule:z4"));
  const LawReport r = check_distlaw_kl(*z4.law, 2);
  CHECK_FALSE(r.failed());
  CHECK_FALSE(r.complete());
}

TEST_CASE("Kleisli lift on small carriers", "[compair]") {
  const auto k = kleisli_lift_poly(letter_t(), make_builtin_monad("maybe"));
  // |X| = 1: T(MX) = {*, (t,nothing), (t,just 0)}, M(TX) = {nothing, just *, just (t,0)}
  CHECK(k.law->table(1)->table() == std::vector<Element>{1, 0, 2});
  CHECK(k.law->table(0)->table() == std::vector<Element>{1, 0});
}

TEST_CASE("the Moore commuting pair over Z/2", "[compair]") {
  const auto pair = partner_for_product(PartnerCase::Moore, letter_t(), make_builtin_monad("semimodule:z2"));
  const LawReport r = check_commuting(pair.candidate, *pair.h_law, 2);
  CHECK(r.passed());
  for (Card n = 0; n <= 2; ++n) CHECK(verdict_at(r, "algebra square", n) == Verdict::Pass);

  const LawReport big = check_commuting(pair.candidate, *pair.h_law, 4);
  CHECK_FALSE(big.failed());
  for (Card n = 0; n <= 4; ++n) CHECK(verdict_at(big, "cardinality", n) == Verdict::Pass);
}

TEST_CASE("every partner case over semimodule monads", "[compair]") {
  const FinSet b = FinSet::labelled("B", {"x", "y"});
  for (const char* name : {"semimodule:z2", "powerset"}) {
    for (auto kind : {PartnerCase::Streams, PartnerCase::Constant, PartnerCase::Moore}) {
      const auto pair = partner_for_product(kind, kind == PartnerCase::Moore ? letter_t() : b,
                                            make_builtin_monad(name));
      INFO(name << " " << pair.candidate.name);
      CHECK(check_commuting(pair.candidate, *pair.h_law, 1).passed());
      CHECK_FALSE(check_commuting(pair.candidate, *pair.h_law, 2).failed());
    }
  }
  try {
    partner_for_product(PartnerCase::Streams, b, make_builtin_monad("maybe"));
    FAIL("maybe accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotBiproductCompatible);
  }
  CHECK(parse_partner_case("moore") == PartnerCase::Moore);
  CHECK_FALSE(parse_partner_case("lists").has_value());
}

TEST_CASE("a scrambled sigma is rejected", "[compair]") {
  const auto pair = partner_for_product(PartnerCase::Moore, letter_t(), make_builtin_monad("semimodule:z2"));
  CommutingCandidate bad = pair.candidate;
  const auto good = pair.candidate.sigma;
  // swap the images of two elements at |X| = 1
  bad.sigma = [good](Card n, Element e) {
    if (n == 1 && e < 2) return good(n, 1 - e);
    return good(n, e);
  };
  CHECK(check_commuting(bad, *pair.h_law, 1).failed());
}

TEST_CASE("identity and writer pairs", "[compair]") {
  const MonadPtr z2 = make_builtin_monad("semimodule:z2");
  const CommutingCandidate id{"id", FunctorExpr::id(), FunctorExpr::id(), z2,
                              [](Card, Element e) { return e; }};
  CHECK(check_commuting(id, *identity_law_em(z2), 2).passed());

  // T = H = M = B x (-) with B acting trivially on the constant; sigma swaps the two B's
  const MonadPtr w = make_builtin_monad("writer:Z2");
  const FinSet b = named_group("Z2").carrier();
  const FunctorExpr h = FunctorExpr::prod({FunctorExpr::constant(b), FunctorExpr::id()});
  const Card q = b.size();
  const CommutingCandidate swap{"swap", h, h, w, [q](Card n, Element e) {
                                  const Element outer = e / (q * n), c = (e / n) % q, x = e % n;
                                  return c * q * n + outer * n + x;
                                }};
  const auto law = product_law(h, w);
  CHECK(check_distlaw_em(*law, 2).passed());
  CHECK(check_commuting(swap, *law, 2).passed());
  const CommutingCandidate same{"identity", h, h, w, [](Card, Element e) { return e; }};
  CHECK(check_commuting(same, *law, 2).failed());
}

TEST_CASE("searching for sigma", "[compair]") {
  const MonadPtr z2 = make_builtin_monad("semimodule:z2");
  const auto pair = partner_for_product(PartnerCase::Moore, letter_t(), z2);
  const auto& c = pair.candidate;

  const auto found = search_commuting(c.t, c.h, z2, *pair.h_law, 2, 1000, c.sigma);
  CHECK(found.status == CommutingSearch::Status::Found);
  CHECK(to_string(found.status) == "found");
  for (const auto& [n, table] : found.tables) {
    for (Element e = 0; e < table.size(); ++e) REQUIRE(table[e] == c.sigma(n, e));
  }
  const auto blind = search_commuting(c.t, c.h, z2, *pair.h_law, 2, 1000);
  CHECK(blind.status == CommutingSearch::Status::Found);
  const auto table = table_candidate("searched", c.t, c.h, z2, blind.tables);
  CHECK(check_commuting(table, *pair.h_law, 2).passed());

  const auto capped = search_commuting(c.t, c.h, z2, *pair.h_law, 2, 0);
  CHECK(capped.status == CommutingSearch::Status::Unknown);
  CHECK(to_string(capped.status) == "unknown");

  // |H M X| = 2^{n+1} but |M T X| = 2^n
  const FinSet two = FinSet::labelled("2", {"0", "1"});
  const FunctorExpr h2 = FunctorExpr::prod({FunctorExpr::constant(two), FunctorExpr::id()});
  const auto none = search_commuting(FunctorExpr::id(), h2, z2, *product_law(h2, z2), 1, 1000);
  CHECK(none.status == CommutingSearch::Status::Exhausted);
  CHECK(to_string(none.status) == "none");
}

TEST_CASE("the law must match the candidate", "[compair]") {
  const MonadPtr z2 = make_builtin_monad("semimodule:z2");
  const auto pair = partner_for_product(PartnerCase::Moore, letter_t(), z2);
  try {
    check_commuting(pair.candidate, *identity_law_em(z2), 1);
    FAIL("mismatched law accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DomainMismatch);
  }
}

TEST_CASE("the free algebra on the initial T-algebra is dense", "[compair][property]") {
  const Semiring z2 = Semiring::zmod(2);
  const FinSet ab = FinSet::labelled("A", {"a", "b"});
  CHECK(initial_T_algebra_words(ab, 3) == words_up_to(2, 3));
  CHECK(initial_T_algebra_words(letter_t(), 0).empty());

  // a single word embeds as its indicator series
  std::vector<Scalar> c(7, 0);
  c[4] = 1;  // "ab"
  const auto e = embed_free_element(z2, ab, c, 3, 4);
  for (Element w = 0; w < e.coeffs.size(); ++w) CHECK(e.coeffs[w] == (w == 4 ? 1u : 0u));

  std::mt19937_64 rng(99);
  for (int i = 0; i < 20; ++i) {
    auto x = TruncatedSeries::zero(z2, ab, 8);
    for (auto& v : x.coeffs) v = rng() % 2;
    for (Card n = 0; n <= 8; ++n) {
      const auto y = embed_free_element(z2, ab, free_approximant(x, n), n, 8);
      REQUIRE(series_distance(x, y).within(n));
      REQUIRE(y.truncate(n) == x.truncate(n));
    }
  }
}
