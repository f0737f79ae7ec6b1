#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "barrlab/chains/initial.hpp"
#include "barrlab/core/law_report.hpp"
#include "barrlab/lifting/distlaw.hpp"
#include "barrlab/series/series.hpp"

namespace barrlab {

/// T X = 1 + A x X, the summands in this order.
FunctorExpr one_plus_a_times(const FinSet& a);

struct KleisliLiftPoly {
  FinSet alphabet;
  FunctorExpr t;
  DistLawKlPtr law;
};

/// varsigma_X : 1 + A x MX -> M(1 + A x X). The point goes to the unit at
/// the point; (a, t) goes through the strength to M(A x X) and then into the
/// second summand.
KleisliLiftPoly kleisli_lift_poly(const FinSet& a, const MonadPtr& m);

/// An isomorphism candidate sigma_X : H(M X) -> M(T X) given per carrier size.
struct CommutingCandidate {
  std::string name;
  FunctorExpr t;
  FunctorExpr h;
  MonadPtr m;
  ComponentFn sigma;
};

CommutingCandidate table_candidate(std::string name, FunctorExpr t, FunctorExpr h, MonadPtr m,
                                   std::map<Card, std::vector<Element>> tables);

/// Per carrier size: matching cardinalities, bijectivity of sigma, its
/// naturality, and the square sigma . Hm . lambda_M = m_T . M sigma over
/// M(H(M X)). `law` must be a law for the candidate's H and M.
LawReport check_commuting(const CommutingCandidate& c, const DistLawEM& law, Card max_size);

struct CommutingSearch {
  enum class Status { Found, Exhausted, Unknown };
  Status status = Status::Exhausted;
  std::map<Card, std::vector<Element>> tables;  // filled when found
  std::uint64_t candidates = 0;                 // complete candidates tested
};

std::string_view to_string(CommutingSearch::Status s);

/// Backtracking search for natural bijections sigma_0 .. sigma_max making
/// the square commute. Naturality against smaller carriers pins values,
/// endomaps prune pairs, the square is tested on complete candidates.
/// `preferred`, when given, orders each element's values so that it is the
/// first candidate visited. Stops with Unknown after `cap` candidates.
CommutingSearch search_commuting(const FunctorExpr& t, const FunctorExpr& h, const MonadPtr& m,
                                 const DistLawEM& law, Card max_size, std::uint64_t cap,
                                 const ComponentFn& preferred = {});

enum class PartnerCase { Streams, Constant, Moore };

std::optional<PartnerCase> parse_partner_case(const std::string& name);

struct CommutingPair {
  PartnerCase kind;
  FinSet b;  // generators (streams, constant) or the alphabet (Moore)
  CommutingCandidate candidate;
  DistLawEMPtr h_law;  // constant parts carry the free algebra structure
};

/// Streams: H X = MB x X with T X = B + X. Constant: H X = MB with T X = B.
/// Moore: H X = M1 x X^B with T X = 1 + B x X. sigma concatenates
/// coefficient vectors. Throws NotBiproductCompatible for monads whose
/// algebras lack biproducts.
CommutingPair partner_for_product(PartnerCase kind, const FinSet& b, const MonadPtr& m);

/// The carrier of the initial T-algebra for T X = 1 + A x X below `depth`:
/// words of length < depth in length-lexicographic order.
std::vector<Word> initial_T_algebra_words(const FinSet& a, Card depth);

/// Image of sum_w c_w . w (c indexed by the words of length < n) in the
/// behaviors, as a series truncated at `bound`.
TruncatedSeries embed_free_element(const Semiring& k, const FinSet& a,
                                   const std::vector<Scalar>& c, Card n, Card bound);

/// Coefficients of x on the words of length < n.
std::vector<Scalar> free_approximant(const TruncatedSeries& x, Card n);

}  // namespace barrlab
