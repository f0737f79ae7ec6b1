#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "barrlab/chains/chain.hpp"
#include "barrlab/chains/dyadic.hpp"
#include "barrlab/core/algebra.hpp"
#include "barrlab/core/finset.hpp"
#include "barrlab/core/functor.hpp"
#include "barrlab/core/semiring.hpp"

namespace barrlab {

using Word = std::vector<std::uint32_t>;

/// Number of words of length < n over an alphabet of size a.
Card words_below(Card alphabet, Card n);
/// Position of w in length-lexicographic order.
Element word_index(Card alphabet, const Word& w);
Word word_at(Card alphabet, Element index);
/// Words of length < n, length-lexicographic.
std::vector<Word> words_up_to(Card alphabet, Card n);
std::string format_word(const FinSet& alphabet, const Word& w);
/// Inverse of format_word; letters are matched greedily against labels.
Word parse_word(const FinSet& alphabet, const std::string& text);

/// Coefficients on all words of length < bound, indexed length-lexicographically.
struct TruncatedSeries {
  Semiring k;
  FinSet alphabet;
  Card bound = 0;
  std::vector<Scalar> coeffs;

  static TruncatedSeries zero(Semiring k, FinSet alphabet, Card bound);
  Scalar at(const Word& w) const;
  TruncatedSeries truncate(Card n) const;
  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a.bound == b.bound && a.alphabet.size() == b.alphabet.size() && a.coeffs == b.coeffs;
  }
};

/// Finite support, no explicit zeros.
class Polynomial {
 public:
  Polynomial(Semiring k, FinSet alphabet);
  static Polynomial from_terms(Semiring k, FinSet alphabet,
                               const std::vector<std::pair<Word, Scalar>>& terms);

  void set(const Word& w, Scalar c);
  Scalar at(const Word& w) const;
  /// Support in length-lexicographic order.
  std::vector<std::pair<Word, Scalar>> terms() const;
  const Semiring& semiring() const { return k_; }
  const FinSet& alphabet() const { return alphabet_; }
  Card degree_bound() const;  // 1 + longest support word, 0 when zero

 private:
  Semiring k_;
  FinSet alphabet_;
  std::map<Element, Scalar> coeffs_;  // keyed by word index
};

struct MooreAutomaton {
  Semiring k;
  FinSet states;
  FinSet alphabet;
  std::vector<Scalar> output;
  std::vector<std::vector<Element>> step;  // step[state][letter]

  /// Throws InvalidInput when tables have the wrong shape.
  void validate() const;
};

/// Coefficient of w is output(step*(s, w)) for every word shorter than n.
TruncatedSeries behavior(const MooreAutomaton& aut, Element s, Card n);
namespace serial {
TruncatedSeries behavior(const MooreAutomaton& aut, Element s, Card n);
}

/// 2^-ord where ord is the length of the shortest word with differing
/// coefficients; an upper bound at the bound when the series are equal.
/// Throws BoundMismatch when bounds or alphabets differ.
DyadicDist series_distance(const TruncatedSeries& f, const TruncatedSeries& g);

struct PolynomialEmbedding {
  TruncatedSeries series;
  std::vector<Word> discarded;  // support of length >= n
};
PolynomialEmbedding polynomial_embed(const Polynomial& p, Card n);

/// A sequence of polynomials together with its modulus r -> n_r.
struct CauchySequence {
  std::function<Polynomial(Card)> term;
  /// When absent, n_r is the first index after which the coefficients of
  /// length <= r stay put up to the horizon.
  std::function<Card(Card)> modulus;
  Card horizon = 0;  // terms are inspected up to this index
};

/// Coefficient at words of length j is the one of term n_j. Throws NotCauchy
/// when some term n in [n_r, horizon] differs from term n_r at length <= r.
TruncatedSeries cauchy_limit_series(const CauchySequence& seq, Card depth);

/// The moore functor k x X^A, with k named after the semiring.
FunctorExpr moore_functor(const Semiring& k, const FinSet& alphabet);
FinSet semiring_set(const Semiring& k);

/// Element of H^n 1 for H = k x X^A holding the coefficients of words of
/// length < n.
Element encode_series(const TruncatedSeries& f, const TerminalChain& chain);
TruncatedSeries decode_series(Element e, Card n, const Semiring& k, const FinSet& alphabet);
LimitPoint series_point(ChainPtr chain, const TruncatedSeries& f);
TruncatedSeries point_series(const LimitPoint& x, Card n, const Semiring& k,
                             const FinSet& alphabet);

/// k-linear combination on H^n 1 for the semimodule monad over k:
/// phi |-> sum_s phi(s) s, coefficientwise.
EMAlgebra module_structure(const Semiring& k, const FinSet& alphabet, const TerminalChain& chain,
                           Card n);
TruncatedSeries linear_combination(const std::vector<std::pair<Scalar, TruncatedSeries>>& terms,
                                   const TruncatedSeries& zero);

/// The automaton as a coalgebra xi : states -> k x states^A.
FinFn moore_coalgebra(const MooreAutomaton& aut);

}  // namespace barrlab
