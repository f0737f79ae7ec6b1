#include "barrlab/series/series.hpp"

#include <algorithm>

#include "barrlab/error.hpp"
#include "barrlab/kernels.hpp"

namespace barrlab {

TruncatedSeries TruncatedSeries::zero(Semiring k, FinSet alphabet, Card bound) {
  const Card count = words_below(alphabet.size(), bound);
  if (count > blowup_guard()) {
    throw Error(ErrorKind::BlowUpGuard, "series with " + std::to_string(count) +
                                            " coefficients exceeds the guard");
  }
  const Scalar z = k.zero();
  return TruncatedSeries{std::move(k), std::move(alphabet), bound, std::vector<Scalar>(count, z)};
}

Scalar TruncatedSeries::at(const Word& w) const {
  if (w.size() >= bound) {
    throw Error(ErrorKind::DepthExceeded, "word of length " + std::to_string(w.size()) +
                                              " outside a series truncated at " +
                                              std::to_string(bound));
  }
  return coeffs[word_index(alphabet.size(), w)];
}

TruncatedSeries TruncatedSeries::truncate(Card n) const {
  if (n > bound) {
    throw Error(ErrorKind::DepthExceeded, "cannot extend a series truncated at " +
                                              std::to_string(bound) + " to " + std::to_string(n));
  }
  TruncatedSeries out = *this;
  out.bound = n;
  out.coeffs.resize(words_below(alphabet.size(), n));
  return out;
}

Polynomial::Polynomial(Semiring k, FinSet alphabet)
    : k_(std::move(k)), alphabet_(std::move(alphabet)) {}

Polynomial Polynomial::from_terms(Semiring k, FinSet alphabet,
                                  const std::vector<std::pair<Word, Scalar>>& terms) {
  Polynomial p(std::move(k), std::move(alphabet));
  for (const auto& [w, c] : terms) {
    if (p.coeffs_.count(word_index(p.alphabet_.size(), w))) {
      throw Error(ErrorKind::InvalidInput, "polynomial lists a word twice");
    }
    p.set(w, c);
  }
  return p;
}

void Polynomial::set(const Word& w, Scalar c) {
  for (auto letter : w) {
    if (letter >= alphabet_.size()) throw Error(ErrorKind::InvalidInput, "letter outside alphabet");
  }
  if (!k_.contains(c)) throw Error(ErrorKind::InvalidInput, "coefficient outside the semiring");
  const Element i = word_index(alphabet_.size(), w);
  if (c == k_.zero()) {
    coeffs_.erase(i);
  } else {
    coeffs_[i] = c;
  }
}

Scalar Polynomial::at(const Word& w) const {
  auto it = coeffs_.find(word_index(alphabet_.size(), w));
  return it == coeffs_.end() ? k_.zero() : it->second;
}

std::vector<std::pair<Word, Scalar>> Polynomial::terms() const {
  std::vector<std::pair<Word, Scalar>> out;
  for (const auto& [i, c] : coeffs_) out.emplace_back(word_at(alphabet_.size(), i), c);
  return out;
}

Card Polynomial::degree_bound() const {
  if (coeffs_.empty()) return 0;
  return word_at(alphabet_.size(), coeffs_.rbegin()->first).size() + 1;
}

void MooreAutomaton::validate() const {
  if (output.size() != states.size() || step.size() != states.size()) {
    throw Error(ErrorKind::InvalidInput, "automaton tables must cover every state");
  }
  for (Element s = 0; s < states.size(); ++s) {
    if (!k.contains(output[s])) {
      throw Error(ErrorKind::InvalidInput, "output of " + states.label(s) + " is not in " + k.name());
    }
    if (step[s].size() != alphabet.size()) {
      throw Error(ErrorKind::InvalidInput, "state " + states.label(s) + " lacks transitions");
    }
    for (Element t : step[s]) {
      if (t >= states.size()) {
        throw Error(ErrorKind::InvalidInput, "transition out of " + states.label(s) +
                                                 " leaves the state set");
      }
    }
  }
}

TruncatedSeries behavior(const MooreAutomaton& aut, Element s, Card n) {
  aut.validate();
  if (s >= aut.states.size()) throw Error(ErrorKind::InvalidInput, "unknown start state");
  TruncatedSeries out = TruncatedSeries::zero(aut.k, aut.alphabet, n);
  const Card a = aut.alphabet.size();
  out.coeffs = kernels::tabulate(out.coeffs.size(), [&](Element i) {
    Element state = s;
    for (auto letter : word_at(a, i)) state = aut.step[state][letter];
    return aut.output[state];
  });
  return out;
}

namespace serial {

// Length-lexicographic order lists every word after its longest proper
// prefix, so reached states are filled in a single sweep.
TruncatedSeries behavior(const MooreAutomaton& aut, Element s, Card n) {
  aut.validate();
  if (s >= aut.states.size()) throw Error(ErrorKind::InvalidInput, "unknown start state");
  TruncatedSeries out = TruncatedSeries::zero(aut.k, aut.alphabet, n);
  const Card a = aut.alphabet.size();
  std::vector<Element> reached(out.coeffs.size());
  for (Element i = 0; i < reached.size(); ++i) {
    if (i == 0) {
      reached[i] = s;
    } else {
      const Element parent = (i - 1) / a;
      const auto letter = (i - 1) % a;
      reached[i] = aut.step[reached[parent]][letter];
    }
    out.coeffs[i] = aut.output[reached[i]];
  }
  return out;
}

}  // namespace serial

DyadicDist series_distance(const TruncatedSeries& f, const TruncatedSeries& g) {
  if (f.bound != g.bound || f.alphabet.size() != g.alphabet.size() ||
      f.k.name() != g.k.name()) {
    throw Error(ErrorKind::BoundMismatch, "series truncated at " + std::to_string(f.bound) +
                                              " and " + std::to_string(g.bound) +
                                              " over different shapes");
  }
  for (Element i = 0; i < f.coeffs.size(); ++i) {
    if (f.coeffs[i] != g.coeffs[i]) return DyadicDist::at(word_at(f.alphabet.size(), i).size());
  }
  return DyadicDist::beyond(f.bound);
}

PolynomialEmbedding polynomial_embed(const Polynomial& p, Card n) {
  PolynomialEmbedding out{TruncatedSeries::zero(p.semiring(), p.alphabet(), n), {}};
  for (const auto& [w, c] : p.terms()) {
    if (w.size() < n) {
      out.series.coeffs[word_index(p.alphabet().size(), w)] = c;
    } else {
      out.discarded.push_back(w);
    }
  }
  return out;
}

TruncatedSeries cauchy_limit_series(const CauchySequence& seq, Card depth) {
  if (!seq.term) throw Error(ErrorKind::InvalidInput, "sequence has no terms");
  std::vector<Polynomial> terms;
  for (Card n = 0; n <= seq.horizon; ++n) terms.push_back(seq.term(n));
  const Semiring& k = terms.front().semiring();
  const FinSet& alphabet = terms.front().alphabet();
  const Card a = alphabet.size();

  // terms i and j agree on every word of length <= r
  auto agree = [&](Card i, Card j, Card r) {
    const Card count = words_below(a, r + 1);
    for (Element w = 0; w < count; ++w) {
      const Word word = word_at(a, w);
      if (terms[i].at(word) != terms[j].at(word)) return false;
    }
    return true;
  };

  TruncatedSeries out = TruncatedSeries::zero(k, alphabet, depth);
  for (Card r = 0; r < depth; ++r) {
    Card nr = 0;
    if (seq.modulus) {
      nr = seq.modulus(r);
      if (nr > seq.horizon) {
        throw Error(ErrorKind::NotCauchy, "modulus n_" + std::to_string(r) + " = " +
                                              std::to_string(nr) + " lies beyond the horizon " +
                                              std::to_string(seq.horizon));
      }
      for (Card n = nr + 1; n <= seq.horizon; ++n) {
        if (!agree(nr, n, r)) {
          throw Error(ErrorKind::NotCauchy,
                      "term " + std::to_string(n) + " differs from term " + std::to_string(nr) +
                          " on a word of length <= " + std::to_string(r));
        }
      }
    } else {
      nr = seq.horizon;
      while (nr > 0 && agree(nr - 1, seq.horizon, r)) --nr;
      if (nr == seq.horizon && seq.horizon > 0) {
        throw Error(ErrorKind::NotCauchy, "coefficients of length <= " + std::to_string(r) +
                                              " have not settled by term " +
                                              std::to_string(seq.horizon));
      }
    }
    for (Element w = words_below(a, r); w < words_below(a, r + 1); ++w) {
      out.coeffs[w] = terms[nr].at(word_at(a, w));
    }
  }
  return out;
}

FinSet semiring_set(const Semiring& k) {
  if (!k.finite()) {
    throw Error(ErrorKind::NonFinitePreserving, "semiring " + k.name() + " is infinite");
  }
  std::vector<std::string> labels;
  for (Scalar v = 0; v < *k.size(); ++v) labels.push_back(k.format(v));
  return FinSet::labelled(k.name(), labels);
}

FunctorExpr moore_functor(const Semiring& k, const FinSet& alphabet) {
  return FunctorExpr::prod(
      {FunctorExpr::constant(semiring_set(k)), FunctorExpr::pow(alphabet, FunctorExpr::id())});
}

namespace {

Element encode_at(const TruncatedSeries& f, Card n, const TerminalChain& chain) {
  if (n == 0) return 0;
  const Card a = f.alphabet.size();
  const Card below = chain.size(n - 1);
  std::vector<Element> children(a);
  for (Card letter = 0; letter < a; ++letter) {
    // derivative along the letter, truncated to length < n-1
    TruncatedSeries d = TruncatedSeries::zero(f.k, f.alphabet, n - 1);
    for (Element i = 0; i < d.coeffs.size(); ++i) {
      Word w = word_at(a, i);
      w.insert(w.begin(), static_cast<std::uint32_t>(letter));
      d.coeffs[i] = f.coeffs[word_index(a, w)];
    }
    children[letter] = encode_at(d, n - 1, chain);
  }
  const std::vector<Card> child_sizes(a, below);
  const Card pow_size = chain.size(n) / *f.k.size();
  return join_tuple({*f.k.size(), pow_size}, {f.coeffs[0], join_tuple(child_sizes, children)});
}

}  // namespace

Element encode_series(const TruncatedSeries& f, const TerminalChain& chain) {
  if (f.bound > chain.depth()) {
    throw Error(ErrorKind::DepthExceeded, "series bound " + std::to_string(f.bound) +
                                              " exceeds the chain depth");
  }
  return encode_at(f, f.bound, chain);
}

TruncatedSeries decode_series(Element e, Card n, const Semiring& k, const FinSet& alphabet) {
  TruncatedSeries out = TruncatedSeries::zero(k, alphabet, n);
  if (n == 0) return out;
  const Card q = *k.size();
  const Card a = alphabet.size();
  // sizes of H^m 1: s_0 = 1, s_{m+1} = q * s_m^a
  std::vector<Card> sizes{1};
  for (Card m = 1; m < n; ++m) {
    auto p = checked_pow(sizes.back(), a);
    auto s = p ? checked_mul(q, *p) : std::nullopt;
    if (!s) throw Error(ErrorKind::BlowUpGuard, "level too large to decode");
    sizes.push_back(*s);
  }
  // walk (element, level, prefix) breadth first so prefixes are visited in order
  struct Item {
    Element e;
    Card level;
    Word prefix;
  };
  std::vector<Item> stack{{e, n, {}}};
  while (!stack.empty()) {
    Item it = std::move(stack.back());
    stack.pop_back();
    if (it.level == 0) continue;
    const Card below = sizes[it.level - 1];
    const Card pow_size = *checked_pow(below, a);
    const Element c = it.e / pow_size;
    out.coeffs[word_index(a, it.prefix)] = c;
    const auto children = split_tuple(std::vector<Card>(a, below), it.e % pow_size);
    for (Card letter = 0; letter < a; ++letter) {
      Word w = it.prefix;
      w.push_back(static_cast<std::uint32_t>(letter));
      stack.push_back({children[letter], it.level - 1, std::move(w)});
    }
  }
  return out;
}

LimitPoint series_point(ChainPtr chain, const TruncatedSeries& f) {
  auto shared = std::make_shared<const TruncatedSeries>(f);
  const TerminalChain* c = chain.get();
  return LimitPoint(chain, [shared, c](Card n) {
    return encode_series(shared->truncate(n), *c);
  });
}

TruncatedSeries point_series(const LimitPoint& x, Card n, const Semiring& k,
                             const FinSet& alphabet) {
  return decode_series(x.rep(n), n, k, alphabet);
}

TruncatedSeries linear_combination(const std::vector<std::pair<Scalar, TruncatedSeries>>& terms,
                                   const TruncatedSeries& zero) {
  TruncatedSeries out = zero;
  std::fill(out.coeffs.begin(), out.coeffs.end(), zero.k.zero());
  for (const auto& [c, f] : terms) {
    if (f.bound != zero.bound) throw Error(ErrorKind::BoundMismatch, "mixed series bounds");
    for (Element i = 0; i < out.coeffs.size(); ++i) {
      out.coeffs[i] = zero.k.add(out.coeffs[i], zero.k.mul(c, f.coeffs[i]));
    }
  }
  return out;
}

EMAlgebra module_structure(const Semiring& k, const FinSet& alphabet, const TerminalChain& chain,
                           Card n) {
  auto monad = std::make_shared<const SemimoduleMonad>(k);
  const FinSet& level = chain.level(n);
  const Card size = level.size();
  const Card dom = monad_size(*monad, size);
  const Card count = size;
  return EMAlgebra{level, Arrow{dom, size, [monad, k, alphabet, n, count, &chain](Element phi) {
                                  const auto c = monad->coefficients(count, phi);
                                  std::vector<std::pair<Scalar, TruncatedSeries>> terms;
                                  for (Element s = 0; s < count; ++s) {
                                    if (c[s] != k.zero()) {
                                      terms.emplace_back(c[s], decode_series(s, n, k, alphabet));
                                    }
                                  }
                                  const auto zero = TruncatedSeries::zero(k, alphabet, n);
                                  return encode_series(linear_combination(terms, zero), chain);
                                }}};
}

FinFn moore_coalgebra(const MooreAutomaton& aut) {
  aut.validate();
  const FunctorExpr h = moore_functor(aut.k, aut.alphabet);
  const FinSet hs = eval_functor(h, aut.states);
  const Card n = aut.states.size();
  const Card a = aut.alphabet.size();
  std::vector<Element> table(n);
  for (Element s = 0; s < n; ++s) {
    table[s] = join_tuple({*aut.k.size(), *checked_pow(n, a)},
                          {aut.output[s], join_tuple(std::vector<Card>(a, n), aut.step[s])});
  }
  return FinFn(aut.states, hs, std::move(table));
}

}  // namespace barrlab
