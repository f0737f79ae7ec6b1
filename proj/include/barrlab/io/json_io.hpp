#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "barrlab/chains/chain.hpp"
#include "barrlab/compair/compair.hpp"
#include "barrlab/core/algebra.hpp"
#include "barrlab/lifting/distlaw.hpp"
#include "barrlab/series/series.hpp"

namespace barrlab::io {

using Json = nlohmann::ordered_json;

/// Position inside an input document, used to cite the file, the JSON path
/// and the offending key in parse errors.
class Cursor {
 public:
  Cursor(std::string file, const Json& value, std::string path = "");

  const Json& value() const { return *value_; }
  const std::string& file() const { return file_; }
  const std::string& path() const { return path_; }

  bool has(const std::string& key) const;
  Cursor at(const std::string& key) const;
  Cursor at(std::size_t index) const;
  std::size_t size() const;

  std::string str() const;
  std::uint64_t uint() const;
  const Json& object() const;
  const Json& array() const;

  [[noreturn]] void fail(const std::string& message) const;

 private:
  std::string file_;
  const Json* value_;
  std::string path_;
};

/// Reads and parses a JSON file; syntax errors name the file and byte offset.
Json read_json(const std::string& file);

/// ["a","b"] or {"name": ..., "elements": [...]} or a size.
FinSet parse_set(const Cursor& c, const std::string& default_name = "X");
/// {"<dom label>": "<cod label>", ...} or an array of codomain labels.
FinFn parse_function(const Cursor& c, const FinSet& dom, const FinSet& cod);

Semiring parse_semiring(const Cursor& c);
/// Builtin name or {"name", "carriers": {"n": {"unit", "mult"}}, "maps"}.
MonadPtr parse_monad(const Cursor& c);

/// "id", {"const": set}, {"prod": [...]}, {"coprod": [...]},
/// {"pow": {"exponent": set, "body": F}}, {"compose": [outer, inner]},
/// or a shorthand string (see functor_shorthand).
FunctorExpr parse_functor(const Cursor& c);
/// "id", "times:<n>", "group:<G>", "const:<n>", "moore:<semiring>:<n>letter",
/// "stream:<n>".
FunctorExpr functor_shorthand(const std::string& text);
/// The semimodule monad matching a moore shorthand, if any.
std::optional<std::string> default_monad_for(const std::string& functor_text);

EMAlgebra parse_algebra(const Cursor& c, const MonadPtr& m);

struct LoadedLaw {
  DistLawEMPtr em;
  DistLawKlPtr kl;
  // set for builtin families with a companion (gset laws)
  DistLawEMPtr companion;
};

/// Builtin names: "gset-<G>", "gset-<G>-conj", "identity:<monad>",
/// "kleisli:<letters>:<monad>"; or a document
/// {"kind": "em"|"kl", "monad", "functor", "family": "product"|"identity"} or
/// {"kind", "monad", "functor", "components": {"n": [...]}}.
LoadedLaw parse_law(const Cursor& c);
LoadedLaw builtin_law(const std::string& name);

MooreAutomaton parse_automaton(const Cursor& c);

/// {"semiring", "alphabet", "bound", "coefficients": {"word": c}} with the
/// empty word written as "".
TruncatedSeries parse_series(const Cursor& c);
Polynomial parse_polynomial(const Cursor& c, const Semiring& k, const FinSet& alphabet);

/// {"semiring", "alphabet", "terms": [polynomial...], "modulus": [n_0, ...]}.
CauchySequence parse_sequence(const Cursor& c);

struct LoadedCandidate {
  CommutingCandidate candidate;
  DistLawEMPtr law;
};

/// {"case": "moore"|"streams"|"constant", "monad", "generators"} or
/// {"monad", "t", "h", "sigma": {"n": [...]}} checked against the product law of H.
LoadedCandidate parse_candidate(const Cursor& c);

Json series_json(const TruncatedSeries& f);
Json dist_json(const DyadicDist& d);
Json report_json(const LawReport& r);

}  // namespace barrlab::io
