#include "barrlab/io/json_io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "barrlab/error.hpp"

namespace barrlab::io {

Cursor::Cursor(std::string file, const Json& value, std::string path)
    : file_(std::move(file)), value_(&value), path_(std::move(path)) {}

bool Cursor::has(const std::string& key) const {
  return value_->is_object() && value_->contains(key);
}

Cursor Cursor::at(const std::string& key) const {
  if (!value_->is_object()) fail("expected an object with key '" + key + "'");
  auto it = value_->find(key);
  if (it == value_->end()) fail("missing key '" + key + "'");
  return Cursor(file_, *it, path_ + "/" + key);
}

Cursor Cursor::at(std::size_t index) const {
  if (!value_->is_array() || index >= value_->size()) {
    fail("no entry " + std::to_string(index));
  }
  return Cursor(file_, (*value_)[index], path_ + "/" + std::to_string(index));
}

std::size_t Cursor::size() const { return value_->size(); }

std::string Cursor::str() const {
  if (!value_->is_string()) fail("expected a string");
  return value_->get<std::string>();
}

std::uint64_t Cursor::uint() const {
  if (!value_->is_number_unsigned() && !(value_->is_number_integer() && *value_ >= 0)) {
    fail("expected a non-negative integer");
  }
  return value_->get<std::uint64_t>();
}

const Json& Cursor::object() const {
  if (!value_->is_object()) fail("expected an object");
  return *value_;
}

const Json& Cursor::array() const {
  if (!value_->is_array()) fail("expected an array");
  return *value_;
}

void Cursor::fail(const std::string& message) const {
  throw Error(ErrorKind::InvalidInput,
              file_ + ": " + (path_.empty() ? std::string("/") : path_) + ": " + message);
}

Json read_json(const std::string& file) {
  std::ifstream in(file);
  if (!in) throw Error(ErrorKind::InvalidInput, file + ": cannot open");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorKind::InvalidInput,
                file + ": byte " + std::to_string(e.byte) + ": malformed JSON");
  }
}

FinSet parse_set(const Cursor& c, const std::string& default_name) {
  if (c.value().is_number()) return FinSet::canonical(c.uint());
  std::string name = default_name;
  Cursor elems = c;
  if (c.value().is_object()) {
    if (c.has("name")) name = c.at("name").str();
    elems = c.at("elements");
    if (elems.value().is_number()) {
      const Card n = elems.uint();
      std::vector<std::string> labels;
      for (Card i = 0; i < n; ++i) labels.push_back(std::to_string(i));
      return FinSet::labelled(name, labels);
    }
  }
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < elems.array().size(); ++i) {
    const Cursor e = elems.at(i);
    labels.push_back(e.value().is_number() ? std::to_string(e.uint()) : e.str());
  }
  try {
    return FinSet::labelled(name, labels);
  } catch (const Error& e) {
    elems.fail(e.what());
  }
}

namespace {

Element parse_element(const Cursor& c, const FinSet& set) {
  if (c.value().is_number()) {
    const Element e = c.uint();
    if (!set.contains(e)) c.fail(std::to_string(e) + " is not an element of " + set.name());
    return e;
  }
  const std::string label = c.str();
  auto e = set.find(label);
  if (!e) c.fail("'" + label + "' is not an element of " + set.name());
  return *e;
}

Scalar parse_scalar(const Cursor& c, const Semiring& k) {
  Scalar v = 0;
  if (c.value().is_string()) {
    const std::string s = c.str();
    if (s == "inf" && k.kind() == Semiring::Kind::MinPlus) return k.zero();
    try {
      v = std::stoull(s);
    } catch (const std::exception&) {
      c.fail("'" + s + "' is not a coefficient of " + k.name());
    }
  } else {
    v = c.uint();
  }
  if (!k.contains(v)) c.fail(std::to_string(v) + " is not in " + k.name());
  return v;
}

std::vector<Element> index_array(const Cursor& c) {
  std::vector<Element> out;
  for (std::size_t i = 0; i < c.array().size(); ++i) out.push_back(c.at(i).uint());
  return out;
}

std::string lower(std::string s) {
  for (auto& ch : s) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  return s;
}

std::string group_name(const std::string& s) {
  std::string g = s;
  if (!g.empty()) g[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(g[0])));
  return g;
}

FinSet letters(Card n) {
  if (n == 1) return FinSet::labelled("A", {"t"});
  std::vector<std::string> labels;
  for (Card i = 0; i < n; ++i) labels.push_back(std::string(1, static_cast<char>('a' + i)));
  return FinSet::labelled("A", labels);
}

Card parse_count(const std::string& text, const std::string& what) {
  try {
    std::size_t used = 0;
    const Card n = std::stoull(text, &used);
    if (used == 0) throw std::invalid_argument("empty");
    return n;
  } catch (const std::exception&) {
    throw Error(ErrorKind::InvalidInput, "expected a count in " + what);
  }
}

}  // namespace

FinFn parse_function(const Cursor& c, const FinSet& dom, const FinSet& cod) {
  std::vector<Element> table(dom.size());
  if (c.value().is_array()) {
    if (c.size() != dom.size()) {
      c.fail("expected " + std::to_string(dom.size()) + " entries, one per element of " +
             dom.name());
    }
    for (std::size_t i = 0; i < c.size(); ++i) table[i] = parse_element(c.at(i), cod);
    return FinFn(dom, cod, std::move(table));
  }
  std::vector<bool> seen(dom.size(), false);
  for (const auto& [key, value] : c.object().items()) {
    const Cursor entry = c.at(key);
    auto x = dom.find(key);
    if (!x) {
      // keys may also be canonical indices
      try {
        std::size_t used = 0;
        const Element i = std::stoull(key, &used);
        if (used == key.size() && dom.contains(i)) x = i;
      } catch (const std::exception&) {
      }
    }
    if (!x) entry.fail("key '" + key + "' is not an element of " + dom.name());
    table[*x] = parse_element(entry, cod);
    seen[*x] = true;
  }
  for (Element x = 0; x < dom.size(); ++x) {
    if (!seen[x]) c.fail("no value for '" + dom.label(x) + "'");
  }
  return FinFn(dom, cod, std::move(table));
}

Semiring parse_semiring(const Cursor& c) {
  if (c.value().is_string()) {
    try {
      return Semiring::parse(c.str());
    } catch (const Error& e) {
      c.fail(e.what());
    }
  }
  auto table = [&](const char* key) {
    std::vector<std::vector<Scalar>> rows;
    const Cursor t = c.at(key);
    for (std::size_t i = 0; i < t.array().size(); ++i) rows.push_back(index_array(t.at(i)));
    return rows;
  };
  try {
    return Semiring::table(c.at("name").str(), table("add"), table("mul"), c.at("zero").uint(),
                           c.at("one").uint());
  } catch (const Error& e) {
    c.fail(e.what());
  }
}

MonadPtr parse_monad(const Cursor& c) {
  if (c.value().is_string()) {
    try {
      return make_builtin_monad(c.str());
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::InvalidInput) throw;
      c.fail(e.what());
    }
  }
  std::map<Card, TableMonad::Carrier> carriers;
  const Cursor cs = c.at("carriers");
  for (const auto& [key, value] : cs.object().items()) {
    const Cursor entry = cs.at(key);
    TableMonad::Carrier carrier;
    const Card n = parse_count(key, cs.file() + ": " + cs.path() + "/" + key);
    carrier.size = entry.at("size").uint();
    carrier.unit = index_array(entry.at("unit"));
    carrier.mult = index_array(entry.at("mult"));
    if (carrier.unit.size() != n) entry.at("unit").fail("expected one entry per element of X");
    carriers[n] = std::move(carrier);
  }
  std::map<std::string, std::vector<Element>> maps;
  if (c.has("maps")) {
    const Cursor ms = c.at("maps");
    for (std::size_t i = 0; i < ms.array().size(); ++i) {
      const Cursor m = ms.at(i);
      const auto f = index_array(m.at("table"));
      maps[TableMonad::map_key(m.at("dom").uint(), m.at("cod").uint(), f)] =
          index_array(m.at("image"));
    }
  }
  return std::make_shared<TableMonad>(c.at("name").str(), std::move(carriers), std::move(maps));
}

FunctorExpr functor_shorthand(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  for (std::string p; std::getline(ss, p, ':');) parts.push_back(p);
  if (parts.empty()) throw Error(ErrorKind::InvalidInput, "empty functor");
  const std::string& head = parts[0];
  auto need = [&](std::size_t n) {
    if (parts.size() != n) throw Error(ErrorKind::InvalidInput, "malformed functor '" + text + "'");
  };
  if (head == "id") {
    need(1);
    return FunctorExpr::id();
  }
  if (head == "const" || head == "times") {
    need(2);
    const Card n = parse_count(parts[1], text);
    std::vector<std::string> labels;
    for (Card i = 0; i < n; ++i) labels.push_back(std::to_string(i));
    const auto set = FunctorExpr::constant(FinSet::labelled(parts[1], labels));
    return head == "const" ? set : FunctorExpr::prod({set, FunctorExpr::id()});
  }
  if (head == "group") {
    need(2);
    const Group g = named_group(group_name(parts[1]));
    return FunctorExpr::prod({FunctorExpr::constant(g.carrier()), FunctorExpr::id()});
  }
  if (head == "moore") {
    need(3);
    const Semiring k = Semiring::parse(parts[1]);
    std::string count = parts[2];
    for (const char* suffix : {"letters", "letter"}) {
      const std::string s = suffix;
      if (count.size() > s.size() && count.compare(count.size() - s.size(), s.size(), s) == 0) {
        count = count.substr(0, count.size() - s.size());
        break;
      }
    }
    return moore_functor(k, letters(parse_count(count, text)));
  }
  if (head == "stream") {
    need(2);
    const Semiring k = Semiring::parse(parts[1]);
    return FunctorExpr::prod({FunctorExpr::constant(semiring_set(k)), FunctorExpr::id()});
  }
  throw Error(ErrorKind::InvalidInput, "unknown functor '" + text + "'");
}

std::optional<std::string> default_monad_for(const std::string& functor_text) {
  for (const char* head : {"moore:", "stream:"}) {
    const std::string h = head;
    if (functor_text.rfind(h, 0) == 0) {
      const auto rest = functor_text.substr(h.size());
      return "semimodule:" + rest.substr(0, rest.find(':'));
    }
  }
  return std::nullopt;
}

FunctorExpr parse_functor(const Cursor& c) {
  if (c.value().is_string()) {
    try {
      return functor_shorthand(c.str());
    } catch (const Error& e) {
      c.fail(e.what());
    }
  }
  auto list = [&](const Cursor& items) {
    std::vector<FunctorExpr> out;
    for (std::size_t i = 0; i < items.array().size(); ++i) out.push_back(parse_functor(items.at(i)));
    return out;
  };
  if (c.has("const")) return FunctorExpr::constant(parse_set(c.at("const"), "K"));
  if (c.has("prod")) return FunctorExpr::prod(list(c.at("prod")));
  if (c.has("coprod")) return FunctorExpr::coprod(list(c.at("coprod")));
  if (c.has("pow")) {
    const Cursor p = c.at("pow");
    return FunctorExpr::pow(parse_set(p.at("exponent"), "A"), parse_functor(p.at("body")));
  }
  if (c.has("compose")) {
    const Cursor p = c.at("compose");
    if (p.array().size() != 2) p.fail("expected [outer, inner]");
    return FunctorExpr::compose(parse_functor(p.at(0)), parse_functor(p.at(1)));
  }
  c.fail("expected a functor expression");
}

EMAlgebra parse_algebra(const Cursor& c, const MonadPtr& m) {
  const FinSet carrier = parse_set(c.at("carrier"), "X");
  const FinSet mx = monad_obj(*m, carrier);
  mx.require_enumerable("M(carrier)");
  return algebra_from_table(parse_function(c.at("structure"), mx, carrier));
}

LoadedLaw builtin_law(const std::string& name) {
  const std::string l = lower(name);
  if (l.rfind("gset-", 0) == 0) {
    std::string g = name.substr(5);
    bool conj = false;
    if (lower(g).size() > 5 && lower(g).substr(g.size() - 5) == "-conj") {
      conj = true;
      g = g.substr(0, g.size() - 5);
    }
    auto [first, second] = gset_distlaws(named_group(group_name(g)));
    return conj ? LoadedLaw{second, nullptr, first} : LoadedLaw{first, nullptr, second};
  }
  if (l.rfind("identity:", 0) == 0) {
    const auto m = make_builtin_monad(name.substr(9));
    return LoadedLaw{identity_law_em(m), identity_law_kl(m), nullptr};
  }
  if (l.rfind("kleisli:", 0) == 0) {
    const auto rest = name.substr(8);
    const auto colon = rest.find(':');
    if (colon == std::string::npos) {
      throw Error(ErrorKind::InvalidInput, "expected kleisli:<letters>:<monad>");
    }
    const auto lift = kleisli_lift_poly(letters(parse_count(rest.substr(0, colon), name)),
                                        make_builtin_monad(rest.substr(colon + 1)));
    return LoadedLaw{nullptr, lift.law, nullptr};
  }
  if (l.rfind("product:", 0) == 0) {
    // product:<functor shorthand>@<monad>
    const auto rest = name.substr(8);
    const auto at = rest.find('@');
    const auto functor = rest.substr(0, at);
    std::string monad;
    if (at != std::string::npos) {
      monad = rest.substr(at + 1);
    } else if (auto d = default_monad_for(functor)) {
      monad = *d;
    } else {
      throw Error(ErrorKind::InvalidInput, "expected product:<functor>@<monad>");
    }
    return LoadedLaw{product_law(functor_shorthand(functor), make_builtin_monad(monad)), nullptr,
                     nullptr};
  }
  throw Error(ErrorKind::InvalidInput, "unknown law '" + name + "'");
}

LoadedLaw parse_law(const Cursor& c) {
  if (c.value().is_string()) {
    try {
      return builtin_law(c.str());
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::InvalidInput) throw;
      c.fail(e.what());
    }
  }
  const std::string kind = c.at("kind").str();
  if (kind != "em" && kind != "kl") c.at("kind").fail("expected \"em\" or \"kl\"");
  const MonadPtr m = parse_monad(c.at("monad"));
  const FunctorExpr f = parse_functor(c.at("functor"));
  const std::string name = c.has("name") ? c.at("name").str() : std::string("law");
  if (c.has("components")) {
    std::map<Card, std::vector<Element>> tables;
    const Cursor comps = c.at("components");
    for (const auto& [key, value] : comps.object().items()) {
      tables[parse_count(key, comps.file() + ": " + comps.path() + "/" + key)] =
          index_array(comps.at(key));
    }
    if (kind == "em") return LoadedLaw{table_law_em(name, f, m, tables), nullptr, nullptr};
    return LoadedLaw{nullptr, table_law_kl(name, f, m, tables), nullptr};
  }
  const std::string family = c.has("family") ? c.at("family").str() : std::string("product");
  if (kind == "em" && family == "product") return LoadedLaw{product_law(f, m), nullptr, nullptr};
  if (family == "identity") return LoadedLaw{identity_law_em(m), identity_law_kl(m), nullptr};
  c.at("family").fail("unknown family '" + family + "'");
}

MooreAutomaton parse_automaton(const Cursor& c) {
  MooreAutomaton aut{parse_semiring(c.at("semiring")), parse_set(c.at("states"), "S"),
                     parse_set(c.at("alphabet"), "A"), {}, {}};
  const Cursor out = c.at("output");
  const Cursor step = c.at("step");
  aut.output.resize(aut.states.size());
  aut.step.assign(aut.states.size(), std::vector<Element>(aut.alphabet.size()));
  for (Element s = 0; s < aut.states.size(); ++s) {
    const std::string label = aut.states.label(s);
    aut.output[s] = parse_scalar(out.at(label), aut.k);
    const Cursor row = step.at(label);
    for (Element a = 0; a < aut.alphabet.size(); ++a) {
      aut.step[s][a] = parse_element(row.at(aut.alphabet.label(a)), aut.states);
    }
  }
  aut.validate();
  return aut;
}

namespace {

Word parse_word_at(const Cursor& c, const std::string& text, const FinSet& alphabet) {
  try {
    return parse_word(alphabet, text);
  } catch (const Error& e) {
    c.fail(e.what());
  }
}

}  // namespace

Polynomial parse_polynomial(const Cursor& c, const Semiring& k, const FinSet& alphabet) {
  Polynomial p(k, alphabet);
  for (const auto& [key, value] : c.object().items()) {
    const Cursor entry = c.at(key);
    p.set(parse_word_at(entry, key, alphabet), parse_scalar(entry, k));
  }
  return p;
}

TruncatedSeries parse_series(const Cursor& c) {
  const Semiring k = parse_semiring(c.at("semiring"));
  const FinSet alphabet = parse_set(c.at("alphabet"), "A");
  TruncatedSeries f = TruncatedSeries::zero(k, alphabet, c.at("bound").uint());
  const Cursor coeffs = c.at("coefficients");
  for (const auto& [key, value] : coeffs.object().items()) {
    const Cursor entry = coeffs.at(key);
    const Word w = parse_word_at(entry, key, alphabet);
    if (w.size() >= f.bound) entry.fail("word '" + key + "' is not below the bound");
    f.coeffs[word_index(alphabet.size(), w)] = parse_scalar(entry, k);
  }
  return f;
}

CauchySequence parse_sequence(const Cursor& c) {
  const Semiring k = parse_semiring(c.at("semiring"));
  const FinSet alphabet = parse_set(c.at("alphabet"), "A");
  const Cursor terms = c.at("terms");
  auto polys = std::make_shared<std::vector<Polynomial>>();
  for (std::size_t i = 0; i < terms.array().size(); ++i) {
    polys->push_back(parse_polynomial(terms.at(i), k, alphabet));
  }
  if (polys->empty()) terms.fail("expected at least one term");
  CauchySequence seq;
  seq.horizon = polys->size() - 1;
  seq.term = [polys](Card n) { return (*polys)[n]; };
  if (c.has("modulus")) {
    auto modulus = std::make_shared<std::vector<Element>>(index_array(c.at("modulus")));
    seq.modulus = [modulus](Card r) -> Card {
      if (r >= modulus->size()) {
        throw Error(ErrorKind::NotCauchy, "no modulus given for r = " + std::to_string(r));
      }
      return (*modulus)[r];
    };
  }
  return seq;
}

LoadedCandidate parse_candidate(const Cursor& c) {
  const MonadPtr m = parse_monad(c.at("monad"));
  if (c.has("case")) {
    auto kind = parse_partner_case(c.at("case").str());
    if (!kind) c.at("case").fail("expected moore, streams or constant");
    const FinSet b = parse_set(c.at("generators"), *kind == PartnerCase::Moore ? "A" : "B");
    auto pair = partner_for_product(*kind, b, m);
    return LoadedCandidate{pair.candidate, pair.h_law};
  }
  const FunctorExpr t = parse_functor(c.at("t"));
  const FunctorExpr h = parse_functor(c.at("h"));
  std::map<Card, std::vector<Element>> tables;
  if (c.has("sigma")) {
    const Cursor s = c.at("sigma");
    for (const auto& [key, value] : s.object().items()) {
      tables[parse_count(key, s.file() + ": " + s.path() + "/" + key)] = index_array(s.at(key));
    }
  }
  const std::string name = c.has("name") ? c.at("name").str() : std::string("candidate");
  return LoadedCandidate{table_candidate(name, t, h, m, std::move(tables)), product_law(h, m)};
}

Json series_json(const TruncatedSeries& f) {
  Json alphabet = Json::array();
  for (Element a = 0; a < f.alphabet.size(); ++a) alphabet.push_back(f.alphabet.label(a));
  Json coeffs = Json::object();
  for (Element i = 0; i < f.coeffs.size(); ++i) {
    coeffs[format_word(f.alphabet, word_at(f.alphabet.size(), i))] = f.coeffs[i];
  }
  return Json{{"semiring", f.k.name()},
              {"alphabet", alphabet},
              {"bound", f.bound},
              {"coefficients", coeffs}};
}

Json dist_json(const DyadicDist& d) {
  return d.exact ? Json{{"agree_depth", d.depth}} : Json{{"gt_probe", d.depth}};
}

Json report_json(const LawReport& r) {
  Json results = Json::array();
  for (const auto& x : r.results) {
    Json j{{"law", x.law},
           {"scope", x.scope},
           {"verdict", std::string(to_string(x.verdict))},
           {"checked", x.checked}};
    if (x.counterexample) {
      const auto& ce = *x.counterexample;
      j["counterexample"] = Json{{"subject", r.subject}, {"law", x.law},
                                 {"scope", x.scope},     {"carrier", ce.carrier},
                                 {"element", ce.element}, {"label", ce.label},
                                 {"lhs", ce.lhs},         {"rhs", ce.rhs},
                                 {"context", ce.context}};
    }
    if (!x.note.empty()) j["note"] = x.note;
    results.push_back(std::move(j));
  }
  return Json{{"subject", r.subject}, {"results", results}};
}

}  // namespace barrlab::io
