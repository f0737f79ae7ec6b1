#include "barrlab/core/monad.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "barrlab/error.hpp"

namespace barrlab {

std::string FinMonad::label(const FinSet&, Element t) const { return "#" + std::to_string(t); }

Card monad_size(const FinMonad& m, Card n) {
  auto s = m.size(n);
  if (!s) {
    throw Error(ErrorKind::NonFinitePreserving,
                "|" + m.name() + "(X)| for |X| = " + std::to_string(n) +
                    " is not representable");
  }
  return *s;
}

FinSet monad_obj(const FinMonad& m, const FinSet& x) {
  const Card size = monad_size(m, x.size());
  auto self = &m;
  return FinSet(m.name() + "(" + x.name() + ")", size,
                [self, x](Element t) { return self->label(x, t); });
}

Arrow monad_arrow(const MonadPtr& m, const Arrow& f) {
  return Arrow{monad_size(*m, f.dom), monad_size(*m, f.cod),
               [m, f](Element t) { return m->map(f, t); }};
}

FinFn monad_map(const FinMonad& m, const FinFn& f) {
  const FinSet dom = monad_obj(m, f.dom());
  const FinSet cod = monad_obj(m, f.cod());
  const Arrow a = f.arrow();
  return FinFn::tabulate(dom, cod, [&](Element t) { return m.map(a, t); });
}

FinFn monad_unit(const FinMonad& m, const FinSet& x) {
  const FinSet mx = monad_obj(m, x);
  return FinFn::tabulate(x, mx, [&](Element e) { return m.unit(x.size(), e); });
}

FinFn monad_mult(const FinMonad& m, const FinSet& x) {
  const FinSet mx = monad_obj(m, x);
  const FinSet mmx = monad_obj(m, mx);
  return FinFn::tabulate(mmx, mx, [&](Element tt) { return m.mult(x.size(), tt); });
}

// --- monoids and groups -----------------------------------------------------

void validate_monoid(const Monoid& b) {
  const Card n = b.carrier.size();
  if (b.table.size() != n || b.identity >= n) {
    throw Error(ErrorKind::InvalidInput, "monoid table has wrong shape");
  }
  for (const auto& row : b.table) {
    if (row.size() != n || std::any_of(row.begin(), row.end(), [n](Element v) { return v >= n; }))
      throw Error(ErrorKind::InvalidInput, "monoid table has wrong shape");
  }
  for (Element a = 0; a < n; ++a) {
    if (b.mul(b.identity, a) != a || b.mul(a, b.identity) != a) {
      throw Error(ErrorKind::InvalidInput,
                  "monoid identity fails at " + b.carrier.label(a));
    }
    for (Element c = 0; c < n; ++c)
      for (Element d = 0; d < n; ++d)
        if (b.mul(b.mul(a, c), d) != b.mul(a, b.mul(c, d))) {
          throw Error(ErrorKind::InvalidInput,
                      "monoid is not associative at (" + b.carrier.label(a) + "," +
                          b.carrier.label(c) + "," + b.carrier.label(d) + ")");
        }
  }
}

Group make_group(Monoid b) {
  try {
    validate_monoid(b);
  } catch (const Error& e) {
    throw Error(ErrorKind::NotAGroup, e.what());
  }
  const Card n = b.carrier.size();
  std::vector<Element> inverse(n);
  for (Element a = 0; a < n; ++a) {
    bool found = false;
    for (Element c = 0; c < n && !found; ++c) {
      if (b.mul(a, c) == b.identity && b.mul(c, a) == b.identity) {
        inverse[a] = c;
        found = true;
      }
    }
    if (!found) {
      throw Error(ErrorKind::NotAGroup, b.carrier.label(a) + " has no inverse");
    }
  }
  return Group{std::move(b), std::move(inverse)};
}

bool Group::abelian() const {
  const Card n = carrier().size();
  for (Element a = 0; a < n; ++a)
    for (Element c = 0; c < n; ++c)
      if (mul(a, c) != mul(c, a)) return false;
  return true;
}

Group symmetric_group3() {
  std::vector<std::array<int, 3>> perms;
  std::array<int, 3> p{0, 1, 2};
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  std::vector<std::string> labels;
  for (const auto& q : perms) {
    labels.push_back(std::to_string(q[0]) + std::to_string(q[1]) + std::to_string(q[2]));
  }
  std::vector<std::vector<Element>> table(6, std::vector<Element>(6));
  for (std::size_t g = 0; g < 6; ++g) {
    for (std::size_t h = 0; h < 6; ++h) {
      std::array<int, 3> gh{};
      for (int i = 0; i < 3; ++i) gh[i] = perms[g][perms[h][i]];
      table[g][h] = std::find(perms.begin(), perms.end(), gh) - perms.begin();
    }
  }
  return make_group(Monoid{FinSet::labelled("S3", labels), table, 0});
}

Group cyclic_group(Card n) {
  if (n == 0) throw Error(ErrorKind::NotAGroup, "the cyclic group needs order >= 1");
  std::vector<std::vector<Element>> table(n, std::vector<Element>(n));
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) table[a][b] = (a + b) % n;
  FinSet carrier("Z" + std::to_string(n), n);
  return make_group(Monoid{carrier, table, 0});
}

Group named_group(const std::string& name) {
  if (name == "S3") return symmetric_group3();
  if (name.size() > 1 && (name[0] == 'Z' || name[0] == 'C' || name[0] == 'z')) {
    try {
      return cyclic_group(std::stoull(name.substr(1)));
    } catch (const std::invalid_argument&) {
    }
  }
  throw Error(ErrorKind::InvalidInput, "unknown group '" + name + "'");
}

// --- exception / maybe --------------------------------------------------------

std::shared_ptr<ExceptionMonad> ExceptionMonad::maybe() {
  return std::make_shared<ExceptionMonad>(FinSet::labelled("1", {"nothing"}), "maybe");
}

ExceptionMonad::ExceptionMonad(FinSet exceptions, std::string name)
    : exceptions_(std::move(exceptions)), name_(std::move(name)) {
  if (name_.empty()) name_ = "exception:" + std::to_string(exceptions_.size());
}

std::string ExceptionMonad::name() const { return name_; }

std::optional<Card> ExceptionMonad::size(Card n) const {
  return checked_add(exceptions_.size(), n);
}

Element ExceptionMonad::unit(Card, Element x) const { return exceptions_.size() + x; }

Element ExceptionMonad::map(const Arrow& f, Element t) const {
  const Card e = exceptions_.size();
  return t < e ? t : e + f.apply(t - e);
}

Element ExceptionMonad::mult(Card, Element tt) const {
  const Card e = exceptions_.size();
  return tt < e ? tt : tt - e;
}

std::string ExceptionMonad::label(const FinSet& x, Element t) const {
  const Card e = exceptions_.size();
  if (t < e) return exceptions_.label(t);
  return (name_ == "maybe" ? "just(" : "ok(") + x.label(t - e) + ")";
}

// --- writer ---------------------------------------------------------------------

WriterMonad::WriterMonad(Monoid b, std::string name)
    : monoid_(std::move(b)), name_(std::move(name)) {
  validate_monoid(monoid_);
  if (name_.empty()) name_ = "writer:" + monoid_.carrier.name();
}

std::string WriterMonad::name() const { return name_; }

std::optional<Card> WriterMonad::size(Card n) const {
  return checked_mul(monoid_.carrier.size(), n);
}

Element WriterMonad::unit(Card n, Element x) const { return monoid_.identity * n + x; }

Element WriterMonad::map(const Arrow& f, Element t) const {
  const Element b = t / f.dom;
  return b * f.cod + f.apply(t % f.dom);
}

Element WriterMonad::mult(Card n, Element tt) const {
  const Card inner_size = monoid_.carrier.size() * n;
  const Element outer = tt / inner_size;
  const Element inner = tt % inner_size;
  return monoid_.mul(outer, inner / n) * n + inner % n;
}

std::string WriterMonad::label(const FinSet& x, Element t) const {
  return "(" + monoid_.carrier.label(t / x.size()) + "," + x.label(t % x.size()) + ")";
}

// --- semimodule -------------------------------------------------------------------

SemimoduleMonad::SemimoduleMonad(Semiring k, std::string name)
    : k_(std::move(k)), name_(std::move(name)) {
  if (!k_.finite()) {
    throw Error(ErrorKind::NonFinitePreserving,
                "the semimodule monad over '" + k_.name() + "' does not preserve finite sets");
  }
  q_ = *k_.size();
  if (name_.empty()) name_ = "semimodule:" + k_.name();
}

std::string SemimoduleMonad::name() const { return name_; }

std::optional<Card> SemimoduleMonad::size(Card n) const { return checked_pow(q_, n); }

std::vector<Scalar> SemimoduleMonad::coefficients(Card n, Element t) const {
  std::vector<Scalar> c(n);
  for (Card i = n; i-- > 0;) {
    c[i] = t % q_;
    t /= q_;
  }
  return c;
}

Element SemimoduleMonad::from_coefficients(const std::vector<Scalar>& coeffs) const {
  Element t = 0;
  for (Scalar c : coeffs) t = t * q_ + c;
  return t;
}

Element SemimoduleMonad::unit(Card n, Element x) const {
  std::vector<Scalar> c(n, k_.zero());
  c[x] = k_.one();
  return from_coefficients(c);
}

Element SemimoduleMonad::map(const Arrow& f, Element t) const {
  const auto c = coefficients(f.dom, t);
  std::vector<Scalar> out(f.cod, k_.zero());
  for (Card x = 0; x < f.dom; ++x) {
    if (c[x] == k_.zero()) continue;
    const Element y = f.apply(x);
    out[y] = k_.add(out[y], c[x]);
  }
  return from_coefficients(out);
}

Element SemimoduleMonad::mult(Card n, Element tt) const {
  const Card mx = *size(n);
  const auto outer = coefficients(mx, tt);
  std::vector<Scalar> out(n, k_.zero());
  for (Element psi = 0; psi < mx; ++psi) {
    if (outer[psi] == k_.zero()) continue;
    const auto inner = coefficients(n, psi);
    for (Card x = 0; x < n; ++x) out[x] = k_.add(out[x], k_.mul(outer[psi], inner[x]));
  }
  return from_coefficients(out);
}

std::string SemimoduleMonad::label(const FinSet& x, Element t) const {
  const auto c = coefficients(x.size(), t);
  std::string s = "{";
  bool first = true;
  for (Card i = 0; i < x.size(); ++i) {
    if (c[i] == k_.zero()) continue;
    if (!first) s += ",";
    first = false;
    s += x.label(i);
    if (k_.kind() != Semiring::Kind::Boolean) s += ":" + k_.format(c[i]);
  }
  return s + "}";
}

// --- explicit tables ---------------------------------------------------------------

TableMonad::TableMonad(std::string name, std::map<Card, Carrier> carriers,
                       std::map<std::string, std::vector<Element>> maps)
    : name_(std::move(name)), carriers_(std::move(carriers)), maps_(std::move(maps)) {
  for (const auto& [n, c] : carriers_) {
    if (c.unit.size() != n) {
      throw Error(ErrorKind::InvalidInput, "unit table for carrier " + std::to_string(n) +
                                               " needs " + std::to_string(n) + " entries");
    }
  }
}

const TableMonad::Carrier& TableMonad::carrier(Card n) const {
  auto it = carriers_.find(n);
  if (it == carriers_.end()) {
    throw Error(ErrorKind::MissingComponent,
                name_ + " has no tables for carrier size " + std::to_string(n));
  }
  return it->second;
}

std::optional<Card> TableMonad::size(Card n) const { return carrier(n).size; }

Element TableMonad::unit(Card n, Element x) const { return carrier(n).unit.at(x); }

Element TableMonad::mult(Card n, Element tt) const {
  const auto& c = carrier(n);
  if (tt >= c.mult.size()) {
    throw Error(ErrorKind::MissingComponent,
                name_ + " has no multiplication entry " + std::to_string(tt) +
                    " for carrier size " + std::to_string(n));
  }
  return c.mult[tt];
}

std::string TableMonad::map_key(Card dom, Card cod, const std::vector<Element>& table) {
  std::ostringstream key;
  key << dom << "->" << cod << ":";
  for (std::size_t i = 0; i < table.size(); ++i) key << (i ? "," : "") << table[i];
  return key.str();
}

Element TableMonad::map(const Arrow& f, Element t) const {
  std::vector<Element> table(f.dom);
  for (Card x = 0; x < f.dom; ++x) table[x] = f.apply(x);
  // the identity needs no table
  bool identity = f.dom == f.cod;
  for (Card x = 0; identity && x < f.dom; ++x) identity = table[x] == x;
  if (identity) return t;
  const auto key = map_key(f.dom, f.cod, table);
  auto it = maps_.find(key);
  if (it == maps_.end()) {
    throw Error(ErrorKind::MissingComponent, name_ + " has no table for map " + key);
  }
  return it->second.at(t);
}

// --- builtins -------------------------------------------------------------------------

MonadPtr make_builtin_monad(const std::string& spec) {
  const auto colon = spec.find(':');
  const std::string head = spec.substr(0, colon);
  const std::string arg = colon == std::string::npos ? "" : spec.substr(colon + 1);
  if (head == "maybe") return ExceptionMonad::maybe();
  if (head == "exception") {
    Card e = 1;
    try {
      e = arg.empty() ? 1 : std::stoull(arg);
    } catch (const std::exception&) {
      throw Error(ErrorKind::InvalidInput, "exception monad needs a count: " + spec);
    }
    std::vector<std::string> labels;
    for (Card i = 0; i < e; ++i) labels.push_back("err" + std::to_string(i));
    return std::make_shared<ExceptionMonad>(FinSet::labelled("E", labels));
  }
  if (head == "writer") return std::make_shared<WriterMonad>(named_group(arg).monoid);
  if (head == "powerset") return std::make_shared<SemimoduleMonad>(Semiring::boolean(), "powerset");
  if (head == "semimodule") return std::make_shared<SemimoduleMonad>(Semiring::parse(arg));
  if (head == "list") {
    throw Error(ErrorKind::NonFinitePreserving,
                "the list monad maps finite sets to infinite ones");
  }
  throw Error(ErrorKind::InvalidInput, "unknown monad '" + spec + "'");
}

}  // namespace barrlab
