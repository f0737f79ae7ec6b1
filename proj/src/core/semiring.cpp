#include "barrlab/core/semiring.hpp"

#include <algorithm>
#include <functional>
#include <random>

#include "barrlab/error.hpp"

namespace barrlab {

Semiring Semiring::boolean() {
  Semiring k;
  k.kind_ = Kind::Boolean;
  k.name_ = "bool";
  k.size_ = 2;
  return k;
}

Semiring Semiring::zmod(Scalar modulus) {
  if (modulus < 1) throw Error(ErrorKind::InvalidInput, "Z/m needs m >= 1");
  Semiring k;
  k.kind_ = Kind::ZMod;
  k.name_ = "z" + std::to_string(modulus);
  k.size_ = modulus;
  k.modulus_ = modulus;
  k.one_ = modulus == 1 ? 0 : 1;
  return k;
}

Semiring Semiring::min_plus(Scalar cap) {
  Semiring k;
  k.kind_ = Kind::MinPlus;
  k.name_ = "minplus:" + std::to_string(cap);
  k.size_ = cap + 2;
  k.modulus_ = cap;
  k.zero_ = cap + 1;
  k.one_ = 0;
  return k;
}

Semiring Semiring::natural() {
  Semiring k;
  k.kind_ = Kind::Natural;
  k.name_ = "nat";
  return k;
}

Semiring Semiring::table(std::string name, std::vector<std::vector<Scalar>> add,
                         std::vector<std::vector<Scalar>> mul, Scalar zero, Scalar one) {
  const std::size_t n = add.size();
  auto square = [n](const std::vector<std::vector<Scalar>>& t) {
    return t.size() == n && std::all_of(t.begin(), t.end(), [n](const auto& row) {
             return row.size() == n && std::all_of(row.begin(), row.end(),
                                                   [n](Scalar v) { return v < n; });
           });
  };
  if (n == 0 || !square(add) || !square(mul) || zero >= n || one >= n) {
    throw Error(ErrorKind::InvalidInput, "semiring '" + name + "' tables are malformed");
  }
  Semiring k;
  k.kind_ = Kind::Table;
  k.name_ = std::move(name);
  k.size_ = n;
  k.zero_ = zero;
  k.one_ = one;
  k.add_table_ = std::move(add);
  k.mul_table_ = std::move(mul);
  return k;
}

Semiring Semiring::parse(const std::string& name) {
  if (name == "bool" || name == "boolean" || name == "B") return boolean();
  if (name == "nat" || name == "N" || name == "natural") return natural();
  auto number_after = [&](std::size_t pos) -> Scalar {
    try {
      return std::stoull(name.substr(pos));
    } catch (const std::exception&) {
      throw Error(ErrorKind::InvalidInput, "unknown semiring '" + name + "'");
    }
  };
  if (name.rfind("zmod:", 0) == 0) return zmod(number_after(5));
  if (name.rfind("minplus:", 0) == 0) return min_plus(number_after(8));
  if (name.size() > 1 && (name[0] == 'z' || name[0] == 'Z')) return zmod(number_after(1));
  throw Error(ErrorKind::InvalidInput, "unknown semiring '" + name + "'");
}

Scalar Semiring::add(Scalar a, Scalar b) const {
  switch (kind_) {
    case Kind::Boolean: return a | b;
    case Kind::ZMod: return (a + b) % modulus_;
    case Kind::MinPlus: return std::min(a, b);
    case Kind::Natural: {
      auto s = checked_add(a, b);
      if (!s) throw Error(ErrorKind::InvalidInput, "natural-number overflow in addition");
      return *s;
    }
    case Kind::Table: return add_table_[a][b];
  }
  return 0;
}

Scalar Semiring::mul(Scalar a, Scalar b) const {
  switch (kind_) {
    case Kind::Boolean: return a & b;
    case Kind::ZMod: return (a * b) % modulus_;
    case Kind::MinPlus: {
      if (a == zero_ || b == zero_) return zero_;
      return std::min<Scalar>(a + b, modulus_);  // saturate at cap
    }
    case Kind::Natural: {
      auto p = checked_mul(a, b);
      if (!p) throw Error(ErrorKind::InvalidInput, "natural-number overflow in multiplication");
      return *p;
    }
    case Kind::Table: return mul_table_[a][b];
  }
  return 0;
}

std::string Semiring::format(Scalar a) const {
  if (kind_ == Kind::MinPlus && a == zero_) return "inf";
  return std::to_string(a);
}

SemiringAxiomReport check_semiring_axioms(const Semiring& k, std::uint64_t seed,
                                          std::size_t samples) {
  SemiringAxiomReport report;
  auto check = [&](Scalar a, Scalar b, Scalar c) {
    ++report.checked;
    auto fail = [&](const std::string& law) {
      if (report.violations.size() < 16) {
        report.violations.push_back(law + " at (" + k.format(a) + "," + k.format(b) + "," +
                                    k.format(c) + ")");
      }
    };
    if (k.add(k.add(a, b), c) != k.add(a, k.add(b, c))) fail("additive associativity");
    if (k.add(a, b) != k.add(b, a)) fail("additive commutativity");
    if (k.add(a, k.zero()) != a) fail("additive identity");
    if (k.mul(k.mul(a, b), c) != k.mul(a, k.mul(b, c))) fail("multiplicative associativity");
    if (k.mul(a, k.one()) != a || k.mul(k.one(), a) != a) fail("multiplicative identity");
    if (k.mul(a, k.add(b, c)) != k.add(k.mul(a, b), k.mul(a, c))) fail("left distributivity");
    if (k.mul(k.add(a, b), c) != k.add(k.mul(a, c), k.mul(b, c))) fail("right distributivity");
    if (k.mul(a, k.zero()) != k.zero() || k.mul(k.zero(), a) != k.zero()) {
      fail("zero annihilation");
    }
  };
  if (k.finite()) {
    report.exhaustive = true;
    const Card n = *k.size();
    for (Scalar a = 0; a < n; ++a)
      for (Scalar b = 0; b < n; ++b)
        for (Scalar c = 0; c < n; ++c) check(a, b, c);
  } else {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<Scalar> dist(0, 1u << 20);
    for (std::size_t i = 0; i < samples; ++i) check(dist(rng), dist(rng), dist(rng));
  }
  return report;
}

}  // namespace barrlab
