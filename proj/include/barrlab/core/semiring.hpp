#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "barrlab/core/card.hpp"

namespace barrlab {

using Scalar = std::uint64_t;

/// A semiring whose values are non-negative integers. Finite semirings have
/// carrier {0, ..., size-1}; the natural numbers are the only infinite one
/// bundled and are checked by seeded spot checks.
class Semiring {
 public:
  enum class Kind { Boolean, ZMod, MinPlus, Natural, Table };

  static Semiring boolean();
  static Semiring zmod(Scalar modulus);
  /// Tropical (min, +) on {0..cap} with an absorbing infinity encoded as cap+1.
  static Semiring min_plus(Scalar cap);
  static Semiring natural();
  static Semiring table(std::string name, std::vector<std::vector<Scalar>> add,
                        std::vector<std::vector<Scalar>> mul, Scalar zero, Scalar one);

  /// "bool", "z2", "z4", "zmod:6", "minplus:5", "nat".
  static Semiring parse(const std::string& name);

  Kind kind() const { return kind_; }
  const std::string& name() const { return name_; }
  std::optional<Card> size() const { return size_; }
  bool finite() const { return size_.has_value(); }

  Scalar zero() const { return zero_; }
  Scalar one() const { return one_; }
  Scalar add(Scalar a, Scalar b) const;
  Scalar mul(Scalar a, Scalar b) const;
  bool contains(Scalar a) const { return !size_ || a < *size_; }

  std::string format(Scalar a) const;

 private:
  Kind kind_ = Kind::Boolean;
  std::string name_;
  std::optional<Card> size_;
  Scalar modulus_ = 2;
  Scalar zero_ = 0;
  Scalar one_ = 1;
  std::vector<std::vector<Scalar>> add_table_;
  std::vector<std::vector<Scalar>> mul_table_;
};

struct SemiringAxiomReport {
  bool exhaustive = false;
  std::size_t checked = 0;
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

/// Exhaustive for finite carriers; `samples` seeded spot checks otherwise.
SemiringAxiomReport check_semiring_axioms(const Semiring& k, std::uint64_t seed = 0,
                                          std::size_t samples = 2000);

}  // namespace barrlab
