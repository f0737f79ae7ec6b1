#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "barrlab/core/finset.hpp"
#include "barrlab/core/semiring.hpp"

namespace barrlab {

/// A finiteness-preserving monad on finite sets.
///
/// Carriers are identified by their size: X = {0..n-1}. All operations are
/// pointwise so that elements of large images (M of a big set) can be
/// manipulated without enumerating them.
class FinMonad {
 public:
  virtual ~FinMonad() = default;

  virtual std::string name() const = 0;
  /// |M X| for |X| = n, or nullopt when it does not fit in 64 bits.
  virtual std::optional<Card> size(Card n) const = 0;
  /// u_X(x).
  virtual Element unit(Card n, Element x) const = 0;
  /// (M f)(t) for t in M(dom f).
  virtual Element map(const Arrow& f, Element t) const = 0;
  /// m_X(tt) for tt in M(M X), |X| = n.
  virtual Element mult(Card n, Element tt) const = 0;
  virtual std::string label(const FinSet& x, Element t) const;

  /// True when Alg(M) has finite biproducts (semimodule-type monads).
  virtual bool biproducts() const { return false; }
  /// The coefficient semiring of a semimodule-type monad.
  virtual const Semiring* semiring() const { return nullptr; }
};

using MonadPtr = std::shared_ptr<const FinMonad>;

/// |M X|; throws NonFinitePreserving when not representable.
Card monad_size(const FinMonad& m, Card n);
FinSet monad_obj(const FinMonad& m, const FinSet& x);
/// Pointwise M f.
Arrow monad_arrow(const MonadPtr& m, const Arrow& f);

// Materialized components (guarded).
FinFn monad_map(const FinMonad& m, const FinFn& f);
FinFn monad_unit(const FinMonad& m, const FinSet& x);
FinFn monad_mult(const FinMonad& m, const FinSet& x);

/// A finite monoid given by its multiplication table.
struct Monoid {
  FinSet carrier;
  std::vector<std::vector<Element>> table;
  Element identity = 0;

  Element mul(Element a, Element b) const { return table[a][b]; }
};

/// A finite group; inverse[g] is the inverse of g.
struct Group {
  Monoid monoid;
  std::vector<Element> inverse;

  const FinSet& carrier() const { return monoid.carrier; }
  Element mul(Element a, Element b) const { return monoid.mul(a, b); }
  Element identity() const { return monoid.identity; }
  bool abelian() const;
};

/// Validates associativity and identity; throws InvalidInput.
void validate_monoid(const Monoid& b);
/// Validates the group axioms; throws NotAGroup.
Group make_group(Monoid b);

/// Symmetric group on {0,1,2}; elements are permutations in lexicographic
/// order of their one-line notation, product is composition (g h)(i) = g(h(i)).
Group symmetric_group3();
Group cyclic_group(Card n);
/// "S3", "Z2", "Z5", "C3".
Group named_group(const std::string& name);

class ExceptionMonad : public FinMonad {
 public:
  /// Maybe is the exception monad with a single exception called "nothing".
  static std::shared_ptr<ExceptionMonad> maybe();
  explicit ExceptionMonad(FinSet exceptions, std::string name = {});

  std::string name() const override;
  std::optional<Card> size(Card n) const override;
  Element unit(Card n, Element x) const override;
  Element map(const Arrow& f, Element t) const override;
  Element mult(Card n, Element tt) const override;
  std::string label(const FinSet& x, Element t) const override;

 private:
  FinSet exceptions_;
  std::string name_;
};

class WriterMonad : public FinMonad {
 public:
  explicit WriterMonad(Monoid b, std::string name = {});

  std::string name() const override;
  std::optional<Card> size(Card n) const override;
  Element unit(Card n, Element x) const override;
  Element map(const Arrow& f, Element t) const override;
  Element mult(Card n, Element tt) const override;
  std::string label(const FinSet& x, Element t) const override;
  const Monoid& monoid() const { return monoid_; }

 private:
  Monoid monoid_;
  std::string name_;
};

/// k-semimodule monad M X = k^X for a finite semiring k. An element is the
/// coefficient tuple (c_0, ..., c_{n-1}) in base |k| with c_0 most significant.
/// The finite powerset monad is the case k = Booleans.
class SemimoduleMonad : public FinMonad {
 public:
  explicit SemimoduleMonad(Semiring k, std::string name = {});

  std::string name() const override;
  std::optional<Card> size(Card n) const override;
  Element unit(Card n, Element x) const override;
  Element map(const Arrow& f, Element t) const override;
  Element mult(Card n, Element tt) const override;
  std::string label(const FinSet& x, Element t) const override;
  bool biproducts() const override { return true; }
  const Semiring* semiring() const override { return &k_; }

  std::vector<Scalar> coefficients(Card n, Element t) const;
  Element from_coefficients(const std::vector<Scalar>& coeffs) const;

 private:
  Semiring k_;
  Card q_;
  std::string name_;
};

/// A monad given by explicit tables per carrier size. `map` is keyed by
/// "<dom>-><cod>:<comma separated table>".
class TableMonad : public FinMonad {
 public:
  struct Carrier {
    Card size = 0;
    std::vector<Element> unit;
    std::vector<Element> mult;  // indexed by elements of M(M X)
  };

  TableMonad(std::string name, std::map<Card, Carrier> carriers,
             std::map<std::string, std::vector<Element>> maps);

  std::string name() const override { return name_; }
  std::optional<Card> size(Card n) const override;
  Element unit(Card n, Element x) const override;
  Element map(const Arrow& f, Element t) const override;
  Element mult(Card n, Element tt) const override;

  static std::string map_key(Card dom, Card cod, const std::vector<Element>& table);

 private:
  const Carrier& carrier(Card n) const;
  std::string name_;
  std::map<Card, Carrier> carriers_;
  std::map<std::string, std::vector<Element>> maps_;
};

/// "maybe", "exception:<k>", "writer:<group or monoid>", "powerset",
/// "semimodule:<semiring>". The list monad is rejected with NonFinitePreserving.
MonadPtr make_builtin_monad(const std::string& spec);

}  // namespace barrlab
