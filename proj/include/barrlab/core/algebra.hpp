#pragma once

#include <string>

#include "barrlab/core/law_report.hpp"
#include "barrlab/core/monad.hpp"

namespace barrlab {

/// An Eilenberg-Moore algebra. The structure map is pointwise so that free
/// algebras on large carriers can be described without a table.
struct EMAlgebra {
  FinSet carrier;
  Arrow structure;  // M(carrier) -> carrier
};

EMAlgebra algebra_from_table(const FinFn& structure);
/// Tabulates the structure map (guarded).
FinFn structure_table(const FinMonad& m, const EMAlgebra& a);

/// (MX, m_X). Throws NonFinitePreserving when MX or MMX is not representable
/// or MX is above the enumeration guard.
EMAlgebra free_algebra(const MonadPtr& m, const FinSet& x);
/// The unique algebra on the singleton.
EMAlgebra terminal_algebra(const MonadPtr& m);

/// Functor, unit, multiplication and naturality laws for every canonical
/// carrier of size 0..max_size.
LawReport check_monad_laws(const MonadPtr& m, Card max_size);

/// Unit and multiplication laws of an algebra. Throws DomainMismatch when the
/// structure map has the wrong shape.
LawReport check_em_algebra(const MonadPtr& m, const EMAlgebra& a);

/// The function {0..n-1} -> {0..k-1} at position `index` in lexicographic
/// order (first argument most significant).
Arrow function_at(Card n, Card k, Element index);
std::string describe_arrow(const Arrow& f);
/// Number of functions n -> k, guarded.
Card function_count(Card n, Card k);

}  // namespace barrlab
