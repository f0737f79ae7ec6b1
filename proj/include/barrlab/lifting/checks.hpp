#pragma once

#include <optional>

#include "barrlab/core/algebra.hpp"
#include "barrlab/lifting/distlaw.hpp"

namespace barrlab {

/// Unit law, multiplication law and naturality of lambda: MH => HM on every
/// canonical carrier of size 0..max_size.
LawReport check_distlaw_em(const DistLawEM& law, Card max_size);

/// Unit law, multiplication law and naturality of varsigma: TM => MT.
LawReport check_distlaw_kl(const DistLawKl& law, Card max_size);

/// The lifted algebra H(a) o lambda on H(carrier).
EMAlgebra lift_algebra(const DistLawEM& law, const EMAlgebra& a);

/// lambda_C o M(xi): MC -> HMC for a coalgebra xi: C -> HC.
FinFn lift_coalgebra(const DistLawEM& law, const FinFn& xi);

struct LiftingDiff {
  FinFn first;
  FinFn second;
  std::optional<Element> difference;  // first element of M(H carrier) where they disagree
};

/// Structure tables of the two liftings of one algebra.
LiftingDiff diff_liftings(const DistLawEM& a, const DistLawEM& b, const EMAlgebra& algebra);

}  // namespace barrlab
