#pragma once

#include "barrlab/chains/initial.hpp"
#include "barrlab/chains/levels.hpp"
#include "barrlab/core/law_report.hpp"

namespace barrlab {

/// A finite coalgebra whose points stand in for points of the limit.
struct StandIn {
  FinFn xi;                    // C -> HC
  std::vector<Card> level_of;  // level each element was taken from
};

/// C = H^0 1 + ... + H^N 1 with xi(x) = H(inj_n)(x) for x at level n+1 and
/// xi(*) = H(inj_0)(!) at level 0. Its anamorphism sends x at level n to
/// colim_to_lim(x, n).
StandIn initial_stand_in(const InitialChain& ic, Card levels);

/// alpha^{MC}_n = a_n o M(alpha^C_n) on all of MC for n <= depth, where MC
/// carries the lifted coalgebra lambda_C o M(xi).
LawReport check_lemma1(const LevelAlgebras& levels, const FinFn& xi, Card depth);

/// With gamma_n = a_n o M(alpha^C_n): the family is a cone
/// (t_n o gamma_{n+1} = gamma_n), a coalgebra map out of MC
/// (gamma_{n+1} = H(gamma_n) o xi_MC), and respects units
/// (gamma_n o u_C = alpha^C_n).
LawReport check_lemma2(const LevelAlgebras& levels, const FinFn& xi, Card depth);

/// Builds the chain, the initial-chain stand-in of depth `depth` and runs both
/// checks. Throws ZeroObjectViolation when |M0| != 1.
LawReport check_lemma1(const DistLawEMPtr& law, Card depth);
LawReport check_lemma2(const DistLawEMPtr& law, Card depth);

}  // namespace barrlab
