#pragma once

#include <cstdint>
#include <vector>

#include "qmt/quantale.hpp"
#include "qmt/report.hpp"

namespace qmt {

/// Runs the full law suite for one quantale: order laws, glb/lub, monoid
/// laws, distributivity over meets, the way-above calculus (implication to
/// leq, chain stability, closure under meets, interpolation, additive
/// monotonicity, the approximation-sequence limit law), the residual
/// adjunction and its corollaries, halving, the approximation-from-above
/// identity, the witness-sequence laws, and a grid cross-check of the
/// residual closed forms.
///
/// `budget` is the number of sampled tuples per law on infinite instances;
/// finite instances are checked exhaustively.
std::vector<CheckResult> check_quantale_laws(const Quantale& q, int budget,
                                             std::uint64_t seed);

}  // namespace qmt
