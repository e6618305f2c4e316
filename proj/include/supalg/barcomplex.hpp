#ifndef SUPALG_BARCOMPLEX_HPP
#define SUPALG_BARCOMPLEX_HPP

#include <vector>

#include "supalg/algebra.hpp"

namespace supalg {

/// Ext dimensions of the trivial module computed from the normalized bar
/// complex Hom(J^{(x)n}, k): an oracle independent of the minimal-resolution
/// engine.  Returns dims for n = 0..maxdeg.
///
/// The tensor powers grow as (dim A - 1)^n, so callers cap maxdeg via
/// bar_feasible_maxdeg.  When the algebra carries a grading the collapse
/// differentials split into weight blocks, which keeps the elimination
/// small.
std::vector<long> bar_ext_dims(AlgebraPtr A, int maxdeg);

/// Largest degree whose collapse-map rank fits the given tuple budget.
int bar_feasible_maxdeg(const PresentedSuperalgebra& A, int want, long tuple_budget);

}  // namespace supalg

#endif
