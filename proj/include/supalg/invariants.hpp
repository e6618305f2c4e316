#ifndef SUPALG_INVARIANTS_HPP
#define SUPALG_INVARIANTS_HPP

#include <vector>

#include "supalg/sympow.hpp"

namespace supalg {

/// Basis of the invariants of degree n, each polynomial as its coefficient
/// vector on X^i Y^{n-i}.
struct InvariantReport {
    int degree;
    int dim;
    int predicted_dim;  // floor(n / p^{r+s}) + 1
    std::vector<HomPoly> basis;
};

InvariantReport invariant_basis(AlgebraPtr kH, int n, const std::vector<std::uint8_t>& mus);

/// Checks degree by degree up to maxdeg that the monomials
/// (phi^{p^r})^a Y^b with a p^{r+s} + b = n span the invariants exactly.
bool verify_invariant_generators(AlgebraPtr kH, int maxdeg, const std::vector<std::uint8_t>& mus);

}  // namespace supalg

#endif
