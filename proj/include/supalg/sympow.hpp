#ifndef SUPALG_SYMPOW_HPP
#define SUPALG_SYMPOW_HPP

#include <vector>

#include "supalg/module.hpp"

namespace supalg {

/// binomial coefficient mod p by Lucas' theorem
int binom_mod_p(long a, long b, int p);

/// Homogeneous degree-n polynomial in X, Y: coefficient of X^i Y^{n-i} at
/// index i.
using HomPoly = std::vector<std::uint8_t>;

/// The degree-n symmetric power of the dual of the defining two-dimensional
/// representation, as a module over the truncated polynomial algebra
/// (kind kH).  Basis X^i Y^{n-i}, i = 0..n; the s_j act by divided powers of
/// Y d/dX, the t_j via the substitution X -> X - mu_j Y minus the identity.
struct SymPower {
    int n;
    SuperModule module;
};

SymPower sym_power(AlgebraPtr kH, int n, const std::vector<std::uint8_t>& mus);

/// Orbit product: the product of X + (a_1 mu_1 + ... + a_s mu_s) Y over all
/// tuples a in (F_p)^s.  Degree p^s, monic in X.
HomPoly orbit_product_phi(const GaloisField& F, int s, const std::vector<std::uint8_t>& mus);

/// Multiplication by a fixed degree-d polynomial as a map S^m -> S^{m+d}.
Matrix poly_mult_matrix(FieldPtr F, const HomPoly& h, int m);

/// Certificate for S^n = (free part) + S^{n - p^{r+s}}: the two
/// multiplication embeddings together with the verified facts.
struct PeriodicityCertificate {
    int n;
    int shift;  // p^{r+s}
    Matrix emb_free;
    Matrix emb_tail;
    bool direct_sum_ok;
    bool free_part_projective;
};

PeriodicityCertificate periodicity_decomposition(AlgebraPtr kH, int n, const std::vector<std::uint8_t>& mus);

/// The span of p^j-th powers inside S^{p^j * base}, with its induced action.
struct FrobeniusTwist {
    std::vector<int> positions;  // X-exponents i*p^j inside the big module
    SuperModule module;
};

FrobeniusTwist frobenius_twist_subspace(AlgebraPtr kH, int j, int base_degree,
                                        const std::vector<std::uint8_t>& mus);

/// Checks that multiplication gives an equivariant bijection from
/// S^{p-1} (x) twist^1(S^{p-1}) (x) ... (x) twist^{i-1}(S^{p-1}) onto
/// S^{p^i - 1}.  Needs the coproduct.
bool steinberg_check(AlgebraPtr kH_with_coproduct, int i, const std::vector<std::uint8_t>& mus);

/// Rows of the linear forms cutting out the non-free locus: row l has -1 in
/// slot l (for l <= r) and mu_j^{p^{l-1}} in the alpha slots.
Matrix rank_variety_matrix(FieldPtr F, int r, int s, const std::vector<std::uint8_t>& mus);

struct RankVarietyScan {
    int i;
    std::vector<ShiftedPoint> free_points;
    std::vector<ShiftedPoint> nonfree_points;
    bool matches_predicted;  // non-free set equals the predicted linear locus
    int predicted_rank;      // rank of the first i rows
};

/// Exhaustive scan of the nonzero points of the sample field; the module is
/// rebuilt over the sample field (the mus must already live there or in the
/// prime subfield).
RankVarietyScan rank_variety_scan(FieldPtr sample_field, int p, int r, int s,
                                  const std::vector<std::uint8_t>& mus_in_sample, int i);

}  // namespace supalg

#endif
