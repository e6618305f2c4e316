#ifndef SUPALG_RESOLUTION_HPP
#define SUPALG_RESOLUTION_HPP

#include <memory>
#include <string>
#include <vector>

#include "supalg/algebra.hpp"
#include "supalg/matrix.hpp"

namespace supalg {

/// Minimal free resolution of the trivial module over a local presented
/// superalgebra.
///
/// F_n = A^{b_n} with a parity attached to each free generator; the
/// differential d_n is a b_{n-1} x b_n matrix with entries in the
/// augmentation ideal.  Free-module vectors are flattened as
/// (generator j, basis monomial m) -> j * dim(A) + m.
///
/// Construction is deterministic: coordinates are processed in flat order
/// within each parity (even first), so rebuilding from scratch reproduces
/// the same differentials.
class MinimalResolution {
  public:
    static MinimalResolution build(AlgebraPtr alg, int maxdeg);

    /// extends the resolution in place to the new degree
    void extend(int maxdeg);

    const PresentedSuperalgebra& A() const { return *alg_; }
    AlgebraPtr algebra() const { return alg_; }
    int maxdeg() const { return maxdeg_; }
    int rank(int n) const { return ranks_[n]; }
    const std::vector<int>& ranks() const { return ranks_; }
    const std::vector<std::uint8_t>& gen_parity(int n) const { return parities_[n]; }
    /// (even, odd) generator counts in degree n
    std::pair<int, int> dims_by_parity(int n) const;

    /// entry (i, j) of d_n, an element of the algebra
    const AlgElem& diff(int n, int i, int j) const { return diffs_[n][i][j]; }

    /// d_n applied to a flattened vector of F_n
    Vec apply_diff(int n, const Vec& x) const;

    /// Solves d_n(x) = t; throws LiftingFailed when t is not in the image.
    Vec solve(int n, const Vec& t) const;

    /// y += a . x blockwise on a flattened free-module vector with the given
    /// number of blocks
    void axpy_elem(Vec& y, const AlgElem& a, const Vec& x, int blocks) const;

    // ----- verification -----
    bool verify_minimal() const;     // all differential entries in J
    bool verify_d2_zero() const;     // composite of consecutive differentials, over the algebra
    bool verify_parity() const;      // columns parity homogeneous
    bool verify_exactness() const;   // rank ledger: rank(d_{n+1}) = dim ker(d_n)

    // ----- serialization -----
    std::string to_json() const;
    static MinimalResolution from_json(AlgebraPtr alg, const std::string& text);

  private:
    explicit MinimalResolution(AlgebraPtr alg);

    // solver for the map out of F_n (the augmentation when n = 0),
    // parity-split column echelon with preimage companions
    struct Solver {
        std::vector<int> tgt_coords[2], src_coords[2];
        std::vector<int> tgt_pos[2], src_pos[2];  // full index -> packed slot, -1 outside
        std::unique_ptr<EchelonBasis> ech[2];
        std::vector<Vec> kernel[2];  // packed source coordinates
    };

    void build_solver(int n);
    void step();  // installs F_{n+1} from the kernel of the last solver
    Vec column_of_diff(int n, int j, int m) const;  // image of m . e_j
    int flat_dim(int n) const { return ranks_[n] * alg_->dim(); }
    int coord_parity(int n, int flat) const;

    AlgebraPtr alg_;
    int maxdeg_ = -1;
    std::vector<int> ranks_;
    std::vector<std::vector<std::uint8_t>> parities_;
    std::vector<std::vector<std::vector<AlgElem>>> diffs_;  // diffs_[n], n >= 1
    std::vector<Solver> solvers_;
};

/// Loads a cached resolution for the algebra when the cache directory holds
/// one deep enough, otherwise builds (extending a shallower cached one when
/// possible) and stores the result.  An empty cache_dir disables caching.
MinimalResolution cached_resolution(AlgebraPtr alg, int maxdeg, const std::string& cache_dir);

/// Version tag included in cache keys; bump when the construction changes.
extern const char* const kResolutionCacheVersion;

}  // namespace supalg

#endif
