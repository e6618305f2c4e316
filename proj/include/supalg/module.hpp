#ifndef SUPALG_MODULE_HPP
#define SUPALG_MODULE_HPP

#include <string>
#include <vector>

#include "supalg/algebra.hpp"
#include "supalg/matrix.hpp"

namespace supalg {

/// Point of affine (r+s)-space over the coefficient field, defining the
/// shifted operator gamma_1 s_1 + ... + gamma_r s_r + alpha_1 t_1 + ... ;
/// must be nonzero.
struct ShiftedPoint {
    std::vector<std::uint8_t> coords;
    bool is_zero() const {
        for (auto c : coords)
            if (c) return false;
        return true;
    }
};

/// Finite-dimensional left module over a PresentedSuperalgebra: one action
/// matrix per generator plus a parity vector on the chosen basis.
/// Immutable after construction.
class SuperModule {
  public:
    SuperModule(AlgebraPtr alg, std::vector<Matrix> action, std::vector<std::uint8_t> parity);

    static SuperModule trivial(AlgebraPtr alg);
    static SuperModule regular(AlgebraPtr alg);

    const PresentedSuperalgebra& A() const { return *alg_; }
    AlgebraPtr algebra() const { return alg_; }
    int dim() const { return dim_; }
    const Matrix& action(int g) const { return action_[g]; }
    const std::vector<std::uint8_t>& parity() const { return parity_; }

    /// action of a basis monomial / a general element
    const Matrix& action_of_monomial(int mono) const { return mono_action_[mono]; }
    Matrix action_of(const AlgElem& a) const;

    /// All type invariants: relations hold, nilpotency, parity compatibility.
    bool check(std::string* why = nullptr) const;

    /// Common kernel of the generator actions, as basis rows.
    Matrix fixed_points() const;

    /// dims of M, JM, J^2 M, ... down to 0
    std::vector<int> radical_dims() const;
    /// dims of the socle filtration 0 < soc < soc^2 < ... (cumulative)
    std::vector<int> socle_dims() const;
    /// dims of the layers soc^i / soc^{i-1}
    std::vector<int> socle_layer_dims() const;

    bool is_uniserial() const;

    /// Freeness test over a local algebra with one-dimensional socle:
    /// dim M = dim A * dim soc(M) and dim M/JM = dim soc(M).
    bool is_projective_over_local() const;

    /// Tensor product over the coproduct; index (i,j) -> i*dim(N)+j.
    SuperModule tensor(const SuperModule& other) const;

    /// theta = sum gamma_i s_i + sum alpha_j t_j as an algebra element.
    static AlgElem shifted_operator(const PresentedSuperalgebra& A, const ShiftedPoint& pt);

    /// Free over k[theta]/(theta^p)?  Decided by rank(theta^{p-1}) = dim/p;
    /// dimensions not divisible by p are never free.
    bool is_free_restriction(const ShiftedPoint& pt) const;

    /// multiset of Jordan block sizes of theta acting on M (diagnostic)
    std::vector<int> jordan_type(const ShiftedPoint& pt) const;

    /// Restrict to an action-stable coordinate subspace given by a list of
    /// basis positions; throws NotInvariant if the action leaks outside.
    SuperModule coordinate_submodule(const std::vector<int>& positions) const;

    /// canonical JSON layout: algebra descriptor, dim, generator -> matrix
    /// (entries as coefficient vectors over F_p), parity vector
    std::string to_json() const;
    static SuperModule from_json(AlgebraPtr alg, const std::string& text);

  private:
    AlgebraPtr alg_;
    int dim_;
    std::vector<Matrix> action_;
    std::vector<std::uint8_t> parity_;
    std::vector<Matrix> mono_action_;
};

/// One summand of a claimed internal direct sum: a module map src -> M
/// given by its dim(M) x dim(src) matrix.
struct Embedding {
    const SuperModule* src;
    Matrix map;
};

/// Verifies that the maps are equivariant injections with independent
/// images that fill M.  Throws NotEquivariant when a map fails to commute
/// with the action; returns false for the other failure modes.
bool verify_direct_sum(const SuperModule& M, const std::vector<Embedding>& parts);

}  // namespace supalg

#endif
