#ifndef SUPALG_EXTRING_HPP
#define SUPALG_EXTRING_HPP

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "supalg/module.hpp"
#include "supalg/resolution.hpp"

namespace supalg {

/// Bigraded cohomology class: cohomological degree n, internal parity par,
/// and the functional on the degree-n generators of the minimal resolution
/// (supported on generators of parity par).  Over a minimal resolution the
/// Hom-complex differentials vanish, so functionals are classes on the nose.
struct ExtClass {
    int n = 0;
    int par = 0;
    Vec f;

    bool is_zero() const {
        for (auto c : f)
            if (c) return false;
        return true;
    }
};

/// Computation context for the cohomology ring of one algebra: owns the
/// minimal resolution and memoizes the chain-map lifts behind cup products.
/// Not meant to be shared across threads; build one context per computation.
class ExtContext {
  public:
    ExtContext(AlgebraPtr alg, int maxdeg, const std::string& cache_dir = "");

    const PresentedSuperalgebra& A() const { return *alg_; }
    AlgebraPtr algebra() const { return alg_; }
    const MinimalResolution& res() const { return res_; }
    int maxdeg() const { return res_.maxdeg(); }

    int b(int n) const { return res_.rank(n); }
    /// (even, odd) dims of H^{n,*}
    std::pair<int, int> dims(int n) const { return res_.dims_by_parity(n); }

    ExtClass zero_class(int n) const { return {n, 0, Vec(static_cast<size_t>(b(n)), 0)}; }
    ExtClass unit() const { return {0, 0, Vec{1}}; }
    /// dual of generator j in degree n
    ExtClass dual_class(int n, int j) const;
    /// the distinguished odd class in degree one; requires dim H^{1,1} = 1
    ExtClass zeta() const;

    ExtClass add(const ExtClass& a, const ExtClass& b) const;
    ExtClass scale(const ExtClass& a, std::uint8_t c) const;
    bool collinear_nonzero(const ExtClass& a, const ExtClass& b) const;

    /// cup (Yoneda) product via chain-map lifting; bilinear, degree adds,
    /// parity adds
    ExtClass cup(const ExtClass& a, const ExtClass& c);
    ExtClass cup_pow(const ExtClass& a, int e);

    /// Matrix of multiplication by a from degree n: a row functional g of
    /// H^n maps to g * M, the functional of cup(a, .) in degree n + a.n.
    /// Shape b(n) x b(n + a.n).
    Matrix mult_table(const ExtClass& a, int n);

    /// Chain-map stage t of class a: the induced module map
    /// F_{a.n + t} -> F_t, one flattened column per generator.
    const std::vector<Vec>& chain_stage(const ExtClass& a, int t);

  private:
    AlgebraPtr alg_;
    MinimalResolution res_;
    using Key = std::pair<int, Vec>;
    std::map<Key, std::vector<std::vector<Vec>>> chain_memo_;
};

/// Inflation along a verified algebra surjection pi : A ->> B, by lifting
/// the identity through a comparison map from the A-resolution to the
/// B-resolution viewed as a complex of A-modules.
class Inflation {
  public:
    Inflation(ExtContext& big, ExtContext& quotient, AlgebraMap pi);

    /// image in H^*(A) of a class over B
    ExtClass apply(const ExtClass& c);

  private:
    const std::vector<Vec>& stage(int t);

    ExtContext& big_;
    ExtContext& quo_;
    AlgebraMap pi_;
    std::vector<std::vector<Vec>> stages_;
};

/// builds the projection of a semidirect-product algebra onto its truncated
/// polynomial part (u, v -> 0), or onto a single truncated generator
AlgebraMap projection_to_kH(AlgebraPtr big, AlgebraPtr kH);
AlgebraMap projection_to_single(AlgebraPtr big, AlgebraPtr single, const std::string& kept);

// ---------------------------------------------------------------- reports

struct RelationVerdict {
    std::string name;
    bool holds;
    std::string witness;  // offending coefficients on failure
};

/// Outcome of the full ring-presentation verification in the rank-one case
/// (one truncated or cyclic factor acting).
struct RingPresentationReport {
    std::string algebra;
    int p = 0;
    int maxdeg = 0;
    std::vector<std::pair<int, int>> dims;  // per degree (even, odd)
    std::vector<int> poincare;              // total dims
    bool dims_match = false;                // dim H^n = n + 1
    bool parity_split_match = false;        // against the presentation monomials
    std::vector<RelationVerdict> relations;
    bool kappa_found = false;
    Vec kappa;
    Vec x_class, zeta_class;
    std::vector<Vec> lambda_classes;
    bool ok() const;
};

RingPresentationReport verify_rank_one_ring(ExtContext& ctx, int maxdeg);

/// Quotient by the regular sequence (kappa, x + zeta^2): checks the
/// Poincare-duality dims 1,2,...,2,1 and the perfect pairing into degree p.
struct DualityReport {
    std::vector<int> quotient_dims;
    bool dims_ok = false;
    bool top_is_zeta_power = false;
    bool pairing_perfect = false;
    bool lambda_pairing_nonzero = false;
    bool ok() const { return dims_ok && top_is_zeta_power && pairing_perfect && lambda_pairing_nonzero; }
};

DualityReport verify_duality_quotient(ExtContext& ctx, const RingPresentationReport& pres);

/// The vanishing relations in the general case: inflated degree-two classes
/// times the (p^{r+s-1}(p-1))-th power of zeta vanish, while zeta itself
/// stays regular in range; plus the degree-(p+1) kernel bound.
struct MainRelationsReport {
    std::string algebra;
    int N = 0;
    std::vector<RelationVerdict> relations;
    int kernel_dim = 0;
    bool ok() const;
};

MainRelationsReport verify_zeta_annihilation(ExtContext& ctx);

/// Ext over the truncated polynomial algebra with coefficients in a module,
/// with the right Yoneda action of degree-two classes.
struct ExtCoeffs {
    std::vector<int> dims;  // n = 0..maxdeg
};

ExtCoeffs ext_with_coefficients(ExtContext& kH_ctx, const SuperModule& M, int maxdeg);

/// The subspace of the span of the given degree-two classes annihilating
/// Ext^{<= maxdeg}(k, M); rows are coefficient vectors in the class basis.
Matrix annihilator_in_span(ExtContext& kH_ctx, const std::vector<ExtClass>& classes, const SuperModule& M,
                           int maxdeg);

struct AnnihilatorReport {
    int i = 0;
    bool free_case = false;       // i = r+s: positive Ext vanishes
    bool ext_vanishes = false;    // (free case only)
    int annihilator_dim = 0;
    std::vector<std::uint8_t> line;  // coefficients when the annihilator is a line
    bool support_pattern_ok = false;
    bool ok() const;
};

AnnihilatorReport verify_sympower_annihilators(FieldPtr F, int r, int s, const std::vector<std::uint8_t>& mus,
                                               int i, int maxdeg, const std::string& cache_dir = "");

/// counts of presentation monomials per bidegree for the rank-one ring, the
/// combinatorial side of the parity-split check
std::vector<std::pair<int, int>> rank_one_presentation_dims(int p, int maxdeg);

}  // namespace supalg

#endif
