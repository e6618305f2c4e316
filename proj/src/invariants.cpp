#include "supalg/invariants.hpp"

namespace supalg {

InvariantReport invariant_basis(AlgebraPtr kH, int n, const std::vector<std::uint8_t>& mus) {
    SymPower S = sym_power(kH, n, mus);
    Matrix fix = S.module.fixed_points();
    InvariantReport rep;
    rep.degree = n;
    rep.dim = fix.rows();
    long shift = 1;
    for (int k = 0; k < kH->param_r() + kH->param_s(); ++k) shift *= kH->F().p();
    rep.predicted_dim = static_cast<int>(n / shift) + 1;
    for (int i = 0; i < fix.rows(); ++i) rep.basis.emplace_back(fix.row(i), fix.row(i) + n + 1);
    return rep;
}

bool verify_invariant_generators(AlgebraPtr kH, int maxdeg, const std::vector<std::uint8_t>& mus) {
    const GaloisField& F = kH->F();
    int p = F.p();
    int r = kH->param_r(), s = kH->param_s();
    long shift = 1;
    for (int k = 0; k < r + s; ++k) shift *= p;
    HomPoly phi = orbit_product_phi(F, s, mus);
    // phi^{p^r}
    HomPoly gen{1};
    long pr = 1;
    for (int k = 0; k < r; ++k) pr *= p;
    for (long e = 0; e < pr; ++e) {
        HomPoly nx(gen.size() + phi.size() - 1, 0);
        for (size_t i = 0; i < gen.size(); ++i)
            for (size_t j = 0; j < phi.size(); ++j) nx[i + j] = F.add(nx[i + j], F.mul(gen[i], phi[j]));
        gen = nx;
    }
    for (int n = 0; n <= maxdeg; ++n) {
        InvariantReport rep = invariant_basis(kH, n, mus);
        // predicted spanning set: gen^a * Y^b with a*shift + b = n, i.e. the
        // coefficient vector of gen^a shifted into degree n
        EchelonBasis predicted(kH->field(), n + 1);
        int count = 0;
        HomPoly pow{1};
        for (int a = 0; a * shift <= n; ++a) {
            HomPoly padded(n + 1, 0);
            for (size_t i = 0; i < pow.size(); ++i) padded[i] = pow[i];
            if (predicted.insert(std::move(padded))) ++count;
            // pow *= gen
            HomPoly nx(pow.size() + gen.size() - 1, 0);
            for (size_t i = 0; i < pow.size(); ++i)
                for (size_t j = 0; j < gen.size(); ++j) nx[i + j] = F.add(nx[i + j], F.mul(pow[i], gen[j]));
            pow = nx;
        }
        if (count != rep.dim || rep.dim != rep.predicted_dim) return false;
        for (auto& b : rep.basis)
            if (!predicted.contains(b)) return false;
    }
    return true;
}

}  // namespace supalg
