#include "supalg/sympow.hpp"

#include <cassert>

#include "supalg/errors.hpp"

namespace supalg {

int binom_mod_p(long a, long b, int p) {
    if (b < 0 || b > a) return 0;
    long r = 1;
    while (b > 0 || a > 0) {
        long ad = a % p, bd = b % p;
        if (bd > ad) return 0;
        // small-case binomial
        long c = 1;
        for (long k = 0; k < bd; ++k) c = c * (ad - k) / (k + 1);
        r = r * (c % p) % p;
        a /= p;
        b /= p;
    }
    return static_cast<int>(r);
}

SymPower sym_power(AlgebraPtr kH, int n, const std::vector<std::uint8_t>& mus) {
    if (kH->kind() != "kH" && kH->kind() != "truncated_single")
        throw InvalidInput("symmetric powers are modules over the truncated polynomial algebra");
    int r = kH->param_r(), s = kH->param_s();
    if (kH->kind() == "truncated_single") r = 1, s = 0;
    if (static_cast<int>(mus.size()) != s) throw InvalidInput("need one mu per cyclic factor");
    if (s > 0 && !fp_linear_independent(kH->F(), mus)) throw NotFaithful("mus dependent over F_p");
    const GaloisField& F = kH->F();
    int p = F.p();
    int d = n + 1;
    std::vector<Matrix> act;
    // s_j: X^a Y^b -> binom(a, p^{j-1}) X^{a - p^{j-1}} Y^{b + p^{j-1}}
    for (int j = 1; j <= r; ++j) {
        long pj = 1;
        for (int k = 1; k < j; ++k) pj *= p;
        Matrix M(kH->field(), d, d);
        for (int a = 0; a <= n; ++a) {
            if (a < pj) continue;
            int c = binom_mod_p(a, pj, p);
            if (c) M.at(static_cast<int>(a - pj), a) = F.from_int(c);
        }
        act.push_back(std::move(M));
    }
    // t_j = g_j - 1 with g_j the substitution X -> X - mu_j Y
    for (int j = 0; j < s; ++j) {
        Matrix M(kH->field(), d, d);
        for (int a = 0; a <= n; ++a) {
            // (X - mu Y)^a Y^{n-a} = sum_i binom(a,i) (-mu)^{a-i} X^i Y^{n-i}
            for (int i = 0; i <= a; ++i) {
                int bc = binom_mod_p(a, i, p);
                if (!bc) continue;
                std::uint8_t c = F.from_int(bc);
                std::uint8_t mpow = 1;
                for (int k = 0; k < a - i; ++k) mpow = F.mul(mpow, F.neg(mus[j]));
                c = F.mul(c, mpow);
                if (i == a) c = F.sub(c, 1);  // subtract the identity
                if (c) M.at(i, a) = c;
            }
        }
        act.push_back(std::move(M));
    }
    std::vector<std::uint8_t> par(d, 0);
    return {n, SuperModule(kH, std::move(act), std::move(par))};
}

HomPoly orbit_product_phi(const GaloisField& F, int s, const std::vector<std::uint8_t>& mus) {
    int p = F.p();
    if (s == 0) return HomPoly{0, 1};  // the s = 0 orbit of X is just X
    std::vector<int> tuple(s, 0);
    HomPoly acc{1};
    while (true) {
        // linear factor X + (sum a_j mu_j) Y
        std::uint8_t lam = 0;
        for (int j = 0; j < s; ++j) lam = F.add(lam, F.mul(F.from_int(tuple[j]), mus[j]));
        HomPoly next(acc.size() + 1, 0);
        for (size_t i = 0; i < acc.size(); ++i) {
            next[i + 1] = F.add(next[i + 1], acc[i]);      // * X
            next[i] = F.add(next[i], F.mul(acc[i], lam));  // * lam Y
        }
        acc = next;
        int j = 0;
        while (j < s && tuple[j] == p - 1) tuple[j++] = 0;
        if (j == s) break;
        ++tuple[j];
    }
    return acc;
}

Matrix poly_mult_matrix(FieldPtr F, const HomPoly& h, int m) {
    int d = static_cast<int>(h.size()) - 1;
    Matrix M(F, m + d + 1, m + 1);
    for (int a = 0; a <= m; ++a)
        for (int i = 0; i <= d; ++i)
            if (h[i]) M.at(a + i, a) = h[i];
    return M;
}

PeriodicityCertificate periodicity_decomposition(AlgebraPtr kH, int n, const std::vector<std::uint8_t>& mus) {
    int r = kH->param_r(), s = kH->param_s();
    int p = kH->F().p();
    long shift = 1;
    for (int k = 0; k < r + s; ++k) shift *= p;
    if (n < shift) throw InvalidInput("periodicity needs n >= p^{r+s}");
    // the degree p^{r+s} invariant is phi^{p^r}
    HomPoly phi = orbit_product_phi(kH->F(), s, mus);
    long pr = 1;
    for (int k = 0; k < r; ++k) pr *= p;
    HomPoly phipr(static_cast<size_t>(shift) + 1, 0);
    {
        // phi^{p^r}: freshman's dream over F_q applies entrywise
        HomPoly accp{1};
        for (long e = 0; e < pr; ++e) {
            HomPoly nx(accp.size() + phi.size() - 1, 0);
            for (size_t i = 0; i < accp.size(); ++i)
                for (size_t j = 0; j < phi.size(); ++j)
                    nx[i + j] = kH->F().add(nx[i + j], kH->F().mul(accp[i], phi[j]));
            accp = nx;
        }
        phipr = accp;
    }
    SymPower big = sym_power(kH, n, mus);
    SymPower freepart = sym_power(kH, static_cast<int>(shift) - 1, mus);
    SymPower tail = sym_power(kH, n - static_cast<int>(shift), mus);
    // Y^{n+1-p^{r+s}} embedding: X^a Y^{shift-1-a} -> X^a Y^{n-a}
    Matrix e1(kH->field(), n + 1, static_cast<int>(shift));
    for (int a = 0; a < shift; ++a) e1.at(a, a) = 1;
    Matrix e2 = poly_mult_matrix(kH->field(), phipr, n - static_cast<int>(shift));
    PeriodicityCertificate cert{n, static_cast<int>(shift), e1, e2, false, false};
    cert.direct_sum_ok =
        verify_direct_sum(big.module, {{&freepart.module, e1}, {&tail.module, e2}});
    cert.free_part_projective = freepart.module.is_projective_over_local();
    if (!cert.direct_sum_ok || !cert.free_part_projective)
        throw DecompositionFailed("periodicity decomposition failed at n = " + std::to_string(n));
    return cert;
}

FrobeniusTwist frobenius_twist_subspace(AlgebraPtr kH, int j, int base_degree,
                                        const std::vector<std::uint8_t>& mus) {
    int p = kH->F().p();
    long pj = 1;
    for (int k = 0; k < j; ++k) pj *= p;
    int big = static_cast<int>(pj) * base_degree;
    SymPower S = sym_power(kH, big, mus);
    std::vector<int> pos;
    for (int i = 0; i <= base_degree; ++i) pos.push_back(static_cast<int>(i * pj));
    return {pos, S.module.coordinate_submodule(pos)};
}

bool steinberg_check(AlgebraPtr kH, int i, const std::vector<std::uint8_t>& mus) {
    if (!kH->has_coproduct()) throw NoCoproduct();
    int p = kH->F().p();
    // T = S^{p-1} (x) twist^1 (x) ... (x) twist^{i-1}
    std::vector<FrobeniusTwist> factors;
    for (int j = 0; j < i; ++j) factors.push_back(frobenius_twist_subspace(kH, j, p - 1, mus));
    SuperModule T = factors[0].module;
    for (int j = 1; j < i; ++j) T = T.tensor(factors[j].module);
    long pi = 1;
    for (int k = 0; k < i; ++k) pi *= p;
    SymPower target = sym_power(kH, static_cast<int>(pi) - 1, mus);
    if (T.dim() != target.module.dim()) return false;
    // multiplication: the tuple (a_0, ..., a_{i-1}) of X-exponents a_j * p^j
    // multiplies to X^{sum a_j p^j} Y^{complement}; flat index of the tensor
    // basis nests left factor slowest
    Matrix mult(kH->field(), target.module.dim(), T.dim());
    int tdim = T.dim();
    for (int flat = 0; flat < tdim; ++flat) {
        int rest = flat;
        // decode: flat = ((a_0 * d_1 + a_1) * d_2 + a_2) ...
        std::vector<int> digits(i, 0);
        for (int j = i - 1; j >= 0; --j) {
            digits[j] = rest % (p);  // each factor has dimension p
            rest /= p;
        }
        long xexp = 0, pj = 1;
        for (int j = 0; j < i; ++j) {
            xexp += static_cast<long>(digits[j]) * pj;
            pj *= p;
        }
        mult.at(static_cast<int>(xexp), flat) = 1;
    }
    for (int g = 0; g < kH->ngens(); ++g) {
        if (!(target.module.action(g).mul(mult) == mult.mul(T.action(g)))) return false;
    }
    return mult.rank() == target.module.dim();
}

Matrix rank_variety_matrix(FieldPtr F, int r, int s, const std::vector<std::uint8_t>& mus) {
    Matrix R(F, r + s, r + s);
    for (int l = 0; l < r + s; ++l) {
        if (l < r) R.at(l, l) = F->neg(1);
        for (int j = 0; j < s; ++j) R.at(l, r + j) = F->frobenius(mus[j], l);
    }
    return R;
}

RankVarietyScan rank_variety_scan(FieldPtr sample_field, int p, int r, int s,
                                  const std::vector<std::uint8_t>& mus, int i) {
    if (i < 1 || i > r + s) throw InvalidInput("rank variety index out of range");
    auto kH = PresentedSuperalgebra::make_kH(sample_field, r, s, false);
    long pi = 1;
    for (int k = 0; k < i; ++k) pi *= p;
    SymPower S = sym_power(kH, static_cast<int>(pi) - 1, mus);
    Matrix R = rank_variety_matrix(sample_field, r, s, mus);
    RankVarietyScan out;
    out.i = i;
    {
        Matrix Ri(sample_field, i, r + s);
        for (int l = 0; l < i; ++l)
            for (int j = 0; j < r + s; ++j) Ri.at(l, j) = R.at(l, j);
        out.predicted_rank = Ri.rank();
    }
    out.matches_predicted = true;
    int q = sample_field->q();
    int n = r + s;
    std::vector<std::uint8_t> coords(n, 0);
    long total = 1;
    for (int k = 0; k < n; ++k) total *= q;
    for (long code = 1; code < total; ++code) {
        long rest = code;
        for (int k = 0; k < n; ++k) {
            coords[k] = static_cast<std::uint8_t>(rest % q);
            rest /= q;
        }
        ShiftedPoint pt{coords};
        bool free = S.module.is_free_restriction(pt);
        bool in_locus = true;
        for (int l = 0; l < i && in_locus; ++l) {
            std::uint8_t acc = 0;
            for (int j = 0; j < n; ++j)
                acc = sample_field->add(acc, sample_field->mul(R.at(l, j), coords[j]));
            if (acc) in_locus = false;
        }
        if (free != !in_locus) out.matches_predicted = false;
        (free ? out.free_points : out.nonfree_points).push_back(pt);
    }
    return out;
}

}  // namespace supalg
