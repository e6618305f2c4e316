#include "supalg/barcomplex.hpp"

#include <cstdint>
#include <unordered_map>

#include "supalg/errors.hpp"
#include "supalg/matrix.hpp"

namespace supalg {

namespace {

// rank of the collapse map J^{(x)n} -> J^{(x)(n-1)},
// sum_{i} (-1)^{i-1} a_1 (x) ... (x) a_i a_{i+1} (x) ... (x) a_n
long collapse_rank(const PresentedSuperalgebra& A, int n) {
    const int D = A.dim();
    const int N = D - 1;  // J basis: monomials 1..D-1
    const GaloisField& F = A.F();

    std::vector<long> weight_of(D, 0);
    if (A.grading()) {
        for (int m = 1; m < D; ++m) {
            long w = 0;
            auto e = A.exponents(m);
            for (int g = 0; g < A.ngens(); ++g) w += static_cast<long>(e[g]) * (*A.grading())[g];
            weight_of[m] = w;
        }
    }

    // codomain tuples, bucketed by weight
    long cod_total = 1;
    for (int k = 0; k < n - 1; ++k) cod_total *= N;
    std::vector<std::int32_t> bucket_of(cod_total), local_of(cod_total);
    std::unordered_map<long, std::int32_t> bucket_id;
    std::vector<std::int32_t> bucket_size;
    {
        std::vector<int> t(n - 1, 0);
        for (long code = 0; code < cod_total; ++code) {
            long w = 0;
            for (int k = 0; k < n - 1; ++k) w += weight_of[t[k] + 1];
            auto it = bucket_id.find(w);
            std::int32_t b;
            if (it == bucket_id.end()) {
                b = static_cast<std::int32_t>(bucket_size.size());
                bucket_id.emplace(w, b);
                bucket_size.push_back(0);
            } else
                b = it->second;
            bucket_of[code] = b;
            local_of[code] = bucket_size[b]++;
            int k = 0;
            while (k < n - 1 && t[k] == N - 1) t[k++] = 0;
            if (k < n - 1) ++t[k];
        }
    }
    std::vector<EchelonBasis> ech;
    ech.reserve(bucket_size.size());
    for (auto sz : bucket_size) ech.emplace_back(A.field(), sz);

    // run through domain tuples, build each sparse column, eliminate
    long dom_total = cod_total * N;
    std::vector<int> t(n, 0);
    long rank = 0;
    for (long code = 0; code < dom_total; ++code) {
        long w = 0;
        for (int k = 0; k < n; ++k) w += weight_of[t[k] + 1];
        auto itb = bucket_id.find(w);
        if (itb != bucket_id.end()) {
            std::int32_t b = itb->second;
            Vec col(bucket_size[b], 0);
            bool nonzero = false;
            std::uint8_t sign = 1;
            for (int i = 0; i + 1 < n; ++i) {
                const std::uint8_t* prod = A.mono_product(t[i] + 1, t[i + 1] + 1);
                if (prod[0]) throw std::logic_error("product of radical elements left the radical");
                for (int m = 1; m < D; ++m) {
                    if (!prod[m]) continue;
                    // codomain tuple: replace slots i, i+1 by m
                    long cc = 0;
                    for (int k = n - 1; k >= 0; --k) {
                        if (k == i + 1) continue;
                        int letter = (k == i) ? m - 1 : t[k];
                        cc = cc * N + letter;
                    }
                    col[local_of[cc]] = F.add(col[local_of[cc]], F.mul(sign, prod[m]));
                    nonzero = true;
                }
                sign = F.neg(sign);
            }
            if (nonzero && ech[b].insert(std::move(col))) ++rank;
        }
        int k = 0;
        while (k < n && t[k] == N - 1) t[k++] = 0;
        if (k < n) ++t[k];
    }
    return rank;
}

}  // namespace

int bar_feasible_maxdeg(const PresentedSuperalgebra& A, int want, long tuple_budget) {
    long N = A.dim() - 1;
    int deg = 0;
    long tuples = 1;
    for (int n = 1; n <= want; ++n) {
        if (tuples > tuple_budget / (N * N)) break;  // rank of d_{n+1} needs N^{n+1} tuples
        tuples *= N;
        deg = n;
    }
    return deg;
}

std::vector<long> bar_ext_dims(AlgebraPtr A, int maxdeg) {
    const long N = A->dim() - 1;
    long tuples = 1;
    for (int k = 0; k < maxdeg + 1; ++k) {
        tuples *= N;
        if (tuples > 40'000'000L) throw InvalidInput("bar complex too large at this degree; lower maxdeg");
    }
    // dim Ext^n = N^n - rank d_n - rank d_{n+1}
    std::vector<long> ranks(maxdeg + 2, 0);
    for (int n = 2; n <= maxdeg + 1; ++n) ranks[n] = collapse_rank(*A, n);
    std::vector<long> dims;
    long pw = 1;  // N^n
    for (int n = 0; n <= maxdeg; ++n) {
        dims.push_back(n == 0 ? 1 : pw - ranks[n] - ranks[n + 1]);
        pw *= N;
    }
    return dims;
}

}  // namespace supalg
