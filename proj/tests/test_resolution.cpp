#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>

#include "supalg/barcomplex.hpp"
#include "supalg/resolution.hpp"

using namespace supalg;

namespace {

// Kunneth oracle: the resolution ranks of a tensor product are the
// convolution of the factors' rank sequences
std::vector<long> convolve(const std::vector<long>& a, const std::vector<long>& b, int maxdeg) {
    std::vector<long> c(maxdeg + 1, 0);
    for (int i = 0; i <= maxdeg; ++i)
        for (int j = 0; i + j <= maxdeg; ++j)
            if (i < static_cast<int>(a.size()) && j < static_cast<int>(b.size())) c[i + j] += a[i] * b[j];
    return c;
}

}  // namespace

TEST_CASE("one odd exterior generator resolves with alternating parities") {
    auto F3 = GaloisField::make(3);
    auto A = PresentedSuperalgebra::make_exterior_times_truncated(F3, 0, 0);  // just Lambda(u)
    CHECK(A->dim() == 2);
    auto R = MinimalResolution::build(A, 6);
    for (int n = 0; n <= 6; ++n) {
        CHECK(R.rank(n) == 1);
        CHECK(R.gen_parity(n)[0] == n % 2);
    }
}

TEST_CASE("truncated polynomial algebra resolves periodically") {
    for (int p : {3, 5}) {
        auto F = GaloisField::make(p);
        auto A = PresentedSuperalgebra::make_truncated_single(F, "s");
        auto R = MinimalResolution::build(A, 6);
        for (int n = 0; n <= 6; ++n) CHECK(R.rank(n) == 1);
        // alternating pattern s, s^{p-1}, s, ... up to scalars
        for (int n = 1; n <= 6; ++n) {
            const AlgElem& d = R.diff(n, 0, 0);
            int exp = (n % 2 == 1) ? 1 : p - 1;
            std::vector<std::uint8_t> e{static_cast<std::uint8_t>(exp)};
            int mono = A->monomial_index(e);
            for (int m = 0; m < A->dim(); ++m) CHECK((d[m] != 0) == (m == mono));
        }
    }
}

TEST_CASE("height-one semidirect product has Poincare series 1/(1-t)^2") {
    auto F3 = GaloisField::make(3);
    auto kG = PresentedSuperalgebra::make_semidirect(F3, 1, 0, {});
    auto R = MinimalResolution::build(kG, 8);
    for (int n = 0; n <= 8; ++n) CHECK(R.rank(n) == n + 1);
    CHECK(R.verify_minimal());
    CHECK(R.verify_d2_zero());
    CHECK(R.verify_parity());
    CHECK(R.verify_exactness());
}

TEST_CASE("structure checks across algebras") {
    auto F3 = GaloisField::make(3);
    auto F9 = GaloisField::make(3, 2);
    std::vector<std::pair<AlgebraPtr, int>> cases = {
        {PresentedSuperalgebra::make_exterior2(F3), 6},
        {PresentedSuperalgebra::make_kH(F3, 1, 1, false), 6},
        {PresentedSuperalgebra::make_semidirect(F3, 1, 1, {1}), 5},
        {PresentedSuperalgebra::make_semidirect_grouplike(F3, 1, {2}), 6},
        {PresentedSuperalgebra::make_semidirect(F9, 0, 2, {1, F9->from_coeffs({0, 1})}), 5},
        {PresentedSuperalgebra::make_exterior_times_truncated(F3, 1, 1), 5},
    };
    for (auto& [A, deg] : cases) {
        CAPTURE(A->descriptor());
        auto R = MinimalResolution::build(A, deg);
        CHECK(R.verify_minimal());
        CHECK(R.verify_d2_zero());
        CHECK(R.verify_parity());
        CHECK(R.verify_exactness());
    }
}

TEST_CASE("solve returns preimages") {
    auto F3 = GaloisField::make(3);
    auto kG = PresentedSuperalgebra::make_semidirect(F3, 1, 0, {});
    auto R = MinimalResolution::build(kG, 4);
    // any column of d_2 is in the image of d_2
    Vec x(static_cast<size_t>(R.rank(2)) * kG->dim(), 0);
    x[0] = 1;
    Vec t = R.apply_diff(2, x);
    Vec back = R.solve(2, t);
    CHECK(R.apply_diff(2, back) == t);
}

TEST_CASE("resolutions are deterministic and serialize faithfully") {
    auto F3 = GaloisField::make(3);
    auto kG = PresentedSuperalgebra::make_semidirect(F3, 1, 0, {});
    auto R1 = MinimalResolution::build(kG, 6);
    auto R2 = MinimalResolution::build(kG, 6);
    CHECK(R1.to_json() == R2.to_json());

    auto back = MinimalResolution::from_json(kG, R1.to_json());
    CHECK(back.to_json() == R1.to_json());

    // extension reproduces a direct build
    auto Rshort = MinimalResolution::build(kG, 3);
    Rshort.extend(6);
    CHECK(Rshort.to_json() == R1.to_json());
}

TEST_CASE("resolution cache round trip") {
    auto F3 = GaloisField::make(3);
    auto kG = PresentedSuperalgebra::make_semidirect(F3, 1, 0, {});
    auto dir = std::filesystem::temp_directory_path() / "supalg_cache_test";
    std::filesystem::remove_all(dir);
    auto R1 = cached_resolution(kG, 4, dir.string());
    auto R2 = cached_resolution(kG, 4, dir.string());  // from disk
    CHECK(R1.to_json() == R2.to_json());
    auto R3 = cached_resolution(kG, 6, dir.string());  // extends the cached one
    CHECK(R3.maxdeg() == 6);
    CHECK(R3.to_json() == MinimalResolution::build(kG, 6).to_json());
    std::filesystem::remove_all(dir);
}

TEST_CASE("bar complex agrees with the minimal resolution") {
    auto F3 = GaloisField::make(3);
    auto F5 = GaloisField::make(5);

    struct Case {
        AlgebraPtr A;
        int deg;
    };
    std::vector<Case> cases = {
        {PresentedSuperalgebra::make_exterior_times_truncated(F3, 0, 0), 4},  // Lambda(u)
        {PresentedSuperalgebra::make_exterior2(F3), 4},
        {PresentedSuperalgebra::make_truncated_single(F3, "s"), 4},
        {PresentedSuperalgebra::make_truncated_single(F5, "s"), 4},
        {PresentedSuperalgebra::make_kH(F3, 1, 1, false), 4},
        {PresentedSuperalgebra::make_kH(F3, 2, 0, false), 4},
        {PresentedSuperalgebra::make_exterior_times_truncated(F3, 1, 0), 4},
        {PresentedSuperalgebra::make_semidirect(F3, 1, 0, {}), 4},
        {PresentedSuperalgebra::make_semidirect(F5, 1, 0, {}), 3},
    };
    for (auto& cs : cases) {
        CAPTURE(cs.A->descriptor());
        auto R = MinimalResolution::build(cs.A, cs.deg);
        auto bar = bar_ext_dims(cs.A, cs.deg);
        for (int n = 0; n <= cs.deg; ++n) CHECK(bar[n] == R.rank(n));
    }

    // Lambda(u,v) resolves as the polynomial ring on two generators
    auto bar = bar_ext_dims(PresentedSuperalgebra::make_exterior2(F3), 4);
    CHECK(bar == std::vector<long>{1, 2, 3, 4, 5});

    // Kunneth oracle for the truncated algebra on two generators
    auto single = MinimalResolution::build(PresentedSuperalgebra::make_truncated_single(F3, "s"), 4);
    std::vector<long> one(single.ranks().begin(), single.ranks().end());
    auto conv = convolve(one, one, 4);
    auto kH = PresentedSuperalgebra::make_kH(F3, 1, 1, false);
    auto RH = MinimalResolution::build(kH, 4);
    for (int n = 0; n <= 4; ++n) CHECK(conv[n] == RH.rank(n));
}

TEST_CASE("bar feasibility guard") {
    auto F3 = GaloisField::make(3);
    auto kG = PresentedSuperalgebra::make_semidirect(F3, 1, 1, {1});
    CHECK(bar_feasible_maxdeg(*kG, 4, 200'000) == 2);
    CHECK(bar_feasible_maxdeg(*kG, 4, 2'000'000) == 3);
    auto small = PresentedSuperalgebra::make_exterior2(F3);
    CHECK(bar_feasible_maxdeg(*small, 4, 200'000) == 4);
}
