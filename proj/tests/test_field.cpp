#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "supalg/field.hpp"

using namespace supalg;

namespace {

// independent oracle: a^(p^i) by plain repeated multiplication
GaloisField::Elt pow_oracle(const GaloisField& F, GaloisField::Elt a, long e) {
    GaloisField::Elt r = 1;
    for (long k = 0; k < e; ++k) r = F.mul(r, a);
    return r;
}

}  // namespace

TEST_CASE("prime field arithmetic") {
    auto F = GaloisField::make(3);
    CHECK(F->add(2, 2) == 1);
    CHECK(F->inv(2) == 2);
    CHECK(F->sub(0, 1) == 2);
    CHECK_THROWS_AS(F->inv(0), DivisionByZero);
}

TEST_CASE("extension field forced by the modulus") {
    auto F9 = GaloisField::parse("3^2");
    CHECK(F9->q() == 9);
    // deterministic modulus x^2 + 1, so w^2 = -1 = 2
    CHECK(F9->modulus() == std::vector<std::uint8_t>{1, 0});
    auto w = F9->from_coeffs({0, 1});
    CHECK(F9->mul(w, w) == F9->from_int(2));
    CHECK(F9->spec() == "3^2");
}

TEST_CASE("field axioms, exhaustive on small fields") {
    for (auto spec : {"3", "5", "3^2", "5^2"}) {
        auto F = GaloisField::parse(spec);
        int q = F->q();
        for (int a = 0; a < q; ++a)
            for (int b = 0; b < q; ++b) {
                CHECK(F->add(a, b) == F->add(b, a));
                CHECK(F->mul(a, b) == F->mul(b, a));
                for (int c = 0; c < q; ++c) {
                    CHECK(F->add(F->add(a, b), c) == F->add(a, F->add(b, c)));
                    CHECK(F->mul(F->mul(a, b), c) == F->mul(a, F->mul(b, c)));
                    CHECK(F->mul(a, F->add(b, c)) == F->add(F->mul(a, b), F->mul(a, c)));
                }
                if (b != 0) CHECK(F->mul(F->div(a, b), b) == a);
            }
    }
}

TEST_CASE("frobenius against the exponentiation oracle") {
    auto F3 = GaloisField::make(3);
    for (int a = 0; a < 3; ++a) CHECK(F3->frobenius(a, 1) == a);  // prime field is fixed

    auto F9 = GaloisField::make(3, 2);
    auto w = F9->from_coeffs({0, 1});
    CHECK(F9->frobenius(w, 1) == pow_oracle(*F9, w, 3));
    CHECK(F9->frobenius(w, 1) == F9->neg(w));  // w^3 = -w since w^2 = -1
    for (int a = 0; a < 9; ++a) {
        CHECK(F9->frobenius(a, 1) == pow_oracle(*F9, a, 3));
        CHECK(F9->frobenius(a, 2) == a);  // order divides m
    }
}

TEST_CASE("frobenius is a field automorphism fixing exactly F_p") {
    for (auto spec : {"3^2", "5^2"}) {
        auto F = GaloisField::parse(spec);
        int q = F->q(), p = F->p();
        for (int a = 0; a < q; ++a) {
            for (int b = 0; b < q; ++b) {
                CHECK(F->frobenius(F->add(a, b), 1) == F->add(F->frobenius(a, 1), F->frobenius(b, 1)));
                CHECK(F->frobenius(F->mul(a, b), 1) == F->mul(F->frobenius(a, 1), F->frobenius(b, 1)));
            }
            bool fixed = F->frobenius(a, 1) == a;
            bool prime = true;
            auto c = F->coeffs(a);
            for (size_t i = 1; i < c.size(); ++i) prime = prime && c[i] == 0;
            CHECK(fixed == prime);
        }
        (void)p;
    }
}

TEST_CASE("linear independence over the prime field") {
    auto F3 = GaloisField::make(3);
    auto F9 = GaloisField::make(3, 2);
    CHECK(fp_linear_independent(*F3, {1}));
    CHECK_FALSE(fp_linear_independent(*F3, {1, 2}));  // 2 = 2*1 over F_3
    auto w = F9->from_coeffs({0, 1});
    CHECK(fp_linear_independent(*F9, {1, w}));
    // oracle for the 2-element case: no F_p multiple of one equals the other
    bool dependent = false;
    for (int c = 0; c < 3; ++c)
        if (F9->mul(F9->from_int(c), 1) == w) dependent = true;
    CHECK_FALSE(dependent);
    CHECK_FALSE(fp_linear_independent(*F9, {w, F9->mul(2, w)}));
    CHECK_FALSE(fp_linear_independent(*F9, {1, w, F9->add(1, w)}));  // more than m elements
}

TEST_CASE("checked element operations") {
    auto F3 = GaloisField::make(3);
    auto F9 = GaloisField::make(3, 2);
    FieldElem a{F3, 2}, b{F9, 2};
    CHECK_THROWS_AS(a + b, FieldMismatch);
    FieldElem c{F3, 1};
    CHECK((a + c).v == 0);
    CHECK((a * a).v == 1);
    CHECK(frobenius(FieldElem{F9, F9->from_coeffs({0, 1})}, 1).v == F9->neg(F9->from_coeffs({0, 1})));
}

TEST_CASE("element parsing") {
    auto F9 = GaloisField::make(3, 2);
    CHECK(F9->parse_element("1") == 1);
    CHECK(F9->parse_element("w") == F9->from_coeffs({0, 1}));
    CHECK(F9->parse_element("2w") == F9->from_coeffs({0, 2}));
    CHECK(F9->parse_element("1+2w") == F9->from_coeffs({1, 2}));
    CHECK_THROWS_AS(F9->parse_element("w^2"), InvalidInput);
    auto F25 = GaloisField::make(5, 2);
    CHECK(F25->q() == 25);
}
