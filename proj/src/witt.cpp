#include "supalg/witt.hpp"

#include <cassert>
#include <sstream>
#include <stdexcept>

#include "supalg/errors.hpp"

namespace supalg {

using boost::multiprecision::cpp_int;

RatPoly RatPoly::var(int nvars, int i) {
    RatPoly f(nvars);
    std::vector<std::uint16_t> e(nvars, 0);
    e[i] = 1;
    f.terms[e] = 1;
    return f;
}

RatPoly RatPoly::constant(int nvars, const Rational& c) {
    RatPoly f(nvars);
    if (c != 0) f.terms[std::vector<std::uint16_t>(nvars, 0)] = c;
    return f;
}

void RatPoly::prune() {
    for (auto it = terms.begin(); it != terms.end();)
        it = it->second == 0 ? terms.erase(it) : std::next(it);
}

RatPoly RatPoly::operator+(const RatPoly& o) const {
    RatPoly f = *this;
    for (auto& [e, c] : o.terms) f.terms[e] += c;
    f.prune();
    return f;
}

RatPoly RatPoly::operator-(const RatPoly& o) const {
    RatPoly f = *this;
    for (auto& [e, c] : o.terms) f.terms[e] -= c;
    f.prune();
    return f;
}

RatPoly RatPoly::operator*(const RatPoly& o) const {
    RatPoly f(nvars);
    for (auto& [e1, c1] : terms)
        for (auto& [e2, c2] : o.terms) {
            std::vector<std::uint16_t> e(nvars);
            for (int i = 0; i < nvars; ++i) e[i] = static_cast<std::uint16_t>(e1[i] + e2[i]);
            f.terms[e] += c1 * c2;
        }
    f.prune();
    return f;
}

RatPoly RatPoly::pow(long e) const {
    RatPoly r = constant(nvars, 1);
    RatPoly b = *this;
    while (e > 0) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

RatPoly RatPoly::scaled(const Rational& c) const {
    RatPoly f(nvars);
    for (auto& [e, x] : terms)
        if (c * x != 0) f.terms[e] = c * x;
    return f;
}

RatPoly witt_ghost(int p, int i, int nvars, int offset) {
    RatPoly w(nvars);
    cpp_int pj = 1;
    for (int j = 0; j <= i; ++j) {
        long e = 1;
        for (int k = 0; k < i - j; ++k) e *= p;
        RatPoly t = RatPoly::var(nvars, offset + j).pow(e).scaled(Rational(pj));
        w = w + t;
        pj *= p;
    }
    return w;
}

WittPolynomials witt_sum_polys(int p, int r) {
    if (r > 3) throw HeightTooLarge("Witt polynomials supported up to height 3, got r = " + std::to_string(r));
    WittPolynomials W;
    W.p = p;
    W.r = r;
    int nvars = 2 * r;  // x_1..x_r, y_1..y_r
    for (int i = 0; i < r; ++i) {
        // T = w_i(x) + w_i(y) - sum_{j<i} p^j S_j^{p^{i-j}}, then S_i = T / p^i
        RatPoly T = witt_ghost(p, i, nvars, 0) + witt_ghost(p, i, nvars, r);
        cpp_int pj = 1;
        for (int j = 0; j < i; ++j) {
            long e = 1;
            for (int k = 0; k < i - j; ++k) e *= p;
            T = T - W.rational[j].pow(e).scaled(Rational(pj));
            pj *= p;
        }
        cpp_int pi = 1;
        for (int k = 0; k < i; ++k) pi *= p;
        RatPoly S = T.scaled(Rational(1, pi));
        for (auto& [e, c] : S.terms) {
            (void)e;
            if (denominator(c) != 1)
                throw std::logic_error("Witt recursion produced a non-integral coefficient");
        }
        W.rational.push_back(S);
        ModPoly M;
        M.nvars = nvars;
        for (auto& [e, c] : S.terms) {
            cpp_int n = numerator(c) % p;
            if (n < 0) n += p;
            auto v = static_cast<std::uint8_t>(n);
            if (v) M.terms[e] = v;
        }
        W.mod_p.push_back(M);
    }
    return W;
}

std::vector<std::uint8_t> witt_add(const WittPolynomials& W, const std::vector<std::uint8_t>& a,
                                   const std::vector<std::uint8_t>& b) {
    int p = W.p, r = W.r;
    std::vector<std::uint8_t> out(r, 0);
    for (int i = 0; i < r; ++i) {
        long acc = 0;
        for (auto& [e, c] : W.mod_p[i].terms) {
            long t = c;
            for (int j = 0; j < r; ++j) {
                for (int k = 0; k < e[j]; ++k) t = t * a[j] % p;
                for (int k = 0; k < e[r + j]; ++k) t = t * b[j] % p;
            }
            acc = (acc + t) % p;
        }
        out[i] = static_cast<std::uint8_t>(acc);
    }
    return out;
}

std::string to_string(const RatPoly& f, const std::vector<std::string>& varnames) {
    if (f.terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [e, c] : f.terms) {
        if (!first) os << " + ";
        first = false;
        os << c.str();
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            os << "*" << varnames[i];
            if (e[i] > 1) os << "^" << e[i];
        }
    }
    return os.str();
}

}  // namespace supalg
