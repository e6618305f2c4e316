#ifndef SUPALG_WITT_HPP
#define SUPALG_WITT_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace supalg {

using Rational = boost::multiprecision::cpp_rational;

/// Multivariate polynomial with exact rational coefficients.  Monomials are
/// exponent vectors of a fixed length; only what the Witt-vector recursion
/// needs is implemented.
struct RatPoly {
    int nvars = 0;
    std::map<std::vector<std::uint16_t>, Rational> terms;

    explicit RatPoly(int n) : nvars(n) {}
    static RatPoly var(int nvars, int i);
    static RatPoly constant(int nvars, const Rational& c);

    RatPoly operator+(const RatPoly& o) const;
    RatPoly operator-(const RatPoly& o) const;
    RatPoly operator*(const RatPoly& o) const;
    RatPoly pow(long e) const;
    RatPoly scaled(const Rational& c) const;
    void prune();
    bool operator==(const RatPoly& o) const { return terms == o.terms; }
};

/// Same monomial layout with coefficients reduced into F_p.
struct ModPoly {
    int nvars = 0;
    std::map<std::vector<std::uint16_t>, std::uint8_t> terms;
};

/// The polynomials S_0,...,S_{r-1} describing addition of length-r Witt
/// vectors in characteristic p.  Variables are ordered x_1..x_r, y_1..y_r;
/// S_{i-1} only involves x_1..x_i, y_1..y_i.
struct WittPolynomials {
    int p = 0;
    int r = 0;
    std::vector<RatPoly> rational;  // over Q, before reduction
    std::vector<ModPoly> mod_p;
};

/// Ghost component w_i (0-based) in variables z_1..z_r placed at the given
/// offset inside an nvars-slot polynomial: w_i = sum_j p^j z_{j+1}^{p^(i-j)}.
RatPoly witt_ghost(int p, int i, int nvars, int offset);

/// Solves the ghost-component recursion over Q and reduces mod p.  Denominators
/// must cancel exactly at every step; failure is an internal error.
/// Heights above 3 are rejected (desk scale).
WittPolynomials witt_sum_polys(int p, int r);

/// w_i evaluated on a Witt vector with entries in F_p is not needed; what the
/// tests exercise is the induced addition law on (F_p)^r:
std::vector<std::uint8_t> witt_add(const WittPolynomials& W, const std::vector<std::uint8_t>& a,
                                   const std::vector<std::uint8_t>& b);

std::string to_string(const RatPoly& f, const std::vector<std::string>& varnames);

}  // namespace supalg

#endif
