#ifndef SUPALG_FIELD_HPP
#define SUPALG_FIELD_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "supalg/errors.hpp"

namespace supalg {

/// Arithmetic in a small finite field F_{p^m}, p an odd prime.
///
/// Elements are stored as indices 0..q-1; the index encodes the coefficient
/// vector of the residue class in base p (low coefficient first).  All
/// operations go through precomputed tables, so the index representation is
/// what every other module of the toolkit works with.
class GaloisField {
  public:
    using Elt = std::uint8_t;

    // Extension field with an explicit monic modulus (coefficients of the
    // non-leading terms, low to high, length m).  When no modulus is given
    // the lexicographically smallest irreducible one is chosen, so field
    // construction is reproducible.
    static std::shared_ptr<const GaloisField> make(int p, int m = 1);
    static std::shared_ptr<const GaloisField> make(int p, int m, const std::vector<std::uint8_t>& modulus);

    /// Parses a field spec of the form "p" or "p^m", e.g. "3^2".
    static std::shared_ptr<const GaloisField> parse(const std::string& spec);

    int p() const { return p_; }
    int m() const { return m_; }
    int q() const { return q_; }
    const std::vector<std::uint8_t>& modulus() const { return modulus_; }
    std::string spec() const;
    std::string modulus_string() const;

    Elt zero() const { return 0; }
    Elt one() const { return 1; }

    Elt add(Elt a, Elt b) const { return add_[a * q_ + b]; }
    Elt sub(Elt a, Elt b) const { return add_[a * q_ + neg_[b]]; }
    Elt neg(Elt a) const { return neg_[a]; }
    Elt mul(Elt a, Elt b) const { return mul_[a * q_ + b]; }
    Elt inv(Elt a) const {
        if (a == 0) throw DivisionByZero();
        return inv_[a];
    }
    Elt div(Elt a, Elt b) const { return mul(a, inv(b)); }
    /// a^{p^i}
    Elt frobenius(Elt a, int i) const;
    Elt pow(Elt a, long e) const;

    // raw table rows, used by the inner loops of the matrix code
    const Elt* add_row(Elt a) const { return &add_[a * q_]; }
    const Elt* mul_row(Elt a) const { return &mul_[a * q_]; }

    /// index <-> coefficient vector over F_p (length m, low first)
    std::vector<std::uint8_t> coeffs(Elt a) const;
    Elt from_coeffs(const std::vector<std::uint8_t>& c) const;
    /// image of n (an integer) under Z -> F_q
    Elt from_int(long n) const;

    std::string to_string(Elt a) const;
    /// Accepts integers, "w", "2w", "w^2", and sums such as "1+2w".
    Elt parse_element(const std::string& s) const;

    bool same(const GaloisField& other) const;

  private:
    GaloisField(int p, int m, std::vector<std::uint8_t> modulus);

    int p_, m_, q_;
    std::vector<std::uint8_t> modulus_;  // non-leading coefficients, length m
    std::vector<Elt> add_, mul_, neg_, inv_, frob_;
};

using FieldPtr = std::shared_ptr<const GaloisField>;

/// A field element tagged with its field, for code that wants value
/// semantics and checked arithmetic rather than raw indices.
struct FieldElem {
    FieldPtr field;
    GaloisField::Elt v = 0;

    FieldElem() = default;
    FieldElem(FieldPtr f, GaloisField::Elt x) : field(std::move(f)), v(x) {}

    bool is_zero() const { return v == 0; }
    std::string str() const { return field->to_string(v); }
};

FieldElem operator+(const FieldElem& a, const FieldElem& b);
FieldElem operator-(const FieldElem& a, const FieldElem& b);
FieldElem operator*(const FieldElem& a, const FieldElem& b);
FieldElem operator/(const FieldElem& a, const FieldElem& b);
bool operator==(const FieldElem& a, const FieldElem& b);

FieldElem frobenius(const FieldElem& a, int i);

/// True iff the coefficient vectors of the given elements are linearly
/// independent over the prime subfield F_p.
bool fp_linear_independent(const std::vector<FieldElem>& elems);
bool fp_linear_independent(const GaloisField& F, const std::vector<std::uint8_t>& elems);

}  // namespace supalg

#endif
