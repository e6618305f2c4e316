#include "supalg/field.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace supalg {

namespace {

bool is_prime(int n) {
    if (n < 2) return false;
    for (int d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// dense polynomials over F_p, low coefficient first, used only for modulus
// search and table construction
using Poly = std::vector<int>;

Poly trim(Poly a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

Poly poly_mul_mod(const Poly& a, const Poly& b, const Poly& f, int p) {
    if (a.empty() || b.empty()) return {};
    Poly c(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    // reduce modulo the monic polynomial f
    int deg_f = static_cast<int>(f.size()) - 1;
    for (int i = static_cast<int>(c.size()) - 1; i >= deg_f; --i) {
        int t = c[i];
        if (t == 0) continue;
        c[i] = 0;
        for (int j = 0; j < deg_f; ++j) c[i - deg_f + j] = ((c[i - deg_f + j] - t * f[j]) % p + p * p) % p;
    }
    return trim(c);
}

Poly poly_pow_mod(Poly base, long long e, const Poly& f, int p) {
    Poly r{1};
    while (e > 0) {
        if (e & 1) r = poly_mul_mod(r, base, f, p);
        base = poly_mul_mod(base, base, f, p);
        e >>= 1;
    }
    return r;
}

Poly poly_mod(Poly a, const Poly& b, int p) {
    a = trim(a);
    Poly f = trim(b);
    int deg_f = static_cast<int>(f.size()) - 1;
    int lead_inv = 1;
    for (int t = 1; t < p; ++t)
        if (t * f[deg_f] % p == 1) lead_inv = t;
    while (static_cast<int>(a.size()) - 1 >= deg_f && !a.empty()) {
        int sh = static_cast<int>(a.size()) - 1 - deg_f;
        int t = a.back() * lead_inv % p;
        for (int j = 0; j <= deg_f; ++j) a[sh + j] = ((a[sh + j] - t * f[j]) % p + p * p) % p;
        a = trim(a);
    }
    return a;
}

Poly poly_gcd(Poly a, Poly b, int p) {
    a = trim(a);
    b = trim(b);
    while (!b.empty()) {
        Poly r = poly_mod(a, b, p);
        a = b;
        b = r;
    }
    return a;
}

// f monic of degree m: irreducible iff it shares no factor with x^{p^d}-x
// for d up to m/2
bool is_irreducible(const Poly& f, int p) {
    int m = static_cast<int>(f.size()) - 1;
    if (m == 1) return true;
    for (int d = 1; 2 * d <= m; ++d) {
        long long e = 1;
        for (int i = 0; i < d; ++i) e *= p;
        Poly g = poly_pow_mod({0, 1}, e, f, p);  // x^{p^d} mod f
        // subtract x
        if (g.size() < 2) g.resize(2, 0);
        g[1] = ((g[1] - 1) % p + p) % p;
        g = trim(g);
        Poly gc = poly_gcd(f, g, p);
        if (static_cast<int>(gc.size()) - 1 >= 1) return false;
    }
    return true;
}

}  // namespace

GaloisField::GaloisField(int p, int m, std::vector<std::uint8_t> modulus)
    : p_(p), m_(m), q_(1), modulus_(std::move(modulus)) {
    for (int i = 0; i < m_; ++i) q_ *= p_;
    if (q_ > 256) throw InvalidInput("field too large for the byte representation: q = " + std::to_string(q_));

    add_.assign(q_ * q_, 0);
    mul_.assign(q_ * q_, 0);
    neg_.assign(q_, 0);
    inv_.assign(q_, 0);
    frob_.assign(q_, 0);

    Poly f(m_ + 1, 0);
    for (int i = 0; i < m_; ++i) f[i] = modulus_[i];
    f[m_] = 1;

    auto decode = [&](int a) {
        Poly c(m_, 0);
        for (int i = 0; i < m_; ++i) {
            c[i] = a % p_;
            a /= p_;
        }
        return c;
    };
    auto encode = [&](const Poly& c) {
        int a = 0;
        for (int i = m_ - 1; i >= 0; --i) a = a * p_ + (i < static_cast<int>(c.size()) ? c[i] : 0);
        return a;
    };

    for (int a = 0; a < q_; ++a) {
        Poly ca = decode(a);
        Poly na(m_, 0);
        for (int i = 0; i < m_; ++i) na[i] = (p_ - ca[i]) % p_;
        neg_[a] = static_cast<Elt>(encode(na));
        for (int b = 0; b < q_; ++b) {
            Poly cb = decode(b);
            Poly s(m_, 0);
            for (int i = 0; i < m_; ++i) s[i] = (ca[i] + cb[i]) % p_;
            add_[a * q_ + b] = static_cast<Elt>(encode(s));
            Poly pr = poly_mul_mod(trim(ca), trim(cb), f, p_);
            pr.resize(m_, 0);
            mul_[a * q_ + b] = static_cast<Elt>(encode(pr));
        }
    }
    for (int a = 1; a < q_; ++a)
        for (int b = 1; b < q_; ++b)
            if (mul_[a * q_ + b] == 1) inv_[a] = static_cast<Elt>(b);
    for (int a = 0; a < q_; ++a) {
        Elt r = 1;
        for (int i = 0; i < p_; ++i) r = mul_[r * q_ + a];
        frob_[a] = r;
    }
}

std::shared_ptr<const GaloisField> GaloisField::make(int p, int m) {
    if (!is_prime(p) || p == 2) throw InvalidInput("characteristic must be an odd prime, got " + std::to_string(p));
    if (m < 1) throw InvalidInput("extension degree must be >= 1");
    if (m == 1) return std::shared_ptr<const GaloisField>(new GaloisField(p, 1, {0}));
    // lexicographically smallest irreducible monic modulus, constant
    // coefficient most significant in the comparison
    std::vector<std::uint8_t> c(m, 0);
    while (true) {
        Poly f(m + 1, 0);
        for (int i = 0; i < m; ++i) f[i] = c[i];
        f[m] = 1;
        if (f[0] != 0 && is_irreducible(f, p)) return std::shared_ptr<const GaloisField>(new GaloisField(p, m, c));
        int i = m - 1;
        while (i >= 0 && c[i] == p - 1) c[i--] = 0;
        if (i < 0) throw InvalidInput("no irreducible modulus found");  // cannot happen
        ++c[i];
    }
}

std::shared_ptr<const GaloisField> GaloisField::make(int p, int m, const std::vector<std::uint8_t>& modulus) {
    if (!is_prime(p) || p == 2) throw InvalidInput("characteristic must be an odd prime");
    if (static_cast<int>(modulus.size()) != m) throw InvalidInput("modulus must list m non-leading coefficients");
    Poly f(m + 1, 0);
    for (int i = 0; i < m; ++i) f[i] = modulus[i] % p;
    f[m] = 1;
    if (m > 1 && !is_irreducible(f, p)) throw InvalidInput("modulus is reducible over F_p");
    return std::shared_ptr<const GaloisField>(new GaloisField(p, m, modulus));
}

std::shared_ptr<const GaloisField> GaloisField::parse(const std::string& spec) {
    try {
        auto caret = spec.find('^');
        size_t used = 0;
        int p = std::stoi(spec.substr(0, caret), &used);
        if (caret == std::string::npos && used != spec.size()) throw InvalidInput("bad field spec: " + spec);
        int m = caret == std::string::npos ? 1 : std::stoi(spec.substr(caret + 1));
        return make(p, m);
    } catch (const std::invalid_argument&) {
        throw InvalidInput("bad field spec: " + spec);
    } catch (const std::out_of_range&) {
        throw InvalidInput("bad field spec: " + spec);
    }
}

std::string GaloisField::spec() const {
    return m_ == 1 ? std::to_string(p_) : std::to_string(p_) + "^" + std::to_string(m_);
}

std::string GaloisField::modulus_string() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < m_; ++i) os << (i ? "," : "") << int(modulus_[i]);
    os << ",1]";
    return os.str();
}

GaloisField::Elt GaloisField::frobenius(Elt a, int i) const {
    Elt r = a;
    for (int k = 0; k < i % m_ + (i % m_ < 0 ? m_ : 0); ++k) r = frob_[r];
    return r;
}

GaloisField::Elt GaloisField::pow(Elt a, long e) const {
    if (e == 0) return 1;
    if (a == 0) return 0;
    long ord = q_ - 1;
    e %= ord;
    if (e < 0) e += ord;
    Elt r = 1, b = a;
    while (e > 0) {
        if (e & 1) r = mul(r, b);
        b = mul(b, b);
        e >>= 1;
    }
    return r;
}

std::vector<std::uint8_t> GaloisField::coeffs(Elt a) const {
    std::vector<std::uint8_t> c(m_, 0);
    int x = a;
    for (int i = 0; i < m_; ++i) {
        c[i] = static_cast<std::uint8_t>(x % p_);
        x /= p_;
    }
    return c;
}

GaloisField::Elt GaloisField::from_coeffs(const std::vector<std::uint8_t>& c) const {
    int a = 0;
    for (int i = m_ - 1; i >= 0; --i) a = a * p_ + (i < static_cast<int>(c.size()) ? c[i] % p_ : 0);
    return static_cast<Elt>(a);
}

GaloisField::Elt GaloisField::from_int(long n) const {
    long r = n % p_;
    if (r < 0) r += p_;
    return static_cast<Elt>(r);
}

std::string GaloisField::to_string(Elt a) const {
    if (m_ == 1) return std::to_string(int(a));
    auto c = coeffs(a);
    std::string s;
    for (int i = 0; i < m_; ++i) {
        if (c[i] == 0) continue;
        if (!s.empty()) s += "+";
        if (i == 0)
            s += std::to_string(int(c[i]));
        else {
            if (c[i] != 1) s += std::to_string(int(c[i]));
            s += "w";
            if (i > 1) s += "^" + std::to_string(i);
        }
    }
    return s.empty() ? "0" : s;
}

GaloisField::Elt GaloisField::parse_element(const std::string& s) const {
    std::vector<std::uint8_t> c(m_, 0);
    size_t i = 0;
    if (s.empty()) throw InvalidInput("empty field element");
    while (i < s.size()) {
        if (s[i] == '+') ++i;
        long coef = 1;
        bool saw_digit = false;
        long sign = 1;
        if (i < s.size() && s[i] == '-') {
            sign = -1;
            ++i;
        }
        long num = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            num = num * 10 + (s[i] - '0');
            saw_digit = true;
            ++i;
        }
        if (saw_digit) coef = num;
        coef *= sign;
        int deg = 0;
        if (i < s.size() && s[i] == 'w') {
            deg = 1;
            ++i;
            if (i < s.size() && s[i] == '^') {
                ++i;
                long d = 0;
                while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) d = d * 10 + (s[i++] - '0');
                deg = static_cast<int>(d);
            }
        } else if (!saw_digit) {
            throw InvalidInput("bad field element: " + s);
        }
        if (deg >= m_) throw InvalidInput("element term w^" + std::to_string(deg) + " outside field " + spec());
        long r = ((coef % p_) + p_) % p_;
        c[deg] = static_cast<std::uint8_t>((c[deg] + r) % p_);
    }
    return from_coeffs(c);
}

bool GaloisField::same(const GaloisField& other) const {
    return p_ == other.p_ && m_ == other.m_ && modulus_ == other.modulus_;
}

namespace {
void require_same(const FieldElem& a, const FieldElem& b) {
    if (!a.field || !b.field || !a.field->same(*b.field))
        throw FieldMismatch("operands live in different fields");
}
}  // namespace

FieldElem operator+(const FieldElem& a, const FieldElem& b) {
    require_same(a, b);
    return {a.field, a.field->add(a.v, b.v)};
}
FieldElem operator-(const FieldElem& a, const FieldElem& b) {
    require_same(a, b);
    return {a.field, a.field->sub(a.v, b.v)};
}
FieldElem operator*(const FieldElem& a, const FieldElem& b) {
    require_same(a, b);
    return {a.field, a.field->mul(a.v, b.v)};
}
FieldElem operator/(const FieldElem& a, const FieldElem& b) {
    require_same(a, b);
    return {a.field, a.field->div(a.v, b.v)};
}
bool operator==(const FieldElem& a, const FieldElem& b) {
    require_same(a, b);
    return a.v == b.v;
}

FieldElem frobenius(const FieldElem& a, int i) { return {a.field, a.field->frobenius(a.v, i)}; }

bool fp_linear_independent(const GaloisField& F, const std::vector<std::uint8_t>& elems) {
    int p = F.p(), m = F.m();
    int s = static_cast<int>(elems.size());
    if (s == 0) return true;
    if (s > m) return false;
    // row-reduce the s x m coefficient matrix over F_p
    std::vector<std::vector<int>> rows;
    for (auto e : elems) {
        auto c = F.coeffs(e);
        rows.emplace_back(c.begin(), c.end());
    }
    int rank = 0;
    for (int col = 0; col < m && rank < s; ++col) {
        int piv = -1;
        for (int r = rank; r < s; ++r)
            if (rows[r][col] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(rows[rank], rows[piv]);
        int inv = 1;
        for (int t = 1; t < p; ++t)
            if (t * rows[rank][col] % p == 1) inv = t;
        for (int j = 0; j < m; ++j) rows[rank][j] = rows[rank][j] * inv % p;
        for (int r = 0; r < s; ++r) {
            if (r == rank || rows[r][col] == 0) continue;
            int t = rows[r][col];
            for (int j = 0; j < m; ++j) rows[r][j] = ((rows[r][j] - t * rows[rank][j]) % p + p) % p;
        }
        ++rank;
    }
    return rank == s;
}

bool fp_linear_independent(const std::vector<FieldElem>& elems) {
    if (elems.empty()) return true;
    std::vector<std::uint8_t> raw;
    for (auto& e : elems) {
        if (!e.field->same(*elems[0].field)) throw FieldMismatch("independence test across different fields");
        raw.push_back(e.v);
    }
    return fp_linear_independent(*elems[0].field, raw);
}

}  // namespace supalg
