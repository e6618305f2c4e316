#include "supalg/matrix.hpp"

#include <cassert>

namespace supalg {

void axpy(const GaloisField& F, Vec& y, std::uint8_t c, const Vec& x) {
    if (c == 0) return;
    const std::uint8_t* mulc = F.mul_row(c);
    const size_t n = y.size();
    for (size_t k = 0; k < n; ++k) {
        std::uint8_t t = mulc[x[k]];
        if (t) y[k] = F.add_row(y[k])[t];
    }
}

Matrix Matrix::identity(FieldPtr F, int n) {
    Matrix I(std::move(F), n, n);
    for (int i = 0; i < n; ++i) I.at(i, i) = 1;
    return I;
}

Matrix Matrix::mul(const Matrix& other) const {
    assert(cols_ == other.rows_);
    Matrix out(field_, rows_, other.cols_);
    const GaloisField& F = *field_;
    for (int i = 0; i < rows_; ++i) {
        for (int k = 0; k < cols_; ++k) {
            std::uint8_t a = at(i, k);
            if (a == 0) continue;
            const std::uint8_t* mula = F.mul_row(a);
            const std::uint8_t* src = other.row(k);
            std::uint8_t* dst = out.row(i);
            for (int j = 0; j < other.cols_; ++j) {
                std::uint8_t t = mula[src[j]];
                if (t) dst[j] = F.add_row(dst[j])[t];
            }
        }
    }
    return out;
}

Matrix Matrix::add(const Matrix& other) const {
    assert(rows_ == other.rows_ && cols_ == other.cols_);
    Matrix out(field_, rows_, cols_);
    for (size_t k = 0; k < data_.size(); ++k) out.data_[k] = field_->add(data_[k], other.data_[k]);
    return out;
}

Matrix Matrix::sub(const Matrix& other) const {
    assert(rows_ == other.rows_ && cols_ == other.cols_);
    Matrix out(field_, rows_, cols_);
    for (size_t k = 0; k < data_.size(); ++k) out.data_[k] = field_->sub(data_[k], other.data_[k]);
    return out;
}

Matrix Matrix::scale(std::uint8_t c) const {
    Matrix out(field_, rows_, cols_);
    for (size_t k = 0; k < data_.size(); ++k) out.data_[k] = field_->mul(data_[k], c);
    return out;
}

Matrix Matrix::transpose() const {
    Matrix out(field_, cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
    return out;
}

Matrix Matrix::pow(int e) const {
    assert(rows_ == cols_);
    Matrix r = identity(field_, rows_);
    for (int k = 0; k < e; ++k) r = r.mul(*this);
    return r;
}

Matrix Matrix::kron(const Matrix& other) const {
    Matrix out(field_, rows_ * other.rows_, cols_ * other.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) {
            std::uint8_t a = at(i, j);
            if (a == 0) continue;
            for (int k = 0; k < other.rows_; ++k)
                for (int l = 0; l < other.cols_; ++l)
                    out.at(i * other.rows_ + k, j * other.cols_ + l) = field_->mul(a, other.at(k, l));
        }
    return out;
}

Vec Matrix::apply(const Vec& x) const {
    assert(static_cast<int>(x.size()) == cols_);
    Vec y(rows_, 0);
    const GaloisField& F = *field_;
    for (int j = 0; j < cols_; ++j) {
        std::uint8_t c = x[j];
        if (c == 0) continue;
        const std::uint8_t* mulc = F.mul_row(c);
        for (int i = 0; i < rows_; ++i) {
            std::uint8_t t = mulc[at(i, j)];
            if (t) y[i] = F.add_row(y[i])[t];
        }
    }
    return y;
}

bool Matrix::is_zero() const {
    for (auto v : data_)
        if (v) return false;
    return true;
}

int Matrix::rank() const {
    EchelonBasis eb(field_, cols_);
    for (int i = 0; i < rows_; ++i) eb.insert(Vec(row(i), row(i) + cols_));
    return eb.size();
}

Matrix Matrix::row_echelon() const {
    EchelonBasis eb(field_, cols_);
    for (int i = 0; i < rows_; ++i) eb.insert(Vec(row(i), row(i) + cols_));
    Matrix out(field_, eb.size(), cols_);
    for (int i = 0; i < eb.size(); ++i)
        for (int j = 0; j < cols_; ++j) out.at(i, j) = eb.row(i)[j];
    return out;
}

Matrix Matrix::nullspace_rows() const {
    // reduce the rows, then read the free columns of the rref
    EchelonBasis eb(field_, cols_);
    for (int i = 0; i < rows_; ++i) eb.insert(Vec(row(i), row(i) + cols_));
    std::vector<int> pivots;
    std::vector<char> is_pivot(cols_, 0);
    for (int i = 0; i < eb.size(); ++i) {
        pivots.push_back(eb.pivot(i));
        is_pivot[eb.pivot(i)] = 1;
    }
    std::vector<int> free_cols;
    for (int j = 0; j < cols_; ++j)
        if (!is_pivot[j]) free_cols.push_back(j);
    Matrix out(field_, static_cast<int>(free_cols.size()), cols_);
    for (size_t k = 0; k < free_cols.size(); ++k) {
        int j = free_cols[k];
        out.at(static_cast<int>(k), j) = 1;
        for (int i = 0; i < eb.size(); ++i) out.at(static_cast<int>(k), pivots[i]) = field_->neg(eb.row(i)[j]);
    }
    return out;
}

Matrix Matrix::vstack(const std::vector<Matrix>& parts) {
    assert(!parts.empty());
    int cols = parts[0].cols();
    int rows = 0;
    for (auto& m : parts) rows += m.rows();
    Matrix out(parts[0].field(), rows, cols);
    int r = 0;
    for (auto& m : parts) {
        assert(m.cols() == cols);
        for (int i = 0; i < m.rows(); ++i, ++r)
            for (int j = 0; j < cols; ++j) out.at(r, j) = m.at(i, j);
    }
    return out;
}

bool EchelonBasis::insert(Vec v, Vec companion, Vec* kernel_out) {
    if (companion.empty() && clen_ > 0) companion.assign(clen_, 0);
    const GaloisField& F = *field_;
    for (auto& r : rows_) {
        std::uint8_t c = v[r.pivot];
        if (c == 0) continue;
        std::uint8_t nc = F.neg(c);
        axpy(F, v, nc, r.v);
        if (clen_) axpy(F, companion, nc, r.c);
    }
    int piv = -1;
    for (int j = 0; j < len_; ++j)
        if (v[j]) {
            piv = j;
            break;
        }
    if (piv < 0) {
        if (kernel_out) *kernel_out = std::move(companion);
        return false;
    }
    std::uint8_t inv = F.inv(v[piv]);
    if (inv != 1) {
        const std::uint8_t* mi = F.mul_row(inv);
        for (auto& x : v) x = mi[x];
        for (auto& x : companion) x = mi[x];
    }
    // keep the basis reduced: clear this pivot from existing rows
    for (auto& r : rows_) {
        std::uint8_t c = r.v[piv];
        if (c == 0) continue;
        std::uint8_t nc = F.neg(c);
        axpy(F, r.v, nc, v);
        if (clen_) axpy(F, r.c, nc, companion);
    }
    rows_.push_back({std::move(v), std::move(companion), piv});
    return true;
}

void EchelonBasis::reduce(Vec& v, Vec* companion_out) const {
    const GaloisField& F = *field_;
    for (auto& r : rows_) {
        std::uint8_t c = v[r.pivot];
        if (c == 0) continue;
        std::uint8_t nc = F.neg(c);
        axpy(F, v, nc, r.v);
        if (companion_out) axpy(F, *companion_out, nc, r.c);
    }
}

bool EchelonBasis::contains(Vec v) const {
    reduce(v);
    for (auto x : v)
        if (x) return false;
    return true;
}

}  // namespace supalg
