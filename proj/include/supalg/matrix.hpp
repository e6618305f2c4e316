#ifndef SUPALG_MATRIX_HPP
#define SUPALG_MATRIX_HPP

#include <cstdint>
#include <vector>

#include "supalg/field.hpp"

namespace supalg {

using Vec = std::vector<std::uint8_t>;

/// y += c * x
void axpy(const GaloisField& F, Vec& y, std::uint8_t c, const Vec& x);

/// Dense matrix over a GaloisField, row major.  Deliberately minimal: the
/// toolkit only needs exact rank / nullspace / product computations at desk
/// scale, so everything is straightforward Gaussian elimination with a
/// deterministic pivot rule (first nonzero column, rows in order).
class Matrix {
  public:
    Matrix() = default;
    Matrix(FieldPtr F, int rows, int cols)
        : field_(std::move(F)), rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols, 0) {}

    static Matrix identity(FieldPtr F, int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const GaloisField& F() const { return *field_; }
    FieldPtr field() const { return field_; }

    std::uint8_t at(int i, int j) const { return data_[static_cast<size_t>(i) * cols_ + j]; }
    std::uint8_t& at(int i, int j) { return data_[static_cast<size_t>(i) * cols_ + j]; }
    const std::uint8_t* row(int i) const { return &data_[static_cast<size_t>(i) * cols_]; }
    std::uint8_t* row(int i) { return &data_[static_cast<size_t>(i) * cols_]; }

    Matrix mul(const Matrix& other) const;
    Matrix add(const Matrix& other) const;
    Matrix sub(const Matrix& other) const;
    Matrix scale(std::uint8_t c) const;
    Matrix transpose() const;
    Matrix pow(int e) const;
    /// Kronecker product; index (i,j) of the result pairs row i of *this
    /// with row j of other via i * other.rows() + j.
    Matrix kron(const Matrix& other) const;

    Vec apply(const Vec& x) const;  // matrix * column vector

    bool is_zero() const;
    bool operator==(const Matrix& other) const { return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_; }

    int rank() const;
    /// Basis of the right nullspace, one vector per row of the result.
    Matrix nullspace_rows() const;
    /// Row space in reduced echelon form (zero rows dropped).
    Matrix row_echelon() const;

    static Matrix vstack(const std::vector<Matrix>& parts);

  private:
    FieldPtr field_;
    int rows_ = 0, cols_ = 0;
    Vec data_;
};

/// Incremental reduced echelon basis of a collection of vectors, optionally
/// carrying companion vectors through the same row operations.  This is the
/// workhorse behind kernel computation, module spans, and chain-map lifting:
/// companions record preimages, so solving d(x) = t is a single reduce call.
class EchelonBasis {
  public:
    EchelonBasis(FieldPtr F, int len, int companion_len = 0)
        : field_(std::move(F)), len_(len), clen_(companion_len) {}

    int size() const { return static_cast<int>(rows_.size()); }
    int length() const { return len_; }

    /// Reduces v (and companion alongside); if a nonzero residue remains it
    /// is added as a new basis row and true is returned.  When v reduces to
    /// zero and kernel_out is given, the reduced companion is moved there;
    /// with companions satisfying M*c = v this is a nullspace vector of M.
    bool insert(Vec v, Vec companion = {}, Vec* kernel_out = nullptr);

    /// Reduces v against the basis in place; companion_out, when given,
    /// accumulates the combination of stored companions that was subtracted.
    void reduce(Vec& v, Vec* companion_out = nullptr) const;

    bool contains(Vec v) const;

    const Vec& row(int i) const { return rows_[i].v; }
    const Vec& companion(int i) const { return rows_[i].c; }
    int pivot(int i) const { return rows_[i].pivot; }

  private:
    struct Row {
        Vec v;
        Vec c;
        int pivot;
    };
    FieldPtr field_;
    int len_, clen_;
    std::vector<Row> rows_;
};

}  // namespace supalg

#endif
