#pragma once

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "xhopf/scalar.hpp"

namespace xhopf {

using Vector = std::vector<Scalar>;

/// Dense row-major matrix over a single exact field. A matrix of a linear
/// map V -> W has dim W rows and dim V columns and acts on column vectors.
///
/// Tensor products use the left-major convention throughout: the basis
/// vector e_i (x) f_j of V (x) W has index i * dim W + j.
class Matrix {
  public:
    Matrix() = default;
    Matrix(FieldSpec field, std::size_t rows, std::size_t cols);

    static Matrix zero(FieldSpec field, std::size_t rows, std::size_t cols) {
        return Matrix(field, rows, cols);
    }
    static Matrix identity(FieldSpec field, std::size_t n);
    static Matrix from_ints(FieldSpec field, std::initializer_list<std::initializer_list<long>> rows);
    /// Single column holding `v`.
    static Matrix column(FieldSpec field, const Vector& v);
    /// Single row holding `v`.
    static Matrix row(FieldSpec field, const Vector& v);
    /// Matrix of the linear map `f` from a space of dimension `in` to one of
    /// dimension `out`, obtained by evaluating `f` on the standard basis.
    static Matrix from_linear_map(FieldSpec field, std::size_t in, std::size_t out,
                                  const std::function<Vector(const Vector&)>& f);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const FieldSpec& field() const { return field_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const std::vector<Scalar>& data() const { return data_; }

    Vector column_vector(std::size_t j) const;
    Vector row_vector(std::size_t i) const;
    bool is_zero() const;

    Matrix transpose() const;

    Matrix operator+(const Matrix& rhs) const;
    Matrix operator-(const Matrix& rhs) const;
    Matrix operator*(const Matrix& rhs) const;
    Matrix operator*(const Scalar& s) const;

    bool operator==(const Matrix& rhs) const;
    bool operator!=(const Matrix& rhs) const { return !(*this == rhs); }

    std::string to_string() const;

  private:
    void require_same_field(const Matrix& rhs) const;

    FieldSpec field_;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> data_;
};

Matrix mat_mul(const Matrix& a, const Matrix& b);
/// Kronecker product; row (i, j) of the result is i * b.rows() + j.
Matrix kron(const Matrix& a, const Matrix& b);
/// kron over a list, left-associated.
Matrix kron(std::initializer_list<std::reference_wrapper<const Matrix>> factors);
/// The flip V (x) W -> W (x) V for dim V = m, dim W = n.
Matrix flip(FieldSpec field, std::size_t m, std::size_t n);
Vector mat_vec(const Matrix& a, const Vector& v);
/// (f (x) g) v without forming the Kronecker product.
Vector apply_kron(const Matrix& f, const Matrix& g, const Vector& v);
/// (f (x) g) m, column by column.
Matrix compose_kron(const Matrix& f, const Matrix& g, const Matrix& m);
/// Image of v in V (x) W under the flip, dim V = m, dim W = n.
Vector flip_vector(const Vector& v, std::size_t m, std::size_t n);
/// id (x) flip (x) id on A (x) B (x) C (x) D -> A (x) C (x) B (x) D.
Vector swap_middle(const Vector& v, std::size_t a, std::size_t b, std::size_t c, std::size_t d);
/// Horizontal concatenation of column vectors.
Matrix from_columns(FieldSpec field, std::size_t rows, const std::vector<Vector>& columns);
Vector tensor(const Vector& a, const Vector& b);
Vector scale(const Vector& v, const Scalar& s);
Vector add(const Vector& a, const Vector& b);
Vector zero_vector(FieldSpec field, std::size_t n);
Vector basis_vector(FieldSpec field, std::size_t n, std::size_t i);
bool is_zero(const Vector& v);

/// Reduced row echelon form with smallest-index pivoting. Returns the
/// reduced matrix and fills `pivots` with the pivot column of each nonzero row.
Matrix rref(const Matrix& a, std::vector<std::size_t>* pivots = nullptr);
std::size_t rank(const Matrix& a);

/// Basis of the right null space. One vector per non-pivot column, in
/// ascending column order; the vector for free column f has a 1 at f and
/// zeros at the other free columns.
std::vector<Vector> kernel_basis(const Matrix& a);

struct LinearSolution {
    Vector x;
    bool unique = false;
};

/// One solution of a x = rhs (free variables set to zero), or nothing when
/// the system is inconsistent. Throws ShapeMismatch on a length mismatch.
std::optional<LinearSolution> solve_linear(const Matrix& a, const Vector& rhs);

std::optional<Matrix> inverse(const Matrix& a);

/// Human-readable description of the first entry where `lhs` and `rhs`
/// differ, or nothing when they are equal. Shape differences are reported too.
std::optional<std::string> first_difference(const Matrix& lhs, const Matrix& rhs);

std::string to_string(const Vector& v);

} // namespace xhopf
