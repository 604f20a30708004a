#include "xhopf/matrix.hpp"

#include <sstream>

#include "xhopf/error.hpp"

namespace xhopf {

namespace {

std::string shape(const Matrix& m) {
    return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

} // namespace

Matrix::Matrix(FieldSpec field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, Scalar::zero(field)) {}

Matrix Matrix::identity(FieldSpec field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = Scalar::one(field);
    return m;
}

Matrix Matrix::from_ints(FieldSpec field, std::initializer_list<std::initializer_list<long>> rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.begin()->size();
    Matrix m(field, r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
        if (row.size() != c)
            throw Error(ErrorCode::ShapeMismatch, "ragged matrix literal");
        std::size_t j = 0;
        for (long v : row)
            m(i, j++) = Scalar(field, v);
        ++i;
    }
    return m;
}

Matrix Matrix::column(FieldSpec field, const Vector& v) {
    Matrix m(field, v.size(), 1);
    for (std::size_t i = 0; i < v.size(); ++i)
        m(i, 0) = v[i];
    return m;
}

Matrix Matrix::row(FieldSpec field, const Vector& v) {
    Matrix m(field, 1, v.size());
    for (std::size_t j = 0; j < v.size(); ++j)
        m(0, j) = v[j];
    return m;
}

Matrix Matrix::from_linear_map(FieldSpec field, std::size_t in, std::size_t out,
                               const std::function<Vector(const Vector&)>& f) {
    Matrix m(field, out, in);
    for (std::size_t j = 0; j < in; ++j) {
        const Vector image = f(basis_vector(field, in, j));
        if (image.size() != out)
            throw Error(ErrorCode::ShapeMismatch, "linear map produced a vector of length " +
                                                      std::to_string(image.size()) + ", expected " +
                                                      std::to_string(out));
        for (std::size_t i = 0; i < out; ++i)
            m(i, j) = image[i];
    }
    return m;
}

Vector Matrix::column_vector(std::size_t j) const {
    Vector v;
    v.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        v.push_back((*this)(i, j));
    return v;
}

Vector Matrix::row_vector(std::size_t i) const {
    return Vector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                  data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

bool Matrix::is_zero() const {
    for (const auto& s : data_)
        if (!s.is_zero())
            return false;
    return true;
}

Matrix Matrix::transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            t(j, i) = (*this)(i, j);
    return t;
}

void Matrix::require_same_field(const Matrix& rhs) const {
    if (!(field_ == rhs.field_))
        throw Error(ErrorCode::MixedFields, field_.name() + " vs " + rhs.field_.name());
}

Matrix Matrix::operator+(const Matrix& rhs) const {
    require_same_field(rhs);
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw Error(ErrorCode::ShapeMismatch, "sum of " + shape(*this) + " and " + shape(rhs));
    Matrix m = *this;
    for (std::size_t k = 0; k < data_.size(); ++k)
        m.data_[k] += rhs.data_[k];
    return m;
}

Matrix Matrix::operator-(const Matrix& rhs) const { return *this + rhs * Scalar(field_, -1L); }

Matrix Matrix::operator*(const Matrix& rhs) const { return mat_mul(*this, rhs); }

Matrix Matrix::operator*(const Scalar& s) const {
    Matrix m = *this;
    for (auto& e : m.data_)
        e *= s;
    return m;
}

bool Matrix::operator==(const Matrix& rhs) const {
    require_same_field(rhs);
    return rows_ == rhs.rows_ && cols_ == rhs.cols_ && data_ == rhs.data_;
}

std::string Matrix::to_string() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i ? ", [" : "[");
        for (std::size_t j = 0; j < cols_; ++j)
            os << (j ? ", " : "") << (*this)(i, j);
        os << ']';
    }
    os << ']';
    return os.str();
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
    if (!(a.field() == b.field()))
        throw Error(ErrorCode::MixedFields, a.field().name() + " vs " + b.field().name());
    if (a.cols() != b.rows())
        throw Error(ErrorCode::ShapeMismatch, "product of " + shape(a) + " and " + shape(b));
    Matrix c(a.field(), a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Scalar& aik = a(i, k);
            if (aik.is_zero())
                continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                c(i, j).add_product(aik, b(k, j));
        }
    return c;
}

Matrix kron(const Matrix& a, const Matrix& b) {
    if (!(a.field() == b.field()))
        throw Error(ErrorCode::MixedFields, a.field().name() + " vs " + b.field().name());
    Matrix c(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const Scalar& aij = a(i, j);
            if (aij.is_zero())
                continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    c(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
        }
    return c;
}

Matrix kron(std::initializer_list<std::reference_wrapper<const Matrix>> factors) {
    if (factors.size() == 0)
        throw Error(ErrorCode::InvalidArgument, "kron of an empty list");
    auto it = factors.begin();
    Matrix result = it->get();
    for (++it; it != factors.end(); ++it)
        result = kron(result, it->get());
    return result;
}

Matrix flip(FieldSpec field, std::size_t m, std::size_t n) {
    Matrix s(field, m * n, m * n);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j)
            s(j * m + i, i * n + j) = Scalar::one(field);
    return s;
}

Vector mat_vec(const Matrix& a, const Vector& v) {
    if (a.cols() != v.size())
        throw Error(ErrorCode::ShapeMismatch,
                    "applying " + shape(a) + " to a vector of length " + std::to_string(v.size()));
    Vector out(a.rows(), Scalar::zero(a.field()));
    for (std::size_t j = 0; j < a.cols(); ++j) {
        if (v[j].is_zero())
            continue;
        for (std::size_t i = 0; i < a.rows(); ++i)
            out[i].add_product(a(i, j), v[j]);
    }
    return out;
}

Vector apply_kron(const Matrix& f, const Matrix& g, const Vector& v) {
    if (f.cols() * g.cols() != v.size())
        throw Error(ErrorCode::ShapeMismatch, "applying " + shape(f) + " (x) " + shape(g) +
                                                  " to a vector of length " + std::to_string(v.size()));
    // v as a f.cols() x g.cols() matrix V; the result is f V g^T.
    const FieldSpec field = f.field();
    std::vector<Scalar> fv(f.rows() * g.cols(), Scalar::zero(field));
    for (std::size_t i = 0; i < f.rows(); ++i)
        for (std::size_t k = 0; k < f.cols(); ++k) {
            if (f(i, k).is_zero())
                continue;
            for (std::size_t j = 0; j < g.cols(); ++j)
                fv[i * g.cols() + j].add_product(f(i, k), v[k * g.cols() + j]);
        }
    Vector out(f.rows() * g.rows(), Scalar::zero(field));
    for (std::size_t i = 0; i < f.rows(); ++i)
        for (std::size_t j = 0; j < g.cols(); ++j) {
            const Scalar& s = fv[i * g.cols() + j];
            if (s.is_zero())
                continue;
            for (std::size_t l = 0; l < g.rows(); ++l)
                out[i * g.rows() + l].add_product(s, g(l, j));
        }
    return out;
}

Matrix compose_kron(const Matrix& f, const Matrix& g, const Matrix& m) {
    std::vector<Vector> cols;
    cols.reserve(m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j)
        cols.push_back(apply_kron(f, g, m.column_vector(j)));
    return from_columns(f.field(), f.rows() * g.rows(), cols);
}

Vector flip_vector(const Vector& v, std::size_t m, std::size_t n) {
    if (v.size() != m * n)
        throw Error(ErrorCode::ShapeMismatch, "flip of a vector of the wrong length");
    Vector out(v.size());
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j)
            out[j * m + i] = v[i * n + j];
    return out;
}

Vector swap_middle(const Vector& v, std::size_t a, std::size_t b, std::size_t c, std::size_t d) {
    if (v.size() != a * b * c * d)
        throw Error(ErrorCode::ShapeMismatch, "middle swap of a vector of the wrong length");
    Vector out(v.size());
    for (std::size_t i = 0; i < a; ++i)
        for (std::size_t j = 0; j < b; ++j)
            for (std::size_t k = 0; k < c; ++k)
                for (std::size_t l = 0; l < d; ++l)
                    out[((i * c + k) * b + j) * d + l] = v[((i * b + j) * c + k) * d + l];
    return out;
}

Matrix from_columns(FieldSpec field, std::size_t rows, const std::vector<Vector>& columns) {
    Matrix m(field, rows, columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) {
        if (columns[j].size() != rows)
            throw Error(ErrorCode::ShapeMismatch, "column of length " + std::to_string(columns[j].size()) +
                                                      ", expected " + std::to_string(rows));
        for (std::size_t i = 0; i < rows; ++i)
            m(i, j) = columns[j][i];
    }
    return m;
}

Vector tensor(const Vector& a, const Vector& b) {
    Vector out;
    out.reserve(a.size() * b.size());
    for (const auto& x : a)
        for (const auto& y : b)
            out.push_back(x * y);
    return out;
}

Vector scale(const Vector& v, const Scalar& s) {
    Vector out = v;
    for (auto& e : out)
        e *= s;
    return out;
}

Vector add(const Vector& a, const Vector& b) {
    if (a.size() != b.size())
        throw Error(ErrorCode::ShapeMismatch, "vector lengths differ");
    Vector out = a;
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] += b[i];
    return out;
}

Vector zero_vector(FieldSpec field, std::size_t n) { return Vector(n, Scalar::zero(field)); }

Vector basis_vector(FieldSpec field, std::size_t n, std::size_t i) {
    Vector v = zero_vector(field, n);
    v.at(i) = Scalar::one(field);
    return v;
}

bool is_zero(const Vector& v) {
    for (const auto& s : v)
        if (!s.is_zero())
            return false;
    return true;
}

Matrix rref(const Matrix& a, std::vector<std::size_t>* pivots) {
    Matrix m = a;
    std::vector<std::size_t> piv;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t sel = row;
        while (sel < m.rows() && m(sel, col).is_zero())
            ++sel;
        if (sel == m.rows())
            continue;
        if (sel != row)
            for (std::size_t j = 0; j < m.cols(); ++j)
                std::swap(m(sel, j), m(row, j));
        const Scalar inv = m(row, col).inv();
        for (std::size_t j = col; j < m.cols(); ++j)
            m(row, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m(i, col).is_zero())
                continue;
            const Scalar factor = m(i, col);
            for (std::size_t j = col; j < m.cols(); ++j)
                if (!m(row, j).is_zero())
                    m(i, j) -= factor * m(row, j);
        }
        piv.push_back(col);
        ++row;
    }
    if (pivots)
        *pivots = std::move(piv);
    return m;
}

std::size_t rank(const Matrix& a) {
    std::vector<std::size_t> piv;
    rref(a, &piv);
    return piv.size();
}

std::vector<Vector> kernel_basis(const Matrix& a) {
    std::vector<std::size_t> piv;
    const Matrix r = rref(a, &piv);
    std::vector<bool> is_pivot(a.cols(), false);
    for (auto p : piv)
        is_pivot[p] = true;
    std::vector<Vector> basis;
    for (std::size_t f = 0; f < a.cols(); ++f) {
        if (is_pivot[f])
            continue;
        Vector v = basis_vector(a.field(), a.cols(), f);
        for (std::size_t i = 0; i < piv.size(); ++i)
            v[piv[i]] = -r(i, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<LinearSolution> solve_linear(const Matrix& a, const Vector& rhs) {
    if (a.rows() != rhs.size())
        throw Error(ErrorCode::ShapeMismatch, "system has " + std::to_string(a.rows()) +
                                                  " equations but right-hand side of length " +
                                                  std::to_string(rhs.size()));
    Matrix aug(a.field(), a.rows(), a.cols() + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j)
            aug(i, j) = a(i, j);
        aug(i, a.cols()) = rhs[i];
    }
    std::vector<std::size_t> piv;
    const Matrix r = rref(aug, &piv);
    if (!piv.empty() && piv.back() == a.cols())
        return std::nullopt;
    LinearSolution sol;
    sol.x = zero_vector(a.field(), a.cols());
    for (std::size_t i = 0; i < piv.size(); ++i)
        sol.x[piv[i]] = r(i, a.cols());
    sol.unique = piv.size() == a.cols();
    return sol;
}

std::optional<Matrix> inverse(const Matrix& a) {
    if (a.rows() != a.cols())
        return std::nullopt;
    const std::size_t n = a.rows();
    Matrix aug(a.field(), n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            aug(i, j) = a(i, j);
        aug(i, n + i) = Scalar::one(a.field());
    }
    std::vector<std::size_t> piv;
    const Matrix r = rref(aug, &piv);
    if (piv.size() < n || (n > 0 && piv[n - 1] != n - 1))
        return std::nullopt;
    Matrix inv(a.field(), n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            inv(i, j) = r(i, n + j);
    return inv;
}

std::optional<std::string> first_difference(const Matrix& lhs, const Matrix& rhs) {
    if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols())
        return "shape " + shape(lhs) + " vs " + shape(rhs);
    for (std::size_t i = 0; i < lhs.rows(); ++i)
        for (std::size_t j = 0; j < lhs.cols(); ++j)
            if (lhs(i, j) != rhs(i, j))
                return "entry (" + std::to_string(i) + "," + std::to_string(j) + "): " +
                       lhs(i, j).to_string() + " != " + rhs(i, j).to_string();
    return std::nullopt;
}

std::string to_string(const Vector& v) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i)
        os << (i ? ", " : "") << v[i];
    os << ')';
    return os.str();
}

} // namespace xhopf
