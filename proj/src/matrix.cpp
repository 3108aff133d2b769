#include "scalesync/matrix.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "scalesync/errors.hpp"
#include "scalesync/kernels.hpp"

namespace scalesync::mat {

namespace {

void require_same_shape(const Matrix& a, const Matrix& b, const char* op) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw DimensionError(std::string(op) + ": shape mismatch (" +
                             std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                             " vs " + std::to_string(b.rows()) + "x" +
                             std::to_string(b.cols()) + ")");
    }
}

}  // namespace

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {
    if (rows == 0 || cols == 0) {
        throw DimensionError("matrix dimensions must be at least 1x1");
    }
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

Matrix Matrix::diagonal(const std::vector<double>& entries) {
    Matrix m(entries.size(), entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
    return m;
}

Matrix Matrix::from_rows(std::initializer_list<std::initializer_list<double>> rows) {
    const std::size_t r = rows.size();
    if (r == 0) throw DimensionError("matrix dimensions must be at least 1x1");
    const std::size_t c = rows.begin()->size();
    Matrix m(r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
        if (row.size() != c) throw DimensionError("ragged row list");
        std::size_t j = 0;
        for (double v : row) m(i, j++) = v;
        ++i;
    }
    return m;
}

Matrix Matrix::from_data(std::size_t rows, std::size_t cols, std::vector<double> data) {
    if (data.size() != rows * cols) {
        throw DimensionError("data length does not match rows*cols");
    }
    Matrix m(rows, cols);
    m.data_ = std::move(data);
    if (!m.all_finite()) throw ArgumentError("matrix entries must be finite");
    return m;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

Matrix& Matrix::operator+=(const Matrix& other) {
    require_same_shape(*this, other, "matrix add");
    kernels::axpy(1.0, other.data(), data(), data_.size());
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& other) {
    require_same_shape(*this, other, "matrix subtract");
    kernels::axpy(-1.0, other.data(), data(), data_.size());
    return *this;
}

Matrix& Matrix::operator*=(double scalar) {
    kernels::scale(scalar, data(), data_.size());
    return *this;
}

double Matrix::frobenius_norm() const {
    return std::sqrt(kernels::sum_sq(data(), data_.size()));
}

double Matrix::max_abs() const { return kernels::max_abs(data(), data_.size()); }

double Matrix::trace() const {
    if (!is_square()) throw DimensionError("trace requires a square matrix");
    double t = 0.0;
    for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
}

bool Matrix::all_finite() const {
    for (double v : data_) {
        if (!std::isfinite(v)) return false;
    }
    return true;
}

double Matrix::max_abs_diff(const Matrix& a, const Matrix& b) {
    require_same_shape(a, b, "matrix compare");
    double m = 0.0;
    for (std::size_t i = 0; i < a.rows() * a.cols(); ++i) {
        double d = std::fabs(a.data()[i] - b.data()[i]);
        if (d > m) m = d;
    }
    return m;
}

Matrix operator+(Matrix a, const Matrix& b) {
    a += b;
    return a;
}

Matrix operator-(Matrix a, const Matrix& b) {
    a -= b;
    return a;
}

Matrix operator*(Matrix a, double scalar) {
    a *= scalar;
    return a;
}

Matrix operator*(double scalar, Matrix a) {
    a *= scalar;
    return a;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) {
        throw DimensionError("matrix product: inner dimensions differ (" +
                             std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) + ")");
    }
    Matrix c(a.rows(), b.cols());
    kernels::gemm(a.data(), b.data(), c.data(), a.rows(), a.cols(), b.cols());
    return c;
}

std::vector<double> operator*(const Matrix& m, const std::vector<double>& x) {
    if (m.cols() != x.size()) {
        throw DimensionError("matrix-vector product: dimension mismatch");
    }
    std::vector<double> y(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        y[i] = kernels::dot(m.data() + i * m.cols(), x.data(), m.cols());
    }
    return y;
}

Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const double aij = a(i, j);
            if (aij == 0.0) continue;
            for (std::size_t p = 0; p < b.rows(); ++p) {
                double* dst = out.data() + (i * b.rows() + p) * out.cols() + j * b.cols();
                const double* src = b.data() + p * b.cols();
                for (std::size_t q = 0; q < b.cols(); ++q) dst[q] = aij * src[q];
            }
        }
    }
    return out;
}

double asymmetry(const Matrix& m) {
    if (!m.is_square()) throw DimensionError("asymmetry requires a square matrix");
    double worst = 0.0;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = i + 1; j < m.cols(); ++j) {
            double d = std::fabs(m(i, j) - m(j, i));
            if (d > worst) worst = d;
        }
    }
    return worst;
}

}  // namespace scalesync::mat
