#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace scalesync::mat {

/// Dense real matrix, row-major, value semantics. Sized for desk-scale
/// analysis work (a few hundred rows at most); every entry must stay finite.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols);  // zero-filled

    static Matrix identity(std::size_t n);
    static Matrix diagonal(const std::vector<double>& entries);
    /// Builds from nested row lists; ragged rows raise DimensionError.
    static Matrix from_rows(std::initializer_list<std::initializer_list<double>> rows);
    /// Takes ownership of row-major data; rejects non-finite entries.
    static Matrix from_data(std::size_t rows, std::size_t cols, std::vector<double> data);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return data_.empty(); }
    bool is_square() const { return rows_ == cols_; }

    double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    double* data() { return data_.data(); }
    const double* data() const { return data_.data(); }

    Matrix transpose() const;

    Matrix& operator+=(const Matrix& other);
    Matrix& operator-=(const Matrix& other);
    Matrix& operator*=(double scalar);

    double frobenius_norm() const;
    double max_abs() const;
    double trace() const;

    /// True when every entry is finite.
    bool all_finite() const;

    /// max |a_ij - b_ij|; throws DimensionError on shape mismatch.
    static double max_abs_diff(const Matrix& a, const Matrix& b);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

Matrix operator+(Matrix a, const Matrix& b);
Matrix operator-(Matrix a, const Matrix& b);
Matrix operator*(Matrix a, double scalar);
Matrix operator*(double scalar, Matrix a);

/// Matrix product via the kernel backend.
Matrix operator*(const Matrix& a, const Matrix& b);

/// y = m * x.
std::vector<double> operator*(const Matrix& m, const std::vector<double>& x);

/// Kronecker product: block (i,j) of the result equals a(i,j) * b.
Matrix kron(const Matrix& a, const Matrix& b);

/// max |a_ij - a_ji| over all pairs.
double asymmetry(const Matrix& m);

}  // namespace scalesync::mat
