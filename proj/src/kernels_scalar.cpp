#include "scalesync/kernels.hpp"

#include <cmath>
#include <cstring>

namespace scalesync::kernels {
namespace {

double dot_scalar(const double* a, const double* b, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += a[i] * b[i];
    return acc;
}

void axpy_scalar(double alpha, const double* x, double* y, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

void scale_scalar(double alpha, double* x, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) x[i] *= alpha;
}

double max_abs_scalar(const double* x, std::size_t n) {
    double m = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double v = std::fabs(x[i]);
        if (v > m) m = v;
    }
    return m;
}

double sum_sq_scalar(const double* x, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += x[i] * x[i];
    return acc;
}

// Accumulates over the shared dimension in fixed order so scalar and SIMD
// variants agree up to fused-multiply rounding.
void gemm_scalar(const double* a, const double* b, double* c,
                 std::size_t r, std::size_t k, std::size_t cc) {
    std::memset(c, 0, r * cc * sizeof(double));
    for (std::size_t i = 0; i < r; ++i) {
        double* crow = c + i * cc;
        const double* arow = a + i * k;
        for (std::size_t p = 0; p < k; ++p) {
            const double aip = arow[p];
            if (aip == 0.0) continue;
            const double* brow = b + p * cc;
            for (std::size_t j = 0; j < cc; ++j) crow[j] += aip * brow[j];
        }
    }
}

}  // namespace

namespace detail {

const KernelTable& scalar_table() {
    static const KernelTable table{dot_scalar, axpy_scalar, scale_scalar,
                                   max_abs_scalar, sum_sq_scalar, gemm_scalar};
    return table;
}

}  // namespace detail
}  // namespace scalesync::kernels
