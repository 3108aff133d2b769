#pragma once

#include <cstddef>

// Low-level data-parallel loops behind the matrix kernel. Every operation has
// a scalar reference implementation and, on x86-64 hardware with AVX2+FMA, a
// vectorized variant. The backend is picked once at startup from CPUID and can
// be overridden with the SCALESYNC_KERNEL environment variable ("scalar" or
// "avx2") or force_backend(). Scalar and SIMD variants are equivalence-tested
// against each other; they may differ in the last few ulps because the SIMD
// reductions reassociate sums.

namespace scalesync::kernels {

enum class Backend { scalar, avx2 };

/// Backend in effect (resolved on first use).
Backend active_backend();

/// Override the dispatch decision. Throws ArgumentError if the requested
/// backend is not available on this machine.
void force_backend(Backend backend);

const char* backend_name(Backend backend);

/// True when the running CPU supports the AVX2+FMA variant.
bool avx2_available();

/// Dot product of a and b (n elements).
double dot(const double* a, const double* b, std::size_t n);

/// y += alpha * x (n elements).
void axpy(double alpha, const double* x, double* y, std::size_t n);

/// x *= alpha (n elements).
void scale(double alpha, double* x, std::size_t n);

/// max_i |x_i|; 0 for n == 0.
double max_abs(const double* x, std::size_t n);

/// sum_i x_i^2.
double sum_sq(const double* x, std::size_t n);

/// Row-major matrix product: c (r x cc) = a (r x k) * b (k x cc).
/// c must not alias a or b.
void gemm(const double* a, const double* b, double* c,
          std::size_t r, std::size_t k, std::size_t cc);

namespace detail {

struct KernelTable {
    double (*dot)(const double*, const double*, std::size_t);
    void (*axpy)(double, const double*, double*, std::size_t);
    void (*scale)(double, double*, std::size_t);
    double (*max_abs)(const double*, std::size_t);
    double (*sum_sq)(const double*, std::size_t);
    void (*gemm)(const double*, const double*, double*, std::size_t, std::size_t, std::size_t);
};

const KernelTable& scalar_table();
#if defined(SCALESYNC_WITH_AVX2)
const KernelTable& avx2_table();
#endif

}  // namespace detail

}  // namespace scalesync::kernels
