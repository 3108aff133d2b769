#include "scalesync/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <cstring>

#include "scalesync/errors.hpp"

namespace scalesync::kernels {
namespace {

bool cpu_has_avx2_fma() {
#if defined(SCALESYNC_WITH_AVX2) && (defined(__GNUC__) || defined(__clang__))
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

struct Dispatch {
    const detail::KernelTable* table;
    Backend backend;
};

Dispatch resolve_initial() {
    const char* env = std::getenv("SCALESYNC_KERNEL");
    if (env != nullptr && std::strcmp(env, "scalar") == 0) {
        return {&detail::scalar_table(), Backend::scalar};
    }
#if defined(SCALESYNC_WITH_AVX2)
    if (cpu_has_avx2_fma()) {
        if (env == nullptr || std::strcmp(env, "avx2") == 0) {
            return {&detail::avx2_table(), Backend::avx2};
        }
    }
#endif
    if (env != nullptr && std::strcmp(env, "avx2") == 0) {
        throw ArgumentError("SCALESYNC_KERNEL=avx2 requested but AVX2+FMA is unavailable");
    }
    return {&detail::scalar_table(), Backend::scalar};
}

std::atomic<const detail::KernelTable*> g_table{nullptr};
std::atomic<Backend> g_backend{Backend::scalar};

const detail::KernelTable& table() {
    const detail::KernelTable* t = g_table.load(std::memory_order_acquire);
    if (t == nullptr) {
        Dispatch d = resolve_initial();
        g_backend.store(d.backend, std::memory_order_relaxed);
        g_table.store(d.table, std::memory_order_release);
        t = d.table;
    }
    return *t;
}

}  // namespace

Backend active_backend() {
    table();
    return g_backend.load(std::memory_order_relaxed);
}

bool avx2_available() { return cpu_has_avx2_fma(); }

void force_backend(Backend backend) {
    switch (backend) {
        case Backend::scalar:
            g_backend.store(Backend::scalar, std::memory_order_relaxed);
            g_table.store(&detail::scalar_table(), std::memory_order_release);
            return;
        case Backend::avx2:
#if defined(SCALESYNC_WITH_AVX2)
            if (cpu_has_avx2_fma()) {
                g_backend.store(Backend::avx2, std::memory_order_relaxed);
                g_table.store(&detail::avx2_table(), std::memory_order_release);
                return;
            }
#endif
            throw ArgumentError("AVX2 backend requested but AVX2+FMA is unavailable");
    }
    throw ArgumentError("unknown kernel backend");
}

const char* backend_name(Backend backend) {
    return backend == Backend::avx2 ? "avx2" : "scalar";
}

double dot(const double* a, const double* b, std::size_t n) { return table().dot(a, b, n); }

void axpy(double alpha, const double* x, double* y, std::size_t n) {
    table().axpy(alpha, x, y, n);
}

void scale(double alpha, double* x, std::size_t n) { table().scale(alpha, x, n); }

double max_abs(const double* x, std::size_t n) { return table().max_abs(x, n); }

double sum_sq(const double* x, std::size_t n) { return table().sum_sq(x, n); }

void gemm(const double* a, const double* b, double* c,
          std::size_t r, std::size_t k, std::size_t cc) {
    table().gemm(a, b, c, r, k, cc);
}

}  // namespace scalesync::kernels
