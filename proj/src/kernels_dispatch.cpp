#include <atomic>

#include "starprof/error.hpp"
#include "starprof/kernels.hpp"

namespace starprof::kernels {

#ifndef STARPROF_HAVE_AVX2
const KernelTable* avx2_table() noexcept { return nullptr; }
#endif

namespace {

const KernelTable* detect() noexcept {
#if defined(STARPROF_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
    if (__builtin_cpu_supports("avx2")) return avx2_table();
#endif
    return &scalar_table();
}

std::atomic<const KernelTable*> g_forced{nullptr};

}  // namespace

bool cpu_supports(Isa isa) noexcept {
    if (isa == Isa::scalar) return true;
#if defined(STARPROF_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

const KernelTable& active() noexcept {
    if (const KernelTable* f = g_forced.load(std::memory_order_acquire)) return *f;
    static const KernelTable* const best = detect();
    return *best;
}

void force(Isa isa) {
    if (!cpu_supports(isa)) throw DomainError("requested kernel ISA is not available");
    g_forced.store(isa == Isa::scalar ? &scalar_table() : avx2_table(), std::memory_order_release);
}

void reset() { g_forced.store(nullptr, std::memory_order_release); }

}  // namespace starprof::kernels
