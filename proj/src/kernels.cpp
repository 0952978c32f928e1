#include "palettefis/kernels.hpp"

#include <cstdlib>
#include <cstring>

namespace palettefis::kernels {

// Defined in kernels_avx2.cpp; nullptr when the build has no AVX2 variant.
const Backend* avx2_impl_backend();

const Backend* avx2_backend() {
#if defined(PALETTEFIS_HAVE_AVX2) && defined(__GNUC__)
    if (__builtin_cpu_supports("avx2")) return avx2_impl_backend();
#endif
    return nullptr;
}

namespace {

const Backend* select_backend() {
    const char* pref = std::getenv("PALETTE_FIS_KERNEL");
    if (pref && std::strcmp(pref, "scalar") == 0) return &scalar_backend();
    if (pref && std::strcmp(pref, "avx2") == 0) {
        // Explicit request: only honor it when actually runnable.
        if (const Backend* b = avx2_backend()) return b;
        return &scalar_backend();
    }
    if (const Backend* b = avx2_backend()) return b;
    return &scalar_backend();
}

const Backend*& active_slot() {
    static const Backend* active = select_backend();
    return active;
}

} // namespace

const Backend& active_backend() { return *active_slot(); }

void set_active_backend(const Backend& backend) { active_slot() = &backend; }

} // namespace palettefis::kernels
