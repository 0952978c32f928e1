// AVX2 variants of the hot kernels. This TU alone is compiled with -mavx2 and
// must only run after the CPU check in kernels.cpp. Bit-identity with the
// scalar kernels: same per-point operation order, vector min/max operand
// order chosen to match the scalar ternaries exactly, no FMA, scalar tail.

#include "palettefis/kernels.hpp"

#if defined(PALETTEFIS_HAVE_AVX2)

#include <immintrin.h>

#include <limits>

namespace palettefis::kernels {

namespace {

void nearest_centroid_avx2(const double* xs, const double* ys,
                           const double* zs, std::size_t n, const double* cx,
                           const double* cy, const double* cz, std::size_t k,
                           std::uint32_t* out_index, double* out_dist2) {
    const std::size_t main = n - n % 4;
    for (std::size_t i = 0; i < main; i += 4) {
        const __m256d px = _mm256_loadu_pd(xs + i);
        const __m256d py = _mm256_loadu_pd(ys + i);
        const __m256d pz = _mm256_loadu_pd(zs + i);
        __m256d best = _mm256_set1_pd(std::numeric_limits<double>::infinity());
        __m256d best_j = _mm256_setzero_pd(); // indices held as exact doubles
        for (std::size_t j = 0; j < k; ++j) {
            const __m256d dx = _mm256_sub_pd(px, _mm256_set1_pd(cx[j]));
            const __m256d dy = _mm256_sub_pd(py, _mm256_set1_pd(cy[j]));
            const __m256d dz = _mm256_sub_pd(pz, _mm256_set1_pd(cz[j]));
            const __m256d d2 = _mm256_add_pd(
                _mm256_add_pd(_mm256_mul_pd(dx, dx), _mm256_mul_pd(dy, dy)),
                _mm256_mul_pd(dz, dz));
            const __m256d lt = _mm256_cmp_pd(d2, best, _CMP_LT_OQ);
            best = _mm256_blendv_pd(best, d2, lt);
            best_j = _mm256_blendv_pd(best_j, _mm256_set1_pd(double(j)), lt);
        }
        _mm256_storeu_pd(out_dist2 + i, best);
        const __m128i idx = _mm256_cvtpd_epi32(best_j);
        _mm_storeu_si128(reinterpret_cast<__m128i*>(out_index + i), idx);
    }
    for (std::size_t i = main; i < n; ++i) {
        double best = std::numeric_limits<double>::infinity();
        std::uint32_t best_j = 0;
        for (std::size_t j = 0; j < k; ++j) {
            const double dx = xs[i] - cx[j];
            const double dy = ys[i] - cy[j];
            const double dz = zs[i] - cz[j];
            const double d2 = (dx * dx + dy * dy) + dz * dz;
            if (d2 < best) {
                best = d2;
                best_j = static_cast<std::uint32_t>(j);
            }
        }
        out_index[i] = best_j;
        out_dist2[i] = best;
    }
}

void clip_max_avx2(double* dst, const double* src, double clip,
                   std::size_t n) {
    const __m256d clipv = _mm256_set1_pd(clip);
    const std::size_t main = n - n % 4;
    for (std::size_t i = 0; i < main; i += 4) {
        const __m256d s = _mm256_loadu_pd(src + i);
        const __m256d d = _mm256_loadu_pd(dst + i);
        // minpd(s, clip) == (s < clip ? s : clip); maxpd(c, d) == (c > d ? c : d)
        const __m256d clipped = _mm256_min_pd(s, clipv);
        _mm256_storeu_pd(dst + i, _mm256_max_pd(clipped, d));
    }
    for (std::size_t i = main; i < n; ++i) {
        const double clipped = src[i] < clip ? src[i] : clip;
        if (clipped > dst[i]) dst[i] = clipped;
    }
}

} // namespace

const Backend* avx2_impl_backend() {
    static const Backend backend{"avx2", &nearest_centroid_avx2,
                                 &clip_max_avx2};
    return &backend;
}

} // namespace palettefis::kernels

#else // !PALETTEFIS_HAVE_AVX2

namespace palettefis::kernels {

const Backend* avx2_impl_backend() { return nullptr; }

} // namespace palettefis::kernels

#endif
