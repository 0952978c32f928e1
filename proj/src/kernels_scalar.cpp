#include <limits>

#include "palettefis/kernels.hpp"

namespace palettefis::kernels {

namespace {

void nearest_centroid_scalar(const double* xs, const double* ys,
                             const double* zs, std::size_t n, const double* cx,
                             const double* cy, const double* cz, std::size_t k,
                             std::uint32_t* out_index, double* out_dist2) {
    for (std::size_t i = 0; i < n; ++i) {
        double best = std::numeric_limits<double>::infinity();
        std::uint32_t best_j = 0;
        for (std::size_t j = 0; j < k; ++j) {
            const double dx = xs[i] - cx[j];
            const double dy = ys[i] - cy[j];
            const double dz = zs[i] - cz[j];
            const double d2 = (dx * dx + dy * dy) + dz * dz;
            if (d2 < best) { // strict '<' keeps the lowest index on ties
                best = d2;
                best_j = static_cast<std::uint32_t>(j);
            }
        }
        out_index[i] = best_j;
        out_dist2[i] = best;
    }
}

void clip_max_scalar(double* dst, const double* src, double clip,
                     std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        const double clipped = src[i] < clip ? src[i] : clip;
        if (clipped > dst[i]) dst[i] = clipped;
    }
}

} // namespace

const Backend& scalar_backend() {
    static const Backend backend{"scalar", &nearest_centroid_scalar,
                                 &clip_max_scalar};
    return backend;
}

} // namespace palettefis::kernels
