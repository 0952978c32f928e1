#pragma once
#include <cstddef>
#include <cstdint>

namespace palettefis::kernels {

// Hot loops behind function pointers so the implementation is picked once at
// runtime (AVX2 when the CPU has it, scalar otherwise). Both variants are
// written to produce bit-identical results: same operation order, no FMA, and
// the whole project builds with -ffp-contract=off. The equivalence tests
// enforce this with exact comparisons.

// For each point i (SoA coordinates), find the centroid with minimal squared
// Euclidean distance, computed as (dx*dx + dy*dy) + dz*dz. Ties go to the
// lowest centroid index. Writes the winning index and its squared distance.
using NearestCentroidFn = void (*)(const double* xs, const double* ys,
                                   const double* zs, std::size_t n,
                                   const double* cx, const double* cy,
                                   const double* cz, std::size_t k,
                                   std::uint32_t* out_index, double* out_dist2);

// dst[i] = max(dst[i], min(clip, src[i])) — Mamdani clip-then-max update of
// an aggregated membership curve by one rule's consequent curve.
using ClipMaxFn = void (*)(double* dst, const double* src, double clip,
                           std::size_t n);

struct Backend {
    const char* name;
    NearestCentroidFn nearest_centroid;
    ClipMaxFn clip_max;
};

const Backend& scalar_backend();

// nullptr when this build has no AVX2 variant or the CPU lacks AVX2.
const Backend* avx2_backend();

// Auto-selected at first use; honors PALETTE_FIS_KERNEL=scalar|avx2|auto.
const Backend& active_backend();

// Test/CLI hook to force a specific backend for the rest of the process.
void set_active_backend(const Backend& backend);

} // namespace palettefis::kernels
