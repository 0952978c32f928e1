#include "palettefis/clustering.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <tuple>

#include "palettefis/errors.hpp"
#include "palettefis/kernels.hpp"
#include "palettefis/rng.hpp"

namespace palettefis {

double squared_distance(const Point3& a, const Point3& b) {
    const double dx = a.x - b.x;
    const double dy = a.y - b.y;
    const double dz = a.z - b.z;
    // Same association as the kernels so objective sums are bit-identical.
    return (dx * dx + dy * dy) + dz * dz;
}

namespace {

// Distinct points in first-occurrence order.
std::vector<Point3> distinct_points(std::span<const Point3> points) {
    std::set<std::tuple<double, double, double>> seen;
    std::vector<Point3> out;
    for (const Point3& p : points)
        if (seen.insert({p.x, p.y, p.z}).second) out.push_back(p);
    return out;
}

void check_k(int k) {
    if (k < 1) throw InvalidInput("k must be at least 1");
}

struct Soa {
    std::vector<double> xs, ys, zs;
    explicit Soa(std::span<const Point3> points)
        : xs(points.size()), ys(points.size()), zs(points.size()) {
        for (std::size_t i = 0; i < points.size(); ++i) {
            xs[i] = points[i].x;
            ys[i] = points[i].y;
            zs[i] = points[i].z;
        }
    }
};

} // namespace

std::vector<Point3> init_centroids(std::span<const Point3> points, int k,
                                   std::uint64_t seed) {
    check_k(k);
    const std::vector<Point3> distinct = distinct_points(points);
    if (distinct.size() < static_cast<std::size_t>(k))
        throw InsufficientPoints("init_centroids: " +
                                 std::to_string(distinct.size()) +
                                 " distinct points, need " + std::to_string(k));
    Rng rng(seed);
    const auto picks =
        sample_without_replacement(distinct.size(), static_cast<std::size_t>(k), rng);
    std::vector<Point3> centroids(picks.size());
    for (std::size_t i = 0; i < picks.size(); ++i) centroids[i] = distinct[picks[i]];
    return centroids;
}

std::vector<Point3> init_centroids_plus_plus(std::span<const Point3> points,
                                             int k, std::uint64_t seed) {
    check_k(k);
    const std::vector<Point3> distinct = distinct_points(points);
    const std::size_t m = distinct.size();
    if (m < static_cast<std::size_t>(k))
        throw InsufficientPoints("init_centroids_plus_plus: " +
                                 std::to_string(m) + " distinct points, need " +
                                 std::to_string(k));
    Rng rng(seed);
    std::vector<Point3> centroids;
    centroids.reserve(static_cast<std::size_t>(k));
    centroids.push_back(distinct[rng.bounded(m)]);

    std::vector<double> d2(m);
    while (centroids.size() < static_cast<std::size_t>(k)) {
        double total = 0.0;
        for (std::size_t i = 0; i < m; ++i) {
            double best = squared_distance(distinct[i], centroids[0]);
            for (std::size_t c = 1; c < centroids.size(); ++c)
                best = std::min(best, squared_distance(distinct[i], centroids[c]));
            d2[i] = best;
            total += best;
        }
        // total > 0 because more distinct points remain than chosen centroids.
        double r = rng.unit() * total;
        std::size_t pick = m; // sentinel
        for (std::size_t i = 0; i < m; ++i) {
            r -= d2[i];
            if (r < 0.0 && d2[i] > 0.0) {
                pick = i;
                break;
            }
        }
        if (pick == m) { // rounding residue: take the last positive-weight point
            for (std::size_t i = m; i-- > 0;)
                if (d2[i] > 0.0) {
                    pick = i;
                    break;
                }
        }
        centroids.push_back(distinct[pick]);
    }
    return centroids;
}

std::vector<std::uint32_t> assign(std::span<const Point3> points,
                                  std::span<const Point3> centroids) {
    if (centroids.empty()) throw InvalidInput("assign: no centroids");
    const Soa pts(points);
    const Soa ctr(centroids);
    std::vector<std::uint32_t> idx(points.size());
    std::vector<double> dist2(points.size());
    kernels::active_backend().nearest_centroid(
        pts.xs.data(), pts.ys.data(), pts.zs.data(), points.size(),
        ctr.xs.data(), ctr.ys.data(), ctr.zs.data(), centroids.size(),
        idx.data(), dist2.data());
    return idx;
}

std::vector<Point3> update_centroids(std::span<const Point3> points,
                                     std::span<const std::uint32_t> assignments,
                                     int k) {
    check_k(k);
    if (assignments.size() != points.size())
        throw InvalidInput("update_centroids: assignment/point count mismatch");
    const std::size_t kk = static_cast<std::size_t>(k);
    std::vector<Point3> sums(kk);
    std::vector<std::size_t> counts(kk, 0);
    for (std::size_t i = 0; i < points.size(); ++i) {
        const std::uint32_t a = assignments[i];
        if (a >= kk) throw InvalidInput("update_centroids: assignment out of range");
        sums[a].x += points[i].x;
        sums[a].y += points[i].y;
        sums[a].z += points[i].z;
        ++counts[a];
    }
    std::vector<Point3> means(kk);
    for (std::size_t c = 0; c < kk; ++c)
        if (counts[c] > 0) {
            const double n = static_cast<double>(counts[c]);
            means[c] = Point3{sums[c].x / n, sums[c].y / n, sums[c].z / n};
        }

    std::vector<char> used(points.size(), 0);
    for (std::size_t c = 0; c < kk; ++c) {
        if (counts[c] > 0) continue;
        // Reseed with the point farthest from its own cluster's new mean.
        // Its home cluster necessarily has members, so means[...] is real.
        std::size_t best_i = points.size();
        double best_d2 = -1.0;
        for (int pass = 0; pass < 2 && best_i == points.size(); ++pass) {
            for (std::size_t i = 0; i < points.size(); ++i) {
                if (pass == 0 && used[i]) continue;
                const double d2 = squared_distance(points[i], means[assignments[i]]);
                if (d2 > best_d2) {
                    best_d2 = d2;
                    best_i = i;
                }
            }
            // pass 1 (reuse allowed) only happens when every point was already
            // consumed by earlier reseeds, i.e. k > number of points.
        }
        if (best_i == points.size())
            throw InvalidInput("update_centroids: cannot reseed empty cluster "
                               "without points");
        means[c] = points[best_i];
        used[best_i] = 1;
    }
    return means;
}

double objective(std::span<const Point3> points,
                 std::span<const std::uint32_t> assignments,
                 std::span<const Point3> centroids) {
    if (assignments.size() != points.size())
        throw InvalidInput("objective: assignment/point count mismatch");
    double total = 0.0;
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (assignments[i] >= centroids.size())
            throw InvalidInput("objective: assignment out of range");
        total += squared_distance(points[i], centroids[assignments[i]]);
    }
    return total;
}

ClusteringResult run_kmeans(std::span<const Point3> points,
                            const KMeansConfig& config) {
    check_k(config.k);
    if (config.max_iterations < 1)
        throw InvalidInput("run_kmeans: max_iterations must be at least 1");
    if (!(config.tolerance >= 0.0))
        throw InvalidInput("run_kmeans: tolerance must be non-negative");

    std::vector<Point3> centroids =
        config.init == InitMethod::PlusPlus
            ? init_centroids_plus_plus(points, config.k, config.seed)
            : init_centroids(points, config.k, config.seed);

    const Soa pts(points);
    const auto& backend = kernels::active_backend();
    const std::size_t n = points.size();
    const std::size_t k = centroids.size();
    std::vector<std::uint32_t> idx(n);
    std::vector<double> dist2(n);
    const double tol2 = config.tolerance * config.tolerance;

    ClusteringResult result;
    auto assign_pass = [&](const std::vector<Point3>& c) {
        const Soa ctr(c);
        backend.nearest_centroid(pts.xs.data(), pts.ys.data(), pts.zs.data(), n,
                                 ctr.xs.data(), ctr.ys.data(), ctr.zs.data(), k,
                                 idx.data(), dist2.data());
        double j = 0.0;
        for (std::size_t i = 0; i < n; ++i) j += dist2[i];
        result.objective_trace.push_back(j);
        return j;
    };

    for (int iter = 1; iter <= config.max_iterations; ++iter) {
        assign_pass(centroids);
        std::vector<Point3> next = update_centroids(points, idx, config.k);
        double max_disp2 = 0.0;
        for (std::size_t c = 0; c < k; ++c)
            max_disp2 = std::max(max_disp2, squared_distance(centroids[c], next[c]));
        centroids = std::move(next);
        result.iterations = iter;
        if (max_disp2 <= tol2) {
            result.converged = true;
            break;
        }
    }

    // Final consistency pass so assignments match the returned centroids.
    result.objective = assign_pass(centroids);
    result.centroids = std::move(centroids);
    result.assignments = idx;
    return result;
}

} // namespace palettefis
