#pragma once
#include <cstdint>
#include <span>
#include <vector>

namespace palettefis {

struct Point3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
    bool operator==(const Point3&) const = default;
};

enum class InitMethod {
    UniformWithoutReplacement, // default: uniform draw from distinct points
    PlusPlus,                  // k-means++ (D^2 weighting), opt-in
};

struct KMeansConfig {
    int k = 3;
    int max_iterations = 100;
    // Converged when no centroid moved more than this (Euclidean distance).
    double tolerance = 1.0;
    std::uint64_t seed = 42;
    InitMethod init = InitMethod::UniformWithoutReplacement;
};

struct ClusteringResult {
    std::vector<Point3> centroids;          // size k
    std::vector<std::uint32_t> assignments; // size n, values in [0, k)
    double objective = 0.0;                 // sum of squared distances
    int iterations = 0;                     // assignment/update passes run
    bool converged = false;
    // Objective after every assignment pass, including the final consistency
    // pass; non-increasing by construction of Lloyd's algorithm.
    std::vector<double> objective_trace;
};

double squared_distance(const Point3& a, const Point3& b);

// k distinct points drawn uniformly without replacement from the distinct
// set of `points`. Throws InsufficientPoints when fewer than k distinct
// points exist, InvalidInput for k < 1.
std::vector<Point3> init_centroids(std::span<const Point3> points, int k,
                                   std::uint64_t seed);

// k-means++ seeding: first centroid uniform over all points, each next one
// drawn with probability proportional to squared distance from the nearest
// chosen centroid. Same error contract as init_centroids.
std::vector<Point3> init_centroids_plus_plus(std::span<const Point3> points,
                                             int k, std::uint64_t seed);

// Nearest-centroid index per point; ties broken toward the lowest index.
std::vector<std::uint32_t> assign(std::span<const Point3> points,
                                  std::span<const Point3> centroids);

// Mean of each cluster. A cluster left empty is reseeded with the point
// farthest from its own assigned cluster's new mean (ties: lowest point
// index; each reseed consumes its point so two empty clusters cannot grab
// the same one).
std::vector<Point3> update_centroids(std::span<const Point3> points,
                                     std::span<const std::uint32_t> assignments,
                                     int k);

double objective(std::span<const Point3> points,
                 std::span<const std::uint32_t> assignments,
                 std::span<const Point3> centroids);

// Lloyd's algorithm with the convergence rule above. The returned
// assignments are recomputed against the final centroids, so
// assignments[i] is always the true nearest centroid of point i.
ClusteringResult run_kmeans(std::span<const Point3> points,
                            const KMeansConfig& config);

} // namespace palettefis
