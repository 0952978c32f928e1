#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

#include "palettefis/clustering.hpp"
#include "palettefis/errors.hpp"
#include "palettefis/rng.hpp"

using namespace palettefis;

namespace {

std::vector<Point3> ladder_points(int n) {
    std::vector<Point3> pts;
    for (int i = 0; i < n; ++i)
        pts.push_back(Point3{3.0 * i, 3.0 * i + 1, 3.0 * i + 2});
    return pts;
}

// Independent 2-means oracle: global optimum over all 2^n labelings.
double brute_force_two_means(const std::vector<Point3>& pts) {
    const std::size_t n = pts.size();
    double best = std::numeric_limits<double>::infinity();
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        double sum[2][3] = {{0, 0, 0}, {0, 0, 0}};
        int count[2] = {0, 0};
        for (std::size_t i = 0; i < n; ++i) {
            const int side = (mask >> i) & 1;
            sum[side][0] += pts[i].x;
            sum[side][1] += pts[i].y;
            sum[side][2] += pts[i].z;
            ++count[side];
        }
        if (count[0] == 0 || count[1] == 0) continue;
        double j = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const int side = (mask >> i) & 1;
            const double dx = pts[i].x - sum[side][0] / count[side];
            const double dy = pts[i].y - sum[side][1] / count[side];
            const double dz = pts[i].z - sum[side][2] / count[side];
            j += dx * dx + dy * dy + dz * dz;
        }
        best = std::min(best, j);
    }
    return best;
}

} // namespace

TEST_CASE("squared_distance") {
    CHECK(squared_distance(Point3{1, 2, 3}, Point3{1, 2, 3}) == 0.0);
    CHECK(squared_distance(Point3{0, 0, 0}, Point3{3, 4, 0}) == 25.0);
    CHECK(squared_distance(Point3{0, 0, 0}, Point3{255, 255, 255}) == 195075.0);
}

TEST_CASE("init_centroids draws the frozen sample") {
    const auto pts = ladder_points(10);
    const auto c42 = init_centroids(pts, 3, 42);
    // seed 42 draws indices 2, 1, 3 in that order
    CHECK(c42 == std::vector<Point3>{{6, 7, 8}, {3, 4, 5}, {9, 10, 11}});
    const auto c7 = init_centroids(pts, 3, 7);
    // seed 7 draws indices 4, 6, 8
    CHECK(c7 == std::vector<Point3>{{12, 13, 14}, {18, 19, 20}, {24, 25, 26}});
    CHECK(init_centroids(pts, 3, 42) == c42); // deterministic
}

TEST_CASE("init_centroids draws from distinct points only") {
    // 9 points but only 3 distinct values
    std::vector<Point3> pts;
    for (int rep = 0; rep < 3; ++rep)
        for (int v = 0; v < 3; ++v)
            pts.push_back(Point3{double(v), 0, 0});

    const auto centroids = init_centroids(pts, 3, 1);
    std::set<double> xs;
    for (const Point3& c : centroids) xs.insert(c.x);
    CHECK(xs == std::set<double>{0.0, 1.0, 2.0}); // a permutation of the distinct set

    CHECK_THROWS_AS(init_centroids(pts, 4, 1), InsufficientPoints);
    CHECK_THROWS_AS(init_centroids(pts, 0, 1), InvalidInput);
    CHECK_THROWS_AS(init_centroids(std::vector<Point3>{}, 1, 1),
                    InsufficientPoints);
}

TEST_CASE("init_centroids_plus_plus spreads distinct seeds deterministically") {
    const auto pts = ladder_points(8);
    const auto a = init_centroids_plus_plus(pts, 3, 42);
    const auto b = init_centroids_plus_plus(pts, 3, 42);
    CHECK(a == b);
    std::set<double> xs;
    for (const Point3& c : a) xs.insert(c.x);
    CHECK(xs.size() == 3); // distinct picks
    CHECK_THROWS_AS(init_centroids_plus_plus(pts, 9, 42), InsufficientPoints);
}

TEST_CASE("assign matches a brute-force scan and breaks ties low") {
    Rng rng(31);
    for (int trial = 0; trial < 25; ++trial) {
        const std::size_t n = 1 + rng.bounded(50);
        const std::size_t k = 1 + rng.bounded(6);
        std::vector<Point3> pts(n), ctr(k);
        for (Point3& p : pts)
            p = Point3{rng.unit() * 100, rng.unit() * 100, rng.unit() * 100};
        for (Point3& c : ctr)
            c = Point3{rng.unit() * 100, rng.unit() * 100, rng.unit() * 100};

        const auto got = assign(pts, ctr);
        REQUIRE(got.size() == n);
        for (std::size_t i = 0; i < n; ++i) {
            std::uint32_t want = 0;
            double best = std::numeric_limits<double>::infinity();
            for (std::size_t j = 0; j < k; ++j) {
                const double d2 = squared_distance(pts[i], ctr[j]);
                if (d2 < best) {
                    best = d2;
                    want = std::uint32_t(j);
                }
            }
            CHECK(got[i] == want);
        }
    }
    // equidistant point: centroid 0 wins
    const std::vector<Point3> pts{{5, 0, 0}};
    const std::vector<Point3> ctr{{0, 0, 0}, {10, 0, 0}};
    CHECK(assign(pts, ctr) == std::vector<std::uint32_t>{0});
    CHECK_THROWS_AS(assign(pts, std::vector<Point3>{}), InvalidInput);
}

TEST_CASE("update_centroids computes per-cluster means") {
    const std::vector<Point3> pts{{1, 2, 3}, {3, 4, 7}, {10, 0, 0}};
    const std::vector<std::uint32_t> assignments{0, 0, 1};
    const auto means = update_centroids(pts, assignments, 2);
    CHECK(means[0] == Point3{2, 3, 5});
    CHECK(means[1] == Point3{10, 0, 0});

    CHECK_THROWS_AS(update_centroids(pts, std::vector<std::uint32_t>{0, 0}, 2),
                    InvalidInput);
    CHECK_THROWS_AS(update_centroids(pts, std::vector<std::uint32_t>{0, 0, 5}, 2),
                    InvalidInput);
    CHECK_THROWS_AS(update_centroids(pts, assignments, 0), InvalidInput);
}

TEST_CASE("update_centroids reseeds empty clusters with the farthest point") {
    const std::vector<Point3> pts{{0, 0, 0}, {1, 0, 0}, {10, 0, 0}};
    const std::vector<std::uint32_t> all_zero{0, 0, 0};

    // mean is (11/3, 0, 0); the farthest point from it is (10, 0, 0)
    const auto means2 = update_centroids(pts, all_zero, 2);
    CHECK(means2[1] == Point3{10, 0, 0});

    // with two empty clusters the second reseed takes the next-farthest
    const auto means3 = update_centroids(pts, all_zero, 3);
    CHECK(means3[1] == Point3{10, 0, 0});
    CHECK(means3[2] == Point3{0, 0, 0});
}

TEST_CASE("objective sums squared distances to assigned centroids") {
    const std::vector<Point3> pts{{0, 0, 0}, {2, 0, 0}};
    const std::vector<Point3> ctr{{1, 0, 0}};
    const std::vector<std::uint32_t> a{0, 0};
    CHECK(objective(pts, a, ctr) == 2.0);

    Rng rng(17);
    std::vector<Point3> rpts(30);
    std::vector<Point3> rctr(4);
    std::vector<std::uint32_t> ra(30);
    for (Point3& p : rpts) p = Point3{rng.unit(), rng.unit(), rng.unit()};
    for (Point3& c : rctr) c = Point3{rng.unit(), rng.unit(), rng.unit()};
    for (auto& x : ra) x = std::uint32_t(rng.bounded(4));
    double manual = 0.0;
    for (std::size_t i = 0; i < rpts.size(); ++i)
        manual += squared_distance(rpts[i], rctr[ra[i]]);
    CHECK(objective(rpts, ra, rctr) == manual);
}

TEST_CASE("run_kmeans with k=1 lands on the global mean immediately") {
    std::vector<Point3> pts;
    for (int i = 0; i < 5; ++i) pts.push_back(Point3{double(i), 0, 0});
    KMeansConfig cfg;
    cfg.k = 1;
    const auto res = run_kmeans(pts, cfg);
    CHECK(res.converged);
    CHECK(res.iterations <= 2);
    CHECK(res.centroids.size() == 1);
    CHECK(res.centroids[0] == Point3{2, 0, 0});
    for (std::uint32_t a : res.assignments) CHECK(a == 0);
}

TEST_CASE("run_kmeans separates well-spaced blobs exactly") {
    Rng rng(5);
    std::vector<Point3> pts;
    for (int i = 0; i < 40; ++i)
        pts.push_back(Point3{10 + rng.unit(), 10 + rng.unit(), 10 + rng.unit()});
    for (int i = 0; i < 40; ++i)
        pts.push_back(
            Point3{200 + rng.unit(), 200 + rng.unit(), 200 + rng.unit()});

    KMeansConfig cfg;
    cfg.k = 2;
    cfg.tolerance = 0.0; // run to the exact fixed point
    const auto res = run_kmeans(pts, cfg);
    CHECK(res.converged);
    // each blob is one cluster
    for (int i = 1; i < 40; ++i) CHECK(res.assignments[i] == res.assignments[0]);
    for (int i = 41; i < 80; ++i)
        CHECK(res.assignments[i] == res.assignments[40]);
    CHECK(res.assignments[0] != res.assignments[40]);
}

TEST_CASE("run_kmeans invariants: trace monotone, assignments consistent") {
    Rng rng(404);
    for (int trial = 0; trial < 12; ++trial) {
        const std::size_t n = 6 + rng.bounded(60);
        std::vector<Point3> pts(n);
        for (Point3& p : pts)
            p = Point3{rng.unit() * 255, rng.unit() * 255, rng.unit() * 255};
        KMeansConfig cfg;
        cfg.k = 1 + int(rng.bounded(5));
        cfg.seed = trial;
        const auto res = run_kmeans(pts, cfg);

        REQUIRE(!res.objective_trace.empty());
        for (std::size_t t = 1; t < res.objective_trace.size(); ++t)
            CHECK(res.objective_trace[t] <=
                  res.objective_trace[t - 1] +
                      1e-9 * std::max(1.0, res.objective_trace[t - 1]));
        CHECK(res.objective == res.objective_trace.back());

        // final assignments really are nearest-centroid assignments
        CHECK(res.assignments == assign(pts, res.centroids));
        CHECK(res.objective ==
              objective(pts, res.assignments, res.centroids));

        // centroids stay inside the data's bounding box
        double lo[3] = {1e300, 1e300, 1e300}, hi[3] = {-1e300, -1e300, -1e300};
        for (const Point3& p : pts) {
            lo[0] = std::min(lo[0], p.x); hi[0] = std::max(hi[0], p.x);
            lo[1] = std::min(lo[1], p.y); hi[1] = std::max(hi[1], p.y);
            lo[2] = std::min(lo[2], p.z); hi[2] = std::max(hi[2], p.z);
        }
        for (const Point3& c : res.centroids) {
            CHECK(c.x >= lo[0]); CHECK(c.x <= hi[0]);
            CHECK(c.y >= lo[1]); CHECK(c.y <= hi[1]);
            CHECK(c.z >= lo[2]); CHECK(c.z <= hi[2]);
        }
    }
}

TEST_CASE("run_kmeans is deterministic for a fixed seed") {
    Rng rng(9);
    std::vector<Point3> pts(50);
    for (Point3& p : pts)
        p = Point3{rng.unit() * 255, rng.unit() * 255, rng.unit() * 255};
    KMeansConfig cfg;
    cfg.k = 4;
    const auto a = run_kmeans(pts, cfg);
    const auto b = run_kmeans(pts, cfg);
    CHECK(a.centroids == b.centroids);
    CHECK(a.assignments == b.assignments);
    CHECK(a.objective == b.objective);
    CHECK(a.objective_trace == b.objective_trace);
    CHECK(a.iterations == b.iterations);
}

TEST_CASE("run_kmeans with 10 restarts reaches the 2-means global optimum") {
    Rng rng(2025);
    std::vector<Point3> pts(7);
    for (Point3& p : pts)
        p = Point3{rng.unit() * 255, rng.unit() * 255, rng.unit() * 255};
    const double opt = brute_force_two_means(pts);

    double best = std::numeric_limits<double>::infinity();
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        KMeansConfig cfg;
        cfg.k = 2;
        cfg.seed = seed;
        cfg.tolerance = 0.0;
        best = std::min(best, run_kmeans(pts, cfg).objective);
    }
    CHECK(best == doctest::Approx(opt).epsilon(1e-9));
}

TEST_CASE("run_kmeans rejects bad configuration") {
    const auto pts = ladder_points(4);
    KMeansConfig cfg;
    cfg.k = 0;
    CHECK_THROWS_AS(run_kmeans(pts, cfg), InvalidInput);
    cfg.k = 2;
    cfg.max_iterations = 0;
    CHECK_THROWS_AS(run_kmeans(pts, cfg), InvalidInput);
    cfg.max_iterations = 100;
    cfg.tolerance = -1.0;
    CHECK_THROWS_AS(run_kmeans(pts, cfg), InvalidInput);
    CHECK_THROWS_AS(run_kmeans(std::vector<Point3>{}, KMeansConfig{}),
                    InsufficientPoints);
}

TEST_CASE("k-means++ init is usable end to end") {
    Rng rng(5);
    std::vector<Point3> pts;
    for (int i = 0; i < 30; ++i)
        pts.push_back(Point3{10 + rng.unit(), 0, 0});
    for (int i = 0; i < 30; ++i)
        pts.push_back(Point3{200 + rng.unit(), 0, 0});
    KMeansConfig cfg;
    cfg.k = 2;
    cfg.init = InitMethod::PlusPlus;
    const auto res = run_kmeans(pts, cfg);
    CHECK(res.converged);
    CHECK(std::abs(res.centroids[0].x - res.centroids[1].x) > 100.0);
    const auto res2 = run_kmeans(pts, cfg);
    CHECK(res.centroids == res2.centroids);
}
