#include "rdad/neighbors.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

#include <doctest.h>

#include "rdad/errors.hpp"
#include "rdad/parallel.hpp"
#include "test_support.hpp"

using namespace rdad;
using namespace rdad::testing;

TEST_CASE("unit ball volume closed form matches the known low-dimensional values") {
    const double pi = 3.14159265358979323846;
    CHECK(unit_ball_volume(1) == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(unit_ball_volume(2) == doctest::Approx(pi).epsilon(1e-12));
    CHECK(unit_ball_volume(3) == doctest::Approx(4.0 * pi / 3.0).epsilon(1e-12));
}

TEST_CASE("singleton cloud answers every query with its only point") {
    NeighborIndex index(cloud_2d({{0.0, 0.0}}));
    std::vector<std::pair<double, int>> got;
    const double q[2] = {3.0, 4.0};
    index.knn(q, 1, got);
    CHECK(got.size() == 1);
    CHECK(got[0].second == 0);
    CHECK(std::sqrt(got[0].first) == doctest::Approx(5.0));
}

TEST_CASE("two-point geometry") {
    NeighborIndex index(cloud_2d({{0.0, 0.0}, {1.0, 0.0}}));
    const double q[2] = {0.4, 0.0};
    std::vector<std::pair<double, int>> got;
    index.knn(q, 1, got);
    CHECK(got[0].second == 0);
    CHECK(std::sqrt(got[0].first) == doctest::Approx(0.4));
}

TEST_CASE("random queries return the same k neighbors as exhaustive search") {
    Rng rng(7);
    PointCloud cloud = random_cloud(100, 2, rng);
    NeighborIndex index(cloud);
    std::vector<std::pair<double, int>> got;
    for (int trial = 0; trial < 50; ++trial) {
        const double q[2] = {rng.uniform(-1.2, 1.2), rng.uniform(-1.2, 1.2)};
        index.knn(q, 7, got);
        const auto expected = brute_knn(cloud, q, 7);
        REQUIRE(got.size() == expected.size());
        for (std::size_t i = 0; i < got.size(); ++i) {
            CHECK(got[i].first == expected[i].first);
            CHECK(got[i].second == expected[i].second);
        }
    }
}

TEST_CASE("kth_distance equals hand-computed order statistics on the line") {
    NeighborIndex index(cloud_1d({0.0, 1.0, 2.0, 10.0}));
    const double q = 0.5;
    CHECK(kth_distance(index, {&q, 1}, 2) == doctest::Approx(0.5));

    SUBCASE("a data point is its own nearest neighbor") {
        const double x = 2.0;
        CHECK(kth_distance(index, {&x, 1}, 1) == 0.0);
    }
    SUBCASE("k = N gives the largest distance") {
        const double x = 0.5;
        CHECK(kth_distance(index, {&x, 1}, 4) == doctest::Approx(9.5));
    }
    SUBCASE("k out of range") {
        const double x = 0.0;
        CHECK_THROWS_AS(kth_distance(index, {&x, 1}, 0), ConfigError);
        CHECK_THROWS_AS(kth_distance(index, {&x, 1}, 5), ConfigError);
    }
}

TEST_CASE("exhaustive-search equivalence on random clouds") {
    Rng rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t n = 2 + rng.below(199);
        const int dim = trial % 2 == 0 ? 2 : 3;
        PointCloud cloud = random_cloud(n, dim, rng);
        NeighborIndex index(cloud);
        std::vector<double> q(static_cast<std::size_t>(dim));
        for (auto& c : q) c = rng.uniform(-1.5, 1.5);
        const int k = 1 + static_cast<int>(rng.below(n));
        const auto expected = brute_knn(cloud, q, k);
        CHECK(kth_distance(index, q, k) == std::sqrt(expected.back().first));
    }
}

TEST_CASE("knn_density evaluates the plug-in formula") {
    SUBCASE("hand evaluation on the line") {
        NeighborIndex index(cloud_1d({0.0, 1.0, 2.0, 10.0}));
        const double x = 0.5;
        CHECK(knn_density(index, {&x, 1}, 2) == doctest::Approx(0.5));
    }
    SUBCASE("single point in the plane") {
        NeighborIndex index(cloud_2d({{0.0, 0.0}}));
        const double q[2] = {1.0, 0.0};
        CHECK(knn_density(index, q, 1) == doctest::Approx(1.0 / 3.14159265358979323846));
    }
    SUBCASE("degenerate distance") {
        NeighborIndex index(cloud_2d({{0.0, 0.0}, {1.0, 1.0}}));
        const double q[2] = {0.0, 0.0};
        CHECK_THROWS_AS(knn_density(index, q, 1), DegenerateDistance);
    }
    SUBCASE("uniform sample on the unit square recovers density 1 near the center") {
        Rng rng(11);
        PointCloud cloud = random_cloud(5000, 2, rng, 0.0, 1.0);
        NeighborIndex index(cloud);
        const double q[2] = {0.5, 0.5};
        const int k = 14;  // ceil((log10 5000)^2)
        const double est = knn_density(index, q, k);
        CHECK(est > 0.7);
        CHECK(est < 1.3);
    }
}

TEST_CASE("density_profile ranks include the point itself") {
    NeighborIndex index(cloud_1d({0.0, 1.0, 2.0, 10.0}));
    const auto profile = density_profile(index, 2);
    CHECK(profile.kth_dist == std::vector<double>{1.0, 1.0, 1.0, 8.0});
    CHECK(profile.c_norm == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(profile.omega_d == doctest::Approx(2.0));

    SUBCASE("k_den = 2 on distinct points is the nearest-other-point distance") {
        Rng rng(3);
        PointCloud cloud = random_cloud(60, 2, rng);
        NeighborIndex idx2(cloud);
        const auto prof2 = density_profile(idx2, 2);
        for (std::size_t i = 0; i < cloud.size(); ++i) {
            double nearest = std::numeric_limits<double>::infinity();
            for (std::size_t j = 0; j < cloud.size(); ++j)
                if (j != i)
                    nearest = std::min(nearest,
                                       std::sqrt(squared_distance(cloud.point(i), cloud.point(j))));
            CHECK(prof2.kth_dist[i] == doctest::Approx(nearest).epsilon(1e-14));
        }
    }
    SUBCASE("duplicate overload") {
        NeighborIndex dup(cloud_1d({1.0, 1.0, 5.0}));
        CHECK_THROWS_AS(density_profile(dup, 2), DuplicateOverload);
    }
    SUBCASE("k_den bounds") {
        CHECK_THROWS_AS(density_profile(index, 1), ConfigError);
        CHECK_THROWS_AS(density_profile(index, 5), ConfigError);
    }
}

TEST_CASE("permutation invariance of distances and the profile multiset") {
    Rng rng(19);
    PointCloud cloud = random_cloud(80, 2, rng);
    PointCloud shuffled = cloud;
    for (std::size_t i = shuffled.size(); i > 1; --i) {
        const std::size_t j = rng.below(i);
        for (int a = 0; a < 2; ++a)
            std::swap(shuffled.coords[2 * (i - 1) + static_cast<std::size_t>(a)],
                      shuffled.coords[2 * j + static_cast<std::size_t>(a)]);
    }
    NeighborIndex index(cloud);
    NeighborIndex index_shuffled(shuffled);

    const double q[2] = {0.2, -0.3};
    for (int k : {1, 3, 7, 80}) CHECK(kth_distance(index, q, k) == kth_distance(index_shuffled, q, k));
    CHECK(knn_density(index, q, 5) == knn_density(index_shuffled, q, 5));

    auto d1 = density_profile(index, 4).kth_dist;
    auto d2 = density_profile(index_shuffled, 4).kth_dist;
    std::sort(d1.begin(), d1.end());
    std::sort(d2.begin(), d2.end());
    CHECK(d1 == d2);
}

TEST_CASE("rigid motions leave outputs unchanged; scaling acts covariantly") {
    Rng rng(23);
    PointCloud cloud = random_cloud(50, 2, rng);
    NeighborIndex index(cloud);

    const double theta = 0.83;
    const double c = std::cos(theta), s = std::sin(theta);
    const double tx = 2.5, ty = -1.25;
    PointCloud moved = cloud;
    for (std::size_t i = 0; i < cloud.size(); ++i) {
        const double x = cloud.coords[2 * i], y = cloud.coords[2 * i + 1];
        moved.coords[2 * i] = c * x - s * y + tx;
        moved.coords[2 * i + 1] = s * x + c * y + ty;
    }
    NeighborIndex moved_index(moved);

    const double a = 2.75;
    PointCloud scaled = cloud;
    for (auto& v : scaled.coords) v *= a;
    NeighborIndex scaled_index(scaled);

    for (int trial = 0; trial < 20; ++trial) {
        const double q[2] = {rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
        const double qm[2] = {c * q[0] - s * q[1] + tx, s * q[0] + c * q[1] + ty};
        const double qs[2] = {a * q[0], a * q[1]};
        const int k = 1 + static_cast<int>(rng.below(50));

        const double base = kth_distance(index, q, k);
        CHECK(kth_distance(moved_index, qm, k) == doctest::Approx(base).epsilon(1e-9));
        CHECK(kth_distance(scaled_index, qs, k) == doctest::Approx(a * base).epsilon(1e-9));

        const double dens = knn_density(index, q, k);
        CHECK(knn_density(moved_index, qm, k) == doctest::Approx(dens).epsilon(1e-9));
        CHECK(knn_density(scaled_index, qs, k) ==
              doctest::Approx(dens / (a * a)).epsilon(1e-9));
    }
}

TEST_CASE("concurrent read queries match serial answers") {
    Rng rng(31);
    PointCloud cloud = random_cloud(400, 2, rng);
    NeighborIndex index(cloud);

    std::vector<std::array<double, 2>> queries(200);
    for (auto& q : queries) q = {rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};

    std::vector<double> serial(queries.size());
    for (std::size_t i = 0; i < queries.size(); ++i)
        serial[i] = kth_distance(index, queries[i], 5);

    std::vector<double> parallel(queries.size());
    parallel_for(static_cast<std::int64_t>(queries.size()), 4, [&](std::int64_t i) {
        parallel[static_cast<std::size_t>(i)] =
            kth_distance(index, queries[static_cast<std::size_t>(i)], 5);
    });
    CHECK(serial == parallel);
}
