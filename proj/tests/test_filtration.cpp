#include "rdad/filtration.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include <doctest.h>

#include "rdad/errors.hpp"
#include "test_support.hpp"

using namespace rdad;
using namespace rdad::testing;

TEST_CASE("default k_den reproduces the published table") {
    CHECK(default_k_den(500) == 8);
    CHECK(default_k_den(5000) == 14);
    CHECK(default_k_den(10676) == 17);
    CHECK(default_k_den(23389) == 20);
}

TEST_CASE("default k_dtm rounds half up with a floor of one") {
    CHECK(default_k_dtm(5000, 0.002) == 10);
    CHECK(default_k_dtm(100, 0.002) == 1);
    CHECK(default_k_dtm(10676, 0.002) == 21);
    CHECK_THROWS_AS(default_k_dtm(100, 0.0), ConfigError);
    CHECK_THROWS_AS(default_k_dtm(100, 1.0), ConfigError);
}

TEST_CASE("eval_dtm is the RMS of the k smallest distances") {
    NeighborIndex index(cloud_1d({0.0, 1.0, 3.0}));
    const double x = 0.0;
    CHECK(eval_dtm(index, {&x, 1}, 2) == doctest::Approx(std::sqrt(0.5)).epsilon(1e-15));

    SUBCASE("k_dtm = 1 recovers the distance function, exactly") {
        Rng rng(5);
        PointCloud cloud = random_cloud(100, 2, rng);
        NeighborIndex idx(cloud);
        for (int t = 0; t < 50; ++t) {
            const double q[2] = {rng.uniform(-1.3, 1.3), rng.uniform(-1.3, 1.3)};
            CHECK(eval_dtm(idx, q, 1) == eval_distance(idx, q));
        }
    }
    SUBCASE("at a data point with no duplicates, k_dtm = 1 gives zero") {
        const double q = 3.0;
        CHECK(eval_dtm(index, {&q, 1}, 1) == 0.0);
    }
    SUBCASE("k out of range") {
        const double q = 0.0;
        CHECK_THROWS_AS(eval_dtm(index, {&q, 1}, 4), ConfigError);
    }
}

TEST_CASE("eval_rdad hand example: order statistics are of the ratios") {
    NeighborIndex index(cloud_1d({0.0, 1.0, 2.0, 10.0}));
    const auto profile = density_profile(index, 2);
    const double x = 0.5;
    // ratios {0.5, 0.5, 1.5, 1.1875}; two smallest are the 0.5s
    CHECK(eval_rdad(index, profile, {&x, 1}, 2) == doctest::Approx(0.125).epsilon(1e-15));
    CHECK(eval_dad(index, profile, {&x, 1}) == doctest::Approx(0.125).epsilon(1e-15));
}

TEST_CASE("eval_dad is zero at data points and equals eval_rdad with k_dtm = 1") {
    Rng rng(9);
    PointCloud cloud = random_cloud(100, 2, rng);
    NeighborIndex index(cloud);
    const auto profile = density_profile(index, 5);

    CHECK(eval_dad(index, profile, cloud.point(17)) == 0.0);

    for (int t = 0; t < 50; ++t) {
        const double q[2] = {rng.uniform(-1.5, 1.5), rng.uniform(-1.5, 1.5)};
        CHECK(eval_rdad(index, profile, q, 1) == eval_dad(index, profile, q));
    }
}

TEST_CASE("branch-and-bound selection agrees exactly with the full-scan route") {
    Rng rng(13);
    for (int trial = 0; trial < 10; ++trial) {
        PointCloud cloud = random_cloud(150 + rng.below(100), 2, rng);
        NeighborIndex index(cloud);
        const auto profile = density_profile(index, 2 + static_cast<int>(rng.below(8)));
        for (int t = 0; t < 30; ++t) {
            const double q[2] = {rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0)};
            const int k = 1 + static_cast<int>(rng.below(20));
            CHECK(eval_rdad(index, profile, q, k) == detail::eval_rdad_scan(index, profile, q, k));
        }
    }
}

TEST_CASE("profile built from a different cloud is rejected") {
    Rng rng(1);
    NeighborIndex a(random_cloud(30, 2, rng));
    NeighborIndex b(random_cloud(30, 2, rng));
    const auto profile = density_profile(a, 3);
    const double q[2] = {0.0, 0.0};
    CHECK_THROWS_AS(eval_rdad(b, profile, q, 2), ConfigError);
}

TEST_CASE("RDAD sample scale invariance") {
    Rng rng(21);
    PointCloud cloud = random_cloud(120, 2, rng);
    const double a = 3.0;
    const double b[2] = {1.0, 2.0};
    PointCloud moved = cloud;
    for (std::size_t i = 0; i < cloud.size(); ++i) {
        moved.coords[2 * i] = a * cloud.coords[2 * i] + b[0];
        moved.coords[2 * i + 1] = a * cloud.coords[2 * i + 1] + b[1];
    }
    NeighborIndex index(cloud), moved_index(moved);
    const auto profile = density_profile(index, 6);
    const auto moved_profile = density_profile(moved_index, 6);

    for (int t = 0; t < 40; ++t) {
        const double q[2] = {rng.uniform(-1.5, 1.5), rng.uniform(-1.5, 1.5)};
        const double qm[2] = {a * q[0] + b[0], a * q[1] + b[1]};
        for (int k : {1, 3, 10}) {
            const double v = eval_rdad(index, profile, q, k);
            CHECK(eval_rdad(moved_index, moved_profile, qm, k) ==
                  doctest::Approx(v).epsilon(1e-9));
        }
    }
}

TEST_CASE("eval_rdad is non-decreasing in k_dtm and nonnegative") {
    Rng rng(27);
    PointCloud cloud = random_cloud(80, 2, rng);
    NeighborIndex index(cloud);
    const auto profile = density_profile(index, 4);
    for (int t = 0; t < 25; ++t) {
        const double q[2] = {rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0)};
        double prev = 0.0;
        for (int k = 1; k <= 80; ++k) {
            const double v = eval_rdad(index, profile, q, k);
            CHECK(v >= prev);
            prev = v;
        }
        CHECK(eval_dtm(index, q, 7) >= 0.0);
        CHECK(eval_distance(index, q) >= 0.0);
    }
}

TEST_CASE("empirical Lipschitz bound for RDAD") {
    Rng rng(33);
    PointCloud cloud = random_cloud(60, 2, rng);
    NeighborIndex index(cloud);
    const auto profile = density_profile(index, 4);
    const double lipschitz = profile.c_norm * profile.max_inv();
    for (int t = 0; t < 60; ++t) {
        const double x[2] = {rng.uniform(-1.5, 1.5), rng.uniform(-1.5, 1.5)};
        const double y[2] = {rng.uniform(-1.5, 1.5), rng.uniform(-1.5, 1.5)};
        const double dist = std::sqrt(squared_distance(x, y));
        for (int k : {1, 4, 12}) {
            const double gap = std::abs(eval_rdad(index, profile, x, k) -
                                        eval_rdad(index, profile, y, k));
            CHECK(gap <= lipschitz * dist + 1e-12);
        }
    }
}

TEST_CASE("build_field evaluates cell centers") {
    SUBCASE("single cell centered on the data point") {
        PointCloud cloud = cloud_2d({{0.5, 0.5}});
        GridSpec grid;
        grid.lower = {0.0, 0.0};
        grid.delta_x = 1.0;
        grid.counts = {1, 1};
        FiltrationSpec spec;
        spec.kind = FiltrationKind::Distance;
        const auto field = build_field(cloud, spec, grid);
        CHECK(field.values.size() == 1);
        CHECK(field.values[0] == 0.0);
    }
    SUBCASE("3x3 distance field around the middle cell") {
        PointCloud cloud = cloud_2d({{1.5, 1.5}});
        GridSpec grid;
        grid.lower = {0.0, 0.0};
        grid.delta_x = 1.0;
        grid.counts = {3, 3};
        FiltrationSpec spec;
        spec.kind = FiltrationKind::Distance;
        const auto field = build_field(cloud, spec, grid);
        CHECK(field.at(1, 1) == 0.0);
        CHECK(field.at(0, 1) == doctest::Approx(1.0));
        CHECK(field.at(1, 0) == doctest::Approx(1.0));
        CHECK(field.at(0, 0) == doctest::Approx(std::sqrt(2.0)));
        CHECK(field.at(2, 2) == doctest::Approx(std::sqrt(2.0)));
    }
    SUBCASE("parallel evaluation is bitwise identical to serial") {
        Rng rng(41);
        PointCloud cloud = random_cloud(300, 2, rng);
        const GridSpec grid = make_grid(cloud, 0.1, 0.05);
        FiltrationSpec spec;
        spec.kind = FiltrationKind::Rdad;
        const auto serial = build_field(cloud, spec, grid, 1);
        const auto threaded = build_field(cloud, spec, grid, 4);
        CHECK(serial.values == threaded.values);
        CHECK(serial.spec.k_den == default_k_den(300));
        CHECK(serial.spec.k_dtm == default_k_dtm(300, 0.002));
    }
}

TEST_CASE("make_grid covers the padded bounding box") {
    PointCloud cloud = cloud_2d({{0.0, 0.0}, {1.0, 1.0}, {0.3, 0.9}});
    SUBCASE("no padding") {
        const auto grid = make_grid(cloud, 0.5, 0.0);
        CHECK(grid.lower == std::vector<double>{0.0, 0.0});
        CHECK(grid.counts == std::vector<std::int64_t>{2, 2});
    }
    SUBCASE("quarter padding per side") {
        const auto grid = make_grid(cloud, 0.5, 0.25);
        CHECK(grid.lower[0] == doctest::Approx(-0.25));
        CHECK(grid.lower[1] == doctest::Approx(-0.25));
        CHECK(grid.counts == std::vector<std::int64_t>{3, 3});
    }
    SUBCASE("degenerate axis is an error") {
        PointCloud flat = cloud_2d({{0.0, 1.0}, {1.0, 1.0}});
        CHECK_THROWS_AS(make_grid(flat, 0.5, 0.0), DataError);
    }
    SUBCASE("tower rectangle discretization") {
        const Rect us{-126.0, -65.8, 23.9, 50.0};
        const double dx = (us.ymax - us.ymin) / 100.0;
        CHECK(dx == doctest::Approx(0.261));
        const auto grid = grid_from_rect(us, dx);
        CHECK(grid.counts[1] == 100);
        CHECK(grid.counts[0] == 231);  // ceil(60.2 / 0.261)
    }
}
