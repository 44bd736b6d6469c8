#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "aircanyon/errors.hpp"
#include "aircanyon/geometry.hpp"
#include "test_util.hpp"

using namespace aircanyon;
using namespace aircanyon::geom;

TEST_CASE("ring normalization closes, orients CCW and merges duplicates") {
    // Clockwise open square with a repeated vertex.
    std::vector<Point2> ring{{0, 0}, {0, 10}, {0, 10}, {10, 10}, {10, 0}};
    auto norm = normalize_ring(ring);
    REQUIRE(norm.size() == 5);  // 4 distinct + closing copy
    CHECK(norm.front() == norm.back());
    // CCW: signed area positive.
    double a2 = 0;
    for (std::size_t i = 0; i + 1 < norm.size(); ++i) {
        a2 += norm[i].x * norm[i + 1].y - norm[i + 1].x * norm[i].y;
    }
    CHECK(a2 > 0);
}

TEST_CASE("ring normalization is idempotent on random convex rings") {
    std::mt19937 rng(42);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int it = 0; it < 200; ++it) {
        // Convex ring: sorted angles around a center.
        int n = 3 + static_cast<int>(unit(rng) * 8);
        std::vector<double> angles;
        for (int i = 0; i < n; ++i) angles.push_back(unit(rng) * 2 * testutil::kPi);
        std::sort(angles.begin(), angles.end());
        std::vector<Point2> ring;
        double cx = unit(rng) * 100, cy = unit(rng) * 100;
        for (double a : angles) {
            double r = 5 + unit(rng) * 20;
            ring.push_back({cx + r * std::cos(a), cy + r * std::sin(a)});
        }
        std::vector<Point2> once, twice;
        try {
            once = normalize_ring(ring);
        } catch (const GeometryError&) {
            continue;  // degenerate draw (collinear/duplicate angles)
        }
        twice = normalize_ring(once);
        REQUIRE(once.size() == twice.size());
        for (std::size_t i = 0; i < once.size(); ++i) {
            CHECK(once[i].x == twice[i].x);
            CHECK(once[i].y == twice[i].y);
        }
    }
}

TEST_CASE("degenerate rings are rejected") {
    CHECK_THROWS_AS(Polygon2D::from_ring({{0, 0}, {1, 1}}), GeometryError);
    CHECK_THROWS_AS(Polygon2D::from_ring({{0, 0}, {1, 1}, {2, 2}}), GeometryError);  // collinear
    CHECK_THROWS_AS(Polygon2D::from_ring({{0, 0}, {0, 0}, {0, 0}, {0, 0}}), GeometryError);
}

TEST_CASE("self-intersection detection agrees with a brute-force check") {
    auto bowtie = normalize_ring({{0, 0}, {10, 10}, {10, 0}, {0, 10}});
    CHECK(ring_self_intersects(bowtie));
    CHECK_FALSE(Polygon2D::from_ring({{0, 0}, {10, 10}, {10, 0}, {0, 10}}).is_simple());

    auto square = normalize_ring({{0, 0}, {10, 0}, {10, 10}, {0, 10}});
    CHECK_FALSE(ring_self_intersects(square));
    CHECK(Polygon2D::from_ring({{0, 0}, {10, 0}, {10, 10}, {0, 10}}).is_simple());

    // Independent confirmation for the bow-tie: some pair of non-adjacent
    // edges properly crosses.
    bool crossed = false;
    for (std::size_t i = 0; i + 1 < bowtie.size(); ++i) {
        for (std::size_t j = i + 2; j + 1 < bowtie.size(); ++j) {
            if (i == 0 && j + 2 == bowtie.size()) continue;  // adjacent around the seam
            crossed |= testutil::o_segs_cross(bowtie[i], bowtie[i + 1], bowtie[j], bowtie[j + 1]);
        }
    }
    CHECK(crossed);
}

TEST_CASE("area, centroid and containment of a rectangle") {
    auto p = Polygon2D::from_ring({{2, 3}, {12, 3}, {12, 8}, {2, 8}});
    CHECK(p.area() == doctest::Approx(50.0));
    CHECK(p.centroid().x == doctest::Approx(7.0));
    CHECK(p.centroid().y == doctest::Approx(5.5));
    CHECK(p.contains({7, 5}));
    CHECK(p.contains({2, 3}));  // boundary counts as inside
    CHECK_FALSE(p.contains({13, 5}));
}

TEST_CASE("segment distances") {
    CHECK(point_segment_distance({0, 5}, {-10, 0}, {10, 0}) == doctest::Approx(5.0));
    CHECK(point_segment_distance({20, 5}, {-10, 0}, {10, 0}) ==
          doctest::Approx(std::sqrt(125.0)));
    CHECK(segment_segment_distance({0, 0}, {10, 0}, {0, 3}, {10, 3}) == doctest::Approx(3.0));
    CHECK(segment_segment_distance({0, 0}, {10, 10}, {0, 10}, {10, 0}) == doctest::Approx(0.0));
    CHECK(segments_intersect({0, 0}, {10, 10}, {0, 10}, {10, 0}));
    CHECK_FALSE(segments_intersect({0, 0}, {10, 0}, {0, 1}, {10, 1}));
}

TEST_CASE("polygon-polygon distance and overlap") {
    auto a = Polygon2D::from_ring({{0, 0}, {10, 0}, {10, 10}, {0, 10}});
    auto b = Polygon2D::from_ring({{13, 0}, {20, 0}, {20, 10}, {13, 10}});
    auto c = Polygon2D::from_ring({{5, 5}, {15, 5}, {15, 15}, {5, 15}});
    auto inside = Polygon2D::from_ring({{2, 2}, {4, 2}, {4, 4}, {2, 4}});
    CHECK(polygon_polygon_distance(a, b) == doctest::Approx(3.0));
    CHECK(polygon_polygon_distance(a, c) == doctest::Approx(0.0));
    CHECK_FALSE(polygons_overlap(a, b));
    CHECK(polygons_overlap(a, c));
    CHECK(polygons_overlap(a, inside));  // containment counts
    // Shared edge only: no interior overlap.
    auto d = Polygon2D::from_ring({{10, 0}, {20, 0}, {20, 10}, {10, 10}});
    CHECK_FALSE(polygons_overlap(a, d));
    CHECK(polygon_polygon_distance(a, d) == doctest::Approx(0.0));
}

TEST_CASE("polyline-polygon distance") {
    auto p = Polygon2D::from_ring({{0, 0}, {10, 0}, {10, 10}, {0, 10}});
    std::vector<Point2> outside{{-5, 15}, {15, 15}};
    std::vector<Point2> through{{-5, 5}, {15, 5}};
    CHECK(polyline_polygon_distance(outside, p) == doctest::Approx(5.0));
    CHECK(polyline_polygon_distance(through, p) == doctest::Approx(0.0));
}

TEST_CASE("line-polygon chord matches the independent parametric oracle") {
    auto rect = Polygon2D::from_ring({{0, 0}, {40, 0}, {40, 189}, {0, 189}});
    CHECK(line_polygon_chord(rect, {20, 50}, {1, 0}) == doctest::Approx(40.0));
    CHECK(line_polygon_chord(rect, {20, 50}, {0, 1}) == doctest::Approx(189.0));
    CHECK(line_polygon_chord(rect, {100, 300}, {1, 0}) == doctest::Approx(0.0));

    // Non-convex L-shape: the chord is a union of two spans.
    auto ell = Polygon2D::from_ring({{0, 0}, {30, 0}, {30, 10}, {20, 10}, {20, 30}, {0, 30}});
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> u(-5.0, 35.0);
    auto open = testutil::open_ring(ell);
    for (int it = 0; it < 500; ++it) {
        Point2 p{u(rng), u(rng)};
        double ang = u(rng);
        Vec2 d{std::cos(ang), std::sin(ang)};
        double got = line_polygon_chord(ell, p, d);
        double want = testutil::o_chord(ell.ring(), p, d);
        CHECK(got == doctest::Approx(want).epsilon(1e-9));
    }
}

TEST_CASE("projection interval") {
    std::vector<Point2> pts{{0, 0}, {10, 0}, {10, 5}};
    auto iv = project_points(pts, {0, 0}, {1, 0});
    CHECK(iv.lo == doctest::Approx(0.0));
    CHECK(iv.hi == doctest::Approx(10.0));
    CHECK(iv.length() == doctest::Approx(10.0));
}

TEST_CASE("3D polygon: planarity, Newell normal and area") {
    auto flat = Polygon3D::from_ring({{0, 0, 5}, {10, 0, 5}, {10, 10, 5}, {0, 10, 5}});
    auto n = flat.newell_normal();
    CHECK(std::abs(n.x) == doctest::Approx(0.0));
    CHECK(std::abs(n.y) == doctest::Approx(0.0));
    CHECK(std::abs(n.z) == doctest::Approx(200.0));  // twice the area
    CHECK(flat.area() == doctest::Approx(100.0));

    // 45-degree pitched plane z = y.
    auto pitched = Polygon3D::from_ring({{0, 0, 0}, {10, 0, 0}, {10, 10, 10}, {0, 10, 10}});
    double cosang = std::abs(pitched.newell_normal().z) /
                    std::sqrt(pitched.newell_normal().x * pitched.newell_normal().x +
                              pitched.newell_normal().y * pitched.newell_normal().y +
                              pitched.newell_normal().z * pitched.newell_normal().z);
    CHECK(std::acos(cosang) * 180.0 / testutil::kPi == doctest::Approx(45.0));

    CHECK_THROWS_AS(Polygon3D::from_ring({{0, 0, 0}, {10, 0, 0}, {10, 10, 30}, {0, 10, 0}}),
                    GeometryError);
}
