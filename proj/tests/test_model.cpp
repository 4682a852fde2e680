#include <cmath>
#include <random>

#include "doctest.h"
#include "hsurf/error.hpp"
#include "hsurf/model.hpp"
#include "test_helpers.hpp"

using namespace hsurf;
using namespace hsurf::testing;

namespace {

double face_orientation(const PlacedFace& f) { return orientation(f[0], f[1], f[2]); }

// Busemann-style height of p relative to the horocycle at ideal point w
// through q: zero exactly when p lies on that horocycle.
double horocycle_offset(const ModelPoint& p, const ModelPoint& w, const ModelPoint& q) {
    return minkowski(p, w) / minkowski(q, w) - 1.0;
}

}  // namespace

TEST_CASE("cusp_chord_length: horocycle arc parameters reproduce the chord") {
    for (double d : {0.3, 1.0, 2.5}) {
        const double theta = 2 * std::sinh(d / 2);
        CHECK(cusp_chord_length(theta, 1, 1) == doctest::Approx(d).epsilon(1e-14));
    }
}

TEST_CASE("cusp_chord_length: vertical geodesic is the log of the height ratio") {
    CHECK(cusp_chord_length(0, 1, std::exp(1.0)) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("cusp_chord_length: explicit value") {
    CHECK(cusp_chord_length(1, 1, 2) == doctest::Approx(std::acosh(1.5)).epsilon(1e-15));
}

TEST_CASE("cusp_chord_length: rejects coincident points") {
    CHECK_THROWS_AS(cusp_chord_length(0, 1, 1), Error);
}

TEST_CASE("point_segment_distance: point on the segment") {
    const ModelPoint a = ModelPoint::origin();
    const ModelPoint b = geodesic_point(a, Tangent{1, 0, 0}, 2.0);
    const ModelPoint p = geodesic_point(a, Tangent{1, 0, 0}, 0.7);
    CHECK(point_segment_distance(p, a, b) < 1e-12);
}

TEST_CASE("point_segment_distance: isoceles drop follows the law of sines") {
    // apex p above the midpoint: distances l to both ends, apex half-angle at
    // the base vertices theta, drop h with sinh h = sinh l sin theta
    const double el = 1.4, theta = 0.6;
    const ModelPoint a = ModelPoint::origin();
    const Tangent base{1, 0, 0};
    const ModelPoint p = geodesic_point(a, rotate(a, base, theta), el);
    // base long enough that the foot is interior
    const double half_base = std::atanh(std::tanh(el) * std::cos(theta));  // foot distance from a
    const ModelPoint b = geodesic_point(a, base, 3 * half_base);
    const double h = point_segment_distance(p, a, b);
    CHECK(std::asinh(std::sinh(el) * std::sin(theta)) == doctest::Approx(h).epsilon(1e-12));
}

TEST_CASE("point_segment_distance: foot outside goes to the nearest endpoint") {
    const ModelPoint a = ModelPoint::origin();
    const ModelPoint b = geodesic_point(a, Tangent{1, 0, 0}, 1.0);
    // p behind a: obtuse angle at a
    const ModelPoint p = geodesic_point(a, Tangent{-1, 0, 0}, 0.8);
    CHECK(point_segment_distance(p, a, b) == doctest::Approx(0.8).epsilon(1e-12));
}

TEST_CASE("point_segment_distance: ray toward an ideal endpoint") {
    const ModelPoint a = ModelPoint::origin();
    const ModelPoint w = ideal_endpoint(a, Tangent{1, 0, 0});
    // p at angle pi/4 from the ray: interior foot
    const ModelPoint p = geodesic_point(a, rotate(a, Tangent{1, 0, 0}, kPi / 4), 1.0);
    CHECK(point_segment_distance(p, a, w) ==
          doctest::Approx(std::asinh(std::sinh(1.0) * std::sin(kPi / 4))).epsilon(1e-12));
    // p behind the finite endpoint: nearest point is a
    const ModelPoint q = geodesic_point(a, Tangent{-1, 0, 0}, 0.5);
    CHECK(point_segment_distance(q, a, w) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("place_first: compact face realizes its side lengths counterclockwise") {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 100; ++i) {
        const TriangleShape t = random_shape(rng);
        FaceGeometry g;
        g.len = {t.a, t.b, t.c};
        const PlacedFace f = place_first(g);
        CHECK(distance(f[0], f[1]) == doctest::Approx(t.a).epsilon(1e-12));
        CHECK(distance(f[1], f[2]) == doctest::Approx(t.b).epsilon(1e-12));
        CHECK(distance(f[2], f[0]) == doctest::Approx(t.c).epsilon(1e-12));
        CHECK(face_orientation(f) > 0);
    }
}

TEST_CASE("place_first: cusp face has its vertices on a common horocycle") {
    FaceGeometry g;
    g.cusp = true;
    g.len = {1.7, 0, 0};
    const PlacedFace f = place_first(g);
    CHECK(distance(f[0], f[1]) == doctest::Approx(1.7).epsilon(1e-12));
    CHECK(f[2].ideal);
    CHECK(std::abs(horocycle_offset(f[1], f[2], f[0])) < 1e-12);
    CHECK(face_orientation(f) > 0);
}

TEST_CASE("place_adjacent: reflecting across an edge and back is the identity") {
    FaceGeometry g;
    g.len = {2, 2, 2};
    const PlacedFace f0 = place_first(g);
    for (int slot = 0; slot < 3; ++slot) {
        const PlacedFace f1 = place_adjacent(f0, slot, g, slot);
        const PlacedFace f2 = place_adjacent(f1, slot, g, slot);
        for (int v = 0; v < 3; ++v) {
            CHECK(std::abs(f2[v].x - f0[v].x) < 1e-10);
            CHECK(std::abs(f2[v].y - f0[v].y) < 1e-10);
            CHECK(std::abs(f2[v].z - f0[v].z) < 1e-10);
        }
    }
}

TEST_CASE("place_adjacent: preserves in-face distances and orientation") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 100; ++i) {
        const TriangleShape t = random_shape(rng);
        FaceGeometry g;
        g.len = {t.a, t.b, t.c};
        const PlacedFace f0 = place_first(g);
        const PlacedFace f1 = place_adjacent(f0, 0, g, 0);
        CHECK(distance(f1[0], f1[1]) == doctest::Approx(t.a).epsilon(1e-10));
        CHECK(distance(f1[1], f1[2]) == doctest::Approx(t.b).epsilon(1e-10));
        CHECK(distance(f1[2], f1[0]) == doctest::Approx(t.c).epsilon(1e-10));
        CHECK(face_orientation(f1) > 0);
        // opposite sides of the shared edge
        CHECK(orientation(f0[0], f0[1], f0[2]) * orientation(f0[0], f0[1], f1[2]) < 0);
    }
}

TEST_CASE("place_adjacent: eighteen pi/9 equilateral corners close up around a vertex") {
    // Rotate around vertex 0 by repeatedly crossing the edge through it.
    const double s = std::acosh(std::cos(kPi / 9) / (1 - std::cos(kPi / 9)));
    FaceGeometry g;
    g.len = {s, s, s};
    PlacedFace cur = place_first(g);
    const PlacedFace first = cur;
    for (int k = 0; k < 18; ++k) {
        // crossing slot 2 (edge v2->v0) keeps vertex 0 fixed; attach by the
        // same slot so the next face again has vertex 0 at the basepoint
        cur = place_adjacent(cur, 2, g, 2);
    }
    for (int v = 0; v < 3; ++v) {
        CHECK(std::abs(cur[v].x - first[v].x) < 1e-8);
        CHECK(std::abs(cur[v].y - first[v].y) < 1e-8);
        CHECK(std::abs(cur[v].z - first[v].z) < 1e-8);
    }
}

TEST_CASE("place_adjacent: cusp face across a compact edge lands on one horocycle") {
    FaceGeometry tri;
    tri.len = {1.2, 1.5, 1.9};
    const PlacedFace f0 = place_first(tri);
    FaceGeometry cusp;
    cusp.cusp = true;
    cusp.len = {1.2, 0, 0};
    const PlacedFace f1 = place_adjacent(f0, 0, cusp, 0);
    CHECK(f1[2].ideal);
    CHECK(std::abs(horocycle_offset(f1[1], f1[2], f1[0])) < 1e-11);
    // ideal vertex on the far side of the shared edge
    CHECK(orientation(f0[0], f0[1], f0[2]) * orientation(f0[0], f0[1], f1[2]) < 0);
    // both finite vertices at the horocyclic angle against the ideal direction
    const Tangent chord = direction(f1[0], f1[1]);
    const Tangent ray = direction(f1[0], f1[2]);
    const double ang = std::acos(chord.x * ray.x + chord.y * ray.y - chord.z * ray.z);
    CHECK(ang == doctest::Approx(horocyclic_angle(1.2)).epsilon(1e-11));
}

TEST_CASE("place_adjacent: chain of cusp faces shares the ideal point and horocycle") {
    FaceGeometry c1;
    c1.cusp = true;
    c1.len = {1.0, 0, 0};
    FaceGeometry c2;
    c2.cusp = true;
    c2.len = {1.8, 0, 0};
    const PlacedFace f0 = place_first(c1);
    // cross the outgoing ideal slot (vertex1 -> ideal); neighbor attaches by
    // its incoming slot 2
    const PlacedFace f1 = place_adjacent(f0, 1, c2, 2);
    CHECK(f1[2].ideal);
    CHECK(std::abs(f1[2].x - f0[2].x) < 1e-12);
    CHECK(std::abs(f1[2].y - f0[2].y) < 1e-12);
    // shared finite vertex
    CHECK(distance(f1[0], f0[1]) < 1e-12);
    // new finite vertex on the same horocycle as the old ones
    CHECK(std::abs(horocycle_offset(f1[1], f0[2], f0[0])) < 1e-11);
    // chord length realized
    CHECK(distance(f1[0], f1[1]) == doctest::Approx(1.8).epsilon(1e-12));
    // and the horocyclic arc positions: arc = 2 sinh(d/2) per chord
    // (checked via the half-plane chord formula between outer vertices)
    const double arc = 2 * std::sinh(0.5) + 2 * std::sinh(0.9);
    const double expect = cusp_chord_length(arc, 1, 1);
    CHECK(distance(f0[0], f1[1]) == doctest::Approx(expect).epsilon(1e-11));
}

TEST_CASE("place_adjacent: mismatched shared length is rejected") {
    FaceGeometry g;
    g.len = {2, 2, 2};
    const PlacedFace f0 = place_first(g);
    FaceGeometry other;
    other.len = {2.5, 2, 2};
    CHECK_THROWS_AS(place_adjacent(f0, 0, other, 0), Error);
}

TEST_CASE("placements stay on the hyperboloid") {
    std::mt19937_64 rng(9);
    FaceGeometry g;
    g.len = {1.1, 1.3, 1.7};
    PlacedFace f = place_first(g);
    std::uniform_int_distribution<int> pick(0, 2);
    for (int i = 0; i < 300; ++i) {
        const int s = pick(rng);
        f = place_adjacent(f, s, g, pick(rng));
        for (const auto& p : f)
            if (!p.ideal) CHECK(std::abs(minkowski(p, p) + 1) < 1e-12);
    }
}
