#include "hsurf/reference_surfaces.hpp"

#include <cmath>

#include "hsurf/error.hpp"
#include "hsurf/hypgeom.hpp"

namespace hsurf {

namespace {
const double kPi = std::acos(-1.0);
}

double genus2_equilateral_side() {
    const double c = std::cos(kPi / 9);
    return std::acosh(c / (1 - c));
}

double punctured_torus_side() { return 2 * std::acosh(std::sqrt(2.0)); }

MarkedSurface make_genus2_equilateral(double side) {
    // One-vertex triangulation of the octagon a b a' b' c d c' d' with five
    // diagonals p..t fanned from a single octagon vertex.
    MarkedSurface s;
    auto& tri = s.tri;
    tri.edge_names = {"a", "b", "c", "d", "p", "q", "r", "t", "u"};
    enum { A, B, C, D, P, Q, R, T, U };
    auto compact = [&](const char* name, int e0, int e1, int e2) {
        CombTriangulation::Face f;
        f.cusp = false;
        f.edges = {e0, e1, e2};
        tri.faces.push_back(f);
        tri.face_names.push_back(name);
    };
    compact("T0", A, B, P);
    compact("T1", P, A, Q);
    compact("T2", Q, B, R);
    compact("T3", R, C, T);
    compact("T4", T, D, U);
    compact("T5", U, C, D);
    s.lengths.assign(9, side);
    return s;
}

MarkedSurface make_punctured_torus(double a, double b) {
    MarkedSurface s;
    auto& tri = s.tri;
    tri.edge_names = {"a", "b"};
    auto cusp = [&](const char* name, int chord) {
        CombTriangulation::Face f;
        f.cusp = true;
        f.edges = {chord, -1, -1};
        tri.faces.push_back(f);
        tri.face_names.push_back(name);
    };
    cusp("F0", 0);
    cusp("F1", 1);
    cusp("F2", 0);
    cusp("F3", 1);
    tri.cusp_cycles = {{0, 1, 2, 3}};
    s.lengths = {a, b};
    return s;
}

MarkedSurface make_genus2_quadcell() {
    // Keep the genus-2 combinatorics; edge r carries the quadrilateral's
    // diagonal. With cosh(g0) = 2 cosh(d) - 1 the two faces containing r are
    // semicyclic with r a diameter, so the four r-cell vertices are
    // co-circular. Solve the remaining angle-sum condition for d.
    auto angle_sum_at = [&](double d) {
        const double g0 = std::acosh(2 * std::cosh(d) - 1);
        const double alpha = std::acos(std::cosh(d) / (std::cosh(d) + 1));
        TriangleShape t{g0, d, d};
        const double corner =
            interior_angle(t, 0) + interior_angle(t, 1) + interior_angle(t, 2);
        return 12 * alpha + 2 * corner;
    };
    double lo = 2.0, hi = 6.0;
    if (!(angle_sum_at(lo) > 2 * kPi && angle_sum_at(hi) < 2 * kPi))
        fail(ErrorKind::Numeric, "quadcell bracket failed");
    while (hi - lo > 1e-15) {
        const double mid = 0.5 * (lo + hi);
        (angle_sum_at(mid) > 2 * kPi ? lo : hi) = mid;
    }
    const double d = 0.5 * (lo + hi);
    const double g0 = std::acosh(2 * std::cosh(d) - 1);

    MarkedSurface s = make_genus2_equilateral(d);
    s.lengths[6] = g0;  // edge r, shared by faces T2 and T3
    return s;
}

}  // namespace hsurf
