#pragma once

#include <cmath>
#include <random>

#include "hsurf/hypgeom.hpp"
#include "hsurf/model.hpp"

namespace hsurf::testing {

inline const double kPi = std::acos(-1.0);

// Independent circumscribed-curve oracle: place the triangle in the model and
// solve the 3x3 linear system B(v_i, m) = -1. The sign of B(m,m) decides the
// curve type; for circles the radius is acosh(1/sqrt(-B(m,m))).
struct CircumOracle {
    double mnorm;   // B(m,m)
    double radius;  // valid when mnorm < 0
    bool centered;  // circumcenter strictly inside the triangle
};

inline CircumOracle circum_oracle(const TriangleShape& t) {
    FaceGeometry g;
    g.cusp = false;
    g.len = {t.a, t.b, t.c};
    const PlacedFace f = place_first(g);
    // Solve for m by Cramer's rule on rows (x, y, -z | -1).
    double A[3][3], r[3] = {-1, -1, -1};
    for (int i = 0; i < 3; ++i) {
        A[i][0] = f[i].x;
        A[i][1] = f[i].y;
        A[i][2] = -f[i].z;
    }
    auto det3 = [](double m[3][3]) {
        return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
               m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
               m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    };
    const double d = det3(A);
    double m[3];
    for (int c = 0; c < 3; ++c) {
        double Ac[3][3];
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) Ac[i][j] = (j == c) ? r[i] : A[i][j];
        m[c] = det3(Ac) / d;
    }
    CircumOracle out{};
    out.mnorm = m[0] * m[0] + m[1] * m[1] - m[2] * m[2];
    out.radius = std::numeric_limits<double>::quiet_NaN();
    out.centered = false;
    if (out.mnorm < 0) {
        const double s = std::sqrt(-out.mnorm);
        out.radius = std::acosh(1.0 / s);
        // center strictly inside <=> same orientation sign against all edges
        ModelPoint ctr;
        ctr.x = m[0] / s;
        ctr.y = m[1] / s;
        ctr.z = m[2] / s;
        const double s0 = orientation(f[0], f[1], ctr);
        const double s1 = orientation(f[1], f[2], ctr);
        const double s2 = orientation(f[2], f[0], ctr);
        out.centered = s0 > 0 && s1 > 0 && s2 > 0;
    }
    return out;
}

// Central finite difference of the angle defect with respect to side `sel`.
inline double fd_area_partial(const TriangleShape& t, int sel, double h = 1e-5) {
    TriangleShape p = t, m = t;
    (sel == 0 ? p.a : sel == 1 ? p.b : p.c) += h;
    (sel == 0 ? m.a : sel == 1 ? m.b : m.c) -= h;
    return (triangle_area(p) - triangle_area(m)) / (2 * h);
}

// Random shapes covering every classification branch: sample two legs and
// sweep the third side across the admissible interval.
inline TriangleShape random_shape(std::mt19937_64& rng, double margin = 2e-2) {
    std::uniform_real_distribution<double> leg(0.2, 5.0);
    std::uniform_real_distribution<double> mix(margin, 1 - margin);
    for (;;) {
        const double a = leg(rng), b = leg(rng);
        const double lo = std::abs(a - b), hi = a + b;
        const double c = lo + mix(rng) * (hi - lo);
        TriangleShape t{a, b, c};
        if (t.valid() && c > 0.05) return t;
    }
}

}  // namespace hsurf::testing
