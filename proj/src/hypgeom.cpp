#include "hsurf/hypgeom.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "hsurf/error.hpp"

namespace hsurf {

namespace {

double clamp_unit(double x) { return std::clamp(x, -1.0, 1.0); }

void require_valid(const TriangleShape& s, const char* op) {
    if (!s.valid())
        fail(ErrorKind::Domain, std::string(op) + ": side lengths (" + std::to_string(s.a) + ", " +
                                    std::to_string(s.b) + ", " + std::to_string(s.c) +
                                    ") violate the strict triangle inequality");
}

}  // namespace

bool TriangleShape::valid() const {
    if (!(a > 0 && b > 0 && c > 0)) return false;
    return a < b + c && b < a + c && c < a + b;
}

int TriangleShape::longest() const {
    int k = 0;
    if (b > side(k)) k = 1;
    if (c > side(k)) k = 2;
    return k;
}

const char* circum_kind_name(CircumKind k) {
    switch (k) {
        case CircumKind::Centered: return "centered";
        case CircumKind::Semicyclic: return "semicyclic";
        case CircumKind::NonCenteredCyclic: return "noncentered";
        case CircumKind::HorocyclicBoundary: return "horocyclic";
        case CircumKind::Equidistant: return "equidistant";
    }
    return "?";
}

double interior_angle(const TriangleShape& shape, int opposite) {
    require_valid(shape, "interior_angle");
    const double a = shape.side(opposite);
    const double b = shape.side((opposite + 1) % 3);
    const double c = shape.side((opposite + 2) % 3);
    const double num = std::cosh(b) * std::cosh(c) - std::cosh(a);
    const double den = std::sinh(b) * std::sinh(c);
    return std::acos(clamp_unit(num / den));
}

double horocyclic_angle(double d) {
    if (!(d > 0)) fail(ErrorKind::Domain, "horocyclic_angle: length must be positive");
    return std::asin(1.0 / std::cosh(d / 2));
}

double triangle_area(const TriangleShape& shape) {
    require_valid(shape, "triangle_area");
    const double pi = std::acos(-1.0);
    return pi - interior_angle(shape, 0) - interior_angle(shape, 1) - interior_angle(shape, 2);
}

double horocyclic_triangle_area(double d) {
    const double pi = std::acos(-1.0);
    return pi - 2 * horocyclic_angle(d);
}

namespace {

// Sum of half-central angles at circumradius J for a subset of chords.
// Each chord of length l subtends a half-angle arcsin(sinh(l/2)/sinh(J)).
double half_angle(double half_chord_sinh, double sinhJ) {
    return std::asin(clamp_unit(half_chord_sinh / sinhJ));
}

}  // namespace

CircumClass circumdata(const TriangleShape& shape) {
    require_valid(shape, "circumdata");
    const double pi = std::acos(-1.0);
    const int longest = shape.longest();
    const double smax = std::sinh(shape.side(longest) / 2);
    const double s1 = std::sinh(shape.side((longest + 1) % 3) / 2);
    const double s2 = std::sinh(shape.side((longest + 2) % 3) / 2);
    const double nan = std::numeric_limits<double>::quiet_NaN();

    // The horocyclic locus is sinh(lmax/2) = sinh(l1/2) + sinh(l2/2); beyond it
    // the perpendicular bisectors share a perpendicular and no circle exists.
    const double horo_gap = smax - (s1 + s2);
    if (std::abs(horo_gap) <= tol::kClassify * smax)
        return {CircumKind::HorocyclicBoundary, nan, longest};
    if (horo_gap > 0) return {CircumKind::Equidistant, nan, longest};

    // At the smallest candidate radius J0 (longest side a diameter) compare the
    // other two half-angles against pi/2 to pick the branch equation.
    const double J0 = shape.side(longest) / 2;
    const double f0 = half_angle(s1, smax) + half_angle(s2, smax);
    if (std::abs(f0 - pi / 2) <= tol::kClassify)
        return {CircumKind::Semicyclic, J0, longest};

    if (f0 > pi / 2) {
        // Centered: sum of the three half-angles equals pi; strictly decreasing in J.
        auto g = [&](double J) {
            const double sj = std::sinh(J);
            return half_angle(smax, sj) + half_angle(s1, sj) + half_angle(s2, sj) - pi;
        };
        double lo = J0, hi = J0 + 50;
        if (!(g(hi) < 0)) fail(ErrorKind::Numeric, "circumdata: centered bracket failed");
        while (hi - lo > 1e-15 * std::max(1.0, hi)) {
            const double mid = 0.5 * (lo + hi);
            (g(mid) > 0 ? lo : hi) = mid;
        }
        return {CircumKind::Centered, 0.5 * (lo + hi), longest};
    }

    // Non-centered: the longest chord's half-angle equals the sum of the other
    // two. h is positive at J0 and has a unique zero before its tail decays.
    auto h = [&](double J) {
        const double sj = std::sinh(J);
        return half_angle(smax, sj) - half_angle(s1, sj) - half_angle(s2, sj);
    };
    double lo = J0, hi = J0 + 1;
    int guard = 0;
    while (h(hi) > 0) {
        hi += (hi - J0) * 2;
        if (++guard > 60 || hi > 700) fail(ErrorKind::Numeric, "circumdata: non-centered bracket failed");
    }
    while (hi - lo > 1e-15 * std::max(1.0, hi)) {
        const double mid = 0.5 * (lo + hi);
        (h(mid) > 0 ? lo : hi) = mid;
    }
    return {CircumKind::NonCenteredCyclic, 0.5 * (lo + hi), longest};
}

namespace {

// Analytic partial of the angle defect with respect to side `sel`, valid on all
// of U. Used for shapes with no finite circumradius.
double defect_partial(const TriangleShape& shape, int sel) {
    const double a = shape.side(sel);
    const double b = shape.side((sel + 1) % 3);
    const double c = shape.side((sel + 2) % 3);
    const double alpha = interior_angle(shape, sel);
    const double beta = interior_angle(shape, (sel + 1) % 3);
    const double gamma = interior_angle(shape, (sel + 2) % 3);
    const double da = std::sinh(a) / (std::sin(alpha) * std::sinh(b) * std::sinh(c));
    // d(beta)/da where cos(beta) = (cosh a cosh c - cosh b)/(sinh a sinh c)
    const double db = -(std::cosh(a) * std::cosh(b) - std::cosh(c)) /
                      (std::sin(beta) * std::sinh(a) * std::sinh(a) * std::sinh(c));
    const double dc = -(std::cosh(a) * std::cosh(c) - std::cosh(b)) /
                      (std::sin(gamma) * std::sinh(a) * std::sinh(a) * std::sinh(b));
    return -(da + db + dc);
}

}  // namespace

double area_partial(const TriangleShape& shape, int side) {
    require_valid(shape, "area_partial");
    const CircumClass cc = circumdata(shape);
    if (cc.kind == CircumKind::HorocyclicBoundary || cc.kind == CircumKind::Equidistant)
        return defect_partial(shape, side);

    const double chd = std::cosh(shape.side(side) / 2);
    const double chJ = std::cosh(cc.radius);
    const double term = 1.0 / (chd * chd) - 1.0 / (chJ * chJ);
    const double v = std::sqrt(std::max(0.0, term));
    const bool negative = cc.kind == CircumKind::NonCenteredCyclic && side == cc.longest;
    return negative ? -v : v;
}

double horocyclic_area_partial(double d) {
    if (!(d > 0)) fail(ErrorKind::Domain, "horocyclic_area_partial: length must be positive");
    return 1.0 / std::cosh(d / 2);
}

}  // namespace hsurf
