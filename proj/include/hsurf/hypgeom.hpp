#pragma once

#include <array>
#include <string>

namespace hsurf {

// Side lengths of a compact hyperbolic triangle. Valid shapes satisfy the
// strict triangle inequality; operations on invalid shapes throw Domain errors.
struct TriangleShape {
    double a = 0, b = 0, c = 0;

    double side(int i) const { return i == 0 ? a : (i == 1 ? b : c); }
    std::array<double, 3> sides() const { return {a, b, c}; }
    bool valid() const;
    // Index of the longest side, ties broken toward the smaller index.
    int longest() const;
};

// Classification of the curve circumscribing a triangle: a metric circle
// (centered or not), the horocyclic boundary between circles and equidistant
// curves, or an equidistant curve. The circumradius is finite only for the
// three cyclic classes.
enum class CircumKind {
    Centered,
    Semicyclic,
    NonCenteredCyclic,
    HorocyclicBoundary,
    Equidistant,
};

struct CircumClass {
    CircumKind kind;
    double radius;  // NaN for HorocyclicBoundary / Equidistant
    int longest;    // index of the longest side
};

const char* circum_kind_name(CircumKind k);

// Interior angle opposite the selected side, by the hyperbolic law of cosines.
double interior_angle(const TriangleShape& shape, int opposite);

// Interior angle at either finite vertex of the horocyclic ideal triangle with
// finite side length d: arcsin(1/cosh(d/2)).
double horocyclic_angle(double d);

// Area as the angle defect pi - alpha - beta - gamma.
double triangle_area(const TriangleShape& shape);

// Area of a horocyclic ideal triangle, pi - 2*horocyclic_angle(d).
double horocyclic_triangle_area(double d);

// Circumscribed-curve classification and radius, from the chord relation
// sinh(l/2) = sinh(J) sin(theta) and bisection on the branch equations.
CircumClass circumdata(const TriangleShape& shape);

// d(area)/d(side): closed form sqrt(1/cosh^2(d/2) - 1/cosh^2 J) on cyclic
// shapes (negative exactly for the longest side of a non-centered shape),
// analytic angle-defect differentiation otherwise.
double area_partial(const TriangleShape& shape, int side);

// d/dd of horocyclic_triangle_area: exactly 1/cosh(d/2).
double horocyclic_area_partial(double d);

// Tolerances for the codimension-one classification loci.
namespace tol {
inline constexpr double kClassify = 1e-9;    // semicyclic / horocyclic detection
inline constexpr double kBisection = 1e-12;  // circumradius refinement
}  // namespace tol

}  // namespace hsurf
