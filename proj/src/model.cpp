#include "hsurf/model.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hsurf/error.hpp"

namespace hsurf {

namespace {

const double kPi = std::acos(-1.0);

// Minkowski cross product: B(lcross(u,v), w) = det(u, v, w).
std::array<double, 3> lcross(double ux, double uy, double uz, double vx, double vy, double vz) {
    return {uy * vz - uz * vy, uz * vx - ux * vz, -(ux * vy - uy * vx)};
}

double clamp_unit(double x) { return std::clamp(x, -1.0, 1.0); }

}  // namespace

ModelPoint ModelPoint::finite(double x, double y) {
    ModelPoint p;
    p.x = x;
    p.y = y;
    p.z = std::sqrt(1 + x * x + y * y);
    p.ideal = false;
    return p;
}

double minkowski(const ModelPoint& u, const ModelPoint& v) {
    return u.x * v.x + u.y * v.y - u.z * v.z;
}

ModelPoint renormalized(ModelPoint p) {
    if (p.ideal) {
        if (!(p.z > 0)) fail(ErrorKind::Numeric, "renormalized: ideal point with non-positive z");
        p.x /= p.z;
        p.y /= p.z;
        p.z = 1;
        const double r = std::hypot(p.x, p.y);
        p.x /= r;
        p.y /= r;
        return p;
    }
    const double n = -minkowski(p, p);
    if (!(n > 0)) fail(ErrorKind::Numeric, "renormalized: point left the hyperboloid");
    const double s = 1.0 / std::sqrt(n);
    p.x *= s;
    p.y *= s;
    p.z *= s;
    return p;
}

double distance(const ModelPoint& p, const ModelPoint& q) {
    if (p.ideal || q.ideal) fail(ErrorKind::Domain, "distance: ideal endpoint");
    return std::acosh(std::max(1.0, -minkowski(p, q)));
}

Tangent direction(const ModelPoint& p, const ModelPoint& q) {
    const double bpq = minkowski(p, q);
    Tangent t{q.x + bpq * p.x, q.y + bpq * p.y, q.z + bpq * p.z};
    // B(t,t) = sinh^2(d) for finite q, B(p,q)^2 for ideal q
    const double n = q.ideal ? -bpq : std::sqrt(std::max(0.0, bpq * bpq - 1));
    if (!(n > 1e-300)) fail(ErrorKind::Domain, "direction: coincident points");
    t.x /= n;
    t.y /= n;
    t.z /= n;
    return t;
}

Tangent rotate(const ModelPoint& p, const Tangent& t, double angle) {
    const auto n = lcross(p.x, p.y, p.z, t.x, t.y, t.z);
    const double c = std::cos(angle), s = std::sin(angle);
    return {c * t.x + s * n[0], c * t.y + s * n[1], c * t.z + s * n[2]};
}

ModelPoint geodesic_point(const ModelPoint& p, const Tangent& t, double s) {
    const double ch = std::cosh(s), sh = std::sinh(s);
    ModelPoint q;
    q.x = ch * p.x + sh * t.x;
    q.y = ch * p.y + sh * t.y;
    q.z = ch * p.z + sh * t.z;
    q.ideal = false;
    return renormalized(q);
}

ModelPoint ideal_endpoint(const ModelPoint& p, const Tangent& t) {
    ModelPoint q;
    q.x = p.x + t.x;
    q.y = p.y + t.y;
    q.z = p.z + t.z;
    q.ideal = true;
    return renormalized(q);
}

double orientation(const ModelPoint& p, const ModelPoint& q, const ModelPoint& r) {
    const auto c = lcross(p.x, p.y, p.z, q.x, q.y, q.z);
    return c[0] * r.x + c[1] * r.y - c[2] * r.z;
}

double cusp_chord_length(double theta, double y0, double y1) {
    if (!(y0 >= 1 && y1 >= 1 && theta >= 0))
        fail(ErrorKind::Domain, "cusp_chord_length: need theta >= 0 and y0, y1 >= 1");
    if (theta == 0 && y0 == y1)
        fail(ErrorKind::Domain, "cusp_chord_length: coincident points");
    return std::acosh(std::max(1.0, (theta * theta + y0 * y0 + y1 * y1) / (2 * y0 * y1)));
}

namespace {

double angle_between(const ModelPoint& at, const ModelPoint& u, const ModelPoint& v) {
    const Tangent tu = direction(at, u);
    const Tangent tv = direction(at, v);
    return std::acos(clamp_unit(tu.x * tv.x + tu.y * tv.y - tu.z * tv.z));
}

}  // namespace

double point_segment_distance(const ModelPoint& p, const ModelPoint& a, const ModelPoint& b) {
    if (p.ideal) fail(ErrorKind::Domain, "point_segment_distance: query point must be finite");
    if (a.ideal && b.ideal) fail(ErrorKind::Domain, "point_segment_distance: segment has two ideal ends");
    if (a.ideal) return point_segment_distance(p, b, a);

    const double la = distance(p, a);
    if (la < 1e-13) return la;

    if (b.ideal) {
        // Ray from a toward the ideal point: the foot is interior exactly when
        // the angle at a is acute.
        const double phi = angle_between(a, p, b);
        if (phi >= kPi / 2) return la;
        return std::asinh(std::sinh(la) * std::sin(phi));
    }

    const double lb = distance(p, b);
    if (lb < 1e-13) return lb;
    const double lab = distance(a, b);
    if (lab < 1e-12) fail(ErrorKind::Domain, "point_segment_distance: endpoints coincide");

    const double ta = angle_between(a, p, b);
    if (ta >= kPi / 2) return la;
    const double tb = angle_between(b, p, a);
    if (tb >= kPi / 2) return lb;
    return std::asinh(std::sinh(la) * std::sin(ta));
}

std::pair<ModelPoint, ModelPoint> slot_endpoints(const PlacedFace& f, bool cusp, int slot) {
    if (cusp) {
        switch (slot) {
            case 0: return {f[0], f[1]};
            case 1: return {f[1], f[2]};
            case 2: return {f[2], f[0]};
        }
    } else {
        return {f[slot], f[(slot + 1) % 3]};
    }
    fail(ErrorKind::Domain, "slot_endpoints: bad slot");
}

namespace {

// Interior angle of the face described by g at a given vertex.
double vertex_angle(const FaceGeometry& g, int vertex) {
    if (g.cusp) {
        if (vertex >= 2) fail(ErrorKind::Domain, "vertex_angle: ideal vertex");
        return horocyclic_angle(g.len[0]);
    }
    TriangleShape s{g.len[0], g.len[1], g.len[2]};
    // the side not containing `vertex` is side (vertex+1)
    return interior_angle(s, (vertex + 1) % 3);
}

void check_shared_length(double placed_len, double new_len) {
    if (std::abs(placed_len - new_len) > 1e-9 * (1 + std::abs(new_len)))
        fail(ErrorKind::Domain, "place_adjacent: shared edge lengths disagree (" +
                                    std::to_string(placed_len) + " vs " + std::to_string(new_len) + ")");
}

}  // namespace

PlacedFace place_first(const FaceGeometry& g) {
    PlacedFace f;
    f[0] = ModelPoint::origin();
    const Tangent ex{1, 0, 0};
    if (g.cusp) {
        f[1] = geodesic_point(f[0], ex, g.len[0]);
        f[2] = ideal_endpoint(f[0], rotate(f[0], ex, horocyclic_angle(g.len[0])));
        return f;
    }
    f[1] = geodesic_point(f[0], ex, g.len[0]);
    const double a0 = vertex_angle(g, 0);
    f[2] = geodesic_point(f[0], rotate(f[0], ex, a0), g.len[2]);
    return f;
}

PlacedFace place_adjacent(const PlacedFace& placed, int slot, const FaceGeometry& g, int nslot) {
    // Shared edge in the placed face's boundary order; the new face traverses
    // it in the opposite direction, so its slot start lands at Q.
    const bool placed_cusp = placed[2].ideal;
    auto [P, Q] = slot_endpoints(placed, placed_cusp, slot);

    PlacedFace f;
    if (!g.cusp) {
        if (P.ideal || Q.ideal) fail(ErrorKind::Domain, "place_adjacent: compact face on an ideal edge");
        check_shared_length(distance(P, Q), g.len[nslot]);
        const int s = nslot, e = (nslot + 1) % 3, third = (nslot + 2) % 3;
        f[s] = Q;
        f[e] = P;
        // At the slot's start vertex, rotating the outgoing edge direction ccw
        // by the interior angle gives the direction to the previous vertex.
        const Tangent out = direction(Q, P);
        const Tangent d3 = rotate(Q, out, vertex_angle(g, s));
        f[third] = geodesic_point(Q, d3, g.len[third]);
        return f;
    }

    const double delta = horocyclic_angle(g.len[0]);
    switch (nslot) {
        case 0: {  // chord: vertices 0 -> 1
            if (P.ideal || Q.ideal) fail(ErrorKind::Domain, "place_adjacent: chord glued to an ideal edge");
            check_shared_length(distance(P, Q), g.len[0]);
            f[0] = Q;
            f[1] = P;
            f[2] = ideal_endpoint(Q, rotate(Q, direction(Q, P), delta));
            return f;
        }
        case 1: {  // vertex 1 -> ideal
            if (!P.ideal || Q.ideal) fail(ErrorKind::Domain, "place_adjacent: slot 1 needs (finite, ideal) edge");
            f[1] = Q;
            f[2] = P;
            f[0] = geodesic_point(Q, rotate(Q, direction(Q, P), delta), g.len[0]);
            return f;
        }
        case 2: {  // ideal -> vertex 0
            if (P.ideal || !Q.ideal) fail(ErrorKind::Domain, "place_adjacent: slot 2 needs (ideal, finite) edge");
            f[0] = P;
            f[2] = Q;
            f[1] = geodesic_point(P, rotate(P, direction(P, Q), -delta), g.len[0]);
            return f;
        }
    }
    fail(ErrorKind::Domain, "place_adjacent: bad slot");
}

}  // namespace hsurf
