#pragma once

#include <array>

#include "hsurf/hypgeom.hpp"

namespace hsurf {

// Point of the hyperboloid model x^2 + y^2 - z^2 = -1, z > 0, or an ideal
// boundary point stored as a light-like representative normalized to z = 1.
struct ModelPoint {
    double x = 0, y = 0, z = 1;
    bool ideal = false;

    static ModelPoint finite(double x, double y);
    static ModelPoint origin() { return finite(0, 0); }
};

// Minkowski form of signature (+,+,-) on representatives.
double minkowski(const ModelPoint& u, const ModelPoint& v);

// Renormalize onto the hyperboloid (finite) or to z = 1 (ideal).
ModelPoint renormalized(ModelPoint p);

double distance(const ModelPoint& p, const ModelPoint& q);

// Unit tangent vector at p pointing toward q (finite or ideal). Stored in the
// same 3-vector layout; satisfies B(t,t)=1, B(p,t)=0.
struct Tangent {
    double x = 0, y = 0, z = 0;
};
Tangent direction(const ModelPoint& p, const ModelPoint& q);
Tangent rotate(const ModelPoint& p, const Tangent& t, double angle);

// exp_p(s t): the point at distance s from p along t.
ModelPoint geodesic_point(const ModelPoint& p, const Tangent& t, double s);
// Ideal endpoint of the ray from p along t.
ModelPoint ideal_endpoint(const ModelPoint& p, const Tangent& t);

// Orientation sign of the ordered triple (positive = counterclockwise).
double orientation(const ModelPoint& p, const ModelPoint& q, const ModelPoint& r);

// Geodesic distance between the half-plane points i*y0 and theta + i*y1,
// cosh l = (theta^2 + y0^2 + y1^2) / (2 y0 y1).
double cusp_chord_length(double theta, double y0, double y1);

// Distance from p to the closed geodesic segment [a,b]; b may be ideal, in
// which case the segment is the ray from a toward b.
double point_segment_distance(const ModelPoint& p, const ModelPoint& a, const ModelPoint& b);

// A placed triangle copy: vertex positions indexed by the face's own vertex
// numbering. Cusp faces carry their ideal vertex at index 2.
using PlacedFace = std::array<ModelPoint, 3>;

// Geometry of a face to be placed: three side lengths for a compact face
// (side i joins vertices i and i+1), or a chord length for a cusp face.
struct FaceGeometry {
    bool cusp = false;
    std::array<double, 3> len{0, 0, 0};  // cusp faces use len[0] only
};

// Canonical first placement: vertex 0 at the origin, vertex 1 along +x,
// the face counterclockwise.
PlacedFace place_first(const FaceGeometry& g);

// Place a neighboring copy across an edge of an already placed face.
// `slot` selects the shared edge of `placed` (side i joins vertices i, i+1 and
// for cusp faces slot 0 is the chord, slot 1 runs vertex 1 -> ideal, slot 2
// ideal -> vertex 0). The new face is attached by its own slot `nslot`, with
// the orientation convention that glued slots traverse the edge oppositely.
// Shared lengths must agree to 1e-9.
PlacedFace place_adjacent(const PlacedFace& placed, int slot, const FaceGeometry& g, int nslot);

// Endpoints of a slot of a placed face, in the face's boundary order.
std::pair<ModelPoint, ModelPoint> slot_endpoints(const PlacedFace& f, bool cusp, int slot);

}  // namespace hsurf
