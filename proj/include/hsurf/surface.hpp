#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hsurf/model.hpp"

namespace hsurf {

// A slot is one side of one face. Compact faces have three compact slots
// (slot i runs from vertex i to vertex i+1 counterclockwise). Cusp faces have
// the chord slot 0 (vertex 0 -> vertex 1), the outgoing ideal slot 1
// (vertex 1 -> ideal) and the incoming ideal slot 2 (ideal -> vertex 0).
struct SlotRef {
    int face = -1;
    int slot = -1;
    bool operator==(const SlotRef&) const = default;
};

// One-vertex triangulated surface combinatorics. Compact-slot gluing is
// implicit: each compact edge index appears in exactly two slots. Ideal-slot
// gluing is given by the cusp cycles: consecutive faces in a cycle are glued
// outgoing-to-incoming, wrapping around.
struct CombTriangulation {
    struct Face {
        bool cusp = false;
        // compact: edge index per slot; cusp: edges[0] is the chord, rest -1
        std::array<int, 3> edges{-1, -1, -1};
    };
    std::vector<Face> faces;
    std::vector<std::string> edge_names;      // one per compact edge
    std::vector<std::string> face_names;      // parallel to faces
    std::vector<std::vector<int>> cusp_cycles;

    int edge_count() const { return static_cast<int>(edge_names.size()); }
    int face_count() const { return static_cast<int>(faces.size()); }
    // The two slots carrying a compact edge (validated triangulations only).
    std::array<SlotRef, 2> edge_slots(int edge) const;
    SlotRef partner(SlotRef s) const;  // glued slot, compact or ideal
    std::string describe(SlotRef s) const;
};

using LengthVector = std::vector<double>;

struct MarkedSurface {
    CombTriangulation tri;
    LengthVector lengths;

    FaceGeometry face_geometry(int face) const;
};

struct SurfaceTopology {
    int genus = 0;
    int cusps = 0;
};

// Check all structural invariants; returns genus and cusp count.
// Violations raise Validation errors naming the offending face or slot.
SurfaceTopology validate(const CombTriangulation& tri);

// Total corner angle at the marked vertex. Also recomputes the sum as
// sum over faces of (pi - area) and checks agreement to 1e-12.
double angle_sum(const MarkedSurface& s);

// Strict triangle inequalities on every compact face.
bool lengths_admissible(const MarkedSurface& s);

// Membership in the deformation space: admissible lengths and
// |angle_sum - 2 pi| <= 1e-10.
bool in_deformation_space(const MarkedSurface& s);

// Adjust the single length `edge` so that angle_sum = target (2 pi), leaving
// the rest fixed. Requires a non-degenerate coefficient at the current point.
LengthVector solve_dependent_length(const MarkedSurface& s, int edge, double target);

// Like solve_dependent_length but ties a set of edges to one common value.
// Used by the cell-shrinking flow where all tessellation edges move together.
LengthVector solve_dependent_common(const MarkedSurface& s, const std::vector<int>& edges, double target);

// A based homotopy class: start at a corner of a face, cross the listed slots
// of the current face in order, end at a corner of the final face.
struct SlotPath {
    int start_face = 0;
    int start_corner = 0;  // finite vertex index of the face
    std::vector<int> crossings;
    int end_corner = 0;
};

// Geodesic length of the arc class: the distance between the basepoint lift
// and the endpoint lift of the development along the path.
double arc_length_in_class(const MarkedSurface& s, const SlotPath& path);

namespace tol {
inline constexpr double kMembership = 1e-10;  // accepted |A_x - 2 pi|
inline constexpr double kProjection = 1e-12;  // maintained by the solver
}  // namespace tol

}  // namespace hsurf
