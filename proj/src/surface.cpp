#include "hsurf/surface.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "hsurf/error.hpp"

namespace hsurf {

namespace {
const double kPi = std::acos(-1.0);
const double kTwoPi = 2 * kPi;
}  // namespace

std::array<SlotRef, 2> CombTriangulation::edge_slots(int edge) const {
    std::array<SlotRef, 2> out{};
    int found = 0;
    for (int f = 0; f < face_count(); ++f) {
        const int nslots = faces[f].cusp ? 1 : 3;
        for (int s = 0; s < nslots; ++s) {
            if (faces[f].edges[s] == edge) {
                if (found < 2) out[found] = {f, s};
                ++found;
            }
        }
    }
    if (found != 2)
        fail(ErrorKind::Validation, "edge " + edge_names[edge] + " appears in " +
                                        std::to_string(found) + " slots, expected 2");
    return out;
}

SlotRef CombTriangulation::partner(SlotRef s) const {
    const Face& f = faces[s.face];
    if (!f.cusp || s.slot == 0) {
        const auto both = edge_slots(f.edges[s.slot]);
        return both[0] == s ? both[1] : both[0];
    }
    // ideal slots: consecutive in the cusp cycle, outgoing glued to incoming
    for (const auto& cyc : cusp_cycles) {
        const int k = static_cast<int>(cyc.size());
        for (int i = 0; i < k; ++i) {
            if (cyc[i] != s.face) continue;
            if (s.slot == 1) return {cyc[(i + 1) % k], 2};
            return {cyc[(i + k - 1) % k], 1};
        }
    }
    fail(ErrorKind::Validation, "cusp face " + face_names[s.face] + " is in no cusp cycle");
}

std::string CombTriangulation::describe(SlotRef s) const {
    return face_names[s.face] + "[" + std::to_string(s.slot) + "]";
}

FaceGeometry MarkedSurface::face_geometry(int face) const {
    const auto& f = tri.faces[face];
    FaceGeometry g;
    g.cusp = f.cusp;
    if (f.cusp) {
        g.len = {lengths[f.edges[0]], 0, 0};
    } else {
        g.len = {lengths[f.edges[0]], lengths[f.edges[1]], lengths[f.edges[2]]};
    }
    return g;
}

namespace {

// Finite corners: all three vertices of a compact face, the two chord ends of
// a cusp face. The rotation crosses the corner's outgoing slot; the next
// corner sits at the glued slot's end vertex.
struct Corner {
    int face, vertex;
    bool operator<(const Corner& o) const { return face < o.face || (face == o.face && vertex < o.vertex); }
    bool operator==(const Corner&) const = default;
};

int outgoing_slot(const CombTriangulation::Face& f, int vertex) {
    if (!f.cusp) return vertex;
    return vertex == 0 ? 0 : 1;
}

Corner corner_at_slot_end(const CombTriangulation& tri, SlotRef s) {
    const auto& f = tri.faces[s.face];
    if (!f.cusp) return {s.face, (s.slot + 1) % 3};
    switch (s.slot) {
        case 0: return {s.face, 1};
        case 2: return {s.face, 0};
    }
    fail(ErrorKind::Validation, "corner rotation crossed into an outgoing ideal slot at " + tri.describe(s));
}

}  // namespace

SurfaceTopology validate(const CombTriangulation& tri) {
    const int F = tri.face_count();
    if (F == 0) fail(ErrorKind::Validation, "empty triangulation");
    if (static_cast<int>(tri.face_names.size()) != F)
        fail(ErrorKind::Validation, "face name table size mismatch");

    // Edge indices sane; compact edges used in exactly two compact slots.
    std::vector<int> uses(tri.edge_names.size(), 0);
    int cusp_faces = 0;
    for (int f = 0; f < F; ++f) {
        const auto& face = tri.faces[f];
        const int nslots = face.cusp ? 1 : 3;
        cusp_faces += face.cusp ? 1 : 0;
        for (int s = 0; s < nslots; ++s) {
            const int e = face.edges[s];
            if (e < 0 || e >= tri.edge_count())
                fail(ErrorKind::Validation, "face " + tri.face_names[f] + " references a missing edge");
            ++uses[e];
        }
        if (face.cusp && (face.edges[1] != -1 || face.edges[2] != -1))
            fail(ErrorKind::Validation, "cusp face " + tri.face_names[f] + " lists ideal slots as compact edges");
    }
    for (int e = 0; e < tri.edge_count(); ++e)
        if (uses[e] != 2)
            fail(ErrorKind::Validation, "edge " + tri.edge_names[e] + " appears in " +
                                            std::to_string(uses[e]) + " compact slots, expected 2");

    // Cusp cycles partition the cusp faces.
    std::set<int> seen;
    for (const auto& cyc : tri.cusp_cycles) {
        if (cyc.empty()) fail(ErrorKind::Validation, "empty cusp cycle");
        for (int f : cyc) {
            if (f < 0 || f >= F || !tri.faces[f].cusp)
                fail(ErrorKind::Validation, "cusp cycle lists a non-cusp face");
            if (!seen.insert(f).second)
                fail(ErrorKind::Validation, "face " + tri.face_names[f] + " appears in two cusp cycles");
        }
    }
    if (static_cast<int>(seen.size()) != cusp_faces)
        fail(ErrorKind::Validation, "some cusp face belongs to no cusp cycle");

    // Corner rotation around the marked vertex must be one cycle.
    std::vector<Corner> all;
    for (int f = 0; f < F; ++f)
        for (int v = 0; v < (tri.faces[f].cusp ? 2 : 3); ++v) all.push_back({f, v});
    std::set<Corner> visited;
    Corner cur = all.front();
    do {
        if (!visited.insert(cur).second)
            fail(ErrorKind::Validation, "corner rotation returned early at face " + tri.face_names[cur.face]);
        const SlotRef out{cur.face, outgoing_slot(tri.faces[cur.face], cur.vertex)};
        cur = corner_at_slot_end(tri, tri.partner(out));
    } while (!(cur == all.front()));
    if (visited.size() != all.size())
        fail(ErrorKind::Validation, "corner rotation closes after " + std::to_string(visited.size()) +
                                        " of " + std::to_string(all.size()) +
                                        " corners: more than one finite vertex");

    // Euler characteristic of the compactified surface.
    const int n = static_cast<int>(tri.cusp_cycles.size());
    const int E = tri.edge_count() + cusp_faces;  // one ideal edge per cusp face
    const int chi = (1 + n) - E + F;
    if ((2 - chi) % 2 != 0) fail(ErrorKind::Validation, "odd Euler characteristic");
    const int g = (2 - chi) / 2;
    if (g < 0) fail(ErrorKind::Validation, "negative genus");
    if (2 - 2 * g - n >= 0)
        fail(ErrorKind::Validation, "(g,n) = (" + std::to_string(g) + "," + std::to_string(n) +
                                        ") admits no finite-area hyperbolic structure");
    return {g, n};
}

bool lengths_admissible(const MarkedSurface& s) {
    if (static_cast<int>(s.lengths.size()) != s.tri.edge_count()) return false;
    for (double d : s.lengths)
        if (!(d > 0) || !std::isfinite(d)) return false;
    for (int f = 0; f < s.tri.face_count(); ++f) {
        const auto& face = s.tri.faces[f];
        if (face.cusp) continue;
        TriangleShape t{s.lengths[face.edges[0]], s.lengths[face.edges[1]], s.lengths[face.edges[2]]};
        if (!t.valid()) return false;
    }
    return true;
}

double angle_sum(const MarkedSurface& s) {
    if (!lengths_admissible(s))
        fail(ErrorKind::Domain, "angle_sum: lengths violate a triangle inequality");
    double corners = 0;
    double by_area = 0;
    for (int f = 0; f < s.tri.face_count(); ++f) {
        const auto& face = s.tri.faces[f];
        if (face.cusp) {
            const double d = s.lengths[face.edges[0]];
            corners += 2 * horocyclic_angle(d);
            by_area += kPi - horocyclic_triangle_area(d);
        } else {
            TriangleShape t{s.lengths[face.edges[0]], s.lengths[face.edges[1]], s.lengths[face.edges[2]]};
            for (int v = 0; v < 3; ++v) corners += interior_angle(t, (v + 1) % 3);
            by_area += kPi - triangle_area(t);
        }
    }
    if (std::abs(corners - by_area) > 1e-12 * std::max(1.0, corners))
        fail(ErrorKind::Numeric, "angle_sum: corner and area bookkeeping disagree");
    return corners;
}

bool in_deformation_space(const MarkedSurface& s) {
    if (!lengths_admissible(s)) return false;
    return std::abs(angle_sum(s) - kTwoPi) <= tol::kMembership;
}

namespace {

// d(angle_sum)/d(length of edge k): minus the sum of the adjacent faces' area
// partials, one contribution per slot carrying k.
double angle_sum_coefficient(const MarkedSurface& s, int k) {
    double c = 0;
    for (int f = 0; f < s.tri.face_count(); ++f) {
        const auto& face = s.tri.faces[f];
        if (face.cusp) {
            if (face.edges[0] == k) c += horocyclic_area_partial(s.lengths[k]);
            continue;
        }
        TriangleShape t{s.lengths[face.edges[0]], s.lengths[face.edges[1]], s.lengths[face.edges[2]]};
        for (int slot = 0; slot < 3; ++slot)
            if (face.edges[slot] == k) c += area_partial(t, slot);
    }
    return -c;
}

// Root-solve A_x(values of `edges` tied to x) = target near the current value.
LengthVector solve_tied(const MarkedSurface& s, const std::vector<int>& edges, double target,
                        double coeff_now) {
    MarkedSurface work = s;
    auto set_all = [&](double x) {
        for (int e : edges) work.lengths[e] = x;
    };
    auto residual = [&](double x) -> std::optional<double> {
        set_all(x);
        if (!lengths_admissible(work)) return std::nullopt;
        return angle_sum(work) - target;
    };

    const double x0 = s.lengths[edges.front()];
    auto r0 = residual(x0);
    if (!r0) fail(ErrorKind::Domain, "solve_dependent_length: current lengths are inadmissible");
    if (std::abs(*r0) <= tol::kProjection) {
        set_all(x0);
        return work.lengths;
    }

    // Expand a bracket around x0 in the downhill direction first.
    double step = std::max(1e-6, 1e-3 * std::abs(*r0) / std::max(1e-12, std::abs(coeff_now)));
    double lo = x0, hi = x0;
    double rlo = *r0;
    bool bracketed = false;
    for (int it = 0; it < 200 && !bracketed; ++it) {
        for (int sgn : {+1, -1}) {
            const double cand = x0 + sgn * step;
            if (!(cand > 0)) continue;
            auto rc = residual(cand);
            if (!rc) continue;  // left U in this direction
            if ((*rc > 0) != (*r0 > 0)) {
                lo = std::min(x0, cand);
                hi = std::max(x0, cand);
                rlo = (lo == x0) ? *r0 : *rc;
                bracketed = true;
                break;
            }
        }
        step *= 2;
        if (step > 1e6) break;
    }
    if (!bracketed)
        fail(ErrorKind::Numeric, "solve_dependent_length: no admissible root (root leaves U)");

    for (int it = 0; it < 300 && hi - lo > 1e-16 * std::max(1.0, hi); ++it) {
        const double mid = 0.5 * (lo + hi);
        auto rm = residual(mid);
        if (!rm) fail(ErrorKind::Numeric, "solve_dependent_length: bracket left U");
        if ((*rm > 0) == (rlo > 0)) {
            lo = mid;
            rlo = *rm;
        } else {
            hi = mid;
        }
        if (std::abs(*rm) <= 0.25 * tol::kProjection) break;
    }
    const double root = 0.5 * (lo + hi);
    auto rf = residual(root);
    if (!rf || std::abs(*rf) > tol::kProjection)
        fail(ErrorKind::Numeric, "solve_dependent_length: solver stalled at residual " +
                                     std::to_string(rf ? *rf : std::nan("")));
    set_all(root);
    return work.lengths;
}

}  // namespace

LengthVector solve_dependent_length(const MarkedSurface& s, int edge, double target) {
    const double c = angle_sum_coefficient(s, edge);
    if (std::abs(c) <= 1e-10)
        fail(ErrorKind::Numeric, "solve_dependent_length: coefficient-degenerate at edge " +
                                     s.tri.edge_names[edge]);
    return solve_tied(s, {edge}, target, c);
}

LengthVector solve_dependent_common(const MarkedSurface& s, const std::vector<int>& edges, double target) {
    if (edges.empty()) fail(ErrorKind::Domain, "solve_dependent_common: empty edge set");
    const double ref = s.lengths[edges.front()];
    for (int e : edges)
        if (std::abs(s.lengths[e] - ref) > 1e-6 * std::max(1.0, ref))
            fail(ErrorKind::Domain, "solve_dependent_common: edges are not tied at a common value");
    double c = 0;
    for (int e : edges) c += angle_sum_coefficient(s, e);
    if (std::abs(c) <= 1e-10)
        fail(ErrorKind::Numeric, "solve_dependent_common: coefficient-degenerate");
    return solve_tied(s, edges, target, c);
}

double arc_length_in_class(const MarkedSurface& s, const SlotPath& path) {
    const int F = s.tri.face_count();
    if (path.start_face < 0 || path.start_face >= F)
        fail(ErrorKind::Domain, "arc_length_in_class: bad start face");

    auto corner_count = [&](int f) { return s.tri.faces[f].cusp ? 2 : 3; };
    if (path.start_corner < 0 || path.start_corner >= corner_count(path.start_face))
        fail(ErrorKind::Domain, "arc_length_in_class: bad start corner");

    int cur = path.start_face;
    PlacedFace place = place_first(s.face_geometry(cur));
    const ModelPoint base = place[path.start_corner];

    for (int slot : path.crossings) {
        const int nslots = s.tri.faces[cur].cusp ? 3 : 3;
        if (slot < 0 || slot >= nslots)
            fail(ErrorKind::Domain, "arc_length_in_class: disconnected path (bad slot)");
        const SlotRef other = s.tri.partner({cur, slot});
        place = place_adjacent(place, slot, s.face_geometry(other.face), other.slot);
        cur = other.face;
    }
    if (path.end_corner < 0 || path.end_corner >= corner_count(cur))
        fail(ErrorKind::Domain, "arc_length_in_class: bad end corner");
    return distance(base, place[path.end_corner]);
}

}  // namespace hsurf
