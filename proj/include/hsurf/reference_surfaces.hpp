#pragma once

#include "hsurf/surface.hpp"

namespace hsurf {

// Side length of the equilateral triangle with interior angle pi/9: eighteen
// such corners close up around one vertex.
double genus2_equilateral_side();

// Chord length making four horocyclic ideal triangles close up: the corner
// angle is pi/4, so the chord is 2 arccosh(sqrt 2).
double punctured_torus_side();

// Genus-2 surface from six equilateral triangles (one-vertex octagon
// triangulation): 9 edges, angle sum exactly 2 pi at the given side length.
MarkedSurface make_genus2_equilateral(double side = genus2_equilateral_side());

// Once-punctured torus made of four horocyclic ideal triangles over two
// compact edges, one cusp cycle (a, b, a, b).
MarkedSurface make_punctured_torus(double a = punctured_torus_side(),
                                   double b = punctured_torus_side());

// Genus-2 surface whose Delaunay tessellation has one cyclic quadrilateral
// cell (two semicyclic faces over a shared diameter diagonal) and four
// equilateral triangle cells, with all eight tessellation edges equal.
MarkedSurface make_genus2_quadcell();

}  // namespace hsurf
