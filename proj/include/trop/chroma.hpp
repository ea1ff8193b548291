#pragma once

#include "trop/sg.hpp"

namespace trop {

// Edge-coloured subdivisions: the colouring lives on NewtonSubdivision edges
// and must be total for the operations below.

// Builds the subdivision of a fully coloured arrangement and lifts each
// line's colour to the dual edges of its axis segments.
// Throws Error("overlap colour conflict") when an edge is dual to
// overlapping axes of differently coloured lines.
BuiltSubdivision lift_colours(const Arrangement& arr);

// Rule 1: all sides of a triangle P_{c,0,0,0} share one colour.
// Rule 2: antiparallel side pairs of parallelograms (c=0, two nonzero w)
// and hexagons (c=0, three nonzero w) share one colour.
// Requires a linear base and a total colouring.
bool is_plausibly_coloured(const NewtonSubdivision& sub);

// Parallelogram/hexagon faces whose sides are all one colour (face indices).
std::vector<int> monochromatic_cells(const NewtonSubdivision& sub);

// A chain made of one `lead`-coloured edge in direction -ebar1, then n
// lead-coloured ebar3 edges, m other-coloured ebar2 edges, and a final
// other-coloured -ebar1 edge.
struct Arm {
    int n = 0;
    int m = 0;
    Colour lead = Colour::Red;
    std::vector<LatticePoint> path;  // vertices, first to last
};

// All complete arm chains, both colour orientations.
std::vector<Arm> find_arms(const NewtonSubdivision& sub);

// A tropical line through >= 2 points of one colour and no points of the
// other, found through the dual subdivision's monochromatic cells.
// Throws Error("hypothesis violated") when cfg contains a coaxial pair.
TropLine determines_monochromatic_line(const PointConfig& cfg);

// Seven lines (four red, three blue centers) whose coloured arrangement has
// no monochromatic point: every unbounded edge is a red/blue axis overlap.
Arrangement coaxial_counterexample();

struct MrExhaustive {
    long long tilings = 0;
    long long colourings = 0;            // plausible colourings inspected
    long long monochromatic_free = 0;    // those avoiding mono parallelograms/hexagons
};

// Enumerates every semiuniform subdivision of Delta_n and every plausible
// two-colouring; counts the colourings with no monochromatic
// parallelogram/hexagon (none exist for n >= 4).
MrExhaustive mr_exhaustive_check(int n, int max_n = 4);

}  // namespace trop
