#pragma once

#include <map>

#include "trop/newton.hpp"

namespace trop {

struct PointConfig {
    std::vector<Point> points;
    std::map<Point, Colour> colours;  // empty, or one entry per point

    void validate() const;  // distinct points, colour map total when nonempty
    bool coloured() const { return !colours.empty(); }
};

// Points of cfg on the line.
std::vector<Point> members_on(const TropLine& line, const PointConfig& cfg);

// True when some single tropical line contains all points.
bool tropically_collinear(const PointConfig& cfg);

// A tropical line through exactly two points of cfg. Coaxial branch: take a
// maximal coaxial class, map its axis onto the e1 direction, and separate the
// two extreme members with a line centered just below the second-highest one
// (offset = half the least positive coordinate gap). Non-coaxial branch:
// dualize, locate a parallelogram of the Newton subdivision, and dualize its
// generating ordinary point back. Deterministic: among verified candidates
// the lexicographically least center wins.
// Errors: fewer than 3 points; 3 collinear points ("no ordinary line guaranteed").
TropLine determines_ordinary_line(const PointConfig& cfg);

// n-3 when 3 divides n, n-1 otherwise.
int ordinary_line_count_lower_bound(int n);

}  // namespace trop
