#pragma once

#include <vector>

#include "trop/core.hpp"

namespace trop {

// Local picture of an arrangement at a vertex p: c lines centered at p and
// w_i lines with p strictly on the open e_i ray.
struct LocalProfile {
    int c = 0;
    int w1 = 0;
    int w2 = 0;
    int w3 = 0;

    int lines_through() const { return c + w1 + w2 + w3; }
    friend bool operator==(const LocalProfile&, const LocalProfile&) = default;
};

// A finite list of tropical lines with pairwise distinct centers. Colours
// are all-or-nothing: either every line is coloured or none is.
class Arrangement {
public:
    explicit Arrangement(std::vector<TropLine> lines);

    const std::vector<TropLine>& lines() const { return lines_; }
    size_t size() const { return lines_.size(); }
    bool coloured() const { return coloured_; }

private:
    std::vector<TropLine> lines_;
    bool coloured_ = false;
};

// Centers plus all isolated pairwise intersection points, sorted. Overlap
// rays of coaxial-center pairs contribute no points beyond their endpoint
// center (which is one of the two centers).
std::vector<Point> arrangement_vertices(const Arrangement& arr);

// Throws Error("point on no line") if p is not on any line of arr.
LocalProfile local_profile(const Arrangement& arr, const Point& p);

// Vertices lying on exactly two lines (membership by line, not by ray).
std::vector<Point> ordinary_points(const Arrangement& arr);

// Vertices on >= 2 lines, all of one colour.
// Throws Error("uncoloured arrangement") unless every line is coloured.
std::vector<Point> monochromatic_points(const Arrangement& arr);

}  // namespace trop
