#pragma once

#include <optional>
#include <set>
#include <variant>
#include <vector>

#include "trop/rational.hpp"

namespace trop {

// A tropical line is the corner locus of max{x-a, y-b, 0}. It consists of a
// center (a,b) and three closed rays in the directions of the tropical basis
// vectors e1=(1,1), e2=(-1,0), e3=(0,-1).
enum class Axis { E1, E2, E3 };
enum class Colour { Red, Blue };

constexpr Colour other(Colour c) { return c == Colour::Red ? Colour::Blue : Colour::Red; }

struct IVec {
    int x = 0;
    int y = 0;
    friend bool operator==(const IVec&, const IVec&) = default;
};

// e1, e2, e3
IVec axis_direction(Axis a);

struct Point {
    Rat x;
    Rat y;

    Point() = default;
    Point(Rat px, Rat py) : x(std::move(px)), y(std::move(py)) {}

    friend bool operator==(const Point& a, const Point& b) { return a.x == b.x && a.y == b.y; }
    friend bool operator!=(const Point& a, const Point& b) { return !(a == b); }
    // lexicographic (x, then y)
    friend bool operator<(const Point& a, const Point& b) {
        if (a.x != b.x) return a.x < b.x;
        return a.y < b.y;
    }
    Point operator+(const Point& o) const { return {x + o.x, y + o.y}; }
    Point operator-(const Point& o) const { return {x - o.x, y - o.y}; }
};

struct TropLine {
    Point center;
    std::optional<Colour> colour;

    TropLine() = default;
    explicit TropLine(Point c, std::optional<Colour> col = std::nullopt)
        : center(std::move(c)), colour(col) {}
};

using AxisSet = std::set<Axis>;

// Axes of `line` whose closed ray contains p; disengaged when p is not on the
// line. The result is all three axes exactly when p is the center.
std::optional<AxisSet> line_contains(const TropLine& line, const Point& p);

// Two distinct points are coaxial when some tropical line contains both on a
// single axis: equal y (E2), equal x (E3), or difference parallel to (1,1)
// (E1). The three cases are mutually exclusive for distinct points.
// Throws Error("degenerate pair") when p == q.
std::optional<Axis> coaxial(const Point& p, const Point& q);

// The one-parameter family of lines through a coaxial pair. Valid centers
// form the ray {start + t*dir : t >= 0}; `start` is the canonical
// representative (the unique member whose center is one of the two points;
// it is also the lexicographically least valid center for E2/E3 families).
struct CoaxialFamily {
    Axis axis;
    Point start;
    IVec dir;

    TropLine canonical() const { return TropLine(start); }
    // Center of the family member with parameter t (t >= 0).
    Point center_at(const Rat& t) const;
    bool contains_center(const Point& c) const;
};

using LineOrFamily = std::variant<TropLine, CoaxialFamily>;

// Containment-reversing involution: (a,b) <-> line centered at (-a,-b).
TropLine dual_point(const Point& p);
Point dual_line(const TropLine& l);

// The unique line through two non-coaxial points, found by enumerating the
// axis assignments for p and q; a CoaxialFamily when the points are coaxial.
// Throws Error("degenerate pair") when p == q.
LineOrFamily line_through(const Point& p, const Point& q);

// Overlap of two lines with coaxial centers: the shared rays agree on the
// unbounded ray {start + t*axis_direction : t >= 0}.
struct AxisOverlap {
    Axis axis;
    Point start;  // the center lying farther along the shared direction
    Point center1;
    Point center2;
};

using PointOrOverlap = std::variant<Point, AxisOverlap>;

// Intersection of two distinct lines: a unique point when the centers are
// not coaxial (computed by enumerating the nine ray pairs), otherwise the
// overlap descriptor. Throws Error("identical lines") on equal centers.
PointOrOverlap intersect(const TropLine& l1, const TropLine& l2);

}  // namespace trop
