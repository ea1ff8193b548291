#include "trop/core.hpp"

#include <array>
#include <cctype>

namespace trop {

std::string rat_to_string(const Rat& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) {
        s += "/";
        s += denominator(r).str();
    }
    return s;
}

Rat rat_from_string(std::string_view s) {
    auto fail = [&] { throw ParseError("invalid rational: '" + std::string(s) + "'"); };
    size_t i = 0;
    bool neg = false;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) {
        neg = s[i] == '-';
        ++i;
    }
    auto digits = [&](size_t& k) {
        size_t begin = k;
        while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) ++k;
        if (k == begin) fail();
        return std::string(s.substr(begin, k - begin));
    };
    std::string num = digits(i);
    std::string den = "1";
    if (i < s.size()) {
        if (s[i] != '/') fail();
        ++i;
        den = digits(i);
        if (i != s.size()) fail();
    }
    Int n(num), d(den);
    if (d == 0) fail();
    Rat r(n, d);
    return neg ? Rat(-r) : r;
}

IVec axis_direction(Axis a) {
    switch (a) {
        case Axis::E1: return {1, 1};
        case Axis::E2: return {-1, 0};
        case Axis::E3: return {0, -1};
    }
    return {};
}

std::optional<AxisSet> line_contains(const TropLine& line, const Point& p) {
    const Point& c = line.center;
    AxisSet axes;
    // E1: p = c + t(1,1), t >= 0
    if (p.x - c.x == p.y - c.y && p.x >= c.x) axes.insert(Axis::E1);
    // E2: p = c + t(-1,0), t >= 0
    if (p.y == c.y && p.x <= c.x) axes.insert(Axis::E2);
    // E3: p = c + t(0,-1), t >= 0
    if (p.x == c.x && p.y <= c.y) axes.insert(Axis::E3);
    if (axes.empty()) return std::nullopt;
    return axes;
}

std::optional<Axis> coaxial(const Point& p, const Point& q) {
    if (p == q) throw Error("degenerate pair");
    if (p.y == q.y) return Axis::E2;
    if (p.x == q.x) return Axis::E3;
    if (p.x - q.x == p.y - q.y) return Axis::E1;
    return std::nullopt;
}

Point CoaxialFamily::center_at(const Rat& t) const {
    return {start.x + t * dir.x, start.y + t * dir.y};
}

bool CoaxialFamily::contains_center(const Point& c) const {
    Point d = c - start;
    if (dir.x == 0) return d.x == 0 && (dir.y > 0 ? d.y >= 0 : d.y <= 0);
    if (dir.y == 0) return d.y == 0 && (dir.x > 0 ? d.x >= 0 : d.x <= 0);
    if (d.x * dir.y != d.y * dir.x) return false;
    Rat t = d.x / dir.x;
    return t >= 0;
}

TropLine dual_point(const Point& p) { return TropLine(Point(-p.x, -p.y)); }

Point dual_line(const TropLine& l) { return Point(-l.center.x, -l.center.y); }

namespace {

// Center constraints for "p lies on the closed ray along `axis`":
// E1: c.x - c.y == p.x - p.y and c.x <= p.x
// E2: c.y == p.y and c.x >= p.x
// E3: c.x == p.x and c.y >= p.y
bool center_valid(const Point& c, const Point& p, Axis axis) {
    switch (axis) {
        case Axis::E1: return c.x - c.y == p.x - p.y && c.x <= p.x;
        case Axis::E2: return c.y == p.y && c.x >= p.x;
        case Axis::E3: return c.x == p.x && c.y >= p.y;
    }
    return false;
}

std::optional<Point> solve_center(const Point& p, Axis ap, const Point& q, Axis aq) {
    if (ap == aq) return std::nullopt;
    Point c;
    if (ap == Axis::E1 && aq == Axis::E2) {
        c = Point((p.x - p.y) + q.y, q.y);
    } else if (ap == Axis::E1 && aq == Axis::E3) {
        c = Point(q.x, q.x - (p.x - p.y));
    } else if (ap == Axis::E2 && aq == Axis::E1) {
        c = Point((q.x - q.y) + p.y, p.y);
    } else if (ap == Axis::E2 && aq == Axis::E3) {
        c = Point(q.x, p.y);
    } else if (ap == Axis::E3 && aq == Axis::E1) {
        c = Point(p.x, p.x - (q.x - q.y));
    } else {  // E3, E2
        c = Point(p.x, q.y);
    }
    if (center_valid(c, p, ap) && center_valid(c, q, aq)) return c;
    return std::nullopt;
}

}  // namespace

LineOrFamily line_through(const Point& p, const Point& q) {
    if (p == q) throw Error("degenerate pair");
    if (auto ax = coaxial(p, q)) {
        CoaxialFamily fam;
        fam.axis = *ax;
        switch (*ax) {
            case Axis::E2:
                fam.start = Point(p.x > q.x ? p.x : q.x, p.y);
                fam.dir = {1, 0};
                break;
            case Axis::E3:
                fam.start = Point(p.x, p.y > q.y ? p.y : q.y);
                fam.dir = {0, 1};
                break;
            case Axis::E1:
                fam.start = p.x < q.x ? p : q;
                fam.dir = {-1, -1};
                break;
        }
        return fam;
    }
    static constexpr std::array<Axis, 3> kAxes = {Axis::E1, Axis::E2, Axis::E3};
    std::optional<Point> found;
    for (Axis ap : kAxes) {
        for (Axis aq : kAxes) {
            auto c = solve_center(p, ap, q, aq);
            if (!c) continue;
            if (found && *found != *c) throw Error("line_through: ambiguous center");
            found = c;
        }
    }
    if (!found) throw Error("line_through: no consistent center");
    return TropLine(*found);
}

PointOrOverlap intersect(const TropLine& l1, const TropLine& l2) {
    const Point& c1 = l1.center;
    const Point& c2 = l2.center;
    if (c1 == c2) throw Error("identical lines");
    if (auto ax = coaxial(c1, c2)) {
        AxisOverlap ov;
        ov.axis = *ax;
        ov.center1 = c1;
        ov.center2 = c2;
        // The overlap is the ray from the center farther along the shared
        // direction; both lines' rays continue past it.
        switch (*ax) {
            case Axis::E1: ov.start = c1.x > c2.x ? c1 : c2; break;
            case Axis::E2: ov.start = c1.x < c2.x ? c1 : c2; break;
            case Axis::E3: ov.start = c1.y < c2.y ? c1 : c2; break;
        }
        return ov;
    }
    static constexpr std::array<Axis, 3> kAxes = {Axis::E1, Axis::E2, Axis::E3};
    std::optional<Point> found;
    for (Axis a1 : kAxes) {
        for (Axis a2 : kAxes) {
            IVec d1 = axis_direction(a1), d2 = axis_direction(a2);
            Rat det = Rat(d1.x) * Rat(-d2.y) - Rat(-d2.x) * Rat(d1.y);
            if (det == 0) continue;  // parallel rays: only overlap for coaxial centers
            Point r = c2 - c1;
            Rat t = (r.x * Rat(-d2.y) - Rat(-d2.x) * r.y) / det;
            Rat s = (Rat(d1.x) * r.y - Rat(d1.y) * r.x) / det;
            if (t < 0 || s < 0) continue;
            Point pt(c1.x + t * d1.x, c1.y + t * d1.y);
            if (found && *found != pt) throw Error("intersect: ambiguous intersection");
            found = pt;
        }
    }
    if (!found) throw Error("intersect: no intersection found");
    return *found;
}

}  // namespace trop
