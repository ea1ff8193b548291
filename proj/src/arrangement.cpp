#include "trop/arrangement.hpp"

#include <algorithm>
#include <set>

namespace trop {

Arrangement::Arrangement(std::vector<TropLine> lines) : lines_(std::move(lines)) {
    if (lines_.empty()) throw Error("empty arrangement");
    std::set<Point> centers;
    size_t coloured_count = 0;
    for (const auto& l : lines_) {
        if (!centers.insert(l.center).second) throw Error("duplicate centers");
        if (l.colour) ++coloured_count;
    }
    if (coloured_count != 0 && coloured_count != lines_.size())
        throw Error("partially coloured arrangement");
    coloured_ = coloured_count == lines_.size();
}

std::vector<Point> arrangement_vertices(const Arrangement& arr) {
    std::set<Point> verts;
    const auto& ls = arr.lines();
    for (const auto& l : ls) verts.insert(l.center);
    for (size_t i = 0; i < ls.size(); ++i) {
        for (size_t j = i + 1; j < ls.size(); ++j) {
            PointOrOverlap r = intersect(ls[i], ls[j]);
            if (auto* p = std::get_if<Point>(&r)) verts.insert(*p);
        }
    }
    return {verts.begin(), verts.end()};
}

LocalProfile local_profile(const Arrangement& arr, const Point& p) {
    LocalProfile prof;
    for (const auto& l : arr.lines()) {
        auto axes = line_contains(l, p);
        if (!axes) continue;
        if (axes->size() == 3) {
            ++prof.c;
        } else {
            switch (*axes->begin()) {
                case Axis::E1: ++prof.w1; break;
                case Axis::E2: ++prof.w2; break;
                case Axis::E3: ++prof.w3; break;
            }
        }
    }
    if (prof.lines_through() == 0) throw Error("point on no line");
    return prof;
}

std::vector<Point> ordinary_points(const Arrangement& arr) {
    std::vector<Point> out;
    for (const Point& v : arrangement_vertices(arr)) {
        int count = 0;
        for (const auto& l : arr.lines())
            if (line_contains(l, v)) ++count;
        if (count == 2) out.push_back(v);
    }
    return out;
}

std::vector<Point> monochromatic_points(const Arrangement& arr) {
    if (!arr.coloured()) throw Error("uncoloured arrangement");
    std::vector<Point> out;
    for (const Point& v : arrangement_vertices(arr)) {
        int count = 0;
        std::set<Colour> cols;
        for (const auto& l : arr.lines()) {
            if (line_contains(l, v)) {
                ++count;
                cols.insert(*l.colour);
            }
        }
        if (count >= 2 && cols.size() == 1) out.push_back(v);
    }
    return out;
}

}  // namespace trop
