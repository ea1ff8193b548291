#include "trop/sg.hpp"

#include <algorithm>
#include <set>

namespace trop {

void PointConfig::validate() const {
    if (points.empty()) throw Error("empty point configuration");
    std::set<Point> s(points.begin(), points.end());
    if (s.size() != points.size()) throw Error("duplicate points");
    if (!colours.empty())
        for (const auto& p : points)
            if (!colours.count(p)) throw Error("partially coloured configuration");
}

std::vector<Point> members_on(const TropLine& line, const PointConfig& cfg) {
    std::vector<Point> out;
    for (const auto& p : cfg.points)
        if (line_contains(line, p)) out.push_back(p);
    return out;
}

bool tropically_collinear(const PointConfig& cfg) {
    const auto& ps = cfg.points;
    if (ps.size() <= 2) return true;
    // a non-coaxial pair determines a unique line
    for (size_t i = 0; i < ps.size(); ++i)
        for (size_t j = i + 1; j < ps.size(); ++j) {
            if (coaxial(ps[i], ps[j])) continue;
            auto lf = line_through(ps[i], ps[j]);
            const TropLine& l = std::get<TropLine>(lf);
            return members_on(l, cfg).size() == ps.size();
        }
    // all pairs coaxial: a common line exists iff all pairs share one relation
    Axis first = *coaxial(ps[0], ps[1]);
    for (size_t i = 0; i < ps.size(); ++i)
        for (size_t j = i + 1; j < ps.size(); ++j)
            if (*coaxial(ps[i], ps[j]) != first) return false;
    return true;
}

int ordinary_line_count_lower_bound(int n) {
    if (n < 1) throw Error("ordinary_line_count_lower_bound: n < 1");
    return n % 3 == 0 ? n - 3 : n - 1;
}

namespace {

struct Mat2 {
    // integer 2x2, applied as column-vector transform
    long long a, b, c, d;
    Point apply(const Point& p) const { return Point(a * p.x + b * p.y, c * p.x + d * p.y); }
};

// The linear symmetries exchanging the given axis with e1 (identity for E1).
// Both are involutions.
Mat2 axis_to_e1(Axis ax) {
    switch (ax) {
        case Axis::E1: return {1, 0, 0, 1};
        case Axis::E2: return {-1, 0, -1, 1};  // e1 <-> e2, e3 fixed
        case Axis::E3: return {1, -1, 0, -1};  // e1 <-> e3, e2 fixed
    }
    return {1, 0, 0, 1};
}

// Separating line for the coaxial class on the given axis, in original
// coordinates; engaged only if it verifies to exactly two members.
std::optional<TropLine> coaxial_candidate(const PointConfig& cfg, Axis ax,
                                          const std::vector<Point>& cls) {
    Mat2 M = axis_to_e1(ax);
    std::vector<Point> all;
    for (const auto& p : cfg.points) all.push_back(M.apply(p));
    std::vector<Point> cls_t;
    for (const auto& p : cls) cls_t.push_back(M.apply(p));
    // class now lies on the diagonal y = x + k
    Rat k = cls_t.front().y - cls_t.front().x;
    std::vector<Rat> lambdas;
    for (const auto& p : cls_t) lambdas.push_back(p.x);
    std::sort(lambdas.begin(), lambdas.end());
    Rat l2 = lambdas[lambdas.size() - 2];  // second highest
    std::optional<Rat> min_gap;
    for (const auto& q : all) {
        for (const Rat& coord : {q.x, q.y - k}) {
            Rat gap = l2 - coord;
            if (gap > 0 && (!min_gap || gap < *min_gap)) min_gap = gap;
        }
    }
    Rat eps = min_gap ? *min_gap / 2 : Rat(1);
    Point center_t(l2 - eps, l2 - eps + k);
    Point center = M.apply(center_t);  // involution maps back
    TropLine cand(center);
    if (members_on(cand, cfg).size() != 2) return std::nullopt;
    return cand;
}

}  // namespace

TropLine determines_ordinary_line(const PointConfig& cfg) {
    cfg.validate();
    const auto& ps = cfg.points;
    if (ps.size() < 3) throw Error("too few points");
    if (ps.size() == 3 && tropically_collinear(cfg)) throw Error("no ordinary line guaranteed");

    // maximal coaxial classes per axis relation
    std::map<std::pair<Axis, Rat>, std::vector<Point>> classes;
    for (const auto& p : ps) {
        classes[{Axis::E2, p.y}].push_back(p);
        classes[{Axis::E3, p.x}].push_back(p);
        classes[{Axis::E1, p.y - p.x}].push_back(p);
    }
    std::optional<TropLine> best;
    bool any_coaxial = false;
    for (const auto& [ak, cls] : classes) {
        if (cls.size() < 2) continue;
        any_coaxial = true;
        auto cand = coaxial_candidate(cfg, ak.first, cls);
        if (cand && (!best || cand->center < best->center)) best = cand;
    }
    if (any_coaxial) {
        if (!best) throw Error("determines_ordinary_line: coaxial construction failed");
        return *best;
    }

    // no coaxial pair: dualize and search parallelograms
    std::vector<TropLine> duals;
    for (const auto& p : ps) duals.push_back(dual_point(p));
    BuiltSubdivision built = build_subdivision(Arrangement(duals));
    for (size_t fi = 0; fi < built.sub.faces().size(); ++fi) {
        const auto& prof = built.sub.faces()[fi].profile;
        if (!prof) continue;
        int nz = (prof->w1 ? 1 : 0) + (prof->w2 ? 1 : 0) + (prof->w3 ? 1 : 0);
        if (prof->c != 0 || nz != 2) continue;
        TropLine cand = dual_point(built.face_vertex[fi]);
        if (members_on(cand, cfg).size() != 2) continue;
        if (!best || cand.center < best->center) best = cand;
    }
    if (!best) throw Error("determines_ordinary_line: no ordinary line found");
    return *best;
}

}  // namespace trop
