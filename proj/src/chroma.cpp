#include "trop/chroma.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace trop {

namespace {

// side s of face f: edge index plus its slot as traversed counterclockwise
struct Side {
    int edge;
    int slot;
};

std::vector<Side> face_sides(const NewtonSubdivision& sub, const SubFace& f) {
    std::vector<Side> out;
    const auto& cyc = f.cycle;
    for (size_t i = 0; i < cyc.size(); ++i) {
        LatticePoint d = cyc[(i + 1) % cyc.size()] - cyc[i];
        out.push_back({sub.edge_index(EdgeKey(cyc[i], cyc[(i + 1) % cyc.size()])), direction_slot(d)});
    }
    return out;
}

enum class CellKind { Triangle, Parallelogram, Hexagon, Other };

CellKind cell_kind(const std::optional<LocalProfile>& p) {
    if (!p) return CellKind::Other;
    if (p->c >= 1 && p->w1 == 0 && p->w2 == 0 && p->w3 == 0) return CellKind::Triangle;
    if (p->c == 0) {
        int nz = (p->w1 > 0) + (p->w2 > 0) + (p->w3 > 0);
        if (nz == 2) return CellKind::Parallelogram;
        if (nz == 3) return CellKind::Hexagon;
    }
    return CellKind::Other;
}

void require_total_colouring(const NewtonSubdivision& sub) {
    for (const auto& e : sub.edges())
        if (!e.colour) throw Error("uncoloured subdivision edge");
}

}  // namespace

BuiltSubdivision lift_colours(const Arrangement& arr) {
    if (!arr.coloured()) throw Error("uncoloured arrangement");
    BuiltSubdivision built = build_subdivision(arr);
    for (size_t ei = 0; ei < built.sub.edges().size(); ++ei) {
        std::set<Colour> cols;
        for (int li : built.edge_origin[ei].lines) cols.insert(*arr.lines()[li].colour);
        if (cols.size() != 1) throw Error("overlap colour conflict");
        built.sub.set_edge_colour(static_cast<int>(ei), *cols.begin());
    }
    return built;
}

bool is_plausibly_coloured(const NewtonSubdivision& sub) {
    if (!is_linear(sub)) throw Error("non-linear subdivision");
    require_total_colouring(sub);
    for (const auto& f : sub.faces()) {
        CellKind kind = cell_kind(f.profile);
        auto sides = face_sides(sub, f);
        if (kind == CellKind::Triangle) {
            for (const auto& s : sides)
                if (sub.edges()[s.edge].colour != sub.edges()[sides[0].edge].colour) return false;
        } else if (kind == CellKind::Parallelogram || kind == CellKind::Hexagon) {
            for (const auto& s : sides)
                for (const auto& t : sides)
                    if ((s.slot + 3) % 6 == t.slot &&
                        sub.edges()[s.edge].colour != sub.edges()[t.edge].colour)
                        return false;
        }
    }
    return true;
}

std::vector<int> monochromatic_cells(const NewtonSubdivision& sub) {
    require_total_colouring(sub);
    std::vector<int> out;
    for (size_t fi = 0; fi < sub.faces().size(); ++fi) {
        const auto& f = sub.faces()[fi];
        CellKind kind = cell_kind(f.profile);
        if (kind != CellKind::Parallelogram && kind != CellKind::Hexagon) continue;
        auto sides = face_sides(sub, f);
        bool mono = true;
        for (const auto& s : sides)
            if (sub.edges()[s.edge].colour != sub.edges()[sides[0].edge].colour) mono = false;
        if (mono) out.push_back(static_cast<int>(fi));
    }
    return out;
}

std::vector<Arm> find_arms(const NewtonSubdivision& sub) {
    require_total_colouring(sub);
    // outgoing (vertex, slot) -> (head, edge)
    std::map<std::pair<LatticePoint, int>, std::pair<LatticePoint, int>> out;
    for (size_t ei = 0; ei < sub.edges().size(); ++ei) {
        const EdgeKey& e = sub.edges()[ei].key;
        LatticePoint d = e.b - e.a;
        int s = direction_slot(d);
        out[{e.a, s}] = {e.b, static_cast<int>(ei)};
        out[{e.b, (s + 3) % 6}] = {e.a, static_cast<int>(ei)};
    }
    auto edge_colour = [&](int ei) { return *sub.edges()[ei].colour; };

    std::vector<Arm> arms;
    // slots: -ebar1 = (1,-1) -> 5; ebar3 = (1,0) -> 0; ebar2 = (0,-1) -> 4
    for (const auto& [key, to] : out) {
        if (key.second != 5) continue;
        for (Colour lead : {Colour::Red, Colour::Blue}) {
            if (edge_colour(to.second) != lead) continue;
            // walk: phase 0 = ebar3 run (lead), phase 1 = ebar2 run (other), final -ebar1 (other)
            struct State {
                LatticePoint at;
                int n, m, phase;
                std::vector<LatticePoint> path;
            };
            std::vector<State> stack{{to.first, 0, 0, 0, {key.first, to.first}}};
            while (!stack.empty()) {
                State st = stack.back();
                stack.pop_back();
                if (st.phase == 0) {
                    auto it = out.find({st.at, 0});
                    if (it != out.end() && edge_colour(it->second.second) == lead) {
                        State nx = st;
                        nx.at = it->second.first;
                        nx.n += 1;
                        nx.path.push_back(nx.at);
                        stack.push_back(nx);
                    }
                    st.phase = 1;
                    stack.push_back(st);
                    continue;
                }
                auto it = out.find({st.at, 4});
                if (it != out.end() && edge_colour(it->second.second) == other(lead)) {
                    State nx = st;
                    nx.at = it->second.first;
                    nx.m += 1;
                    nx.path.push_back(nx.at);
                    stack.push_back(nx);
                }
                auto fin = out.find({st.at, 5});
                if (fin != out.end() && edge_colour(fin->second.second) == other(lead)) {
                    Arm arm;
                    arm.n = st.n;
                    arm.m = st.m;
                    arm.lead = lead;
                    arm.path = st.path;
                    arm.path.push_back(fin->second.first);
                    arms.push_back(std::move(arm));
                }
            }
        }
    }
    return arms;
}

TropLine determines_monochromatic_line(const PointConfig& cfg) {
    cfg.validate();
    if (cfg.points.size() < 4) throw Error("too few points");
    if (!cfg.coloured()) throw Error("uncoloured configuration");
    for (size_t i = 0; i < cfg.points.size(); ++i)
        for (size_t j = i + 1; j < cfg.points.size(); ++j)
            if (coaxial(cfg.points[i], cfg.points[j])) throw Error("hypothesis violated");

    std::vector<TropLine> duals;
    for (const auto& p : cfg.points) duals.push_back(TropLine(Point(-p.x, -p.y), cfg.colours.at(p)));
    BuiltSubdivision built = lift_colours(Arrangement(duals));
    std::optional<TropLine> best;
    for (int fi : monochromatic_cells(built.sub)) {
        TropLine cand = dual_point(built.face_vertex[fi]);
        auto mem = members_on(cand, cfg);
        if (mem.size() < 2) continue;
        std::set<Colour> cols;
        for (const auto& p : mem) cols.insert(cfg.colours.at(p));
        if (cols.size() != 1) continue;
        cand.colour = *cols.begin();
        if (!best || cand.center < best->center) best = cand;
    }
    if (!best) throw Error("determines_monochromatic_line: no witness found");
    return *best;
}

Arrangement coaxial_counterexample() {
    auto red = [](long long x, long long y) { return TropLine(Point(Rat(x), Rat(y)), Colour::Red); };
    auto blue = [](long long x, long long y) { return TropLine(Point(Rat(x), Rat(y)), Colour::Blue); };
    return Arrangement({red(0, 0), red(-1, 0), red(0, -1), red(1, 1),
                        blue(0, 1), blue(1, 0), blue(-1, -1)});
}

MrExhaustive mr_exhaustive_check(int n, int max_n) {
    MrExhaustive res;
    for (const NewtonSubdivision& sub : enumerate_semiuniform(n, max_n)) {
        ++res.tilings;
        const size_t E = sub.edges().size();
        // colour classes forced by the plausibility rules
        std::vector<int> parent(E);
        std::iota(parent.begin(), parent.end(), 0);
        std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
        auto unite = [&](int a, int b) { parent[find(a)] = find(b); };
        for (const auto& f : sub.faces()) {
            CellKind kind = cell_kind(f.profile);
            auto sides = face_sides(sub, f);
            if (kind == CellKind::Triangle) {
                for (size_t i = 1; i < sides.size(); ++i) unite(sides[0].edge, sides[i].edge);
            } else {
                for (const auto& s : sides)
                    for (const auto& t : sides)
                        if ((s.slot + 3) % 6 == t.slot) unite(s.edge, t.edge);
            }
        }
        std::map<int, int> comp;
        for (size_t e = 0; e < E; ++e)
            if (!comp.count(find(static_cast<int>(e))))
                comp[find(static_cast<int>(e))] = static_cast<int>(comp.size());
        const int k = static_cast<int>(comp.size());
        if (k > 30) throw Error("mr_exhaustive_check: too many colour classes");
        // collect the side groups of every parallelogram/hexagon face once
        std::vector<std::vector<int>> cells;  // per cell: component of each side
        for (const auto& f : sub.faces()) {
            CellKind kind = cell_kind(f.profile);
            if (kind != CellKind::Parallelogram && kind != CellKind::Hexagon) continue;
            std::vector<int> c;
            for (const auto& s : face_sides(sub, f)) c.push_back(comp[find(s.edge)]);
            cells.push_back(std::move(c));
        }
        for (unsigned long long mask = 0; mask < (1ull << k); ++mask) {
            ++res.colourings;
            bool monofree = true;
            for (const auto& c : cells) {
                bool mono = true;
                for (int comp_id : c)
                    if (((mask >> comp_id) & 1) != ((mask >> c[0]) & 1)) mono = false;
                if (mono) {
                    monofree = false;
                    break;
                }
            }
            if (monofree) ++res.monochromatic_free;
        }
    }
    return res;
}

}  // namespace trop
