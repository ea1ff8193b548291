#include "trop/newton.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <set>

namespace trop {

LatticePoint ebar_direction(Axis a) {
    switch (a) {
        case Axis::E1: return {-1, 1};
        case Axis::E2: return {0, -1};
        case Axis::E3: return {1, 0};
    }
    return {};
}

namespace {

constexpr std::array<LatticePoint, 6> kSlotDir = {{{1, 0}, {0, 1}, {-1, 1}, {-1, 0}, {0, -1}, {1, -1}}};

long long cross(const LatticePoint& a, const LatticePoint& b) { return a.x * b.y - a.y * b.x; }

long long seg_length(const LatticePoint& d) { return std::max(std::llabs(d.x), std::llabs(d.y)); }

std::vector<LatticePoint> canonical_cycle(std::vector<LatticePoint> cycle) {
    auto it = std::min_element(cycle.begin(), cycle.end());
    std::rotate(cycle.begin(), it, cycle.end());
    return cycle;
}

long long doubled_area(const std::vector<LatticePoint>& cycle) {
    long long s = 0;
    for (size_t i = 0; i < cycle.size(); ++i) s += cross(cycle[i], cycle[(i + 1) % cycle.size()]);
    return s;
}

}  // namespace

int direction_slot(LatticePoint d) {
    long long g = std::gcd(std::llabs(d.x), std::llabs(d.y));
    if (g == 0) return -1;
    LatticePoint u{d.x / g, d.y / g};
    for (int i = 0; i < 6; ++i)
        if (kSlotDir[i] == u) return i;
    return -1;
}

LocalProfile classify_face(const std::vector<LatticePoint>& cycle) {
    auto fail = []() -> LocalProfile { throw Error("not a linear face"); };
    size_t k = cycle.size();
    if (k < 3) return fail();
    std::array<long long, 6> len{};
    std::vector<int> slots(k);
    for (size_t i = 0; i < k; ++i) {
        LatticePoint d = cycle[(i + 1) % k] - cycle[i];
        int s = direction_slot(d);
        if (s < 0) return fail();
        slots[i] = s;
        len[s] += seg_length(d);
    }
    if (doubled_area(cycle) <= 0) return fail();
    int descents = 0;
    for (size_t i = 0; i < k; ++i) {
        int a = slots[i], b = slots[(i + 1) % k];
        if (a == b) return fail();
        if (b < a) ++descents;
    }
    if (descents != 1) return fail();
    // side lengths counterclockwise: (c+w3, w2, c+w1, w3, c+w2, w1)
    long long w2 = len[1], w3 = len[3], w1 = len[5];
    long long c = len[0] - w3;
    if (c < 0 || len[2] - w1 != c || len[4] - w2 != c) return fail();
    LocalProfile p;
    p.c = static_cast<int>(c);
    p.w1 = static_cast<int>(w1);
    p.w2 = static_cast<int>(w2);
    p.w3 = static_cast<int>(w3);
    return p;
}

// ---------------------------------------------------------------------------
// NewtonSubdivision
// ---------------------------------------------------------------------------

bool NewtonSubdivision::on_boundary(const LatticePoint& p) const {
    return p.x == 0 || p.y == 0 || p.x + p.y == n_;
}

bool NewtonSubdivision::boundary_edge(const EdgeKey& e) const {
    if (e.a.x == 0 && e.b.x == 0) return true;
    if (e.a.y == 0 && e.b.y == 0) return true;
    if (e.a.x + e.a.y == n_ && e.b.x + e.b.y == n_) return true;
    return false;
}

int NewtonSubdivision::edge_index(const EdgeKey& e) const {
    auto it = edge_lookup_.find(e);
    return it == edge_lookup_.end() ? -1 : it->second;
}

std::vector<int> NewtonSubdivision::interior_edges() const {
    std::vector<int> out;
    for (size_t i = 0; i < edges_.size(); ++i)
        if (!boundary_edge(edges_[i].key)) out.push_back(static_cast<int>(i));
    return out;
}

std::vector<LatticePoint> NewtonSubdivision::interior_vertices() const {
    std::vector<LatticePoint> out;
    for (const auto& v : vertices_)
        if (!on_boundary(v)) out.push_back(v);
    return out;
}

void NewtonSubdivision::clear_colours() {
    for (auto& e : edges_) e.colour.reset();
}

void NewtonSubdivision::finalize() {
    if (n_ < 1) throw Error("subdivision: n < 1");
    std::sort(vertices_.begin(), vertices_.end());
    vertices_.erase(std::unique(vertices_.begin(), vertices_.end()), vertices_.end());
    std::set<LatticePoint> vset(vertices_.begin(), vertices_.end());
    for (const auto& v : vertices_)
        if (v.x < 0 || v.y < 0 || v.x + v.y > n_) throw Error("subdivision: vertex outside triangle");

    std::sort(edges_.begin(), edges_.end(),
              [](const SubEdge& a, const SubEdge& b) { return a.key < b.key; });
    for (size_t i = 0; i + 1 < edges_.size(); ++i)
        if (edges_[i].key == edges_[i + 1].key) throw Error("subdivision: duplicate edge");
    edge_lookup_.clear();
    for (size_t i = 0; i < edges_.size(); ++i) {
        const EdgeKey& e = edges_[i].key;
        if (direction_slot(e.b - e.a) < 0) throw Error("subdivision: edge direction not allowed");
        if (!vset.count(e.a) || !vset.count(e.b)) throw Error("subdivision: edge endpoint not a vertex");
        edge_lookup_[e] = static_cast<int>(i);
    }

    // no vertex strictly inside an edge
    for (const auto& se : edges_) {
        const LatticePoint a = se.key.a, b = se.key.b;
        LatticePoint d = b - a;
        long long L = seg_length(d);
        if (L <= 1) continue;
        LatticePoint u{d.x / L, d.y / L};
        for (long long t = 1; t < L; ++t) {
            LatticePoint m{a.x + t * u.x, a.y + t * u.y};
            if (vset.count(m)) throw Error("subdivision: vertex inside edge");
        }
    }

    // canonicalize faces
    for (auto& f : faces_) {
        if (f.cycle.size() < 3) throw Error("subdivision: degenerate face");
        f.cycle = canonical_cycle(std::move(f.cycle));
        if (doubled_area(f.cycle) <= 0) throw Error("subdivision: face not counterclockwise");
        std::optional<LocalProfile> computed;
        try {
            computed = classify_face(f.cycle);
        } catch (const Error&) {
        }
        if (f.profile && computed && !(*f.profile == *computed))
            throw Error("subdivision: face profile mismatch");
        if (f.profile && !computed) throw Error("subdivision: face profile mismatch");
        f.profile = computed;
    }
    std::sort(faces_.begin(), faces_.end(),
              [](const SubFace& a, const SubFace& b) { return a.cycle < b.cycle; });
    for (size_t i = 0; i + 1 < faces_.size(); ++i)
        if (faces_[i].cycle == faces_[i + 1].cycle) throw Error("subdivision: duplicate face");

    // face sides must be edges; collect incidences
    edge_faces_.assign(edges_.size(), {});
    long long area2 = 0;
    for (size_t fi = 0; fi < faces_.size(); ++fi) {
        const auto& cyc = faces_[fi].cycle;
        area2 += doubled_area(cyc);
        for (size_t i = 0; i < cyc.size(); ++i) {
            EdgeKey side(cyc[i], cyc[(i + 1) % cyc.size()]);
            int ei = edge_index(side);
            if (ei < 0) throw Error("subdivision: face side is not an edge");
            edge_faces_[ei].push_back(static_cast<int>(fi));
        }
    }
    if (area2 != static_cast<long long>(n_) * n_) throw Error("subdivision: faces do not tile");
    for (size_t i = 0; i < edges_.size(); ++i) {
        size_t want = boundary_edge(edges_[i].key) ? 1 : 2;
        if (edge_faces_[i].size() != want) throw Error("subdivision: edge incidence mismatch");
    }
    long long euler = static_cast<long long>(vertices_.size()) - static_cast<long long>(edges_.size()) +
                      static_cast<long long>(faces_.size());
    if (euler != 1) throw Error("subdivision: inconsistent complex");
}

NewtonSubdivision NewtonSubdivision::from_faces(int n, std::vector<std::vector<LatticePoint>> cycles) {
    NewtonSubdivision s;
    s.n_ = n;
    std::set<EdgeKey> keys;
    for (auto& cyc : cycles) {
        for (size_t i = 0; i < cyc.size(); ++i) {
            s.vertices_.push_back(cyc[i]);
            keys.insert(EdgeKey(cyc[i], cyc[(i + 1) % cyc.size()]));
        }
        s.faces_.push_back(SubFace{std::move(cyc), std::nullopt});
    }
    for (const auto& k : keys) s.edges_.push_back(SubEdge{k, std::nullopt});
    s.finalize();
    return s;
}

NewtonSubdivision NewtonSubdivision::from_parts(int n, std::vector<LatticePoint> vertices,
                                                std::vector<SubEdge> edges, std::vector<SubFace> faces) {
    NewtonSubdivision s;
    s.n_ = n;
    s.vertices_ = std::move(vertices);
    s.edges_ = std::move(edges);
    s.faces_ = std::move(faces);
    s.finalize();
    return s;
}

namespace {

// true if segments properly cross (shared interior point, not a shared endpoint)
bool segments_conflict(const EdgeKey& e, const EdgeKey& f) {
    auto orient = [](const LatticePoint& a, const LatticePoint& b, const LatticePoint& c) {
        long long v = cross(b - a, c - a);
        return v > 0 ? 1 : v < 0 ? -1 : 0;
    };
    auto on_seg = [&](const LatticePoint& a, const LatticePoint& b, const LatticePoint& p) {
        return orient(a, b, p) == 0 && std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
               std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
    };
    int o1 = orient(e.a, e.b, f.a), o2 = orient(e.a, e.b, f.b);
    int o3 = orient(f.a, f.b, e.a), o4 = orient(f.a, f.b, e.b);
    if (o1 != o2 && o3 != o4 && o1 * o2 < 0 && o3 * o4 < 0) return true;  // transversal crossing
    // collinear overlap beyond a shared endpoint
    if (o1 == 0 && o2 == 0) {
        int shared = 0;
        for (const auto& p : {f.a, f.b})
            if (p == e.a || p == e.b) ++shared;
        if (shared == 2) return false;  // identical, caught elsewhere
        auto strictly_inside = [&](const LatticePoint& a, const LatticePoint& b, const LatticePoint& p) {
            return on_seg(a, b, p) && !(p == a) && !(p == b);
        };
        if (strictly_inside(e.a, e.b, f.a) || strictly_inside(e.a, e.b, f.b) ||
            strictly_inside(f.a, f.b, e.a) || strictly_inside(f.a, f.b, e.b))
            return true;
    }
    // endpoint of one strictly inside the other
    if (o1 == 0 && on_seg(e.a, e.b, f.a) && !(f.a == e.a) && !(f.a == e.b)) return true;
    if (o2 == 0 && on_seg(e.a, e.b, f.b) && !(f.b == e.a) && !(f.b == e.b)) return true;
    if (o3 == 0 && on_seg(f.a, f.b, e.a) && !(e.a == f.a) && !(e.a == f.b)) return true;
    if (o4 == 0 && on_seg(f.a, f.b, e.b) && !(e.b == f.a) && !(e.b == f.b)) return true;
    return false;
}

}  // namespace

NewtonSubdivision NewtonSubdivision::from_complex(int n, std::vector<LatticePoint> vertices,
                                                  std::vector<EdgeKey> edges) {
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    for (size_t i = 0; i < edges.size(); ++i)
        for (size_t j = i + 1; j < edges.size(); ++j)
            if (segments_conflict(edges[i], edges[j])) throw Error("subdivision: crossing edges");

    std::map<LatticePoint, int> vidx;
    for (size_t i = 0; i < vertices.size(); ++i) vidx[vertices[i]] = static_cast<int>(i);

    // rotation system: per vertex, outgoing (slot -> neighbor)
    std::vector<std::map<int, int>> rot(vertices.size());
    for (const auto& e : edges) {
        auto ia = vidx.find(e.a), ib = vidx.find(e.b);
        if (ia == vidx.end() || ib == vidx.end()) throw Error("subdivision: edge endpoint not a vertex");
        int sa = direction_slot(e.b - e.a);
        if (sa < 0) throw Error("subdivision: edge direction not allowed");
        int sb = (sa + 3) % 6;
        if (!rot[ia->second].emplace(sa, ib->second).second ||
            !rot[ib->second].emplace(sb, ia->second).second)
            throw Error("subdivision: overlapping edges at a vertex");
    }

    // walk face orbits: next dart of (u -> v) leaves v along the cyclic
    // predecessor of the slot of (v -> u)
    std::set<std::pair<int, int>> visited;
    std::vector<std::vector<LatticePoint>> cycles;
    bool outer_seen = false;
    for (size_t u0 = 0; u0 < vertices.size(); ++u0) {
        for (const auto& [slot0, v0] : rot[u0]) {
            if (visited.count({static_cast<int>(u0), v0})) continue;
            std::vector<int> orbit;
            int u = static_cast<int>(u0), v = v0;
            while (true) {
                if (!visited.insert({u, v}).second) throw Error("subdivision: malformed rotation system");
                orbit.push_back(u);
                int back = direction_slot(vertices[u] - vertices[v]);
                const auto& r = rot[v];
                auto it = r.lower_bound(back);
                if (it == r.begin()) it = r.end();
                --it;  // cyclic predecessor of `back` (possibly `back` itself when degree 1)
                int w = it->second;
                u = v;
                v = w;
                if (u == static_cast<int>(u0) && v == v0) break;
            }
            std::vector<LatticePoint> cyc;
            for (int i : orbit) cyc.push_back(vertices[i]);
            long long a2 = doubled_area(cyc);
            if (a2 < 0) {
                if (outer_seen) throw Error("subdivision: multiple outer faces");
                outer_seen = true;
                if (a2 != -static_cast<long long>(n) * n) throw Error("subdivision: outer boundary mismatch");
            } else if (a2 == 0) {
                throw Error("subdivision: degenerate face orbit");
            } else {
                cycles.push_back(std::move(cyc));
            }
        }
    }
    if (!outer_seen) throw Error("subdivision: no outer face");

    NewtonSubdivision s;
    s.n_ = n;
    s.vertices_ = std::move(vertices);
    for (const auto& e : edges) s.edges_.push_back(SubEdge{e, std::nullopt});
    for (auto& c : cycles) s.faces_.push_back(SubFace{std::move(c), std::nullopt});
    s.finalize();
    return s;
}

bool operator==(const NewtonSubdivision& a, const NewtonSubdivision& b) {
    if (a.n_ != b.n_) return false;
    if (a.vertices_ != b.vertices_) return false;
    if (a.edges_.size() != b.edges_.size()) return false;
    for (size_t i = 0; i < a.edges_.size(); ++i)
        if (!(a.edges_[i].key == b.edges_[i].key)) return false;
    if (a.faces_.size() != b.faces_.size()) return false;
    for (size_t i = 0; i < a.faces_.size(); ++i)
        if (a.faces_[i].cycle != b.faces_[i].cycle) return false;
    return true;
}

// ---------------------------------------------------------------------------
// census and axioms
// ---------------------------------------------------------------------------

bool is_linear(const NewtonSubdivision& sub) {
    for (const auto& f : sub.faces())
        if (!f.profile) return false;
    return true;
}

namespace {

enum class Shape { Triangle, Parallelogram, Hexagon, Other };

Shape shape_of(const std::optional<LocalProfile>& p) {
    if (!p) return Shape::Other;
    if (p->c == 1 && p->w1 == 0 && p->w2 == 0 && p->w3 == 0) return Shape::Triangle;
    if (p->c == 0) {
        int ones = 0, zeros = 0;
        for (int w : {p->w1, p->w2, p->w3}) {
            if (w == 1) ++ones;
            if (w == 0) ++zeros;
        }
        if (ones == 2 && zeros == 1) return Shape::Parallelogram;
        if (ones == 3) return Shape::Hexagon;
    }
    return Shape::Other;
}

}  // namespace

bool is_semiuniform(const NewtonSubdivision& sub) {
    for (const auto& f : sub.faces())
        if (shape_of(f.profile) == Shape::Other) return false;
    return true;
}

FaceCensus face_census(const NewtonSubdivision& sub) {
    if (!is_semiuniform(sub)) throw Error("not semiuniform");
    FaceCensus c;
    for (const auto& f : sub.faces()) {
        switch (shape_of(f.profile)) {
            case Shape::Triangle: ++c.triangles; break;
            case Shape::Parallelogram: ++c.parallelograms; break;
            case Shape::Hexagon: ++c.hexagons; break;
            case Shape::Other: ++c.other; break;
        }
    }
    return c;
}

bool check_parallelogram_bound(const NewtonSubdivision& sub) {
    FaceCensus c = face_census(sub);
    int n = sub.n();
    int bound = (n % 3 == 0) ? n - 3 : n - 1;
    return c.parallelograms >= bound;
}

// ---------------------------------------------------------------------------
// tilings by unit pieces (optimal subdivisions, exhaustive enumeration)
// ---------------------------------------------------------------------------

namespace {

// Half-unit atoms: each lattice cell splits along its ebar1 diagonal into a
// lower-left and an upper-right triangle.
enum class PieceType { Tri, Para23, Para13, Para12, Hex };

struct Placement {
    PieceType t;
    long long x, y;
};

struct Atom {
    long long i, j;
    bool upper;
};

std::vector<Atom> piece_atoms(const Placement& p) {
    switch (p.t) {
        case PieceType::Tri: return {{p.x, p.y, false}};
        case PieceType::Para23: return {{p.x, p.y, false}, {p.x, p.y, true}};
        case PieceType::Para13: return {{p.x, p.y, false}, {p.x - 1, p.y, true}};
        case PieceType::Para12: return {{p.x - 1, p.y, true}, {p.x - 1, p.y + 1, false}};
        case PieceType::Hex:
            return {{p.x, p.y, false},     {p.x, p.y, true},
                    {p.x, p.y + 1, false}, {p.x - 1, p.y, true},
                    {p.x - 1, p.y + 1, false}, {p.x - 1, p.y + 1, true}};
    }
    return {};
}

std::vector<LatticePoint> piece_cycle(const Placement& p) {
    long long x = p.x, y = p.y;
    switch (p.t) {
        case PieceType::Tri: return {{x, y}, {x + 1, y}, {x, y + 1}};
        case PieceType::Para23: return {{x, y}, {x + 1, y}, {x + 1, y + 1}, {x, y + 1}};
        case PieceType::Para13: return {{x, y}, {x + 1, y}, {x, y + 1}, {x - 1, y + 1}};
        case PieceType::Para12: return {{x, y}, {x, y + 1}, {x - 1, y + 2}, {x - 1, y + 1}};
        case PieceType::Hex:
            return {{x, y}, {x + 1, y}, {x + 1, y + 1}, {x, y + 2}, {x - 1, y + 2}, {x - 1, y + 1}};
    }
    return {};
}

class Tiler {
public:
    explicit Tiler(int n) : n_(n), cov_(static_cast<size_t>(n) * n * 2, 0) {}

    bool atom_valid(const Atom& a) const {
        if (a.i < 0 || a.j < 0) return false;
        return a.upper ? a.i + a.j <= n_ - 2 : a.i + a.j <= n_ - 1;
    }

    bool covered(const Atom& a) const { return cov_[idx(a)] != 0; }

    bool can_place(const Placement& p) const {
        for (const Atom& a : piece_atoms(p))
            if (!atom_valid(a) || covered(a)) return false;
        return true;
    }

    void place(const Placement& p) {
        for (const Atom& a : piece_atoms(p)) cov_[idx(a)] = 1;
        placed_.push_back(p);
    }

    void unplace(const Placement& p) {
        for (const Atom& a : piece_atoms(p)) cov_[idx(a)] = 0;
        placed_.pop_back();
    }

    // scan order: rows bottom-up, left-to-right, lower atom before upper
    std::optional<Atom> first_uncovered() const {
        for (long long j = 0; j < n_; ++j)
            for (long long i = 0; i + j < n_; ++i) {
                Atom lo{i, j, false};
                if (!covered(lo)) return lo;
                Atom up{i, j, true};
                if (atom_valid(up) && !covered(up)) return up;
            }
        return std::nullopt;
    }

    std::vector<Placement> candidates(const Atom& a, bool with_hex) const {
        std::vector<Placement> out;
        long long i = a.i, j = a.j;
        if (!a.upper) {
            out.push_back({PieceType::Tri, i, j});
            out.push_back({PieceType::Para23, i, j});
            out.push_back({PieceType::Para13, i, j});
            out.push_back({PieceType::Para12, i + 1, j - 1});
            if (with_hex) {
                out.push_back({PieceType::Hex, i, j});
                out.push_back({PieceType::Hex, i, j - 1});
                out.push_back({PieceType::Hex, i + 1, j - 1});
            }
        } else {
            out.push_back({PieceType::Para23, i, j});
            out.push_back({PieceType::Para13, i + 1, j});
            out.push_back({PieceType::Para12, i + 1, j});
            if (with_hex) {
                out.push_back({PieceType::Hex, i, j});
                out.push_back({PieceType::Hex, i + 1, j});
                out.push_back({PieceType::Hex, i + 1, j - 1});
            }
        }
        return out;
    }

    // Enumerates completions; stops after max_solutions.
    void solve(bool with_hex, size_t max_solutions, std::vector<std::vector<Placement>>& out) {
        auto gap = first_uncovered();
        if (!gap) {
            out.push_back(placed_);
            return;
        }
        for (const Placement& p : candidates(*gap, with_hex)) {
            if (!can_place(p)) continue;
            place(p);
            solve(with_hex, max_solutions, out);
            unplace(p);
            if (out.size() >= max_solutions) return;
        }
    }

private:
    size_t idx(const Atom& a) const { return (static_cast<size_t>(a.j) * n_ + a.i) * 2 + (a.upper ? 1 : 0); }

    int n_;
    std::vector<char> cov_;
    std::vector<Placement> placed_;
};

NewtonSubdivision placements_to_subdivision(int n, const std::vector<Placement>& ps) {
    std::vector<std::vector<LatticePoint>> cycles;
    cycles.reserve(ps.size());
    for (const auto& p : ps) cycles.push_back(piece_cycle(p));
    return NewtonSubdivision::from_faces(n, std::move(cycles));
}

}  // namespace

NewtonSubdivision optimal_subdivision(int n) {
    if (n < 1) throw Error("optimal_subdivision: n < 1");
    Tiler tiler(n);
    std::vector<Placement> placed;
    auto put = [&](const Placement& p) {
        if (!tiler.can_place(p)) throw Error("optimal_subdivision: fill conflict");
        tiler.place(p);
        placed.push_back(p);
    };
    // hexagons centered at every (cx,cy) with cx = cy (mod 3) fitting in Delta_n
    for (long long cy = 1; cy <= n - 1; ++cy)
        for (long long cx = 1; cx + cy <= n - 1; ++cx) {
            if ((cx - cy) % 3 != 0) continue;
            put({PieceType::Hex, cx, cy - 1});
        }
    // Hypotenuse street: hexagons touch the slanted side at columns
    // c = 2(n-1) (mod 3). In each two-cell gap between consecutive hexagons
    // the parallelogram hugs the hexagon nearer the midpoint of the side
    // (slanting with ebar3 on the left half, with ebar2 on the right half);
    // this keeps the packing realizable whenever any completion is.
    std::vector<long long> cols;
    for (long long c = 1; c <= n - 2; ++c)
        if (c % 3 == (2 * (n - 1)) % 3) cols.push_back(c);
    auto try_put = [&](const Placement& p) {
        if (!tiler.can_place(p)) return false;
        put(p);
        return true;
    };
    for (size_t k = 0; k + 1 < cols.size(); ++k) {
        long long cl = cols[k], cr = cols[k + 1];
        long long dl = std::llabs(2 * cl - (n - 1)), dr = std::llabs(2 * cr - (n - 1));
        if (dr < dl)
            try_put({PieceType::Para13, cr - 1, n - cr});  // hug the right hexagon
        else
            try_put({PieceType::Para12, cl + 2, n - 3 - cl});  // hug the left hexagon
    }
    if (!cols.empty()) {
        if (cols.front() >= 2) try_put({PieceType::Para13, cols.front() - 1, n - cols.front()});
        if (cols.back() <= n - 3)
            try_put({PieceType::Para12, cols.back() + 2, n - 3 - cols.back()});
    }
    // bottom and left streets: squares at the cells two past each hexagon foot
    for (long long x = 2; x < n; x += 3)
        if (!tiler.covered({x, 0, false})) try_put({PieceType::Para23, x, 0});
    for (long long y = 2; y < n; y += 3)
        if (!tiler.covered({0, y, false})) try_put({PieceType::Para23, 0, y});
    // deterministic first-fit completion: every remaining pocket is a lone
    // lower atom or a small corner patch
    std::vector<std::vector<Placement>> full;
    tiler.solve(/*with_hex=*/false, 1, full);
    if (full.empty()) throw Error("optimal_subdivision: fill incomplete");
    return placements_to_subdivision(n, full.front());
}

std::vector<NewtonSubdivision> enumerate_semiuniform(int n, int max_n) {
    if (n < 1) throw Error("enumerate_semiuniform: n < 1");
    if (n > max_n) throw Error("enumerate_semiuniform: n exceeds cap");
    Tiler tiler(n);
    std::vector<std::vector<Placement>> sols;
    tiler.solve(/*with_hex=*/true, static_cast<size_t>(-1), sols);
    std::vector<NewtonSubdivision> out;
    out.reserve(sols.size());
    for (const auto& s : sols) out.push_back(placements_to_subdivision(n, s));
    return out;
}

// ---------------------------------------------------------------------------
// Newton subdivision of an arrangement
// ---------------------------------------------------------------------------

namespace {

// Convex hull of the gradients of the maximal pieces of one line's tropical
// polynomial at p, encoded as (lexicographic-min point, side length per slot).
struct Summand {
    LatticePoint min_pt;
    std::array<int, 6> len{};
};

Summand line_summand(const TropLine& l, const Point& p) {
    Summand s;
    auto axes = line_contains(l, p);
    if (!axes) {
        Rat vx = p.x - l.center.x;
        Rat vy = p.y - l.center.y;
        if (vx > vy && vx > 0)
            s.min_pt = {1, 0};
        else if (vy > vx && vy > 0)
            s.min_pt = {0, 1};
        else
            s.min_pt = {0, 0};
        return s;
    }
    if (axes->size() == 3) {
        s.min_pt = {0, 0};
        s.len[0] = s.len[2] = s.len[4] = 1;  // unit triangle
        return s;
    }
    switch (*axes->begin()) {
        case Axis::E1: s.min_pt = {1, 0}; s.len[2] = s.len[5] = 1; break;
        case Axis::E2: s.min_pt = {0, 0}; s.len[1] = s.len[4] = 1; break;
        case Axis::E3: s.min_pt = {0, 0}; s.len[0] = s.len[3] = 1; break;
    }
    return s;
}

// min point under (y, then x), matching the walk anchor of the Minkowski sum
LatticePoint lex_yx_min_adjust(const Summand& s) { return s.min_pt; }

std::vector<LatticePoint> minkowski_cycle(const std::vector<Summand>& summands) {
    LatticePoint base{0, 0};
    std::array<long long, 6> len{};
    for (const auto& s : summands) {
        base = base + lex_yx_min_adjust(s);
        for (int k = 0; k < 6; ++k) len[k] += s.len[k];
    }
    std::vector<LatticePoint> cycle;
    LatticePoint pos = base;
    for (int k = 0; k < 6; ++k) {
        if (len[k] == 0) continue;
        cycle.push_back(pos);
        pos = {pos.x + len[k] * kSlotDir[k].x, pos.y + len[k] * kSlotDir[k].y};
    }
    if (!(pos == base)) throw Error("build_subdivision: Minkowski walk failed to close");
    return cycle;
}

}  // namespace

int BuiltSubdivision::face_of_vertex(const Point& p) const {
    for (size_t i = 0; i < face_vertex.size(); ++i)
        if (face_vertex[i] == p) return static_cast<int>(i);
    return -1;
}

BuiltSubdivision build_subdivision(const Arrangement& arr) {
    const auto& lines = arr.lines();
    const int n = static_cast<int>(lines.size());
    std::vector<Point> verts = arrangement_vertices(arr);

    // faces: one per arrangement vertex, positioned by the gradient sums
    std::map<std::vector<LatticePoint>, Point> face_origin;
    std::vector<std::vector<LatticePoint>> cycles;
    std::vector<SubFace> faces;
    for (const Point& p : verts) {
        std::vector<Summand> summands;
        summands.reserve(lines.size());
        for (const auto& l : lines) summands.push_back(line_summand(l, p));
        std::vector<LatticePoint> cyc = canonical_cycle(minkowski_cycle(summands));
        LocalProfile prof = local_profile(arr, p);
        if (!(classify_face(cyc) == prof))
            throw Error("build_subdivision: face profile disagrees with local profile");
        face_origin[cyc] = p;
        faces.push_back(SubFace{cyc, prof});
        cycles.push_back(std::move(cyc));
    }

    // edges: one per 1-cell of the union of lines
    std::map<EdgeKey, EdgeOrigin> origin;
    for (size_t li = 0; li < lines.size(); ++li) {
        const Point& c = lines[li].center;
        for (Axis ax : {Axis::E1, Axis::E2, Axis::E3}) {
            IVec d = axis_direction(ax);
            std::vector<Rat> ts;
            for (const Point& v : verts) {
                Point rel = v - c;
                Rat t = d.x != 0 ? rel.x / d.x : rel.y / d.y;
                if (t < 0) continue;
                if (rel.x == t * d.x && rel.y == t * d.y) ts.push_back(t);
            }
            std::sort(ts.begin(), ts.end());
            ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
            if (ts.empty() || ts.front() != 0)
                throw Error("build_subdivision: center missing from its own ray");

            auto cell_at = [&](const Rat& t, bool bounded, const Rat& lo, const Rat& hi) {
                Point q(c.x + t * d.x, c.y + t * d.y);
                std::vector<Summand> summands;
                std::vector<int> gen;
                for (size_t lj = 0; lj < lines.size(); ++lj) {
                    summands.push_back(line_summand(lines[lj], q));
                    if (line_contains(lines[lj], q)) gen.push_back(static_cast<int>(lj));
                }
                LatticePoint base{0, 0};
                std::array<long long, 6> len{};
                for (const auto& s : summands) {
                    base = base + s.min_pt;
                    for (int k = 0; k < 6; ++k) len[k] += s.len[k];
                }
                // all segment summands share the class dual to this axis
                int fwd;
                switch (ax) {
                    case Axis::E1: fwd = 2; break;
                    case Axis::E2: fwd = 1; break;
                    default: fwd = 0; break;
                }
                long long L = len[fwd];
                if (L == 0 || len[(fwd + 3) % 6] != L || len[(fwd + 1) % 6] != 0 ||
                    len[(fwd + 2) % 6] != 0 || len[(fwd + 4) % 6] != 0 || len[(fwd + 5) % 6] != 0)
                    throw Error("build_subdivision: 1-cell dual is not a segment");
                LatticePoint end{base.x + L * kSlotDir[fwd].x, base.y + L * kSlotDir[fwd].y};
                EdgeKey key(base, end);
                EdgeOrigin eo;
                eo.lines = gen;
                eo.axis = ax;
                eo.bounded = bounded;
                if (bounded) {
                    eo.cell_lo = Point(c.x + lo * d.x, c.y + lo * d.y);
                    eo.cell_hi = Point(c.x + hi * d.x, c.y + hi * d.y);
                    eo.length = hi - lo;
                }
                auto [it, inserted] = origin.emplace(key, eo);
                if (!inserted && it->second.lines != eo.lines)
                    throw Error("build_subdivision: inconsistent edge provenance");
            };

            for (size_t i = 0; i + 1 < ts.size(); ++i)
                cell_at((ts[i] + ts[i + 1]) / 2, true, ts[i], ts[i + 1]);
            cell_at(ts.back() + 1, false, 0, 0);
        }
    }

    std::vector<SubEdge> edges;
    std::vector<LatticePoint> vertices;
    for (const auto& [key, eo] : origin) {
        edges.push_back(SubEdge{key, std::nullopt});
        vertices.push_back(key.a);
        vertices.push_back(key.b);
    }
    for (const auto& cyc : cycles)
        for (const auto& v : cyc) vertices.push_back(v);

    BuiltSubdivision built{NewtonSubdivision::from_parts(n, std::move(vertices), std::move(edges),
                                                         std::move(faces)),
                           {}, {}, arr};
    for (const auto& f : built.sub.faces()) built.face_vertex.push_back(face_origin.at(f.cycle));
    for (const auto& e : built.sub.edges()) built.edge_origin.push_back(origin.at(e.key));
    return built;
}

}  // namespace trop
