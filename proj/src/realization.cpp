#include "trop/realization.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace trop {

namespace {

using SprVec = std::map<int, Rat>;  // sparse linear form

void add_scaled(SprVec& dst, const SprVec& src, const Rat& f) {
    for (const auto& [v, c] : src) {
        Rat nv = dst[v] + f * c;
        if (nv == 0)
            dst.erase(v);
        else
            dst[v] = nv;
    }
}

LatticePoint rot_m90(const LatticePoint& w) { return {w.y, -w.x}; }

}  // namespace

int RealizationSystem::var_index(const EdgeKey& e) const {
    auto it = std::lower_bound(variables.begin(), variables.end(), e);
    if (it == variables.end() || !(*it == e)) return -1;
    return static_cast<int>(it - variables.begin());
}

RealizationSystem exactness_system(const NewtonSubdivision& N) {
    if (!is_linear(N)) throw Error("non-linear subdivision");
    RealizationSystem rs;
    for (int ei : N.interior_edges()) rs.variables.push_back(N.edges()[ei].key);
    std::sort(rs.variables.begin(), rs.variables.end());

    std::map<LatticePoint, std::vector<int>> at_vertex;  // vertex -> incident interior var ids
    for (size_t i = 0; i < rs.variables.size(); ++i) {
        at_vertex[rs.variables[i].a].push_back(static_cast<int>(i));
        at_vertex[rs.variables[i].b].push_back(static_cast<int>(i));
    }
    for (const LatticePoint& v : N.interior_vertices()) {
        rs.vertex_order.push_back(v);
        SprVec rx, ry;
        for (int vi : at_vertex[v]) {
            const EdgeKey& e = rs.variables[vi];
            LatticePoint d = (e.a == v) ? e.b - e.a : e.a - e.b;
            int slot = direction_slot(d);
            if (slot < 0) throw Error("exactness_system: bad edge direction");
            long long L = std::max(std::llabs(d.x), std::llabs(d.y));
            LatticePoint u{d.x / L, d.y / L};
            if (u.x != 0) rx[vi] += u.x;
            if (u.y != 0) ry[vi] += u.y;
        }
        rs.equations.push_back(lin::make_row(std::move(rx), lin::Rel::Eq, Rat(0)));
        rs.equations.push_back(lin::make_row(std::move(ry), lin::Rel::Eq, Rat(0)));
    }
    return rs;
}

bool is_exact_metric(const NewtonSubdivision& N, const ExactMetric& d) {
    RealizationSystem rs = exactness_system(N);
    std::vector<Rat> x(rs.variables.size());
    for (size_t i = 0; i < rs.variables.size(); ++i) {
        auto it = d.length.find(rs.variables[i]);
        if (it == d.length.end()) throw Error("missing edge assignment");
        x[i] = it->second;
        if (x[i] <= 0) return false;
    }
    for (const auto& row : rs.equations) {
        Rat s(0);
        for (const auto& [v, c] : row.coef) s += c * x[v];
        if (s != row.rhs) return false;
    }
    return true;
}

lin::System realization_space_system(const NewtonSubdivision& N) {
    RealizationSystem rs = exactness_system(N);
    lin::System sys(static_cast<int>(rs.variables.size()));
    for (const auto& r : rs.equations) sys.add(r);
    for (size_t i = 0; i < rs.variables.size(); ++i)
        sys.add(lin::make_row({{static_cast<int>(i), Rat(1)}}, lin::Rel::Gt, Rat(0)));
    return sys;
}

namespace {

// Expresses every variable as a linear form over the free variables that
// remain after substituting the homogeneous equalities away.
struct Presolve {
    std::vector<SprVec> exprs;                 // per variable
    std::map<int, std::set<int>> occurs;       // free var -> expressions using it

    explicit Presolve(const RealizationSystem& rs) {
        const size_t n = rs.variables.size();
        exprs.resize(n);
        for (size_t i = 0; i < n; ++i) {
            exprs[i][static_cast<int>(i)] = 1;
            occurs[static_cast<int>(i)].insert(static_cast<int>(i));
        }
        for (const auto& row : rs.equations) {
            SprVec form;
            for (const auto& [v, c] : row.coef) add_scaled(form, exprs[v], c);
            if (form.empty()) continue;  // redundant (homogeneous rows are always consistent)
            int f = form.begin()->first;
            Rat a = form.begin()->second;
            SprVec sub;  // f = sub(others)
            for (const auto& [v, c] : form)
                if (v != f) sub[v] = -c / a;
            auto users = occurs[f];
            for (int ei : users) {
                Rat coef = exprs[ei][f];
                exprs[ei].erase(f);
                add_scaled(exprs[ei], sub, coef);
                for (const auto& [v, c] : sub) occurs[v].insert(ei);
            }
            occurs.erase(f);
        }
    }
};

// Any solution of the sparse system {forms = rhs} over `unknowns`, or
// nullopt when inconsistent. Non-pivot unknowns are set to zero.
std::optional<std::vector<Rat>> sparse_solve(std::vector<std::pair<SprVec, Rat>> eqs,
                                             size_t num_unknowns) {
    std::vector<std::pair<int, std::pair<SprVec, Rat>>> pivots;  // creation order
    std::map<int, size_t> pivot_of;
    for (auto& [form, rhs] : eqs) {
        // reduce modulo existing pivots
        bool changed = true;
        while (changed) {
            changed = false;
            for (auto it = form.begin(); it != form.end(); ++it) {
                auto p = pivot_of.find(it->first);
                if (p == pivot_of.end()) continue;
                Rat c = it->second;
                form.erase(it);
                const auto& [pexpr, prhs] = pivots[p->second].second;
                add_scaled(form, pexpr, c);
                rhs -= c * prhs;  // var = pexpr + prhs means c*var adds c*pexpr and c*prhs moves across
                changed = true;
                break;
            }
        }
        if (form.empty()) {
            if (rhs != 0) return std::nullopt;
            continue;
        }
        int f = form.begin()->first;
        Rat a = form.begin()->second;
        SprVec expr;
        for (const auto& [v, c] : form)
            if (v != f) expr[v] = -c / a;
        pivot_of[f] = pivots.size();
        pivots.push_back({f, {std::move(expr), rhs / a}});
    }
    std::vector<Rat> sol(num_unknowns, Rat(0));
    for (size_t i = pivots.size(); i-- > 0;) {
        const auto& [var, er] = pivots[i];
        Rat v = er.second;
        for (const auto& [u, c] : er.first) v += c * sol[u];
        sol[var] = v;
    }
    return sol;
}

InfeasibilityCertificate certificate_from_combination(const RealizationSystem& rs,
                                                      const std::vector<Rat>& comb) {
    // solve sum_i y_i * row_i = comb (equations indexed per variable)
    std::vector<std::pair<SprVec, Rat>> eqs(rs.variables.size());
    for (size_t v = 0; v < rs.variables.size(); ++v) eqs[v].second = comb[v];
    for (size_t i = 0; i < rs.equations.size(); ++i)
        for (const auto& [v, c] : rs.equations[i].coef) eqs[v].first[static_cast<int>(i)] = c;
    auto y = sparse_solve(std::move(eqs), rs.equations.size());
    if (!y) throw Error("is_realizable: certificate reconstruction failed");
    InfeasibilityCertificate cert;
    cert.y = std::move(*y);
    cert.combination = comb;
    return cert;
}

}  // namespace

RealizabilityResult is_realizable(const NewtonSubdivision& N) {
    RealizationSystem rs = exactness_system(N);
    const size_t E = rs.variables.size();
    if (E == 0) return ExactMetric{};
    Presolve pre(rs);

    // positivity becomes expr_e(z) >= 1 after scaling by homogeneity
    std::map<std::vector<std::pair<int, Rat>>, std::vector<int>> groups;
    for (size_t e = 0; e < E; ++e) {
        if (pre.exprs[e].empty()) {
            // d_e vanishes on the whole kernel: the unit functional certifies
            std::vector<Rat> comb(E, Rat(0));
            comb[e] = 1;
            auto cert = certificate_from_combination(rs, comb);
            if (!verify_certificate(N, cert)) throw Error("is_realizable: invalid certificate");
            return cert;
        }
        std::vector<std::pair<int, Rat>> key(pre.exprs[e].begin(), pre.exprs[e].end());
        groups[key].push_back(static_cast<int>(e));
    }

    std::vector<int> free_vars;
    for (const auto& [v, users] : pre.occurs)
        if (!users.empty()) free_vars.push_back(v);
    std::map<int, size_t> fidx;
    for (size_t i = 0; i < free_vars.size(); ++i) fidx[free_vars[i]] = i;

    // standard form: z = u - w, surplus per row
    const size_t R = groups.size();
    const size_t F = free_vars.size();
    const size_t ncols = 2 * F + R;
    std::vector<std::vector<Rat>> A;
    std::vector<Rat> b(R, Rat(1));
    std::vector<std::vector<int>> row_edges;
    size_t r = 0;
    for (const auto& [key, edges] : groups) {
        std::vector<Rat> row(ncols, Rat(0));
        for (const auto& [v, c] : key) {
            row[2 * fidx[v]] = c;
            row[2 * fidx[v] + 1] = -c;
        }
        row[2 * F + r] = -1;
        A.push_back(std::move(row));
        row_edges.push_back(edges);
        ++r;
    }
    lp::StdResult res = lp::solve_standard(std::move(A), std::move(b), std::vector<Rat>(ncols, Rat(0)));
    if (res.status == lp::Status::Optimal) {
        std::vector<Rat> z(E, Rat(0));  // indexed by original var id
        for (size_t i = 0; i < F; ++i) z[free_vars[i]] = res.x[2 * i] - res.x[2 * i + 1];
        ExactMetric d;
        for (size_t e = 0; e < E; ++e) {
            Rat val(0);
            for (const auto& [v, c] : pre.exprs[e]) val += c * z[v];
            d.length[rs.variables[e]] = val;
        }
        if (!is_exact_metric(N, d)) throw Error("is_realizable: witness verification failed");
        return d;
    }
    if (res.status != lp::Status::Infeasible) throw Error("is_realizable: unexpected LP status");
    std::vector<Rat> comb(E, Rat(0));
    for (size_t i = 0; i < R; ++i)
        if (res.farkas[i] != 0) comb[row_edges[i].front()] += res.farkas[i];
    auto cert = certificate_from_combination(rs, comb);
    if (!verify_certificate(N, cert)) throw Error("is_realizable: invalid certificate");
    return cert;
}

bool verify_certificate(const NewtonSubdivision& N, const InfeasibilityCertificate& cert) {
    RealizationSystem rs = exactness_system(N);
    if (cert.y.size() != rs.equations.size()) return false;
    std::vector<Rat> comb(rs.variables.size(), Rat(0));
    for (size_t i = 0; i < rs.equations.size(); ++i)
        for (const auto& [v, c] : rs.equations[i].coef) comb[v] += cert.y[i] * c;
    if (comb != cert.combination) return false;
    bool nonzero = false;
    for (const auto& c : comb) {
        if (c < 0) return false;
        if (c > 0) nonzero = true;
    }
    return nonzero;
}

Arrangement reconstruct(const NewtonSubdivision& N, const ExactMetric& d) {
    if (!is_exact_metric(N, d)) throw Error("not an exact metric");
    const auto& faces = N.faces();
    std::vector<std::optional<Point>> pos(faces.size());
    pos[0] = Point(Rat(0), Rat(0));
    std::deque<size_t> queue{0};
    while (!queue.empty()) {
        size_t fi = queue.front();
        queue.pop_front();
        const auto& cyc = faces[fi].cycle;
        for (size_t i = 0; i < cyc.size(); ++i) {
            EdgeKey side(cyc[i], cyc[(i + 1) % cyc.size()]);
            int ei = N.edge_index(side);
            if (N.boundary_edge(side)) continue;
            const auto& both = N.edge_faces()[ei];
            size_t g = both[0] == static_cast<int>(fi) ? both[1] : both[0];
            LatticePoint w = cyc[(i + 1) % cyc.size()] - cyc[i];
            long long L = std::max(std::llabs(w.x), std::llabs(w.y));
            LatticePoint step = rot_m90({w.x / L, w.y / L});
            Rat len = d.length.at(side);
            Point npos(pos[fi]->x + len * step.x, pos[fi]->y + len * step.y);
            if (pos[g]) {
                if (!(*pos[g] == npos)) throw Error("inconsistent placement");
            } else {
                pos[g] = npos;
                queue.push_back(g);
            }
        }
    }
    std::vector<TropLine> lines;
    for (size_t fi = 0; fi < faces.size(); ++fi) {
        if (!pos[fi]) throw Error("reconstruct: disconnected subdivision");
        int c = faces[fi].profile->c;
        if (c >= 2) throw Error("duplicate centers");
        if (c == 1) lines.emplace_back(*pos[fi]);
    }
    Arrangement arr(std::move(lines));
    BuiltSubdivision rebuilt = build_subdivision(arr);
    if (!(rebuilt.sub == N)) throw Error("reconstruct: subdivision mismatch");
    ExactMetric back = measured_metric(rebuilt);
    if (back.length != d.length) throw Error("reconstruct: metric mismatch");
    return arr;
}

ExactMetric measured_metric(const BuiltSubdivision& built) {
    ExactMetric d;
    const auto& edges = built.sub.edges();
    for (size_t i = 0; i < edges.size(); ++i) {
        if (built.sub.boundary_edge(edges[i].key)) continue;
        const EdgeOrigin& eo = built.edge_origin[i];
        if (!eo.bounded) throw Error("measured_metric: interior edge with unbounded cell");
        d.length[edges[i].key] = eo.length;
    }
    return d;
}

}  // namespace trop
