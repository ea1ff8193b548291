#include "trop/universality.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace trop {

namespace {

bool tuple_admissible(int ap, int bp, int a, int b) {
    return a < b && ap < bp && ap < a && bp < b;
}

}  // namespace

AdmissibleTuple AdmissibleTuple::make(int ap, int bp, int a, int b) {
    if (tuple_admissible(ap, bp, a, b)) return AdmissibleTuple{ap, bp, a, b};
    if (tuple_admissible(a, b, ap, bp)) return AdmissibleTuple{a, b, ap, bp};
    throw Error("inadmissible tuple");
}

lin::Row AdmissibleTuple::constraint_row() const {
    std::map<int, Rat> m;
    for (int j = a; j < b; ++j) m[j] += 1;
    for (int j = ap; j < bp; ++j) m[j] -= 1;
    return lin::make_row(std::move(m), lin::Rel::Eq, Rat(0));
}

lin::System IntervallicSpec::system() const {
    lin::System sys(m);
    for (int i = 0; i < m; ++i) sys.add(lin::make_row({{i, Rat(1)}}, lin::Rel::Gt, Rat(0)));
    for (const auto& t : tuples) {
        if (!t.valid_for(m)) throw Error("tuple out of range");
        sys.add(t.constraint_row());
    }
    return sys;
}

bool IntervallicSpec::contains(const std::vector<Rat>& v) const {
    if (static_cast<int>(v.size()) != m) return false;
    for (const auto& x : v)
        if (x <= 0) return false;
    for (const auto& t : tuples) {
        Rat s(0);
        for (int j = t.a; j < t.b; ++j) s += v[j];
        for (int j = t.ap; j < t.bp; ++j) s -= v[j];
        if (s != 0) return false;
    }
    return true;
}

lin::System LinearSystemSpec::system() const {
    lin::System sys(m);
    for (int i = 0; i < m; ++i) sys.add(lin::make_row({{i, Rat(1)}}, lin::Rel::Gt, Rat(0)));
    auto row_of = [&](const std::vector<long long>& f, lin::Rel rel) {
        if (static_cast<int>(f.size()) != m) throw Error("coefficient row has wrong arity");
        std::map<int, Rat> mm;
        for (int i = 0; i < m; ++i) mm[i] = Rat(f[i]);
        return lin::make_row(std::move(mm), rel, Rat(0));
    };
    for (const auto& f : equalities) sys.add(row_of(f, lin::Rel::Eq));
    for (const auto& f : stricts) sys.add(row_of(f, lin::Rel::Gt));
    return sys;
}

// ---------------------------------------------------------------------------
// extensible structure
// ---------------------------------------------------------------------------

ExtensibleSubdivision make_extensible(NewtonSubdivision sub, int m) {
    ExtensibleSubdivision ext;
    ext.m = m;
    // left edge vertices, top-down, excluding the bottom corner
    std::vector<LatticePoint> lefts;
    for (const auto& v : sub.vertices())
        if (v.x == 0 && v.y > 0) lefts.push_back(v);
    std::sort(lefts.begin(), lefts.end(),
              [](const LatticePoint& a, const LatticePoint& b) { return a.y > b.y; });
    if (static_cast<int>(lefts.size()) != m + 2)
        throw Error("not m-extensible: left edge has wrong vertex count");
    if (lefts.front().y != sub.n()) throw Error("not m-extensible: apex missing");
    ext.left_vertices = lefts;
    for (int i = 0; i < m; ++i) {
        const LatticePoint v = lefts[i + 1];  // v_i
        std::optional<EdgeKey> horizontal;
        for (const auto& e : sub.edges()) {
            if (!(e.key.a == v) && !(e.key.b == v)) continue;
            LatticePoint d = e.key.b - e.key.a;
            if (d.y != 0) continue;
            if (sub.boundary_edge(e.key)) continue;
            if (horizontal) throw Error("not m-extensible: several horizontal edges at a marked vertex");
            horizontal = e.key;
        }
        if (!horizontal) throw Error("not m-extensible: marked vertex lacks its horizontal edge");
        ext.marked.push_back(*horizontal);
    }
    ext.sub = std::move(sub);
    return ext;
}

ExtensibleSubdivision base_subdivision(int m) {
    if (m < 1) throw Error("base_subdivision: m < 1");
    const int n = m + 2;
    std::vector<std::vector<LatticePoint>> cycles;
    // horizontal slices at every height: faces P_{1,0,0,w3}
    for (long long k = 0; k < n; ++k) {
        std::vector<LatticePoint> cyc;
        if (k + 1 < n)
            cyc = {{0, k}, {n - k, k}, {n - k - 1, k + 1}, {0, k + 1}};
        else
            cyc = {{0, k}, {1, k}, {0, k + 1}};
        cycles.push_back(std::move(cyc));
    }
    return make_extensible(NewtonSubdivision::from_faces(n, std::move(cycles)), m);
}

std::vector<Rat> pi_values(const ExtensibleSubdivision& N, const ExactMetric& d) {
    std::vector<Rat> out;
    for (const auto& e : N.marked) out.push_back(d.length.at(e));
    return out;
}

// ---------------------------------------------------------------------------
// the bar construction
// ---------------------------------------------------------------------------

namespace {

LatticePoint translated(const LatticePoint& p) { return {p.x + 4, p.y}; }

constexpr LatticePoint kE1bar{-1, 1};
constexpr LatticePoint kE3bar{1, 0};

LatticePoint minus(const LatticePoint& p, const LatticePoint& q, long long k) {
    return {p.x - k * q.x, p.y - k * q.y};
}

}  // namespace

ExtensibleSubdivision extend(const ExtensibleSubdivision& N, const AdmissibleTuple& t) {
    const int m = N.m;
    if (!t.valid_for(m)) throw Error("tuple out of range");
    const int n = N.sub.n();
    const int np = n + 4;
    const int ap = t.ap, bp = t.bp, a = t.a, b = t.b;

    // v_{-1}..v_m in the translated frame
    std::vector<LatticePoint> v;
    for (const auto& p : N.left_vertices) v.push_back(translated(p));
    auto vat = [&](int i) -> const LatticePoint& { return v[i + 1]; };

    std::map<std::pair<int, int>, LatticePoint> vp;  // (bar k, row i) -> vertex
    std::vector<EdgeKey> edges;
    auto rule = [&](int k, int i, const LatticePoint& from, const LatticePoint& to) {
        vp[{k, i}] = to;
        edges.emplace_back(from, to);
    };

    for (int i = -1; i <= m; ++i) {
        if (i == -1) {
            // the apex is removed; its diagonal enters via the merged
            // hypotenuse edge added below
            vp[{1, i}] = vat(i) + kE1bar;
        } else if (i < bp) {
            rule(1, i, vat(i), vat(i) + kE1bar);
        } else {
            rule(1, i, vat(i), minus(vat(i), kE3bar, 1));
        }
    }
    for (int i = -1; i <= m; ++i) {
        const LatticePoint p1 = vp.at({1, i});
        if (i < ap) {
            rule(3, i, p1, p1 + kE1bar + kE1bar);
        } else if (i < bp) {
            rule(2, i, p1, minus(p1, kE3bar, 1));
        } else if (i < b) {
            rule(2, i, p1, p1 + kE1bar);
        } else {
            rule(4, i, p1, minus(p1, kE3bar, 3));
        }
    }
    for (int i = ap; i < b; ++i) {
        const LatticePoint p2 = vp.at({2, i});
        if (i < a)
            rule(3, i, p2, p2 + kE1bar);
        else
            rule(4, i, p2, minus(p2, kE3bar, 2));
    }
    for (int i = -1; i < a; ++i) {
        const LatticePoint p3 = vp.at({3, i});
        if (i == -1)
            rule(4, i, p3, p3 + kE1bar);
        else
            rule(4, i, p3, minus(p3, kE3bar, 1));
    }

    // bar edges between consecutive members of each vertical run
    auto bar_run = [&](int k, int lo, int hi) {
        for (int i = lo; i < hi; ++i) edges.emplace_back(vp.at({k, i}), vp.at({k, i + 1}));
    };
    bar_run(1, -1, bp - 1);  // bar 1a
    bar_run(1, bp, m);       // bar 1b
    bar_run(2, ap, b - 1);
    bar_run(3, -1, a - 1);
    bar_run(4, -1, m);

    // edges of N, dropping the two at the apex; the hypotenuse edge merges
    // with the new diagonal into a single edge ending at bar 1
    const LatticePoint apex = vat(-1);
    std::optional<LatticePoint> hyp_neighbor;
    for (const auto& e : N.sub.edges()) {
        EdgeKey k(translated(e.key.a), translated(e.key.b));
        if (k.a == apex || k.b == apex) {
            const LatticePoint other = k.a == apex ? k.b : k.a;
            if (other.x + other.y == np) hyp_neighbor = other;
            continue;
        }
        edges.push_back(k);
    }
    if (!hyp_neighbor) throw Error("extend: apex hypotenuse edge missing");
    edges.emplace_back(*hyp_neighbor, vp.at({1, -1}));

    // boundary stitches at the new bottom-left corner; bar 1 continues to the
    // bottom boundary so the strip below row m splits into two proper faces
    const LatticePoint bar1_bottom{vp.at({1, m}).x, 0};
    edges.emplace_back(vp.at({1, m}), bar1_bottom);
    edges.emplace_back(LatticePoint{0, 0}, vp.at({4, m}));
    edges.emplace_back(LatticePoint{0, 0}, bar1_bottom);
    edges.emplace_back(bar1_bottom, LatticePoint{4, 0});

    std::vector<LatticePoint> vertices;
    for (const auto& p : N.sub.vertices()) {
        LatticePoint q = translated(p);
        if (q == apex) continue;
        vertices.push_back(q);
    }
    for (const auto& [k, p] : vp) vertices.push_back(p);
    vertices.push_back({0, 0});
    vertices.push_back(bar1_bottom);

    NewtonSubdivision sub = NewtonSubdivision::from_complex(np, std::move(vertices), std::move(edges));
    if (!is_linear(sub)) throw Error("extend: produced a non-linear subdivision");
    return make_extensible(std::move(sub), m);
}

// ---------------------------------------------------------------------------
// metric maps along the construction
// ---------------------------------------------------------------------------

ExactMetric restrict_metric(const ExtensibleSubdivision& Nprime, const ExtensibleSubdivision& N,
                            const ExactMetric& dprime) {
    const long long off = Nprime.sub.n() - N.sub.n();
    ExactMetric d;
    for (int ei : N.sub.interior_edges()) {
        const EdgeKey& e = N.sub.edges()[ei].key;
        EdgeKey shifted(LatticePoint{e.a.x + off, e.a.y}, LatticePoint{e.b.x + off, e.b.y});
        auto it = dprime.length.find(shifted);
        if (it == dprime.length.end()) throw Error("restrict_metric: missing edge");
        d.length[e] = it->second;
    }
    return d;
}

std::optional<ExactMetric> lift_metric(const ExtensibleSubdivision& N,
                                       const ExtensibleSubdivision& Nprime, const AdmissibleTuple& t,
                                       const ExactMetric& d) {
    if (!is_exact_metric(N.sub, d)) throw Error("lift_metric: input metric not exact");
    // expected outcome from the interval-sum equation
    std::vector<Rat> pi = pi_values(N, d);
    Rat lhs(0), rhs(0);
    for (int j = t.a; j < t.b; ++j) lhs += pi[j];
    for (int j = t.ap; j < t.bp; ++j) rhs += pi[j];
    const bool expect = lhs == rhs;

    const long long off = Nprime.sub.n() - N.sub.n();
    std::map<EdgeKey, Rat> known;
    for (const auto& [e, len] : d.length)
        known[EdgeKey({e.a.x + off, e.a.y}, {e.b.x + off, e.b.y})] = len;

    RealizationSystem rs = exactness_system(Nprime.sub);
    std::vector<std::optional<Rat>> val(rs.variables.size());
    for (size_t i = 0; i < rs.variables.size(); ++i) {
        auto it = known.find(rs.variables[i]);
        if (it != known.end()) val[i] = it->second;
    }
    // single-unknown propagation over a worklist
    std::vector<std::vector<size_t>> eqs_of_var(rs.variables.size());
    std::vector<int> unknowns(rs.equations.size(), 0);
    std::vector<Rat> acc(rs.equations.size());
    for (size_t r = 0; r < rs.equations.size(); ++r) {
        acc[r] = rs.equations[r].rhs;
        for (const auto& [vi, c] : rs.equations[r].coef) {
            eqs_of_var[vi].push_back(r);
            if (val[vi])
                acc[r] -= c * (*val[vi]);
            else
                ++unknowns[r];
        }
    }
    std::vector<size_t> work;
    for (size_t r = 0; r < rs.equations.size(); ++r)
        if (unknowns[r] <= 1) work.push_back(r);
    bool consistent = true;
    while (consistent && !work.empty()) {
        size_t r = work.back();
        work.pop_back();
        if (unknowns[r] == 0) {
            if (acc[r] != 0) consistent = false;
            continue;
        }
        if (unknowns[r] != 1) continue;  // re-queued after being solved
        int var = -1;
        for (const auto& [vi, c] : rs.equations[r].coef)
            if (!val[vi]) var = vi;
        if (var < 0) continue;
        Rat v = acc[r] / rs.equations[r].get(var);
        val[var] = v;
        for (size_t e : eqs_of_var[var]) {
            acc[e] -= rs.equations[e].get(var) * v;
            if (--unknowns[e] <= 1) work.push_back(e);
        }
    }
    bool complete = consistent;
    if (consistent) {
        for (size_t r = 0; r < rs.equations.size() && consistent; ++r)
            if (unknowns[r] == 0 && acc[r] != 0) consistent = false;
        for (const auto& ov : val)
            if (!ov) {
                complete = false;
                break;
            }
        complete = complete && consistent;
    }
    bool positive = complete;
    if (complete)
        for (const auto& ov : val)
            if (*ov <= 0) positive = false;

    const bool success = consistent && complete && positive;
    if (success != expect) throw Error("lift_metric: interval-sum criterion violated");
    if (!success) return std::nullopt;
    ExactMetric out;
    for (size_t i = 0; i < rs.variables.size(); ++i) out.length[rs.variables[i]] = *val[i];
    if (!is_exact_metric(Nprime.sub, out)) throw Error("lift_metric: lifted metric not exact");
    return out;
}

IntervallicBuild build_intervallic(const IntervallicSpec& spec) {
    IntervallicBuild b;
    b.spec = spec;
    b.stages.push_back(base_subdivision(spec.m));
    for (const auto& t : spec.tuples) b.stages.push_back(extend(b.stages.back(), t));
    return b;
}

std::optional<ExactMetric> metric_from_point(const IntervallicBuild& b, const std::vector<Rat>& v,
                                             const Rat& bottom) {
    const ExtensibleSubdivision& base = b.stages.front();
    if (static_cast<int>(v.size()) != base.m) throw Error("metric_from_point: wrong arity");
    if (bottom <= 0) return std::nullopt;
    for (const auto& x : v)
        if (x <= 0) return std::nullopt;
    ExactMetric d;
    for (int i = 0; i < base.m; ++i) d.length[base.marked[i]] = v[i];
    for (int ei : base.sub.interior_edges()) {
        const EdgeKey& e = base.sub.edges()[ei].key;
        if (!d.length.count(e)) d.length[e] = bottom;
    }
    for (size_t k = 0; k + 1 < b.stages.size(); ++k) {
        auto lifted = lift_metric(b.stages[k], b.stages[k + 1], b.spec.tuples[k], d);
        if (!lifted) return std::nullopt;
        d = std::move(*lifted);
    }
    return d;
}

// ---------------------------------------------------------------------------
// encodings
// ---------------------------------------------------------------------------

IntervallicSpec encode_addition(const IntervallicSpec& spec, int a, int b) {
    if (a < 0 || b < 0 || a >= spec.m || b >= spec.m) throw Error("encode_addition: index out of range");
    const int m = spec.m;
    IntervallicSpec out = spec;
    out.m = m + 3;
    out.tuples.push_back(AdmissibleTuple::make(m, m + 1, a, a + 1));
    out.tuples.push_back(AdmissibleTuple::make(m + 1, m + 2, b, b + 1));
    out.tuples.push_back(AdmissibleTuple::make(m + 2, m + 3, m, m + 2));
    return out;
}

FunctionEncoding encode_functions(const IntervallicSpec& spec,
                                  std::vector<std::vector<long long>> coord_fun,
                                  const std::vector<std::vector<long long>>& funcs) {
    if (static_cast<int>(coord_fun.size()) != spec.m)
        throw Error("encode_functions: coord_fun arity mismatch");
    FunctionEncoding enc;
    enc.spec = spec;
    enc.coord_fun = std::move(coord_fun);
    const size_t base_arity = enc.coord_fun.empty() ? 0 : enc.coord_fun.front().size();

    std::map<std::vector<long long>, int> repr;  // function over spec coords -> coordinate
    for (int i = 0; i < spec.m; ++i) {
        std::vector<long long> unit(spec.m, 0);
        unit[i] = 1;
        repr[unit] = i;
    }
    auto fun_add = [&](const std::vector<long long>& x, const std::vector<long long>& y) {
        std::vector<long long> s(base_arity, 0);
        for (size_t i = 0; i < base_arity; ++i) s[i] = x[i] + y[i];
        return s;
    };

    std::function<int(std::vector<long long>)> represent = [&](std::vector<long long> f) -> int {
        long long total = 0;
        for (long long c : f) {
            if (c < 0) throw Error("encode_functions: negative coefficient");
            total += c;
        }
        if (total == 0) throw Error("encode_functions: zero function");
        auto it = repr.find(f);
        if (it != repr.end()) return it->second;
        int a = -1;
        for (size_t i = 0; i < f.size(); ++i)
            if (f[i] > 0) {
                a = static_cast<int>(i);
                break;
            }
        std::vector<long long> fp = f;
        fp[a] -= 1;
        int rb = represent(fp);
        const int mm = enc.spec.m;
        enc.spec = encode_addition(enc.spec, a, rb);
        enc.coord_fun.push_back(enc.coord_fun[a]);
        enc.coord_fun.push_back(enc.coord_fun[rb]);
        enc.coord_fun.push_back(fun_add(enc.coord_fun[a], enc.coord_fun[rb]));
        repr[f] = mm + 2;
        return mm + 2;
    };

    for (const auto& f : funcs) {
        if (static_cast<int>(f.size()) != spec.m) throw Error("encode_functions: arity mismatch");
        std::vector<long long> padded = f;
        enc.representative.push_back(represent(std::move(padded)));
    }
    return enc;
}

SystemEncoding encode_system(const LinearSystemSpec& sys) {
    if (sys.m < 1) throw Error("encode_system: dimension must be at least 1");
    const int m0 = sys.m;
    const int slacks = static_cast<int>(sys.stricts.size());
    const int mp = m0 + slacks;

    // coordinate functions over v_0..m0-1 for the slack-extended orthant
    std::vector<std::vector<long long>> coord_fun;
    for (int i = 0; i < m0; ++i) {
        std::vector<long long> e(m0, 0);
        e[i] = 1;
        coord_fun.push_back(std::move(e));
    }
    for (const auto& f : sys.stricts) {
        if (static_cast<int>(f.size()) != m0) throw Error("encode_system: arity mismatch");
        coord_fun.push_back(f);  // on V the slack equals f(v)
    }

    struct Pending {
        std::vector<long long> plus, minus;
    };
    std::vector<Pending> pend;
    auto split = [&](const std::vector<long long>& f, int slack_idx) {
        if (static_cast<int>(f.size()) != m0) throw Error("encode_system: arity mismatch");
        Pending p;
        p.plus.assign(mp, 0);
        p.minus.assign(mp, 0);
        for (int i = 0; i < m0; ++i) {
            if (f[i] > 0) p.plus[i] = f[i];
            if (f[i] < 0) p.minus[i] = -f[i];
        }
        if (slack_idx >= 0) p.minus[m0 + slack_idx] += 1;
        // a vanishing side would have no representing coordinate; bump both
        // sides by v_0 (the constraint is unchanged)
        auto zero = [](const std::vector<long long>& g) {
            for (long long c : g)
                if (c != 0) return false;
            return true;
        };
        if (zero(p.plus) || zero(p.minus)) {
            p.plus[0] += 1;
            p.minus[0] += 1;
        }
        return p;
    };
    for (const auto& f : sys.equalities) {
        bool all_zero = std::all_of(f.begin(), f.end(), [](long long c) { return c == 0; });
        if (all_zero) continue;  // 0 = 0
        pend.push_back(split(f, -1));
    }
    for (size_t k = 0; k < sys.stricts.size(); ++k) pend.push_back(split(sys.stricts[k], static_cast<int>(k)));

    std::vector<std::vector<long long>> funcs;
    for (const auto& p : pend) {
        funcs.push_back(p.plus);
        funcs.push_back(p.minus);
    }

    IntervallicSpec spec;
    spec.m = mp;
    FunctionEncoding enc = encode_functions(spec, std::move(coord_fun), funcs);

    for (size_t k = 0; k < pend.size(); ++k) {
        int ra = enc.representative[2 * k];
        int rb = enc.representative[2 * k + 1];
        if (ra == rb) throw Error("encode_system: degenerate constraint");
        int lo = std::min(ra, rb), hi = std::max(ra, rb);
        enc.spec.tuples.push_back(AdmissibleTuple::make(lo, lo + 1, hi, hi + 1));
    }

    SystemEncoding out;
    out.spec = enc.spec;
    out.m0 = m0;
    out.slack_count = slacks;
    out.coord_fun = enc.coord_fun;
    return out;
}

std::vector<Rat> SystemEncoding::lift_point(const std::vector<Rat>& v) const {
    if (static_cast<int>(v.size()) != m0) throw Error("lift_point: wrong arity");
    std::vector<Rat> z;
    z.reserve(coord_fun.size());
    for (const auto& f : coord_fun) {
        Rat s(0);
        for (int i = 0; i < m0; ++i) s += Rat(f[i]) * v[i];
        z.push_back(s);
    }
    return z;
}

CompileResult compile(const LinearSystemSpec& sys) {
    CompileResult res;
    res.enc = encode_system(sys);
    res.build = build_intervallic(res.enc.spec);
    return res;
}

lin::System projected_realization_space(const ExtensibleSubdivision& N, int first_m) {
    if (first_m > N.m) throw Error("projected_realization_space: too many coordinates");
    RealizationSystem rs = exactness_system(N.sub);
    lin::System sys(static_cast<int>(rs.variables.size()));
    for (const auto& r : rs.equations) sys.add(r);
    for (size_t i = 0; i < rs.variables.size(); ++i)
        sys.add(lin::make_row({{static_cast<int>(i), Rat(1)}}, lin::Rel::Gt, Rat(0)));
    std::vector<int> keep;
    for (int i = 0; i < first_m; ++i) {
        int vi = rs.var_index(N.marked[i]);
        if (vi < 0) throw Error("projected_realization_space: marked edge not interior");
        keep.push_back(vi);
    }
    return sys.project(keep);
}

}  // namespace trop
