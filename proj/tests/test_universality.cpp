#include <doctest.h>

#include <set>

#include "trop/random.hpp"
#include "trop/universality.hpp"

using namespace trop;

namespace {

// random positive rational metric on the base stack, optionally forced to
// satisfy the tuple's interval-sum equation
ExactMetric random_base_metric(rng::Gen& gen, const ExtensibleSubdivision& base,
                               const AdmissibleTuple* force) {
    std::vector<Rat> pi(base.m);
    for (auto& v : pi) v = gen.rat(1, 9, 3);
    if (force) {
        // overwrite pi[a] so that sum_{[a,b)} = sum_{[ap,bp)}
        Rat target(0);
        for (int j = force->ap; j < force->bp; ++j) target += pi[j];
        Rat rest(0);
        for (int j = force->a + 1; j < force->b; ++j) rest += pi[j];
        pi[force->a] = target - rest;
        if (pi[force->a] <= 0) return random_base_metric(gen, base, force);
    }
    ExactMetric d;
    for (int i = 0; i < base.m; ++i) d.length[base.marked[i]] = pi[i];
    for (int ei : base.sub.interior_edges()) {
        const EdgeKey& e = base.sub.edges()[ei].key;
        if (!d.length.count(e)) d.length[e] = gen.rat(1, 5, 2);
    }
    return d;
}

}  // namespace

TEST_CASE("admissible tuples canonicalize") {
    AdmissibleTuple t = AdmissibleTuple::make(2, 5, 7, 10);
    CHECK(t == AdmissibleTuple{2, 5, 7, 10});
    // listed in the reversed orientation
    AdmissibleTuple s = AdmissibleTuple::make(7, 10, 2, 5);
    CHECK(s == AdmissibleTuple{2, 5, 7, 10});
    // singleton equality v_0 = v_1
    AdmissibleTuple e = AdmissibleTuple::make(1, 2, 0, 1);
    CHECK(e == AdmissibleTuple{0, 1, 1, 2});
    // nested intervals admit no orientation
    CHECK_THROWS_WITH_AS(AdmissibleTuple::make(0, 1, 0, 2), "inadmissible tuple", Error);
}

TEST_CASE("base subdivision structure") {
    for (int m : {1, 3, 5}) {
        ExtensibleSubdivision base = base_subdivision(m);
        CHECK(base.sub.n() == m + 2);
        CHECK(base.sub.interior_vertices().empty());
        CHECK(exactness_system(base.sub).equations.empty());
        CHECK(static_cast<int>(base.marked.size()) == m);
        for (const auto& f : base.sub.faces()) {
            CHECK(f.profile->c == 1);
            CHECK(f.profile->w1 == 0);
            CHECK(f.profile->w2 == 0);
        }
        // pi of the all-ones metric is all ones
        ExactMetric ones;
        for (int ei : base.sub.interior_edges()) ones.length[base.sub.edges()[ei].key] = 1;
        CHECK(is_exact_metric(base.sub, ones));
        CHECK(pi_values(base, ones) == std::vector<Rat>(m, Rat(1)));
    }
}

TEST_CASE("extend reproduces the reference construction for (2,5,7,10)") {
    ExtensibleSubdivision base = base_subdivision(12);
    AdmissibleTuple t = AdmissibleTuple::make(2, 5, 7, 10);
    ExtensibleSubdivision ext = extend(base, t);
    CHECK(ext.sub.n() == 18);
    CHECK(is_linear(ext.sub));
    CHECK(ext.m == 12);

    // faces added by the construction
    std::set<std::vector<LatticePoint>> old_faces;
    for (const auto& f : base.sub.faces()) {
        std::vector<LatticePoint> shifted;
        for (const auto& v : f.cycle) shifted.push_back({v.x + 4, v.y});
        old_faces.insert(shifted);
    }
    std::vector<const SubFace*> fresh;
    for (const auto& f : ext.sub.faces())
        if (!old_faces.count(f.cycle)) fresh.push_back(&f);

    auto is_para = [](const LocalProfile& p) {
        return p.c == 0 && (p.w1 > 0) + (p.w2 > 0) + (p.w3 > 0) == 2;
    };
    std::map<std::set<LatticePoint>, LocalProfile> special;
    for (const auto* f : fresh) {
        if (is_para(*f->profile)) continue;
        special[{f->cycle.begin(), f->cycle.end()}] = *f->profile;
    }
    REQUIRE(special.size() == 6);
    using S = std::set<LatticePoint>;
    CHECK(special.at(S{{0, 18}, {1, 17}, {1, 16}, {0, 16}}) == LocalProfile{1, 0, 1, 0});
    CHECK(special.at(S{{4, 13}, {5, 13}, {3, 15}, {3, 14}}) == LocalProfile{1, 1, 0, 0});
    CHECK(special.at(S{{0, 9}, {0, 7}, {2, 7}, {2, 8}, {1, 9}}) == LocalProfile{1, 0, 1, 1});
    CHECK(special.at(S{{0, 5}, {0, 3}, {3, 3}, {3, 4}, {2, 5}}) == LocalProfile{1, 0, 1, 2});
    CHECK(special.at(S{{1, 15}, {1, 13}, {2, 12}, {3, 12}, {3, 13}}) == LocalProfile{1, 1, 1, 0});
    CHECK(special.at(S{{2, 10}, {2, 9}, {3, 8}, {4, 8}, {4, 9}, {3, 10}}) == LocalProfile{0, 1, 1, 1});
}

TEST_CASE("lift succeeds exactly when the interval-sum equation holds") {
    ExtensibleSubdivision base = base_subdivision(12);
    AdmissibleTuple t = AdmissibleTuple::make(2, 5, 7, 10);
    ExtensibleSubdivision ext = extend(base, t);
    rng::Gen gen(73);
    int lifted = 0, rejected = 0;
    for (int k = 0; k < 100; ++k) {
        bool force = k % 2 == 0;
        ExactMetric d = random_base_metric(gen, base, force ? &t : nullptr);
        REQUIRE(is_exact_metric(base.sub, d));
        std::vector<Rat> pi = pi_values(base, d);
        Rat lhs(0), rhs(0);
        for (int j = t.a; j < t.b; ++j) lhs += pi[j];
        for (int j = t.ap; j < t.bp; ++j) rhs += pi[j];
        auto lift = lift_metric(base, ext, t, d);
        CHECK(lift.has_value() == (lhs == rhs));
        if (lift) {
            ++lifted;
            CHECK(is_exact_metric(ext.sub, *lift));
            // sigma inverts the lift and pi is compatible
            ExactMetric back = restrict_metric(ext, base, *lift);
            CHECK(back.length == d.length);
            CHECK(pi_values(ext, *lift) == pi);
        } else {
            ++rejected;
        }
    }
    CHECK(lifted >= 50);
    CHECK(rejected >= 40);
}

TEST_CASE("iterated extension: two tuples") {
    ExtensibleSubdivision base = base_subdivision(6);
    AdmissibleTuple t1 = AdmissibleTuple::make(0, 1, 1, 2);
    AdmissibleTuple t2 = AdmissibleTuple::make(2, 4, 3, 6);
    ExtensibleSubdivision e1 = extend(base, t1);
    ExtensibleSubdivision e2 = extend(e1, t2);
    CHECK(e2.sub.n() == 6 + 2 + 8);
    CHECK(is_linear(e2.sub));
}

TEST_CASE("build_intervallic: empty spec is the free stack") {
    IntervallicSpec spec{3, {}};
    IntervallicBuild b = build_intervallic(spec);
    CHECK(b.stages.size() == 1);
    auto d = metric_from_point(b, {Rat(2), Rat(1, 3), Rat(5)});
    REQUIRE(d.has_value());
    CHECK(pi_values(b.result(), *d) == std::vector<Rat>{Rat(2), Rat(1, 3), Rat(5)});
}

TEST_CASE("build_intervallic: single equality tuple") {
    IntervallicSpec spec{2, {AdmissibleTuple::make(0, 1, 1, 2)}};  // v0 = v1
    IntervallicBuild b = build_intervallic(spec);
    CHECK(metric_from_point(b, {Rat(3), Rat(3)}).has_value());
    CHECK(!metric_from_point(b, {Rat(3), Rat(4)}).has_value());

    // image characterization through the projection
    lin::System projected = projected_realization_space(b.result(), 2);
    CHECK(projected.equivalent(spec.system()));
    CHECK(projected.canonical().to_string() == spec.system().canonical().to_string());
}

TEST_CASE("encode_addition pins coordinate m+2 to the sum") {
    IntervallicSpec spec{2, {}};
    IntervallicSpec added = encode_addition(spec, 0, 1);
    CHECK(added.m == 5);
    CHECK(added.tuples.size() == 3);
    // (2,3) lifts to (2,3,2,3,5)
    std::vector<Rat> v{Rat(2), Rat(3), Rat(2), Rat(3), Rat(5)};
    CHECK(added.contains(v));
    std::vector<Rat> bad{Rat(2), Rat(3), Rat(2), Rat(3), Rat(6)};
    CHECK(!added.contains(bad));
    // the added tuples are admissible by construction
    for (const auto& t : added.tuples) CHECK(t.valid_for(added.m));
}

TEST_CASE("encode_functions: base cases and recursion") {
    IntervallicSpec spec{2, {}};
    std::vector<std::vector<long long>> id{{1, 0}, {0, 1}};

    auto e1 = encode_functions(spec, id, {{1, 0}});  // v0: no growth
    CHECK(e1.spec.m == 2);
    CHECK(e1.representative == std::vector<int>{0});

    auto e2 = encode_functions(spec, id, {{1, 1}});  // v0+v1: one addition
    CHECK(e2.spec.m == 5);
    CHECK(e2.representative == std::vector<int>{4});
    CHECK(e2.coord_fun[4] == std::vector<long long>{1, 1});

    auto e3 = encode_functions(spec, id, {{2, 0}});  // 2 v0 via one addition
    CHECK(e3.spec.m == 5);
    CHECK(e3.coord_fun[e3.representative[0]] == std::vector<long long>{2, 0});
}

TEST_CASE("encode_system: equality, strict, and their projections") {
    {
        LinearSystemSpec sys{2, {{1, -1}}, {}};  // v0 = v1
        SystemEncoding enc = encode_system(sys);
        CHECK(enc.spec.m == 2);  // representations are the unit coordinates
        CHECK(enc.slack_count == 0);
        // the single extra tuple forces v0 = v1
        CHECK(enc.spec.tuples.size() == 1);
        CHECK(enc.spec.tuples[0] == AdmissibleTuple{0, 1, 1, 2});
    }
    {
        LinearSystemSpec sys{2, {}, {{1, -1}}};  // v0 > v1
        SystemEncoding enc = encode_system(sys);
        CHECK(enc.spec.m >= 3);
        // dimension bookkeeping: m + slacks + 3 per addition
        int additions = (enc.spec.m - 2 - 1) / 3;
        CHECK(enc.spec.m == 2 + 1 + 3 * additions);
        std::vector<Rat> v{Rat(5), Rat(2)};
        std::vector<Rat> z = enc.lift_point(v);
        CHECK(enc.spec.contains(z));
        std::vector<Rat> w{Rat(2), Rat(5)};
        CHECK(!enc.spec.contains(enc.lift_point(w)));
    }
}

TEST_CASE("compile: equality system end to end") {
    LinearSystemSpec sys{2, {{1, -1}}, {}};
    CompileResult res = compile(sys);
    CHECK(is_linear(res.subdivision().sub));
    lin::System projected = projected_realization_space(res.subdivision(), 2);
    CHECK(projected.equivalent(sys.system()));
    CHECK(projected.canonical().to_string() == sys.system().canonical().to_string());

    // sampled points of V lift to exact metrics; sampled metrics project into V
    rng::Gen gen(79);
    for (int k = 0; k < 10; ++k) {
        Rat x = gen.rat(1, 9, 3);
        auto d = metric_from_point(res.build, res.enc.lift_point({x, x}));
        REQUIRE(d.has_value());
        CHECK(is_exact_metric(res.subdivision().sub, *d));
        auto pi = pi_values(res.subdivision(), *d);
        CHECK(pi[0] == x);
        CHECK(pi[1] == x);
    }
}

TEST_CASE("compile: empty system is unrealizable") {
    LinearSystemSpec sys{2, {{1, 1}}, {}};  // v0 + v1 = 0 in the open orthant
    CompileResult res = compile(sys);
    CHECK(!sys.system().feasible());
    auto r = is_realizable(res.subdivision().sub);
    CHECK(std::holds_alternative<InfeasibilityCertificate>(r));
}
