#pragma once

#include "trop/realization.hpp"

namespace trop {

// Index quadruple (a', b', a, b) with a < b, a' < b', a' < a, b' < b. It
// carries the interval-sum constraint
//     sum_{a <= j < b} v_j = sum_{a' <= j < b'} v_j .
// The constraint is symmetric in the two intervals; `make` reorders them
// into the admissible orientation and rejects pairs admitting neither.
struct AdmissibleTuple {
    int ap, bp, a, b;

    static AdmissibleTuple make(int ap, int bp, int a, int b);
    bool valid_for(int m) const { return ap >= 0 && b <= m; }
    lin::Row constraint_row() const;  // over v_0..; Eq with rhs 0
    friend bool operator==(const AdmissibleTuple&, const AdmissibleTuple&) = default;
};

struct IntervallicSpec {
    int m = 0;
    std::vector<AdmissibleTuple> tuples;

    // {v > 0} plus the tuple equalities
    lin::System system() const;
    bool contains(const std::vector<Rat>& v) const;
};

struct LinearSystemSpec {
    int m = 0;
    std::vector<std::vector<long long>> equalities;  // f(v) = 0
    std::vector<std::vector<long long>> stricts;     // f(v) > 0

    lin::System system() const;  // {v > 0} plus the rows above
};

// A subdivision whose left boundary exposes the marked structure required by
// the bar construction: the left edge is split into m+2 edges by vertices
// v_{-1} (top) .. v_m (bottom), and each v_i with 0 <= i < m meets exactly
// one bounded horizontal edge l_i.  pi(d) = (d(l_0), ..., d(l_{m-1})).
struct ExtensibleSubdivision {
    NewtonSubdivision sub;
    int m = 0;
    std::vector<LatticePoint> left_vertices;  // v_{-1}..v_m, top-down
    std::vector<EdgeKey> marked;              // l_0..l_{m-1}
};

// Detects the extensible structure (throws if absent).
ExtensibleSubdivision make_extensible(NewtonSubdivision sub, int m);

// The triangle of side m+2 sliced by full-width horizontal edges at every
// height: all faces P_{1,0,0,w3}, no interior vertices, every chord free.
ExtensibleSubdivision base_subdivision(int m);

// One application of the bar construction: widens the triangle by 4 and
// forces the tuple's interval-sum equality on the realization space.
// Validity of the produced complex is re-checked by classification and the
// tiling postconditions.
ExtensibleSubdivision extend(const ExtensibleSubdivision& N, const AdmissibleTuple& t);

std::vector<Rat> pi_values(const ExtensibleSubdivision& N, const ExactMetric& d);

// sigma: restriction of a metric on extend(N, t) to the edges of N.
ExactMetric restrict_metric(const ExtensibleSubdivision& Nprime, const ExtensibleSubdivision& N,
                            const ExactMetric& dprime);

// The unique extension of d across one bar construction, when the tuple's
// interval-sum equation holds on pi(d); nullopt otherwise.
std::optional<ExactMetric> lift_metric(const ExtensibleSubdivision& N,
                                       const ExtensibleSubdivision& Nprime, const AdmissibleTuple& t,
                                       const ExactMetric& d);

struct IntervallicBuild {
    IntervallicSpec spec;
    std::vector<ExtensibleSubdivision> stages;  // stages[0] = base, one per tuple after

    const ExtensibleSubdivision& result() const { return stages.back(); }
};

// Iterated extension over spec.tuples starting from base_subdivision(spec.m).
IntervallicBuild build_intervallic(const IntervallicSpec& spec);

// Exact metric on the final subdivision with pi = v, obtained by lifting
// stage by stage; the unmarked bottom chord is a free parameter of the
// realization space. nullopt when v is not in the intervallic set.
std::optional<ExactMetric> metric_from_point(const IntervallicBuild& b, const std::vector<Rat>& v,
                                             const Rat& bottom = Rat(1));

// Dimension m+3 spec on which coordinate m+2 equals v_a + v_b.
IntervallicSpec encode_addition(const IntervallicSpec& spec, int a, int b);

struct FunctionEncoding {
    IntervallicSpec spec;
    std::vector<int> representative;                // per requested function
    std::vector<std::vector<long long>> coord_fun;  // per coordinate: value on S as a function of v_0..base_m-1
};

// Represents every requested nonneg-integer function by a dedicated
// coordinate, via repeated encode_addition; f must be nonzero.
FunctionEncoding encode_functions(const IntervallicSpec& spec,
                                  std::vector<std::vector<long long>> coord_fun,
                                  const std::vector<std::vector<long long>>& funcs);

struct SystemEncoding {
    IntervallicSpec spec;
    int m0 = 0;           // original dimension
    int slack_count = 0;  // one per strict constraint
    std::vector<std::vector<long long>> coord_fun;  // per final coordinate, over v_0..m0-1

    // section of the projection: the unique point of S over v
    std::vector<Rat> lift_point(const std::vector<Rat>& v) const;
};

// The slack-and-representation reduction of {f=0 | f in E0} and
// {f>0 | f in E+} to an intervallic spec whose projection to the first m
// coordinates is exactly V.
SystemEncoding encode_system(const LinearSystemSpec& sys);

struct CompileResult {
    SystemEncoding enc;
    IntervallicBuild build;

    const ExtensibleSubdivision& subdivision() const { return build.result(); }
};

CompileResult compile(const LinearSystemSpec& sys);

// Fourier-Motzkin projection of {exactness, positivity} onto the first
// `first_m` marked coordinates (the returned isomorphism's image side).
lin::System projected_realization_space(const ExtensibleSubdivision& N, int first_m);

}  // namespace trop
