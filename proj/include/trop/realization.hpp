#pragma once

#include <variant>

#include "trop/lp.hpp"
#include "trop/newton.hpp"

namespace trop {

// Positive lengths on the interior edges of a subdivision; the coordinates
// of a line arrangement realizing it.
struct ExactMetric {
    std::map<EdgeKey, Rat> length;
};

// The homogeneous exactness equations: for every interior vertex v,
// sum over edges e at v of d(e) * (primitive direction of e out of v) = 0.
struct RealizationSystem {
    std::vector<EdgeKey> variables;          // interior edges, sorted
    std::vector<lin::Row> equations;         // two rows per interior vertex (x then y)
    std::vector<LatticePoint> vertex_order;  // interior vertices, matching rows 2i, 2i+1

    int var_index(const EdgeKey& e) const;
};

// Throws Error("non-linear subdivision") unless is_linear(N).
RealizationSystem exactness_system(const NewtonSubdivision& N);

// Throws Error("missing edge assignment") if d omits an interior edge.
bool is_exact_metric(const NewtonSubdivision& N, const ExactMetric& d);

// Stiemke-style witness of emptiness: y over the equation rows whose row
// combination y.A is componentwise nonnegative and not identically zero,
// contradicting positivity on the kernel.
struct InfeasibilityCertificate {
    std::vector<Rat> y;
    std::vector<Rat> combination;  // y.A per variable
};

using RealizabilityResult = std::variant<ExactMetric, InfeasibilityCertificate>;

// Decides whether the realization space {A d = 0, d > 0} is nonempty, via
// substitution presolve plus exact simplex on {d >= 1} (homogeneity makes the
// two equivalent). Witnesses are re-verified by is_exact_metric; certificates
// by verify_certificate.
RealizabilityResult is_realizable(const NewtonSubdivision& N);

bool verify_certificate(const NewtonSubdivision& N, const InfeasibilityCertificate& cert);

// {exactness equalities, strict positivity} over the variable order of
// exactness_system; the realization space as a lin::System.
lin::System realization_space_system(const NewtonSubdivision& N);

// Rebuilds a line arrangement from N and an exact metric by breadth-first
// placement over the face adjacency graph: crossing an interior edge e moves
// by d(e) times the -90-degree rotation of the side direction. The result is
// normalized so the first face's vertex sits at the origin; its subdivision
// is re-built and checked against N.
Arrangement reconstruct(const NewtonSubdivision& N, const ExactMetric& d);

// Lengths of the bounded 1-cells of the generating arrangement.
ExactMetric measured_metric(const BuiltSubdivision& built);

}  // namespace trop
