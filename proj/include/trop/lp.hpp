#pragma once

#include <optional>
#include <vector>

#include "trop/linsys.hpp"

namespace trop::lp {

enum class Status { Optimal, Infeasible, Unbounded };

struct StdResult {
    Status status = Status::Infeasible;
    std::vector<Rat> x;    // primal solution (Optimal)
    Rat objective;         // c.x at the optimum
    std::vector<Rat> farkas;  // Infeasible: y with y.A <= 0 componentwise, y.b > 0
};

// Exact dense tableau simplex with Bland's rule: min c.x s.t. A x = b, x >= 0.
StdResult solve_standard(std::vector<std::vector<Rat>> A, std::vector<Rat> b, std::vector<Rat> c);

// Feasibility of {rows(x) over free x}, strict rows included, decided by the
// bounded auxiliary program max delta s.t. strict rows relaxed by delta <= 1.
// Returns a satisfying point or nullopt.
std::optional<std::vector<Rat>> strict_feasible_point(int dim, const std::vector<lin::Row>& rows);

}  // namespace trop::lp
