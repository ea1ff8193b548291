#pragma once

#include <map>
#include <string>
#include <vector>

#include "trop/rational.hpp"

namespace trop::lin {

enum class Rel { Eq, Ge, Gt };

// A single constraint: sum coef[v] * x_v  REL  rhs. Coefficients are kept
// sparse, sorted by variable, normalized to primitive integers.
struct Row {
    std::vector<std::pair<int, Rat>> coef;
    Rat rhs;
    Rel rel = Rel::Ge;

    Rat get(int v) const;
    bool ground() const { return coef.empty(); }
    bool ground_true() const;
    void normalize();
    Row negated_ge() const;  // for Gt rows: the weak complement -c >= -rhs
    Row negated_gt() const;  // for Ge rows: the strict complement -c > -rhs

    friend bool operator==(const Row&, const Row&) = default;
    friend bool operator<(const Row& a, const Row& b);
    std::string to_string() const;
};

Row make_row(std::map<int, Rat> coef, Rel rel, Rat rhs);

// A conjunction of linear constraints over variables 0..dim-1 with exact
// Fourier-Motzkin elimination. Equalities eliminate by substitution; pure
// inequalities combine pairwise.
class System {
public:
    explicit System(int dim) : dim_(dim) {}

    int dim() const { return dim_; }
    const std::vector<Row>& rows() const { return rows_; }
    void add(Row r);

    // Eliminates variable v (exact projection of the solution set).
    void eliminate(int v);

    // Projects onto `keep`, renumbering kept variables 0..keep.size()-1 in
    // the given order.
    System project(const std::vector<int>& keep) const;

    bool feasible() const;
    bool implies(const Row& r) const;
    bool equivalent(const System& other) const;

    // Canonical description: implicit equalities promoted and reduced to a
    // RREF basis, inequalities reduced modulo it, redundant rows dropped,
    // rows sorted. Infeasible systems canonicalize to the single row 0 >= 1.
    System canonical() const;

    std::string to_string() const;

private:
    void dedupe();

    int dim_;
    std::vector<Row> rows_;
};

}  // namespace trop::lin
