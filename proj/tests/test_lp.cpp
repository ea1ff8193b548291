#include <doctest.h>

#include "trop/lp.hpp"
#include "trop/random.hpp"

using namespace trop;

namespace {

lin::Row row(std::map<int, Rat> c, lin::Rel rel, long long rhs) {
    return lin::make_row(std::move(c), rel, Rat(rhs));
}

}  // namespace

TEST_CASE("standard form simplex: optimum") {
    // min -x0 - x1 s.t. x0 + x1 + s = 4, x0 + 2 x1 + t = 6, all >= 0
    std::vector<std::vector<Rat>> A{{Rat(1), Rat(1), Rat(1), Rat(0)}, {Rat(1), Rat(2), Rat(0), Rat(1)}};
    std::vector<Rat> b{Rat(4), Rat(6)};
    std::vector<Rat> c{Rat(-1), Rat(-1), Rat(0), Rat(0)};
    auto res = lp::solve_standard(A, b, c);
    REQUIRE(res.status == lp::Status::Optimal);
    CHECK(res.objective == Rat(-4));
}

TEST_CASE("standard form simplex: infeasible with Farkas certificate") {
    // x0 + x1 = 2, x0 + x1 = 5 (x >= 0) is infeasible
    std::vector<std::vector<Rat>> A{{Rat(1), Rat(1)}, {Rat(1), Rat(1)}};
    std::vector<Rat> b{Rat(2), Rat(5)};
    std::vector<Rat> c{Rat(0), Rat(0)};
    auto res = lp::solve_standard(A, b, c);
    REQUIRE(res.status == lp::Status::Infeasible);
    // y.A <= 0 componentwise and y.b > 0
    REQUIRE(res.farkas.size() == 2);
    for (size_t j = 0; j < 2; ++j) {
        Rat col = res.farkas[0] * A[0][j] + res.farkas[1] * A[1][j];
        CHECK(col <= 0);
    }
    CHECK(res.farkas[0] * b[0] + res.farkas[1] * b[1] > 0);
}

TEST_CASE("standard form simplex: unbounded") {
    // min -x0 s.t. x0 - x1 = 0
    std::vector<std::vector<Rat>> A{{Rat(1), Rat(-1)}};
    std::vector<Rat> b{Rat(0)};
    std::vector<Rat> c{Rat(-1), Rat(0)};
    auto res = lp::solve_standard(A, b, c);
    CHECK(res.status == lp::Status::Unbounded);
}

TEST_CASE("strict feasibility points") {
    // 0 < x < 1 is feasible, returns an interior point
    std::vector<lin::Row> rows{row({{0, Rat(1)}}, lin::Rel::Gt, 0), row({{0, Rat(-1)}}, lin::Rel::Gt, -1)};
    auto pt = lp::strict_feasible_point(1, rows);
    REQUIRE(pt.has_value());
    CHECK((*pt)[0] > 0);
    CHECK((*pt)[0] < 1);

    // x > 0, x < 0 infeasible
    std::vector<lin::Row> bad{row({{0, Rat(1)}}, lin::Rel::Gt, 0), row({{0, Rat(-1)}}, lin::Rel::Gt, 0)};
    CHECK(!lp::strict_feasible_point(1, bad));

    // boundary-only solution: x >= 1, x <= 1, x > 0 is feasible at x = 1
    std::vector<lin::Row> edge{row({{0, Rat(1)}}, lin::Rel::Ge, 1), row({{0, Rat(-1)}}, lin::Rel::Ge, -1),
                               row({{0, Rat(1)}}, lin::Rel::Gt, 0)};
    auto ept = lp::strict_feasible_point(1, edge);
    REQUIRE(ept.has_value());
    CHECK((*ept)[0] == Rat(1));

    // x >= 1, x <= 1, x > 1 infeasible
    std::vector<lin::Row> closed{row({{0, Rat(1)}}, lin::Rel::Ge, 1),
                                 row({{0, Rat(-1)}}, lin::Rel::Ge, -1),
                                 row({{0, Rat(1)}}, lin::Rel::Gt, 1)};
    CHECK(!lp::strict_feasible_point(1, closed));
}

TEST_CASE("LP feasibility agrees with Fourier-Motzkin on random systems") {
    rng::Gen gen(43);
    for (int t = 0; t < 60; ++t) {
        int dim = 2 + static_cast<int>(gen.uniform(0, 1));
        std::vector<lin::Row> rows;
        lin::System sys(dim);
        for (int r = 0; r < 4; ++r) {
            std::map<int, Rat> c;
            for (int v = 0; v < dim; ++v) c[v] = Rat(gen.uniform(-2, 2));
            lin::Rel rel = gen.flip() ? lin::Rel::Ge : lin::Rel::Gt;
            lin::Row rr = lin::make_row(std::move(c), rel, Rat(gen.uniform(-2, 2)));
            rows.push_back(rr);
            sys.add(rr);
        }
        bool lp_feasible = lp::strict_feasible_point(dim, rows).has_value();
        CHECK(lp_feasible == sys.feasible());
    }
}
