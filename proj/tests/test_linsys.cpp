#include <doctest.h>

#include "trop/linsys.hpp"
#include "trop/random.hpp"

using namespace trop;
using namespace trop::lin;

namespace {

Row row(std::map<int, Rat> c, Rel rel, long long rhs) { return make_row(std::move(c), rel, Rat(rhs)); }

}  // namespace

TEST_CASE("row normalization") {
    Row r = row({{0, Rat(2, 3)}, {1, Rat(-4, 3)}}, Rel::Ge, 2);
    CHECK(r.coef == std::vector<std::pair<int, Rat>>{{0, Rat(1)}, {1, Rat(-2)}});
    CHECK(r.rhs == Rat(3));
    // equalities get a canonical sign
    Row e = row({{0, Rat(-1)}, {1, Rat(1)}}, Rel::Eq, 0);
    CHECK(e.coef.front().second == Rat(1));
}

TEST_CASE("feasibility via elimination") {
    System s(2);
    s.add(row({{0, Rat(1)}}, Rel::Ge, 0));
    s.add(row({{1, Rat(1)}}, Rel::Ge, 0));
    s.add(row({{0, Rat(1)}, {1, Rat(1)}}, Rel::Ge, 3));
    CHECK(s.feasible());
    s.add(row({{0, Rat(1)}, {1, Rat(1)}}, Rel::Ge, -1));
    CHECK(s.feasible());
    s.add(row({{0, Rat(-1)}, {1, Rat(-1)}}, Rel::Ge, -2));  // x+y <= 2, contradicts >= 3
    CHECK(!s.feasible());
}

TEST_CASE("strict rows matter") {
    System s(1);
    s.add(row({{0, Rat(1)}}, Rel::Ge, 1));
    s.add(row({{0, Rat(-1)}}, Rel::Ge, -1));  // x <= 1
    CHECK(s.feasible());                      // x = 1
    System t = s;
    t.add(row({{0, Rat(1)}}, Rel::Gt, 1));  // x > 1
    CHECK(!t.feasible());
    System u(1);
    u.add(row({{0, Rat(1)}}, Rel::Gt, 0));
    u.add(row({{0, Rat(-1)}}, Rel::Gt, 0));  // x > 0 and -x > 0
    CHECK(!u.feasible());
}

TEST_CASE("equalities eliminate by substitution") {
    System s(3);
    s.add(row({{0, Rat(1)}, {1, Rat(-1)}}, Rel::Eq, 0));  // x0 = x1
    s.add(row({{1, Rat(1)}, {2, Rat(-1)}}, Rel::Eq, 0));  // x1 = x2
    s.add(row({{0, Rat(1)}}, Rel::Gt, 0));
    s.add(row({{2, Rat(-1)}}, Rel::Gt, -5));  // x2 < 5
    CHECK(s.feasible());
    System p = s.project({0});
    CHECK(p.dim() == 1);
    // projection is {0 < x0 < 5}
    CHECK(p.implies(row({{0, Rat(1)}}, Rel::Gt, 0)));
    CHECK(p.implies(row({{0, Rat(-1)}}, Rel::Gt, -5)));
    CHECK(!p.implies(row({{0, Rat(1)}}, Rel::Ge, 1)));
}

TEST_CASE("projection matches hand computation") {
    // {x >= 0, y >= 0, x + y <= 4} projected to x is [0, 4]
    System s(2);
    s.add(row({{0, Rat(1)}}, Rel::Ge, 0));
    s.add(row({{1, Rat(1)}}, Rel::Ge, 0));
    s.add(row({{0, Rat(-1)}, {1, Rat(-1)}}, Rel::Ge, -4));
    System p = s.project({0});
    CHECK(p.implies(row({{0, Rat(1)}}, Rel::Ge, 0)));
    CHECK(p.implies(row({{0, Rat(-1)}}, Rel::Ge, -4)));
    CHECK(!p.implies(row({{0, Rat(-1)}}, Rel::Ge, -3)));
}

TEST_CASE("implication handles equalities") {
    System s(2);
    s.add(row({{0, Rat(1)}, {1, Rat(-1)}}, Rel::Eq, 0));
    s.add(row({{0, Rat(1)}}, Rel::Ge, 2));
    CHECK(s.implies(row({{1, Rat(1)}}, Rel::Ge, 2)));
    CHECK(s.implies(row({{0, Rat(1)}, {1, Rat(1)}}, Rel::Ge, 4)));
    CHECK(!s.implies(row({{0, Rat(1)}}, Rel::Gt, 2)));
}

TEST_CASE("equivalence and canonical forms") {
    System a(2);
    a.add(row({{0, Rat(1)}}, Rel::Gt, 0));
    a.add(row({{1, Rat(1)}}, Rel::Gt, 0));
    a.add(row({{0, Rat(1)}, {1, Rat(-1)}}, Rel::Eq, 0));

    System b(2);
    b.add(row({{1, Rat(2)}}, Rel::Gt, 0));
    b.add(row({{0, Rat(3)}, {1, Rat(-3)}}, Rel::Ge, 0));
    b.add(row({{0, Rat(-1)}, {1, Rat(1)}}, Rel::Ge, 0));

    CHECK(a.equivalent(b));
    CHECK(a.canonical().to_string() == b.canonical().to_string());

    System c(2);
    c.add(row({{0, Rat(1)}}, Rel::Gt, 0));
    c.add(row({{1, Rat(1)}}, Rel::Gt, 0));
    CHECK(!a.equivalent(c));
    CHECK(a.canonical().to_string() != c.canonical().to_string());
}

TEST_CASE("canonical form of an infeasible system") {
    System s(1);
    s.add(row({{0, Rat(1)}}, Rel::Ge, 2));
    s.add(row({{0, Rat(-1)}}, Rel::Ge, -1));
    CHECK(!s.feasible());
    CHECK(s.canonical().to_string() == "0 >= 1\n");
}

TEST_CASE("canonical form prunes redundancy deterministically") {
    System s(2);
    s.add(row({{0, Rat(1)}}, Rel::Ge, 0));
    s.add(row({{0, Rat(2)}}, Rel::Ge, -2));  // redundant
    s.add(row({{1, Rat(1)}}, Rel::Ge, 1));
    s.add(row({{0, Rat(1)}, {1, Rat(1)}}, Rel::Ge, 0));  // redundant
    System c = s.canonical();
    CHECK(c.rows().size() == 2);
}

TEST_CASE("random projection consistency against sampling") {
    rng::Gen gen(41);
    for (int t = 0; t < 20; ++t) {
        // random small system over 3 variables
        System s(3);
        for (int r = 0; r < 4; ++r) {
            std::map<int, Rat> c;
            for (int v = 0; v < 3; ++v) c[v] = Rat(gen.uniform(-2, 2));
            s.add(make_row(std::move(c), gen.flip() ? Rel::Ge : Rel::Gt, Rat(gen.uniform(-3, 3))));
        }
        System p = s.project({0, 1});
        // any sampled feasible point of s projects into p
        for (int k = 0; k < 30; ++k) {
            std::vector<Rat> x{Rat(gen.uniform(-4, 4), 2), Rat(gen.uniform(-4, 4), 2),
                               Rat(gen.uniform(-4, 4), 2)};
            bool in_s = true;
            for (const auto& r : s.rows()) {
                Rat acc(0);
                for (const auto& [v, c] : r.coef) acc += c * x[v];
                if (r.rel == Rel::Ge ? !(acc >= r.rhs) : !(acc > r.rhs)) in_s = false;
            }
            if (!in_s) continue;
            for (const auto& r : p.rows()) {
                Rat acc(0);
                for (const auto& [v, c] : r.coef) acc += c * x[v];
                CHECK((r.rel == Rel::Ge ? acc >= r.rhs : acc > r.rhs));
            }
        }
    }
}
