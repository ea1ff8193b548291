#include <doctest.h>

#include <set>

#include "trop/chroma.hpp"
#include "trop/random.hpp"

using namespace trop;

namespace {

Point pt(long long x, long long y) { return Point(Rat(x), Rat(y)); }

TropLine red(long long x, long long y) { return TropLine(pt(x, y), Colour::Red); }
TropLine blue(long long x, long long y) { return TropLine(pt(x, y), Colour::Blue); }

// hexagon tiling of Delta_3, coloured like the corner analysis: hexagon
// diagonals red, verticals blue, horizontals red; triangles follow suit
NewtonSubdivision coloured_hexagon_tiling() {
    std::vector<std::vector<LatticePoint>> cycles{{{0, 0}, {1, 0}, {0, 1}},
                                                  {{2, 0}, {3, 0}, {2, 1}},
                                                  {{0, 2}, {1, 2}, {0, 3}},
                                                  {{1, 0}, {2, 0}, {2, 1}, {1, 2}, {0, 2}, {0, 1}}};
    NewtonSubdivision sub = NewtonSubdivision::from_faces(3, cycles);
    auto colour = [&](LatticePoint a, LatticePoint b, Colour c) {
        int ei = sub.edge_index(EdgeKey(a, b));
        REQUIRE(ei >= 0);
        sub.set_edge_colour(ei, c);
    };
    // hexagon: diagonal pair red, vertical pair blue, horizontal pair red
    colour({0, 1}, {1, 0}, Colour::Red);
    colour({2, 1}, {1, 2}, Colour::Red);
    colour({2, 0}, {2, 1}, Colour::Blue);
    colour({0, 1}, {0, 2}, Colour::Blue);
    colour({1, 0}, {2, 0}, Colour::Red);
    colour({0, 2}, {1, 2}, Colour::Red);
    // corner triangle at the origin joins the red diagonal
    colour({0, 0}, {1, 0}, Colour::Red);
    colour({0, 0}, {0, 1}, Colour::Red);
    // right triangle joins the blue vertical
    colour({2, 0}, {3, 0}, Colour::Blue);
    colour({3, 0}, {2, 1}, Colour::Blue);
    // top triangle joins the red horizontal
    colour({0, 2}, {0, 3}, Colour::Red);
    colour({0, 3}, {1, 2}, Colour::Red);
    return sub;
}

}  // namespace

TEST_CASE("lifted colourings are plausible") {
    Arrangement arr({red(0, 0), red(7, 3), blue(2, 9)});
    BuiltSubdivision b = lift_colours(arr);
    CHECK(is_plausibly_coloured(b.sub));
    // triangles of the blue line's center are all blue
    int fi = b.face_of_vertex(pt(2, 9));
    REQUIRE(fi >= 0);
    for (size_t i = 0; i < b.sub.faces()[fi].cycle.size(); ++i) {
        const auto& cyc = b.sub.faces()[fi].cycle;
        EdgeKey side(cyc[i], cyc[(i + 1) % cyc.size()]);
        CHECK(*b.sub.edges()[b.sub.edge_index(side)].colour == Colour::Blue);
    }
}

TEST_CASE("random lifted colourings always satisfy the plausibility rules") {
    rng::Gen gen(67);
    for (int t = 0; t < 20; ++t) {
        PointConfig cfg = gen.points_coaxial_free(3 + static_cast<int>(gen.uniform(0, 3)), true);
        std::vector<TropLine> lines;
        for (const auto& p : cfg.points) lines.emplace_back(p, cfg.colours.at(p));
        BuiltSubdivision b = lift_colours(Arrangement(lines));
        CHECK(is_plausibly_coloured(b.sub));
    }
}

TEST_CASE("overlap colour conflict is reported") {
    Arrangement arr({red(0, 0), blue(0, 2)});  // coaxial centers, shared vertical axis
    CHECK_THROWS_WITH_AS(lift_colours(arr), "overlap colour conflict", Error);
    // same colours overlap fine
    Arrangement ok({red(0, 0), red(0, 2)});
    CHECK(is_plausibly_coloured(lift_colours(ok).sub));
}

TEST_CASE("plausibility violations are detected") {
    NewtonSubdivision sub = coloured_hexagon_tiling();
    CHECK(is_plausibly_coloured(sub));
    // break rule 1 on a triangle
    sub.set_edge_colour(sub.edge_index(EdgeKey({0, 0}, {1, 0})), Colour::Blue);
    CHECK(!is_plausibly_coloured(sub));
}

TEST_CASE("all-red colouring is plausible and fully monochromatic") {
    NewtonSubdivision sub = optimal_subdivision(4);
    for (size_t i = 0; i < sub.edges().size(); ++i) sub.set_edge_colour(static_cast<int>(i), Colour::Red);
    CHECK(is_plausibly_coloured(sub));
    int non_tri = 0;
    for (const auto& f : sub.faces())
        if (!(*f.profile == LocalProfile{1, 0, 0, 0})) ++non_tri;
    CHECK(static_cast<int>(monochromatic_cells(sub).size()) == non_tri);
    CHECK(find_arms(sub).empty());  // arms need both colours
}

TEST_CASE("monochromatic cells of a lifted two-red-one-blue arrangement") {
    Arrangement arr({red(0, 0), red(7, 3), blue(2, 9)});
    BuiltSubdivision b = lift_colours(arr);
    auto cells = monochromatic_cells(b.sub);
    REQUIRE(cells.size() == 1);
    // the red-red crossing
    Point crossing = std::get<Point>(intersect(arr.lines()[0], arr.lines()[1]));
    CHECK(b.face_vertex[cells[0]] == crossing);
}

TEST_CASE("the coloured hexagon tiling has no monochromatic cell and carries an arm") {
    NewtonSubdivision sub = coloured_hexagon_tiling();
    CHECK(monochromatic_cells(sub).empty());
    auto arms = find_arms(sub);
    REQUIRE(!arms.empty());
    bool found_00 = false;
    for (const auto& arm : arms)
        if (arm.n == 0 && arm.m == 0 && arm.lead == Colour::Red &&
            arm.path == std::vector<LatticePoint>{{1, 2}, {2, 1}, {3, 0}})
            found_00 = true;
    CHECK(found_00);
}

TEST_CASE("colour swap commutes with detection") {
    NewtonSubdivision sub = coloured_hexagon_tiling();
    NewtonSubdivision swapped = sub;
    for (size_t i = 0; i < swapped.edges().size(); ++i)
        swapped.set_edge_colour(static_cast<int>(i), other(*sub.edges()[i].colour));
    CHECK(is_plausibly_coloured(swapped) == is_plausibly_coloured(sub));
    CHECK(monochromatic_cells(swapped) == monochromatic_cells(sub));
    auto a = find_arms(sub), b = find_arms(swapped);
    REQUIRE(a.size() == b.size());
    // swapped arms have swapped lead colours
    std::multiset<std::pair<int, int>> reds_a, blues_b;
    for (const auto& arm : a)
        if (arm.lead == Colour::Red) reds_a.insert({arm.n, arm.m});
    for (const auto& arm : b)
        if (arm.lead == Colour::Blue) blues_b.insert({arm.n, arm.m});
    CHECK(reds_a == blues_b);
}

TEST_CASE("determines_monochromatic_line on generic coloured sets") {
    PointConfig cfg;
    cfg.points = {pt(0, 0), pt(2, 1), pt(5, 3), pt(9, 4)};
    cfg.colours[pt(0, 0)] = Colour::Red;
    cfg.colours[pt(2, 1)] = Colour::Red;
    cfg.colours[pt(5, 3)] = Colour::Red;
    cfg.colours[pt(9, 4)] = Colour::Blue;
    TropLine line = determines_monochromatic_line(cfg);
    auto mem = members_on(line, cfg);
    CHECK(mem.size() >= 2);
    for (const auto& p : mem) CHECK(cfg.colours.at(p) == *line.colour);
    CHECK(*line.colour == Colour::Red);
}

TEST_CASE("alternating colours on one axis violate the hypothesis") {
    PointConfig cfg;
    cfg.points = {pt(0, 0), pt(1, 0), pt(2, 0), pt(3, 0)};
    cfg.colours[pt(0, 0)] = Colour::Red;
    cfg.colours[pt(1, 0)] = Colour::Blue;
    cfg.colours[pt(2, 0)] = Colour::Red;
    cfg.colours[pt(3, 0)] = Colour::Blue;
    CHECK_THROWS_WITH_AS(determines_monochromatic_line(cfg), "hypothesis violated", Error);
}

TEST_CASE("random monochromatic suite") {
    rng::Gen gen(71);
    for (int t = 0; t < 60; ++t) {
        PointConfig cfg = gen.points_coaxial_free(4 + static_cast<int>(gen.uniform(0, 6)), true);
        TropLine line = determines_monochromatic_line(cfg);
        auto mem = members_on(line, cfg);
        CHECK(mem.size() >= 2);
        for (const auto& p : mem) CHECK(cfg.colours.at(p) == *line.colour);
    }
}

TEST_CASE("the coaxial counterexample has no monochromatic point") {
    Arrangement arr = coaxial_counterexample();
    CHECK(arr.size() == 7);
    int reds = 0;
    for (const auto& l : arr.lines())
        if (*l.colour == Colour::Red) ++reds;
    CHECK(reds == 4);
    CHECK(monochromatic_points(arr).empty());
}

TEST_CASE("pasting the counterexample kills crossed monochromatic points") {
    // two red lines crossing at (1,1) plus a blue line far away
    std::vector<TropLine> lines{red(0, 0), red(2, 1), blue(40, -60)};
    Arrangement base(lines);
    auto mono = monochromatic_points(base);
    REQUIRE(mono == std::vector<Point>{pt(1, 1)});
    // paste a translate whose unbounded horizontal overlap passes through (1,1):
    // translate the counterexample so its rightmost overlap row sits at y=1
    std::vector<TropLine> pasted = lines;
    Arrangement counter = coaxial_counterexample();
    for (const auto& l : counter.lines())
        pasted.emplace_back(Point(l.center.x + Rat(30), l.center.y + Rat(1)), *l.colour);
    Arrangement combined(pasted);
    for (const Point& p : monochromatic_points(combined)) CHECK(!(p == pt(1, 1)));
}

TEST_CASE("exhaustive corner check: no monochromatic-free colourings from n = 4") {
    MrExhaustive r2 = mr_exhaustive_check(2);
    CHECK(r2.monochromatic_free > 0);  // the corner square survives at n = 2
    MrExhaustive r3 = mr_exhaustive_check(3);
    CHECK(r3.monochromatic_free > 0);  // the hexagon colouring survives at n = 3
    MrExhaustive r4 = mr_exhaustive_check(4);
    CHECK(r4.tilings > 0);
    CHECK(r4.monochromatic_free == 0);
}
