#include "trop/svg.hpp"

#include <algorithm>
#include <sstream>

namespace trop::svg {

namespace {

double approx(const Rat& r) {
    return numerator(r).convert_to<double>() / denominator(r).convert_to<double>();
}

std::string fmt(double v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

struct Style {
    std::string stroke = "black";
    bool dashed = false;
};

Style style_of(const std::optional<Colour>& c) {
    if (!c) return {};
    if (*c == Colour::Red) return {"red", true};
    return {"blue", false};
}

void line_elem(std::ostringstream& os, double x1, double y1, double x2, double y2, const Style& st) {
    os << "  <line x1=\"" << fmt(x1) << "\" y1=\"" << fmt(-y1) << "\" x2=\"" << fmt(x2) << "\" y2=\""
       << fmt(-y2) << "\" stroke=\"" << st.stroke << "\" stroke-width=\"0.06\""
       << (st.dashed ? " stroke-dasharray=\"0.2 0.12\"" : "") << "/>\n";
}

std::string document(double minx, double miny, double maxx, double maxy, const std::string& body) {
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << fmt(minx - 1) << " "
       << fmt(-(maxy + 1)) << " " << fmt(maxx - minx + 2) << " " << fmt(maxy - miny + 2) << "\">\n"
       << body << "</svg>\n";
    return os.str();
}

}  // namespace

std::string render_arrangement(const Arrangement& arr) {
    double minx = 0, miny = 0, maxx = 0, maxy = 0;
    bool first = true;
    auto grow = [&](double x, double y) {
        if (first) {
            minx = maxx = x;
            miny = maxy = y;
            first = false;
        } else {
            minx = std::min(minx, x);
            maxx = std::max(maxx, x);
            miny = std::min(miny, y);
            maxy = std::max(maxy, y);
        }
    };
    for (const auto& l : arr.lines()) grow(approx(l.center.x), approx(l.center.y));
    for (const Point& v : arrangement_vertices(arr)) grow(approx(v.x), approx(v.y));
    double reach = std::max(2.0, std::max(maxx - minx, maxy - miny));

    std::ostringstream body;
    for (const auto& l : arr.lines()) {
        double cx = approx(l.center.x), cy = approx(l.center.y);
        Style st = style_of(l.colour);
        line_elem(body, cx, cy, cx + reach, cy + reach, st);
        line_elem(body, cx, cy, cx - reach, cy, st);
        line_elem(body, cx, cy, cx, cy - reach, st);
        body << "  <circle cx=\"" << fmt(cx) << "\" cy=\"" << fmt(-cy) << "\" r=\"0.09\" fill=\""
             << st.stroke << "\"/>\n";
    }
    return document(minx - reach, miny - reach, maxx + reach, maxy + reach, body.str());
}

std::string render_subdivision(const NewtonSubdivision& sub) {
    std::ostringstream body;
    for (const auto& e : sub.edges()) {
        Style st = style_of(e.colour);
        line_elem(body, static_cast<double>(e.key.a.x), static_cast<double>(e.key.a.y),
                  static_cast<double>(e.key.b.x), static_cast<double>(e.key.b.y), st);
    }
    for (const auto& v : sub.vertices())
        body << "  <circle cx=\"" << v.x << "\" cy=\"" << -v.y << "\" r=\"0.08\" fill=\"black\"/>\n";
    return document(0, 0, sub.n(), sub.n(), body.str());
}

}  // namespace trop::svg
