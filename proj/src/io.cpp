#include "trop/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace trop::io {

using nlohmann::json;

namespace {

json rat_json(const Rat& r) { return rat_to_string(r); }

Rat rat_parse(const json& j) {
    if (j.is_number_integer()) return Rat(j.get<long long>());
    if (j.is_string()) return rat_from_string(j.get<std::string>());
    throw ParseError("expected rational as string or integer");
}

json point_json(const Point& p) { return json::array({rat_json(p.x), rat_json(p.y)}); }

Point point_parse(const json& j) {
    if (!j.is_array() || j.size() != 2) throw ParseError("point must be [x, y]");
    return Point(rat_parse(j[0]), rat_parse(j[1]));
}

json colour_json(Colour c) { return c == Colour::Red ? "red" : "blue"; }

Colour colour_parse(const json& j) {
    std::string s = j.get<std::string>();
    if (s == "red") return Colour::Red;
    if (s == "blue") return Colour::Blue;
    throw ParseError("colour must be \"red\" or \"blue\"");
}

json lattice_json(const LatticePoint& p) { return json::array({p.x, p.y}); }

LatticePoint lattice_parse(const json& j) {
    if (!j.is_array() || j.size() != 2) throw ParseError("lattice point must be [x, y]");
    return LatticePoint{j[0].get<long long>(), j[1].get<long long>()};
}

}  // namespace

std::string arrangement_to_json(const Arrangement& arr) {
    json lines = json::array();
    for (const auto& l : arr.lines()) {
        json jl;
        jl["center"] = point_json(l.center);
        if (l.colour) jl["colour"] = colour_json(*l.colour);
        lines.push_back(jl);
    }
    return json{{"lines", lines}}.dump(2);
}

Arrangement arrangement_from_json(const std::string& text) {
    json j = json::parse(text);
    if (!j.contains("lines")) throw ParseError("arrangement: missing \"lines\"");
    std::vector<TropLine> lines;
    for (const auto& jl : j["lines"]) {
        TropLine l(point_parse(jl.at("center")));
        if (jl.contains("colour")) l.colour = colour_parse(jl["colour"]);
        lines.push_back(std::move(l));
    }
    return Arrangement(std::move(lines));
}

std::string points_to_json(const PointConfig& cfg) {
    json pts = json::array();
    for (const auto& p : cfg.points) pts.push_back(point_json(p));
    json out{{"points", pts}};
    if (cfg.coloured()) {
        json cols = json::array();
        for (const auto& p : cfg.points) cols.push_back(colour_json(cfg.colours.at(p)));
        out["colours"] = cols;
    }
    return out.dump(2);
}

PointConfig points_from_json(const std::string& text) {
    json j = json::parse(text);
    if (!j.contains("points")) throw ParseError("point config: missing \"points\"");
    PointConfig cfg;
    for (const auto& jp : j["points"]) cfg.points.push_back(point_parse(jp));
    if (j.contains("colours")) {
        if (j["colours"].size() != cfg.points.size())
            throw ParseError("point config: colour count mismatch");
        for (size_t i = 0; i < cfg.points.size(); ++i)
            cfg.colours[cfg.points[i]] = colour_parse(j["colours"][i]);
    }
    cfg.validate();
    return cfg;
}

std::string subdivision_to_json(const NewtonSubdivision& sub) {
    std::map<LatticePoint, int> vidx;
    json verts = json::array();
    for (size_t i = 0; i < sub.vertices().size(); ++i) {
        vidx[sub.vertices()[i]] = static_cast<int>(i);
        verts.push_back(lattice_json(sub.vertices()[i]));
    }
    json edges = json::array();
    for (const auto& e : sub.edges()) {
        json je{{"a", vidx.at(e.key.a)}, {"b", vidx.at(e.key.b)}};
        if (e.colour) je["colour"] = colour_json(*e.colour);
        edges.push_back(je);
    }
    json faces = json::array();
    for (const auto& f : sub.faces()) {
        json cyc = json::array();
        for (const auto& v : f.cycle) cyc.push_back(vidx.at(v));
        json jf{{"cycle", cyc}};
        if (f.profile)
            jf["profile"] = json::array({f.profile->c, f.profile->w1, f.profile->w2, f.profile->w3});
        faces.push_back(jf);
    }
    return json{{"n", sub.n()}, {"vertices", verts}, {"edges", edges}, {"faces", faces}}.dump(2);
}

NewtonSubdivision subdivision_from_json(const std::string& text) {
    json j = json::parse(text);
    int n = j.at("n").get<int>();
    std::vector<LatticePoint> verts;
    for (const auto& jv : j.at("vertices")) verts.push_back(lattice_parse(jv));
    std::vector<SubEdge> edges;
    for (const auto& je : j.at("edges")) {
        SubEdge e;
        e.key = EdgeKey(verts.at(je.at("a").get<size_t>()), verts.at(je.at("b").get<size_t>()));
        if (je.contains("colour")) e.colour = colour_parse(je["colour"]);
        edges.push_back(e);
    }
    std::vector<SubFace> faces;
    for (const auto& jf : j.at("faces")) {
        SubFace f;
        for (const auto& ji : jf.at("cycle")) f.cycle.push_back(verts.at(ji.get<size_t>()));
        if (jf.contains("profile")) {
            const auto& p = jf["profile"];
            f.profile = LocalProfile{p.at(0).get<int>(), p.at(1).get<int>(), p.at(2).get<int>(),
                                     p.at(3).get<int>()};
        }
        faces.push_back(std::move(f));
    }
    return NewtonSubdivision::from_parts(n, std::move(verts), std::move(edges), std::move(faces));
}

std::string metric_to_json(const ExactMetric& d) {
    json edges = json::array();
    for (const auto& [e, len] : d.length)
        edges.push_back(json{{"a", lattice_json(e.a)}, {"b", lattice_json(e.b)}, {"length", rat_json(len)}});
    return json{{"edges", edges}}.dump(2);
}

ExactMetric metric_from_json(const std::string& text) {
    json j = json::parse(text);
    ExactMetric d;
    for (const auto& je : j.at("edges")) {
        EdgeKey key(lattice_parse(je.at("a")), lattice_parse(je.at("b")));
        d.length[key] = rat_parse(je.at("length"));
    }
    return d;
}

std::string system_to_json(const LinearSystemSpec& sys) {
    return json{{"m", sys.m}, {"equalities", sys.equalities}, {"strict", sys.stricts}}.dump(2);
}

LinearSystemSpec system_from_json(const std::string& text) {
    json j = json::parse(text);
    LinearSystemSpec sys;
    sys.m = j.at("m").get<int>();
    if (j.contains("equalities"))
        for (const auto& row : j["equalities"]) sys.equalities.push_back(row.get<std::vector<long long>>());
    if (j.contains("strict"))
        for (const auto& row : j["strict"]) sys.stricts.push_back(row.get<std::vector<long long>>());
    return sys;
}

std::string certificate_to_json(const InfeasibilityCertificate& cert) {
    json y = json::array(), comb = json::array();
    for (const auto& v : cert.y) y.push_back(rat_json(v));
    for (const auto& v : cert.combination) comb.push_back(rat_json(v));
    return json{{"infeasible", true}, {"certificate", json{{"y", y}, {"combination", comb}}}}.dump(2);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write file: " + path);
    out << content;
}

}  // namespace trop::io
