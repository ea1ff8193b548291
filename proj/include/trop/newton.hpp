#pragma once

#include <map>
#include <optional>
#include <vector>

#include "trop/arrangement.hpp"

namespace trop {

struct LatticePoint {
    long long x = 0;
    long long y = 0;

    friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
    friend bool operator<(const LatticePoint& a, const LatticePoint& b) {
        if (a.x != b.x) return a.x < b.x;
        return a.y < b.y;
    }
    LatticePoint operator+(const LatticePoint& o) const { return {x + o.x, y + o.y}; }
    LatticePoint operator-(const LatticePoint& o) const { return {x - o.x, y - o.y}; }
};

// Unordered lattice segment, stored with a < b.
struct EdgeKey {
    LatticePoint a;
    LatticePoint b;

    EdgeKey() = default;
    EdgeKey(LatticePoint p, LatticePoint q) {
        if (q < p) std::swap(p, q);
        a = p;
        b = q;
    }
    friend bool operator==(const EdgeKey&, const EdgeKey&) = default;
    friend bool operator<(const EdgeKey& l, const EdgeKey& r) {
        if (!(l.a == r.a)) return l.a < r.a;
        return l.b < r.b;
    }
};

struct SubEdge {
    EdgeKey key;
    std::optional<Colour> colour;
};

// A face is stored as its counterclockwise corner cycle, rotated so the
// lexicographically least vertex comes first. `profile` is engaged exactly
// when the polygon is a valid Minkowski face P_{c,w1,w2,w3}.
struct SubFace {
    std::vector<LatticePoint> cycle;
    std::optional<LocalProfile> profile;
};

// Subdivision edge directions are the 90-degree counterclockwise rotations
// of the arrangement directions: ebar1=(-1,1), ebar2=(0,-1), ebar3=(1,0).
LatticePoint ebar_direction(Axis a);

// Direction slot in counterclockwise order: (1,0),(0,1),(-1,1),(-1,0),(0,-1),(1,-1).
// Returns -1 for any other direction.
int direction_slot(LatticePoint d);

// Classifies a convex lattice polygon with sides in the six allowed
// directions as P_{c,w1,w2,w3}; side lengths counterclockwise are
// (c+w3, w2, c+w1, w3, c+w2, w1) starting from the bottom side.
// Throws Error("not a linear face") when no profile fits.
LocalProfile classify_face(const std::vector<LatticePoint>& cycle);

// A polyhedral subdivision of the dilated lattice triangle
// Delta_n = {x >= 0, y >= 0, x + y <= n}. Construction validates the
// complex structure (edge/face incidences, convexity, Euler count, exact
// area n^2/2); face profiles are classified where possible.
class NewtonSubdivision {
public:
    static NewtonSubdivision from_faces(int n, std::vector<std::vector<LatticePoint>> cycles);
    // Faces recovered as the bounded orbits of the rotation system of the
    // embedded graph (vertices, edges).
    static NewtonSubdivision from_complex(int n, std::vector<LatticePoint> vertices,
                                          std::vector<EdgeKey> edges);
    static NewtonSubdivision from_parts(int n, std::vector<LatticePoint> vertices,
                                        std::vector<SubEdge> edges, std::vector<SubFace> faces);

    int n() const { return n_; }
    const std::vector<LatticePoint>& vertices() const { return vertices_; }
    const std::vector<SubEdge>& edges() const { return edges_; }
    const std::vector<SubFace>& faces() const { return faces_; }

    bool on_boundary(const LatticePoint& p) const;
    bool boundary_edge(const EdgeKey& e) const;
    int edge_index(const EdgeKey& e) const;  // -1 when absent

    // E_N and V_N
    std::vector<int> interior_edges() const;
    std::vector<LatticePoint> interior_vertices() const;

    // Faces incident to each edge (1 for boundary edges, 2 for interior).
    const std::vector<std::vector<int>>& edge_faces() const { return edge_faces_; }

    void set_edge_colour(int edge, Colour c) { edges_[edge].colour = c; }
    void clear_colours();

    // Structure is compared; edge colours are ignored.
    friend bool operator==(const NewtonSubdivision& a, const NewtonSubdivision& b);

    NewtonSubdivision() = default;  // empty placeholder; fill via the factories

private:
    void finalize();  // sort, derive incidences, validate

    int n_ = 0;
    std::vector<LatticePoint> vertices_;
    std::vector<SubEdge> edges_;
    std::vector<SubFace> faces_;
    std::vector<std::vector<int>> edge_faces_;
    std::map<EdgeKey, int> edge_lookup_;
};

// Every face is a valid P_{c,w1,w2,w3}.
bool is_linear(const NewtonSubdivision& sub);
// Only unit triangles P_{1,0,0,0} and P_{0,w1,w2,w3} with w_i in {0,1}.
bool is_semiuniform(const NewtonSubdivision& sub);

struct FaceCensus {
    int triangles = 0;
    int parallelograms = 0;
    int hexagons = 0;
    int other = 0;
};

// Throws Error("not semiuniform") unless is_semiuniform holds.
FaceCensus face_census(const NewtonSubdivision& sub);

// True iff the parallelogram count meets the lower bound: n-3 when 3 | n,
// n-1 otherwise. Throws on non-semiuniform input.
bool check_parallelogram_bound(const NewtonSubdivision& sub);

// Hexagon-packed subdivision meeting the parallelogram bound with equality:
// unit hexagons centered at every lattice point (x,y) with x = y (mod 3)
// that fits inside Delta_n, gaps filled deterministically with triangles
// and parallelograms (first-gap scan, fixed piece order).
NewtonSubdivision optimal_subdivision(int n);

// All semiuniform subdivisions of Delta_n by corner-first backtracking.
// Intended for n <= max_n (default 4); throws above the cap.
std::vector<NewtonSubdivision> enumerate_semiuniform(int n, int max_n = 4);

// Provenance of one subdivision edge: the arrangement 1-cell it is dual to.
struct EdgeOrigin {
    std::vector<int> lines;  // indices of the lines whose axis covers the cell
    Axis axis = Axis::E1;    // arrangement direction of the cell
    bool bounded = false;
    Point cell_lo, cell_hi;  // endpoints of the bounded segment
    Rat length;              // segment length (bounded cells only)
};

struct BuiltSubdivision {
    NewtonSubdivision sub;
    std::vector<Point> face_vertex;        // per face: generating arrangement vertex
    std::vector<EdgeOrigin> edge_origin;   // per edge
    Arrangement arrangement;

    // Index of the face generated by arrangement vertex p (-1 if none).
    int face_of_vertex(const Point& p) const;
};

// The Newton subdivision induced by summing the lines' tropical polynomials:
// the face at each arrangement vertex is the absolutely positioned Minkowski
// sum of the per-line gradient hulls; edges are the cells of the bounded and
// unbounded 1-cells of the union of lines.
BuiltSubdivision build_subdivision(const Arrangement& arr);

}  // namespace trop
