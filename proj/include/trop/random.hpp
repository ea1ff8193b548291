#pragma once

#include <cstdint>
#include <set>

#include "trop/sg.hpp"

namespace trop::rng {

// splitmix64: tiny, deterministic across platforms
struct Gen {
    uint64_t state;

    explicit Gen(uint64_t seed) : state(seed) {}

    uint64_t next() {
        uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    long long uniform(long long lo, long long hi) {  // inclusive
        return lo + static_cast<long long>(next() % static_cast<uint64_t>(hi - lo + 1));
    }

    bool flip() { return next() & 1; }

    Rat rat(long long lo, long long hi, long long max_den) {
        long long den = uniform(1, max_den);
        return Rat(uniform(lo * den, hi * den), den);
    }

    Point point(long long span = 20, long long max_den = 4) {
        return Point(rat(-span, span, max_den), rat(-span, span, max_den));
    }

    // pairwise distinct points; when force_coaxial, one pair is made coaxial
    // along a random axis
    PointConfig points(int n, bool force_coaxial) {
        PointConfig cfg;
        std::set<Point> seen;
        while (static_cast<int>(cfg.points.size()) < n) {
            Point p = point();
            if (seen.insert(p).second) cfg.points.push_back(p);
        }
        if (force_coaxial && n >= 2) {
            const Point& p = cfg.points[0];
            Point q = cfg.points[1];
            Rat shift = rat(1, 8, 4);
            switch (uniform(0, 2)) {
                case 0: q = Point(p.x + shift, p.y); break;          // same y
                case 1: q = Point(p.x, p.y + shift); break;          // same x
                default: q = Point(p.x + shift, p.y + shift); break;  // same diagonal
            }
            if (!seen.count(q)) cfg.points[1] = q;
        }
        return cfg;
    }

    // pairwise distinct x, y and x-y (no coaxial pair)
    PointConfig points_coaxial_free(int n, bool coloured) {
        PointConfig cfg;
        std::set<Rat> xs, ys, ds;
        while (static_cast<int>(cfg.points.size()) < n) {
            Point p = point();
            if (xs.count(p.x) || ys.count(p.y) || ds.count(p.y - p.x)) continue;
            xs.insert(p.x);
            ys.insert(p.y);
            ds.insert(p.y - p.x);
            cfg.points.push_back(p);
        }
        if (coloured)
            for (const auto& p : cfg.points)
                cfg.colours[p] = flip() ? Colour::Red : Colour::Blue;
        return cfg;
    }

    Arrangement arrangement_coaxial_free(int k) {
        PointConfig cfg = points_coaxial_free(k, false);
        std::vector<TropLine> lines;
        for (const auto& p : cfg.points) lines.emplace_back(p);
        return Arrangement(std::move(lines));
    }
};

}  // namespace trop::rng
