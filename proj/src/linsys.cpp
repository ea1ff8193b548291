#include "trop/linsys.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace trop::lin {

Rat Row::get(int v) const {
    for (const auto& [var, c] : coef)
        if (var == v) return c;
    return Rat(0);
}

bool Row::ground_true() const {
    switch (rel) {
        case Rel::Eq: return rhs == 0;
        case Rel::Ge: return rhs <= 0;
        case Rel::Gt: return rhs < 0;
    }
    return false;
}

void Row::normalize() {
    std::sort(coef.begin(), coef.end());
    std::erase_if(coef, [](const auto& p) { return p.second == 0; });
    if (coef.empty()) return;
    // scale to primitive integer coefficients
    Int num_gcd = 0, den_lcm = 1;
    for (const auto& [v, c] : coef) {
        num_gcd = gcd(num_gcd, Int(abs(numerator(c))));
        den_lcm = lcm(den_lcm, Int(denominator(c)));
    }
    Rat scale(den_lcm, num_gcd);
    for (auto& [v, c] : coef) c *= scale;
    rhs *= scale;
    if (rel == Rel::Eq && coef.front().second < 0) {
        for (auto& [v, c] : coef) c = -c;
        rhs = -rhs;
    }
}

Row Row::negated_ge() const {
    Row r = *this;
    for (auto& [v, c] : r.coef) c = -c;
    r.rhs = -rhs;
    r.rel = Rel::Ge;
    return r;
}

Row Row::negated_gt() const {
    Row r = negated_ge();
    r.rel = Rel::Gt;
    return r;
}

bool operator<(const Row& a, const Row& b) {
    if (a.rel != b.rel) return a.rel < b.rel;
    if (a.coef != b.coef) return a.coef < b.coef;
    return a.rhs < b.rhs;
}

std::string Row::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [v, c] : coef) {
        if (!first) os << " + ";
        first = false;
        os << rat_to_string(c) << "*x" << v;
    }
    if (first) os << "0";
    os << (rel == Rel::Eq ? " == " : rel == Rel::Ge ? " >= " : " > ");
    os << rat_to_string(rhs);
    return os.str();
}

Row make_row(std::map<int, Rat> coef, Rel rel, Rat rhs) {
    Row r;
    for (auto& [v, c] : coef) r.coef.emplace_back(v, std::move(c));
    r.rel = rel;
    r.rhs = std::move(rhs);
    r.normalize();
    return r;
}

void System::add(Row r) {
    r.normalize();
    if (r.ground() && r.ground_true()) return;
    rows_.push_back(std::move(r));
}

void System::dedupe() {
    for (auto& r : rows_) r.normalize();
    std::erase_if(rows_, [](const Row& r) { return r.ground() && r.ground_true(); });
    std::sort(rows_.begin(), rows_.end());
    rows_.erase(std::unique(rows_.begin(), rows_.end()), rows_.end());
    // among rows with identical coefficients and relation keep the strictest rhs
    std::vector<Row> out;
    for (auto& r : rows_) {
        if (!out.empty() && out.back().rel == r.rel && out.back().coef == r.coef &&
            out.back().rel != Rel::Eq) {
            out.back().rhs = std::max(out.back().rhs, r.rhs);
        } else {
            out.push_back(std::move(r));
        }
    }
    rows_ = std::move(out);
}

void System::eliminate(int v) {
    // substitution via an equality row when possible
    int pivot = -1;
    size_t best_support = 0;
    for (size_t i = 0; i < rows_.size(); ++i) {
        if (rows_[i].rel != Rel::Eq) continue;
        Rat c = rows_[i].get(v);
        if (c == 0) continue;
        if (pivot < 0 || rows_[i].coef.size() < best_support) {
            pivot = static_cast<int>(i);
            best_support = rows_[i].coef.size();
        }
    }
    if (pivot >= 0) {
        Row p = rows_[pivot];
        rows_.erase(rows_.begin() + pivot);
        Rat pc = p.get(v);
        for (auto& r : rows_) {
            Rat rc = r.get(v);
            if (rc == 0) continue;
            Rat f = rc / pc;
            std::map<int, Rat> m;
            for (const auto& [var, c] : r.coef) m[var] += c;
            for (const auto& [var, c] : p.coef) m[var] -= f * c;
            m.erase(v);
            Row nr = make_row(std::move(m), r.rel, r.rhs - f * p.rhs);
            r = std::move(nr);
        }
        dedupe();
        return;
    }
    // Fourier-Motzkin on inequality rows
    std::vector<Row> keep, lower, upper;
    for (auto& r : rows_) {
        Rat c = r.get(v);
        if (c == 0)
            keep.push_back(std::move(r));
        else if (c > 0)
            lower.push_back(std::move(r));
        else
            upper.push_back(std::move(r));
    }
    for (const Row& lo : lower) {
        Rat a = lo.get(v);
        for (const Row& up : upper) {
            Rat b = -up.get(v);
            std::map<int, Rat> m;
            for (const auto& [var, c] : lo.coef) m[var] += b * c;
            for (const auto& [var, c] : up.coef) m[var] += a * c;
            m.erase(v);
            Rel rel = (lo.rel == Rel::Gt || up.rel == Rel::Gt) ? Rel::Gt : Rel::Ge;
            keep.push_back(make_row(std::move(m), rel, b * lo.rhs + a * up.rhs));
        }
    }
    rows_ = std::move(keep);
    dedupe();
    if (rows_.size() > 500000) throw Error("fourier-motzkin blowup");
}

System System::project(const std::vector<int>& keep) const {
    std::set<int> keep_set(keep.begin(), keep.end());
    System work = *this;
    // substitution-eligible variables first, fewest-occurrence first
    while (true) {
        std::map<int, int> occ;
        std::set<int> has_eq;
        for (const auto& r : work.rows_)
            for (const auto& [v, c] : r.coef) {
                if (keep_set.count(v)) continue;
                occ[v]++;
                if (r.rel == Rel::Eq) has_eq.insert(v);
            }
        if (occ.empty()) break;
        int best = -1;
        bool best_eq = false;
        int best_occ = 0;
        for (const auto& [v, k] : occ) {
            bool eq = has_eq.count(v) != 0;
            if (best < 0 || (eq && !best_eq) || (eq == best_eq && k < best_occ)) {
                best = v;
                best_eq = eq;
                best_occ = k;
            }
        }
        work.eliminate(best);
    }
    // renumber
    std::map<int, int> renum;
    for (size_t i = 0; i < keep.size(); ++i) renum[keep[i]] = static_cast<int>(i);
    System out(static_cast<int>(keep.size()));
    for (const auto& r : work.rows_) {
        std::map<int, Rat> m;
        for (const auto& [v, c] : r.coef) m[renum.at(v)] = c;
        out.add(make_row(std::move(m), r.rel, r.rhs));
    }
    out.dedupe();
    return out;
}

bool System::feasible() const {
    System work = *this;
    while (true) {
        bool any = false;
        for (const auto& r : work.rows_)
            if (!r.ground()) {
                work.eliminate(r.coef.front().first);
                any = true;
                break;
            }
        if (!any) break;
    }
    for (const auto& r : work.rows_)
        if (!r.ground_true()) return false;
    return true;
}

bool System::implies(const Row& r) const {
    if (r.rel == Rel::Eq) {
        Row ge = r;
        ge.rel = Rel::Ge;
        Row le = r.negated_ge();
        return implies(ge) && implies(le);
    }
    System work = *this;
    work.add(r.rel == Rel::Ge ? r.negated_gt() : r.negated_ge());
    return !work.feasible();
}

bool System::equivalent(const System& other) const {
    if (dim_ != other.dim_) return false;
    bool fa = feasible(), fb = other.feasible();
    if (fa != fb) return false;
    if (!fa) return true;
    for (const auto& r : rows_)
        if (!other.implies(r)) return false;
    for (const auto& r : other.rows_)
        if (!implies(r)) return false;
    return true;
}

System System::canonical() const {
    System out(dim_);
    if (!feasible()) {
        out.add(make_row({}, Rel::Ge, Rat(1)));
        return out;
    }
    System work = *this;
    work.dedupe();
    // promote implicit equalities
    std::vector<Row> eqs, ineqs;
    for (const auto& r : work.rows_) {
        if (r.rel == Rel::Eq) {
            eqs.push_back(r);
        } else if (r.rel == Rel::Ge && work.implies(r.negated_ge())) {
            // c >= b with implied c <= b is an implicit equality (a strict
            // row can never be one in a feasible system)
            Row e = r;
            e.rel = Rel::Eq;
            eqs.push_back(e);
        } else {
            ineqs.push_back(r);
        }
    }
    // RREF of the equality rows
    std::vector<Row> basis;
    for (Row e : eqs) {
        for (const Row& b : basis) {
            Rat c = e.get(b.coef.front().first);
            if (c == 0) continue;
            Rat f = c / b.coef.front().second;
            std::map<int, Rat> m;
            for (const auto& [var, cc] : e.coef) m[var] += cc;
            for (const auto& [var, cc] : b.coef) m[var] -= f * cc;
            e = make_row(std::move(m), Rel::Eq, e.rhs - f * b.rhs);
        }
        if (!e.ground()) basis.push_back(e);
    }
    std::sort(basis.begin(), basis.end(),
              [](const Row& a, const Row& b) { return a.coef.front().first < b.coef.front().first; });
    // back-substitute to full RREF
    for (size_t i = basis.size(); i-- > 0;) {
        for (size_t j = 0; j < i; ++j) {
            Rat c = basis[j].get(basis[i].coef.front().first);
            if (c == 0) continue;
            Rat f = c / basis[i].coef.front().second;
            std::map<int, Rat> m;
            for (const auto& [var, cc] : basis[j].coef) m[var] += cc;
            for (const auto& [var, cc] : basis[i].coef) m[var] -= f * cc;
            basis[j] = make_row(std::move(m), Rel::Eq, basis[j].rhs - f * basis[i].rhs);
        }
    }
    // reduce inequalities modulo the basis
    std::vector<Row> red;
    for (Row r : ineqs) {
        for (const Row& b : basis) {
            Rat c = r.get(b.coef.front().first);
            if (c == 0) continue;
            Rat f = c / b.coef.front().second;
            std::map<int, Rat> m;
            for (const auto& [var, cc] : r.coef) m[var] += cc;
            for (const auto& [var, cc] : b.coef) m[var] -= f * cc;
            r = make_row(std::move(m), r.rel, r.rhs - f * b.rhs);
        }
        if (!(r.ground() && r.ground_true())) red.push_back(r);
    }
    std::sort(red.begin(), red.end());
    red.erase(std::unique(red.begin(), red.end()), red.end());
    // drop redundant inequalities
    std::vector<char> kept(red.size(), 1);
    for (size_t i = 0; i < red.size(); ++i) {
        System rest(dim_);
        for (const Row& b : basis) rest.add(b);
        for (size_t j = 0; j < red.size(); ++j)
            if (j != i && kept[j]) rest.add(red[j]);
        if (rest.implies(red[i])) kept[i] = 0;
    }
    for (const Row& b : basis) out.add(b);
    for (size_t i = 0; i < red.size(); ++i)
        if (kept[i]) out.add(red[i]);
    std::sort(out.rows_.begin(), out.rows_.end());
    return out;
}

std::string System::to_string() const {
    std::ostringstream os;
    for (const auto& r : rows_) os << r.to_string() << "\n";
    return os.str();
}

}  // namespace trop::lin
