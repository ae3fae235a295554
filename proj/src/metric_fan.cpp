#include "tightspan/metric_fan.hpp"

#include "tightspan/linalg.hpp"
#include "tightspan/lp.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <mutex>

namespace tightspan {

std::vector<std::pair<int, int>> interior_walls(const Triangulation& t) {
    std::map<PairSet, std::vector<int>> by_face;
    for (std::size_t s = 0; s < t.simplices.size(); ++s)
        for (PairSet rest = t.simplices[s]; rest; rest &= rest - 1)
            by_face[t.simplices[s] & ~(rest & -rest)].push_back(static_cast<int>(s));
    std::vector<std::pair<int, int>> walls;
    for (const auto& [face, owners] : by_face) {
        if (owners.size() > 2) throw std::invalid_argument("not a triangulation: a ridge lies in three simplices");
        if (owners.size() == 2) walls.emplace_back(owners[0], owners[1]);
    }
    return walls;
}

IntVector wall_inequality(int n, PairSet s1, PairSet s2) {
    const PairSet u = s1 | s2;
    std::vector<int> pairs;
    for (PairSet r = u; r; r &= r - 1) pairs.push_back(std::countr_zero(r));
    const int cols = static_cast<int>(pairs.size());
    std::vector<IntVector> rows(n, IntVector(cols, Integer(0)));
    for (int c = 0; c < cols; ++c) {
        Pair p = pair_at(n, pairs[c]);
        rows[p.i][c] = 1;
        rows[p.j][c] = 1;
    }
    auto basis = nullspace(rows, cols);
    if (basis.size() != 1) throw std::invalid_argument("wall_inequality: simplices are not adjacent");
    IntVector lambda = std::move(basis.front());
    const int apex = std::countr_zero(s2 & ~s1);
    const int col = static_cast<int>(std::find(pairs.begin(), pairs.end(), apex) - pairs.begin());
    if (sgn(lambda[col]) > 0)
        for (auto& x : lambda) x = -x;
    IntVector row(pair_count(n), Integer(0));
    for (int c = 0; c < cols; ++c) row[pairs[c]] = lambda[c];
    return row;
}

std::vector<IntVector> wall_inequalities(const Triangulation& t) {
    std::vector<IntVector> rows;
    for (auto [a, b] : interior_walls(t)) rows.push_back(wall_inequality(t.n, t.simplices[a], t.simplices[b]));
    std::sort(rows.begin(), rows.end(), lex_less);
    rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
    return rows;
}

std::vector<IntVector> triangle_inequalities(int n) {
    std::vector<IntVector> rows;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                if (k == i || k == j) continue;
                IntVector r(pair_count(n), Integer(0));
                r[pair_index(n, i, k)] = 1;
                r[pair_index(n, k, j)] = 1;
                r[pair_index(n, i, j)] = -1;
                rows.push_back(std::move(r));
            }
    return rows;
}

Cone SecondaryCone::cone() const {
    Cone c{pair_count(n), walls};
    for (auto& r : triangle_inequalities(n)) c.rows.push_back(std::move(r));
    return c;
}

SecondaryCone secondary_cone(const Triangulation& t) {
    if (!is_triangulation(t.n, t.simplices)) throw std::invalid_argument("secondary_cone: not a triangulation");
    SecondaryCone sc;
    sc.n = t.n;
    sc.triangulation = t;
    sc.walls = wall_inequalities(t);
    Cone c = sc.cone();
    auto gens = double_description(c);
    if (!gens.lineality.empty()) throw std::logic_error("secondary_cone: metric cone has lineality");
    sc.rays = std::move(gens.rays);
    auto desc = facet_description(c, sc.rays);
    sc.dimension = desc.dimension;
    sc.facets = std::move(desc.facets);
    sc.implicit_equalities = std::move(desc.implicit_equalities);
    return sc;
}

Regularity is_regular(const Triangulation& t) {
    const int m = pair_count(t.n);
    std::vector<LinearInequality> system;
    for (const auto& w : wall_inequalities(t)) system.push_back({to_rational(w), 1, Relation::GreaterEqual});
    auto res = lp_feasible(system, {}, false);
    Regularity out;
    if (!res.feasible) return out;
    out.regular = true;
    RationalVector d = res.witness;
    d.resize(m, Rational(0));
    Rational worst = 1;
    for (const auto& tri : triangle_inequalities(t.n)) worst = std::min(worst, dot(to_rational(tri), d));
    for (const auto& x : d) worst = std::min(worst, Rational(2 * x));
    if (worst < 1) {
        Rational shift = (1 - worst) / 2;  // each triangle row gains 2 * shift
        for (auto& x : d) x += 2 * shift;
    }
    out.witness = Metric(t.n, to_rational(primitive(d)));
    return out;
}

std::string to_string(PrimeType p) {
    static const char* names[] = {"1/5 split", "2/4 split", "3/3 split", "P1", "P2", "P3", "P4",
                                  "P5",        "P6",        "P7",        "P8", "P9", "P10", "P11"};
    return names[static_cast<int>(p)];
}

const std::array<PrimeRepresentative, kPrimeTypeCount>& prime_representatives() {
    static const std::array<PrimeRepresentative, kPrimeTypeCount> reps{{
        {PrimeType::Split15, {0, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 1, 0, 1, 1}},
        {PrimeType::Split24, {1, 1, 0, 1, 1, 0, 1, 0, 0, 1, 0, 0, 1, 1, 0}},
        {PrimeType::Split33, {0, 0, 1, 1, 1, 0, 1, 1, 1, 1, 1, 1, 0, 0, 0}},
        {PrimeType::P1, {1, 1, 1, 1, 2, 2, 2, 2, 1, 2, 2, 1, 2, 1, 1}},
        {PrimeType::P2, {1, 1, 1, 2, 2, 2, 2, 1, 1, 2, 1, 1, 1, 1, 2}},
        {PrimeType::P3, {1, 1, 1, 2, 2, 2, 2, 1, 1, 2, 1, 1, 3, 1, 2}},
        {PrimeType::P4, {1, 1, 1, 1, 2, 1, 1, 1, 1, 1, 1, 1, 2, 1, 1}},
        {PrimeType::P5, {1, 2, 2, 2, 4, 3, 3, 3, 3, 2, 2, 2, 4, 2, 2}},
        {PrimeType::P6, {1, 1, 2, 3, 3, 2, 3, 2, 2, 3, 2, 2, 1, 1, 2}},
        {PrimeType::P7, {1, 1, 1, 2, 2, 2, 2, 1, 1, 2, 1, 1, 2, 1, 2}},
        {PrimeType::P8, {1, 2, 2, 4, 4, 3, 3, 3, 3, 4, 2, 2, 2, 2, 4}},
        {PrimeType::P9, {1, 1, 1, 2, 3, 2, 2, 1, 2, 2, 1, 2, 3, 2, 1}},
        {PrimeType::P10, {0, 1, 1, 1, 2, 1, 1, 1, 2, 2, 2, 1, 2, 1, 1}},
        {PrimeType::P11, {0, 1, 1, 2, 2, 1, 1, 2, 2, 2, 1, 1, 1, 1, 2}},
    }};
    return reps;
}

std::vector<long> canonical_ray(int n, const IntVector& r) {
    if (static_cast<int>(r.size()) != pair_count(n)) throw std::invalid_argument("canonical_ray: wrong length");
    IntVector p = primitive(r);
    std::vector<long> v;
    for (const auto& x : p) {
        if (!x.fits_slong_p()) throw std::invalid_argument("canonical_ray: entry too large");
        v.push_back(x.get_si());
    }
    static std::mutex mu;
    static std::map<int, std::vector<std::vector<int>>> actions;
    const std::vector<std::vector<int>>* acts;
    {
        std::lock_guard lock(mu);
        auto& a = actions[n];
        if (a.empty())
            for (const auto& sigma : all_permutations(n)) a.push_back(sigma.pair_action());
        acts = &a;
    }
    std::vector<long> best = v, img(v.size());
    for (const auto& act : *acts) {
        for (std::size_t k = 0; k < v.size(); ++k) img[act[k]] = v[k];
        if (img < best) best = img;
    }
    return best;
}

PrimeType classify_ray(const IntVector& r) {
    static const auto table = [] {
        std::map<std::vector<long>, PrimeType> t;
        for (const auto& rep : prime_representatives()) {
            IntVector v;
            for (long x : rep.vector) v.emplace_back(x);
            t.emplace(canonical_ray(6, v), rep.type);
        }
        return t;
    }();
    if (r.size() != 15) throw UnknownRayError(r);
    auto it = table.find(canonical_ray(6, r));
    if (it == table.end()) throw UnknownRayError(r);
    return it->second;
}

int SPVector::total() const {
    int t = splits15 + S[0] + S[1];
    for (int p : P) t += p;
    return t;
}

SPVector sp_invariant(const SecondaryCone& c) {
    SPVector sp;
    for (const auto& r : c.rays) {
        PrimeType t = classify_ray(r);
        switch (t) {
            case PrimeType::Split15: ++sp.splits15; break;
            case PrimeType::Split24: ++sp.S[0]; break;
            case PrimeType::Split33: ++sp.S[1]; break;
            default: ++sp.P[static_cast<int>(t) - static_cast<int>(PrimeType::P1)]; break;
        }
    }
    return sp;
}

}  // namespace tightspan
