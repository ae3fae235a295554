#include "tightspan/split_decomposition.hpp"

#include "tightspan/subdivision.hpp"

#include <algorithm>

namespace tightspan {

Rational isolation_index(const Metric& d, const Split& s) {
    int n = d.points();
    if (s.points() != n) throw std::invalid_argument("split and metric differ in point count");
    std::vector<int> a, b;
    for (int i = 0; i < n; ++i) (s.contains(i) ? a : b).push_back(i);
    std::optional<Rational> best;
    for (int i : a)
        for (int j : a)
            for (int k : b)
                for (int l : b) {
                    Rational x = d(i, k) + d(j, l);
                    Rational y = d(i, l) + d(j, k);
                    Rational z = d(i, j) + d(k, l);
                    Rational v = std::max({x, y, z}) - z;
                    if (!best || v < *best) best = v;
                }
    return *best / 2;
}

Metric WeightedSplitSystem::split_part() const {
    RationalVector sum(pair_count(n), Rational(0));
    for (const auto& [s, w] : weights) {
        auto m = split_metric(s);
        for (int k = 0; k < pair_count(n); ++k) sum[k] += w * m[k];
    }
    return Metric(n, std::move(sum));
}

WeightedSplitSystem split_decompose(const Metric& d) {
    auto check = is_metric(d);
    if (!check.ok) throw std::invalid_argument("split decomposition needs a metric");
    WeightedSplitSystem out;
    out.n = d.points();
    for (const auto& s : Split::all(out.n)) {
        Rational a = isolation_index(d, s);
        if (sgn(a) > 0) out.weights.emplace_back(s, a);
    }
    auto part = out.split_part();
    RationalVector rest(pair_count(out.n));
    for (int k = 0; k < pair_count(out.n); ++k) rest[k] = d[k] - part[k];
    out.residual = Metric(out.n, std::move(rest));
    if (!is_metric(out.residual).ok) throw std::logic_error("split-prime residue is not a metric");
    return out;
}

bool is_split_prime(const Metric& d) {
    auto all = Split::all(d.points());
    return std::all_of(all.begin(), all.end(), [&](const Split& s) { return sgn(isolation_index(d, s)) == 0; });
}

std::vector<std::pair<Split, int>> split_rays(const SecondaryCone& c) {
    std::vector<std::pair<Split, int>> out;
    for (const auto& s : Split::all(c.n)) {
        auto m = split_metric(s);
        IntVector v(pair_count(c.n));
        for (int k = 0; k < pair_count(c.n); ++k) v[k] = m[k].get_num();
        auto it = std::find(c.rays.begin(), c.rays.end(), v);
        if (it != c.rays.end()) out.emplace_back(s, static_cast<int>(it - c.rays.begin()));
    }
    return out;
}

FanSplitReport fan_split_check(const Metric& d) {
    auto dec = split_decompose(d);
    auto cone = secondary_cone(as_triangulation(regular_subdivision(d)));
    FanSplitReport out;
    std::vector<bool> is_split(cone.rays.size(), false);
    for (const auto& [s, idx] : split_rays(cone)) {
        out.cone_splits.push_back(s);
        is_split[idx] = true;
    }
    for (const auto& [s, w] : dec.weights) {
        out.support.push_back(s);
        if (std::find(out.cone_splits.begin(), out.cone_splits.end(), s) == out.cone_splits.end())
            out.missing.push_back(s);
    }
    for (std::size_t i = 0; i < cone.rays.size(); ++i)
        if (!is_split[i]) out.prime_rays.push_back(cone.rays[i]);

    // residue = Σ μ_r r with μ >= 0, one equality per pair.
    const int m = static_cast<int>(out.prime_rays.size());
    std::vector<LinearInequality> system;
    for (int k = 0; k < pair_count(d.points()); ++k) {
        RationalVector row(m);
        for (int r = 0; r < m; ++r) row[r] = out.prime_rays[r][k];
        system.push_back({std::move(row), dec.residual[k], Relation::Equal});
    }
    for (int r = 0; r < m; ++r) {
        RationalVector row(m, Rational(0));
        row[r] = 1;
        system.push_back({std::move(row), 0, Relation::GreaterEqual});
    }
    if (m == 0) {
        out.residue_expressible = std::all_of(dec.residual.entries().begin(), dec.residual.entries().end(),
                                              [](const Rational& x) { return sgn(x) == 0; });
        return out;
    }
    auto res = lp_feasible(system);
    out.residue_expressible = res.feasible;
    if (res.feasible)
        out.coefficients = std::move(res.witness);
    else
        out.certificate = std::move(res.certificate);
    return out;
}

}  // namespace tightspan
