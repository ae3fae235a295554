#include "tightspan/cone.hpp"

#include "tightspan/linalg.hpp"
#include "tightspan/lp.hpp"

#include <algorithm>
#include <map>

namespace tightspan {

namespace {

struct Ray {
    IntVector v;
    Bitset zero;  // processed rows vanishing on v
};

bool is_zero(const IntVector& v) {
    return std::all_of(v.begin(), v.end(), [](const Integer& x) { return sgn(x) == 0; });
}

// (alpha * x) - (beta * y), made primitive.
IntVector combine(const Integer& alpha, const IntVector& x, const Integer& beta, const IntVector& y) {
    IntVector out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        out[i] = alpha * x[i];
        if (sgn(y[i]) != 0) mpz_submul(out[i].get_mpz_t(), beta.get_mpz_t(), y[i].get_mpz_t());
    }
    return primitive(std::move(out));
}

std::vector<IntVector> normalized_rows(const Cone& cone) {
    std::vector<IntVector> rows;
    for (const auto& r : cone.rows) {
        if (static_cast<int>(r.size()) != cone.dim) throw std::invalid_argument("cone row has wrong dimension");
        if (is_zero(r)) continue;
        rows.push_back(primitive(r));
    }
    std::sort(rows.begin(), rows.end(), lex_less);
    rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
    return rows;
}

}  // namespace

Bitset tight_set(const std::vector<IntVector>& rows, const IntVector& v) {
    Bitset out(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        if (sgn(dot(rows[i], v)) == 0) out.set(i);
    return out;
}

ConeGenerators double_description(const Cone& cone) {
    const int dim = cone.dim;
    const auto rows = normalized_rows(cone);
    const std::size_t m = rows.size();

    std::vector<IntVector> lineality;
    for (int i = 0; i < dim; ++i) {
        IntVector e(dim, Integer(0));
        e[i] = 1;
        lineality.push_back(std::move(e));
    }
    std::vector<Ray> rays;
    Bitset processed(m);

    for (std::size_t idx = 0; idx < m; ++idx) {
        const IntVector& a = rows[idx];

        // Use up a lineality direction if the row is not orthogonal to one.
        auto pivot_it = std::find_if(lineality.begin(), lineality.end(),
                                     [&](const IntVector& l) { return sgn(dot(a, l)) != 0; });
        if (pivot_it != lineality.end()) {
            IntVector pivot = std::move(*pivot_it);
            lineality.erase(pivot_it);
            Integer ap = dot(a, pivot);
            if (sgn(ap) < 0) {
                for (auto& x : pivot) x = -x;
                ap = -ap;
            }
            for (auto& l : lineality) {
                Integer al = dot(a, l);
                if (sgn(al) != 0) l = combine(ap, l, al, pivot);
            }
            for (auto& r : rays) {
                Integer ar = dot(a, r.v);
                if (sgn(ar) != 0) r.v = combine(ap, r.v, ar, pivot);
                r.zero.set(idx);
            }
            Ray fresh{std::move(pivot), processed};
            rays.push_back(std::move(fresh));
            processed.set(idx);
            continue;
        }

        std::vector<std::size_t> pos, neg;
        std::vector<Integer> value(rays.size());
        for (std::size_t i = 0; i < rays.size(); ++i) {
            value[i] = dot(a, rays[i].v);
            int s = sgn(value[i]);
            if (s > 0)
                pos.push_back(i);
            else if (s < 0)
                neg.push_back(i);
            else
                rays[i].zero.set(idx);
        }
        processed.set(idx);
        if (neg.empty()) continue;

        const std::size_t min_common = static_cast<std::size_t>(std::max(0, dim - static_cast<int>(lineality.size()) - 2));
        std::vector<Ray> created;
        for (std::size_t p : pos) {
            for (std::size_t q : neg) {
                Bitset common = rays[p].zero & rays[q].zero;
                if (common.count() < min_common) continue;
                bool adjacent = true;
                for (std::size_t t = 0; t < rays.size() && adjacent; ++t) {
                    if (t == p || t == q) continue;
                    if (common.is_subset_of(rays[t].zero)) adjacent = false;
                }
                if (!adjacent) continue;
                // value[p] > 0 > value[q]; result vanishes on a.
                Integer minus_q = -value[q];
                IntVector v(dim);
                for (int i = 0; i < dim; ++i) {
                    v[i] = value[p] * rays[q].v[i];
                    mpz_addmul(v[i].get_mpz_t(), minus_q.get_mpz_t(), rays[p].v[i].get_mpz_t());
                }
                v = primitive(std::move(v));
                common.set(idx);
                created.push_back({std::move(v), std::move(common)});
            }
        }
        std::vector<Ray> next;
        next.reserve(rays.size() - neg.size() + created.size());
        for (std::size_t i = 0; i < rays.size(); ++i)
            if (sgn(value[i]) >= 0) next.push_back(std::move(rays[i]));
        for (auto& r : created) next.push_back(std::move(r));
        rays = std::move(next);
    }

    ConeGenerators out;
    for (auto& r : rays) out.rays.push_back(std::move(r.v));
    std::sort(out.rays.begin(), out.rays.end(), lex_less);
    out.lineality = std::move(lineality);
    return out;
}

std::vector<IntVector> dual_rays(const Cone& cone) {
    auto gens = double_description(cone);
    if (!gens.lineality.empty()) throw NotPointedError(gens.lineality.front());
    return std::move(gens.rays);
}

FacetDescription facet_description(const Cone& cone, const std::vector<IntVector>& rays) {
    FacetDescription out;
    out.dimension = rank(rays);
    const auto rows = normalized_rows(cone);
    std::map<Bitset, IntVector> by_support;
    for (const auto& row : rows) {
        std::vector<IntVector> tight;
        for (const auto& r : rays)
            if (sgn(dot(row, r)) == 0) tight.push_back(r);
        if (tight.size() == rays.size()) {
            out.implicit_equalities.push_back(row);
            continue;
        }
        if (rank(tight) != out.dimension - 1) continue;
        Bitset support = tight_set(rays, row);
        by_support.emplace(std::move(support), row);  // keeps the lexicographically first row
    }
    for (auto& [_, row] : by_support) out.facets.push_back(std::move(row));
    std::sort(out.facets.begin(), out.facets.end(), lex_less);
    return out;
}

std::vector<IntVector> irredundant_facets(const Cone& cone) {
    auto rays = dual_rays(cone);
    if (rays.empty()) throw EmptyConeError();
    return facet_description(cone, rays).facets;
}

bool certify_facet(const std::vector<IntVector>& facets, std::size_t index) {
    std::vector<LinearInequality> system;
    std::vector<bool> strict;
    for (std::size_t i = 0; i < facets.size(); ++i) {
        LinearInequality row{to_rational(facets[i]), 0, i == index ? Relation::Equal : Relation::GreaterEqual};
        system.push_back(std::move(row));
        strict.push_back(i != index);
    }
    return lp_feasible(system, strict, false).feasible;
}

std::string format_rows(const std::vector<IntVector>& rows) {
    std::string out;
    for (const auto& r : rows) {
        out += to_string(r, ' ');
        out += '\n';
    }
    return out;
}

}  // namespace tightspan
