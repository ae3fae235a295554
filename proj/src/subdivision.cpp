#include "tightspan/subdivision.hpp"

#include "tightspan/linalg.hpp"
#include "tightspan/polyhedron.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <sstream>

namespace tightspan {

namespace {

// Δ of the lifting h: maximal cells are tight sets of the vertices of
// {x : x_i + x_j >= h_ij}.
Subdivision subdivision_from_heights(int n, const RationalVector& h) {
    HPolyhedron q{n, {}};
    for (int k = 0; k < pair_count(n); ++k) {
        Pair p = pair_at(n, k);
        RationalVector a(n, Rational(0));
        a[p.i] = 1;
        a[p.j] = 1;
        q.rows.push_back({std::move(a), h[k], Relation::GreaterEqual});
    }
    auto vrep = vertices_and_rays(q);
    std::vector<std::pair<PairSet, RationalVector>> found;
    for (auto& x : vrep.vertices) {
        PairSet cell = 0;
        for (int k = 0; k < pair_count(n); ++k)
            if (sgn(q.rows[k].slack(x)) == 0) cell |= PairSet{1} << k;
        found.emplace_back(cell, std::move(x));
    }
    std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    Subdivision s;
    s.n = n;
    for (auto& [cell, x] : found) {
        s.cells.push_back(cell);
        s.witnesses.push_back(std::move(x));
    }
    return s;
}

}  // namespace

PointSet cell_support(int n, PairSet cell) {
    PointSet s = 0;
    while (cell) {
        Pair p = pair_at(n, std::countr_zero(cell));
        cell &= cell - 1;
        s |= (PointSet{1} << p.i) | (PointSet{1} << p.j);
    }
    return s;
}

int cell_dimension(int n, PairSet cell) {
    if (cell == 0) return -1;
    // 2-colour each component; an odd cycle makes it non-bipartite.
    std::vector<std::vector<int>> adj(n);
    for (PairSet s = cell; s; s &= s - 1) {
        Pair p = pair_at(n, std::countr_zero(s));
        adj[p.i].push_back(p.j);
        adj[p.j].push_back(p.i);
    }
    std::vector<int> colour(n, -1);
    int touched = 0, bipartite = 0;
    for (int start = 0; start < n; ++start) {
        if (adj[start].empty() || colour[start] >= 0) continue;
        bool ok = true;
        std::vector<int> stack{start};
        colour[start] = 0;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            ++touched;
            for (int w : adj[v]) {
                if (colour[w] < 0) {
                    colour[w] = 1 - colour[v];
                    stack.push_back(w);
                } else if (colour[w] == colour[v]) {
                    ok = false;
                }
            }
        }
        if (ok) ++bipartite;
    }
    return touched - bipartite - 1;
}

std::vector<IntVector> cell_points(int n, PairSet cell) {
    std::vector<IntVector> pts;
    for (PairSet s = cell; s; s &= s - 1) {
        Pair p = pair_at(n, std::countr_zero(s));
        IntVector v(n, Integer(0));
        v[p.i] = 1;
        v[p.j] = 1;
        pts.push_back(std::move(v));
    }
    return pts;
}

int cell_dimension_exact(int n, PairSet cell) {
    if (cell == 0) return -1;
    return rank(cell_points(n, cell)) - 1;
}

std::string format_cell(int n, PairSet cell) {
    std::string out;
    for (PairSet s = cell; s; s &= s - 1) {
        if (!out.empty()) out += ',';
        out += pair_label(n, std::countr_zero(s));
    }
    return out;
}

PairSet parse_cell(int n, std::string_view text) {
    PairSet cell = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find(',', start);
        if (end == std::string_view::npos) end = text.size();
        auto tok = text.substr(start, end - start);
        while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.front()))) tok.remove_prefix(1);
        while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.back()))) tok.remove_suffix(1);
        cell |= PairSet{1} << parse_pair_label(n, tok);
        start = end + 1;
    }
    return cell;
}

Subdivision regular_subdivision(const Metric& d) {
    if (!is_metric(d).ok) throw std::invalid_argument("regular_subdivision: input is not a metric");
    if (d.points() < 3) throw std::invalid_argument("regular_subdivision: need at least three points");
    return subdivision_from_heights(d.points(), d.entries());
}

bool is_triangulation(int n, const std::vector<PairSet>& cells) {
    return std::all_of(cells.begin(), cells.end(), [n](PairSet c) {
        return std::popcount(c) == n && cell_dimension(n, c) == n - 1;
    });
}

bool is_triangulation(const Subdivision& s) { return is_triangulation(s.n, s.cells); }

bool Triangulation::contains(PairSet simplex) const {
    return std::binary_search(simplices.begin(), simplices.end(), simplex);
}

Triangulation as_triangulation(const Subdivision& s) {
    if (!is_triangulation(s)) throw std::invalid_argument("subdivision is not a triangulation");
    return {s.n, s.cells};
}

Triangulation permuted(const Triangulation& t, const Permutation& sigma) {
    Triangulation out{t.n, {}};
    for (PairSet c : t.simplices) out.simplices.push_back(sigma.apply(c));
    std::sort(out.simplices.begin(), out.simplices.end());
    return out;
}

std::string format_triangulation(const Triangulation& t) {
    std::string out = "n=" + std::to_string(t.n) + "\n";
    for (PairSet c : t.simplices) out += format_cell(t.n, c) + "\n";
    return out;
}

Triangulation parse_triangulation(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    Triangulation t;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        line.erase(line.find_last_not_of(" \t\r") + 1);
        if (t.n == 0) {
            if (line.rfind("n=", first) != first) throw ParseError("expected header n=<k>", lineno);
            t.n = std::stoi(line.substr(first + 2));
            if (t.n < 3 || t.n > kMaxPoints) throw ParseError("bad point count", lineno);
            continue;
        }
        try {
            t.simplices.push_back(parse_cell(t.n, std::string_view(line).substr(first)));
        } catch (const ParseError& e) {
            throw ParseError(e.what(), lineno);
        }
    }
    if (t.n == 0) throw ParseError("missing header n=<k>", 0);
    std::sort(t.simplices.begin(), t.simplices.end());
    if (!is_triangulation(t.n, t.simplices)) throw ParseError("cells are not maximal simplices", lineno);
    Integer volume = 0;
    for (PairSet s : t.simplices) volume += simplex_volume(t.n, s);
    if (volume != hypersimplex_volume(t.n)) throw ParseError("simplex volumes do not add up to the hypersimplex", lineno);
    return t;
}

Integer simplex_volume(int n, PairSet simplex) {
    Integer det = determinant(cell_points(n, simplex));
    return abs(det) / 2;
}

Integer hypersimplex_volume(int n) { return (Integer(1) << (n - 1)) - n; }

std::vector<Integer> cell_volumes(const Subdivision& s, const Metric& d) {
    const int n = s.n;
    const int m = pair_count(n);
    RationalVector h = d.entries();
    for (int k = 0; k < m; ++k) h[k] *= Integer(1) << m;
    // Exponentially growing perturbations give a placing triangulation of
    // every cell once they are small relative to the gaps of h.
    Rational eps = 1;
    for (int attempt = 0; attempt < 64; ++attempt, eps /= 4) {
        RationalVector hp = h;
        for (int k = 0; k < m; ++k) hp[k] += eps * Rational(Integer(1) << k);
        auto refined = subdivision_from_heights(n, hp);
        if (!is_triangulation(refined)) continue;
        std::vector<Integer> vol(s.cells.size(), Integer(0));
        bool refines = true;
        for (PairSet simplex : refined.cells) {
            auto it = std::find_if(s.cells.begin(), s.cells.end(),
                                   [simplex](PairSet c) { return (simplex & ~c) == 0; });
            if (it == s.cells.end()) {
                refines = false;
                break;
            }
            vol[it - s.cells.begin()] += simplex_volume(n, simplex);
        }
        if (refines) return vol;
    }
    throw std::logic_error("cell_volumes: no refining triangulation found");
}

const std::vector<PairSet>& StanleyReisnerIdeal::of_size(int k) const {
    static const std::vector<PairSet> none;
    auto it = generators.find(k);
    return it == generators.end() ? none : it->second;
}

std::vector<int> StanleyReisnerIdeal::cubic_support_counts(int n) const {
    std::vector<int> c(n + 1, 0);
    for (PairSet g : of_size(3)) ++c[std::popcount(cell_support(n, g))];
    return c;
}

StanleyReisnerIdeal stanley_reisner(const Triangulation& t) {
    std::set<PairSet> faces;
    for (PairSet simplex : t.simplices) {
        // every subset of the simplex
        for (PairSet sub = simplex;; sub = (sub - 1) & simplex) {
            faces.insert(sub);
            if (sub == 0) break;
        }
    }
    const int m = pair_count(t.n);
    StanleyReisnerIdeal ideal;
    std::vector<PairSet> level;
    for (PairSet f : faces)
        if (std::popcount(f) == 1) level.push_back(f);
    for (int k = 2; !level.empty() && k <= m; ++k) {
        std::vector<PairSet> next;
        for (PairSet f : level) {
            int top = 63 - std::countl_zero(f);
            for (int e = top + 1; e < m; ++e) {
                PairSet cand = f | (PairSet{1} << e);
                if (faces.count(cand)) {
                    next.push_back(cand);
                    continue;
                }
                bool minimal = true;
                for (PairSet s = cand; s && minimal; s &= s - 1)
                    if (!faces.count(cand & ~(s & -s))) minimal = false;
                if (minimal) ideal.generators[k].push_back(cand);
            }
        }
        level = std::move(next);
    }
    for (auto& [k, gens] : ideal.generators) std::sort(gens.begin(), gens.end());
    return ideal;
}

std::vector<PairSet> empty_triangles(const Triangulation& t) { return stanley_reisner(t).of_size(3); }

CentroidCell centroid_cell(const Triangulation& t) {
    const int n = t.n;
    if (n != 6) throw std::invalid_argument("centroid_cell: only defined for six points");
    if (!is_triangulation(n, t.simplices)) throw std::invalid_argument("centroid_cell: not a triangulation");
    std::vector<CentroidCell> hits;
    for (PairSet c : t.simplices) {
        // two vertex-disjoint triangles: six pairs, every point of degree 2,
        // two components of three points
        std::vector<int> deg(n, 0);
        for (PairSet s = c; s; s &= s - 1) {
            Pair p = pair_at(n, std::countr_zero(s));
            ++deg[p.i];
            ++deg[p.j];
        }
        if (std::all_of(deg.begin(), deg.end(), [](int v) { return v == 2; })) {
            bool two_triangles = false;
            for (int a = 1; a < n && !two_triangles; ++a)
                for (int b = a + 1; b < n && !two_triangles; ++b) {
                    PairSet tri = (PairSet{1} << pair_index(n, 0, a)) | (PairSet{1} << pair_index(n, 0, b)) |
                                  (PairSet{1} << pair_index(n, a, b));
                    if ((c & tri) == tri) two_triangles = true;
                }
            if (two_triangles) hits.push_back({CentroidKind::TwoTrianglesSimplex, c});
        }
    }
    std::set<PairSet> matchings;
    for (PairSet c : t.simplices) {
        for (PairSet a = c; a; a &= a - 1)
            for (PairSet b = a & (a - 1); b; b &= b - 1)
                for (PairSet e = b & (b - 1); e; e &= e - 1) {
                    PairSet tri = (a & -a) | (b & -b) | (e & -e);
                    if (std::popcount(cell_support(n, tri)) == 6) matchings.insert(tri);
                }
    }
    for (PairSet mt : matchings) hits.push_back({CentroidKind::MatchingTriangle, mt});
    if (hits.size() != 1) throw std::invalid_argument("centroid_cell: degenerate centroid");
    return hits.front();
}

}  // namespace tightspan
