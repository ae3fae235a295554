#include "tightspan/tight_span.hpp"

#include <algorithm>

namespace tightspan {

bool TightSpan::on_three_cell(int i) const {
    const auto& cells = complex.of_dim(3);
    return cells.size() == 1 && contains(cells.front(), complex.faces[2][i]);
}

HPolyhedron polyhedron_Pd(const Metric& d) {
    const int n = d.points();
    HPolyhedron p{n, {}};
    for (int k = 0; k < n; ++k) {
        RationalVector a(n, Rational(0));
        a[k] = 1;
        p.rows.push_back({std::move(a), 0, Relation::GreaterEqual});
    }
    for (int k = 0; k < pair_count(n); ++k) {
        Pair pr = pair_at(n, k);
        RationalVector a(n, Rational(0));
        a[pr.i] = 1;
        a[pr.j] = 1;
        p.rows.push_back({std::move(a), d[k], Relation::GreaterEqual});
    }
    return p;
}

namespace {

struct LeafRemoval {
    std::vector<bool> vertex_alive;
    std::vector<bool> edge_alive;
    std::vector<int> taxa;
};

LeafRemoval remove_leaves(const TightSpan& t) {
    const int nv = t.complex.vertex_count();
    const auto& edges = t.complex.of_dim(1);
    LeafRemoval r{std::vector<bool>(nv, true), std::vector<bool>(edges.size(), true), t.taxa};
    std::vector<bool> in_polygon(nv, false);
    for (const auto& poly : t.complex.of_dim(2))
        for (int v : poly) in_polygon[v] = true;

    for (bool changed = true; changed;) {
        changed = false;
        std::vector<int> deg(nv, 0);
        for (std::size_t e = 0; e < edges.size(); ++e)
            if (r.edge_alive[e]) {
                ++deg[edges[e][0]];
                ++deg[edges[e][1]];
            }
        for (int v = 0; v < nv; ++v) {
            if (!r.vertex_alive[v] || deg[v] != 1 || in_polygon[v]) continue;
            std::size_t e = 0;
            while (!(r.edge_alive[e] && (edges[e][0] == v || edges[e][1] == v))) ++e;
            int other = edges[e][0] == v ? edges[e][1] : edges[e][0];
            r.edge_alive[e] = false;
            r.vertex_alive[v] = false;
            for (int& x : r.taxa)
                if (x == v) x = other;
            changed = true;
            break;
        }
    }
    return r;
}

}  // namespace

TightSpan tight_span(const Metric& d) {
    if (!is_metric(d).ok) throw std::invalid_argument("tight_span: input is not a metric");
    const int n = d.points();
    auto lattice = bounded_face_lattice(polyhedron_Pd(d));

    TightSpan t;
    t.n = n;
    t.coords = lattice.vertices;
    for (const auto& tight : lattice.vertex_tight) {
        PairSet pairs = 0;
        for (int k = 0; k < pair_count(n); ++k)
            if (tight.test(n + k)) pairs |= PairSet{1} << k;
        t.vertex_pairs.push_back(pairs);
    }
    for (const auto& level : lattice.faces) {
        std::vector<VertexList> faces;
        for (const auto& f : level) faces.push_back(f.vertices);
        t.complex.faces.push_back(std::move(faces));
    }
    for (int k = 0; k < n; ++k) {
        RationalVector target(n);
        for (int i = 0; i < n; ++i) target[i] = d(i, k);
        auto it = std::find(t.coords.begin(), t.coords.end(), target);
        if (it == t.coords.end()) throw std::logic_error("tight_span: taxon vertex missing");
        t.taxa.push_back(static_cast<int>(it - t.coords.begin()));
    }
    t.exterior.assign(t.complex.of_dim(1).size(), false);
    if (t.complex.dimension() >= 2) {
        auto removal = remove_leaves(t);
        for (std::size_t e = 0; e < t.exterior.size(); ++e) t.exterior[e] = !removal.edge_alive[e];
    }
    return t;
}

TightSpan contract_exterior_segments(const TightSpan& t) {
    TightSpan out = t;
    out.contracted = true;
    if (t.complex.dimension() <= 1) {
        out.tree_like = true;
        return out;
    }
    const int nv = t.complex.vertex_count();
    auto [vertex_alive, edge_alive, taxa] = remove_leaves(t);

    std::vector<int> index(nv, -1);
    int next = 0;
    out.coords.clear();
    out.vertex_pairs.clear();
    for (int v = 0; v < nv; ++v)
        if (vertex_alive[v]) {
            index[v] = next++;
            out.coords.push_back(t.coords[v]);
            out.vertex_pairs.push_back(t.vertex_pairs[v]);
        }
    CellComplex c;
    for (int k = 0; k <= t.complex.dimension(); ++k) {
        std::vector<VertexList> level;
        for (std::size_t i = 0; i < t.complex.faces[k].size(); ++i) {
            const auto& f = t.complex.faces[k][i];
            if (k == 1 && !edge_alive[i]) continue;
            if (k == 0 && !vertex_alive[f[0]]) continue;
            VertexList g;
            for (int v : f) g.push_back(index[v]);
            level.push_back(std::move(g));
        }
        c.faces.push_back(std::move(level));
    }
    out.complex = std::move(c);
    out.exterior.assign(out.complex.of_dim(1).size(), false);
    for (int& x : taxa) x = index[x];
    out.taxa = std::move(taxa);
    return out;
}

int combinatorial_dimension(const TightSpan& t) { return t.complex.dimension(); }

int trivial_vertex_count(const TightSpan& t) {
    std::vector<int> v = t.taxa;
    std::sort(v.begin(), v.end());
    return static_cast<int>(std::unique(v.begin(), v.end()) - v.begin());
}

K33Vertex k33_vertex(const Metric& d, const TightSpan& contracted) {
    if (d.points() != 6) throw CensusError("k33_vertex: needs six points");
    auto sub = regular_subdivision(d);
    if (!is_triangulation(sub)) throw CensusError("k33_vertex: metric is not generic");
    auto centroid = centroid_cell(as_triangulation(sub));
    if (centroid.kind != CentroidKind::TwoTrianglesSimplex || contracted.complex.dimension() != 2)
        throw CensusError("k33_vertex: metric is not two-dimensional");
    auto it = std::find(contracted.vertex_pairs.begin(), contracted.vertex_pairs.end(), centroid.cell);
    if (it == contracted.vertex_pairs.end()) throw std::logic_error("k33_vertex: dual vertex missing");
    int v = static_cast<int>(it - contracted.vertex_pairs.begin());
    return {v, polygons_at(contracted.complex, v)};
}

}  // namespace tightspan
