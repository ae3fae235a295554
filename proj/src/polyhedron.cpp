#include "tightspan/polyhedron.hpp"

#include "tightspan/linalg.hpp"

#include <set>

namespace tightspan {

std::vector<int> FaceLattice::fvector() const {
    std::vector<int> f;
    for (const auto& level : faces) f.push_back(static_cast<int>(level.size()));
    return f;
}

namespace {

Bitset row_tight(const HPolyhedron& p, const RationalVector& x) {
    Bitset out(p.rows.size());
    for (std::size_t i = 0; i < p.rows.size(); ++i)
        if (sgn(p.rows[i].slack(x)) == 0) out.set(i);
    return out;
}

}  // namespace

VRepresentation vertices_and_rays(const HPolyhedron& p) {
    Cone cone{p.dim + 1, {}};
    for (const auto& row : p.rows) {
        if (row.rel != Relation::GreaterEqual) throw std::invalid_argument("HPolyhedron rows must be inequalities");
        RationalVector h = row.coeffs;
        h.push_back(-row.rhs);
        cone.rows.push_back(primitive(h));
    }
    IntVector t(p.dim + 1, Integer(0));
    t[p.dim] = 1;
    cone.rows.push_back(t);

    auto gens = double_description(cone);
    VRepresentation out;
    for (auto& r : gens.rays) {
        if (sgn(r[p.dim]) > 0) {
            RationalVector x(p.dim);
            for (int i = 0; i < p.dim; ++i) x[i] = Rational(r[i], r[p.dim]);
            for (auto& v : x) v.canonicalize();
            out.vertices.push_back(std::move(x));
        } else {
            r.pop_back();
            out.rays.push_back(std::move(r));
        }
    }
    if (!out.vertices.empty() && !gens.lineality.empty()) {
        IntVector dir = gens.lineality.front();
        dir.pop_back();
        throw NotPointedError(dir);
    }
    return out;
}

FaceLattice bounded_face_lattice(const HPolyhedron& p) {
    FaceLattice lattice;
    lattice.ambient_dim = p.dim;
    auto vrep = vertices_and_rays(p);
    if (vrep.vertices.empty()) return lattice;
    lattice.vertices = std::move(vrep.vertices);
    lattice.recession_rays = std::move(vrep.rays);

    for (const auto& v : lattice.vertices) lattice.vertex_tight.push_back(row_tight(p, v));

    std::vector<Bitset> ray_tight;
    for (const auto& r : lattice.recession_rays) {
        Bitset t(p.rows.size());
        for (std::size_t i = 0; i < p.rows.size(); ++i)
            if (sgn(dot(p.rows[i].coeffs, to_rational(r))) == 0) t.set(i);
        ray_tight.push_back(std::move(t));
    }

    const int nv = static_cast<int>(lattice.vertices.size());
    lattice.faces.emplace_back();
    for (int i = 0; i < nv; ++i) lattice.faces[0].push_back({0, {i}, lattice.vertex_tight[i]});

    for (int k = 0;; ++k) {
        std::set<std::vector<int>> seen;
        std::vector<Face> next;
        for (const auto& face : lattice.faces[k]) {
            std::vector<bool> in_face(nv, false);
            for (int v : face.vertices) in_face[v] = true;
            for (int v = 0; v < nv; ++v) {
                if (in_face[v]) continue;
                Bitset common = face.tight & lattice.vertex_tight[v];
                bool bounded = true;
                for (const auto& rt : ray_tight)
                    if (common.is_subset_of(rt)) {
                        bounded = false;
                        break;
                    }
                if (!bounded) continue;
                std::vector<int> verts;
                for (int u = 0; u < nv; ++u)
                    if (common.is_subset_of(lattice.vertex_tight[u])) verts.push_back(u);
                if (seen.count(verts)) continue;
                seen.insert(verts);
                std::vector<RationalVector> pts;
                for (int u : verts) pts.push_back(lattice.vertices[u]);
                if (affine_dimension(pts) != k + 1) continue;
                Bitset tight = lattice.vertex_tight[verts.front()];
                for (int u : verts) tight &= lattice.vertex_tight[u];
                next.push_back({k + 1, std::move(verts), std::move(tight)});
            }
        }
        if (next.empty()) break;
        std::sort(next.begin(), next.end(), [](const Face& a, const Face& b) { return a.vertices < b.vertices; });
        lattice.faces.push_back(std::move(next));
    }
    return lattice;
}

}  // namespace tightspan
