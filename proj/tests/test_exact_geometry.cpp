#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support/helpers.hpp"
#include "support/oracles.hpp"

#include "tightspan/cone.hpp"
#include "tightspan/linalg.hpp"
#include "tightspan/lp.hpp"
#include "tightspan/polyhedron.hpp"
#include "tightspan/tight_span.hpp"

#include <random>

using namespace tightspan;

namespace {

LinearInequality ge(RationalVector a, Rational b) { return {std::move(a), std::move(b), Relation::GreaterEqual}; }

IntVector iv(std::initializer_list<long> xs) {
    IntVector v;
    for (long x : xs) v.emplace_back(x);
    return v;
}

std::vector<IntVector> sorted(std::vector<IntVector> v) {
    std::sort(v.begin(), v.end(), lex_less);
    return v;
}

}  // namespace

TEST_CASE("normalization and primitive vectors") {
    CHECK(primitive(RationalVector{Rational(1, 2), Rational(-3, 4)}) == iv({2, -3}));
    CHECK(primitive(iv({0, -4, 6})) == iv({0, -2, 3}));
    auto n = LinearInequality{{Rational(2), Rational(4)}, Rational(6), Relation::GreaterEqual}.normalized();
    CHECK(n.coeffs == RationalVector{1, 2});
    CHECK(n.rhs == 3);
    auto e = LinearInequality{{Rational(-2), Rational(4)}, Rational(6), Relation::Equal}.normalized();
    CHECK(e.coeffs == RationalVector{1, -2});
    CHECK(e.rhs == -3);
}

TEST_CASE("linear algebra") {
    CHECK(rank(std::vector<IntVector>{iv({1, 2}), iv({2, 4})}) == 1);
    CHECK(determinant({iv({2, 0, 1}), iv({1, 3, 2}), iv({1, 1, 2})}) == 6);
    CHECK(determinant({}) == 1);
    auto ns = nullspace({iv({1, 1, 1})}, 3);
    CHECK(ns.size() == 2);
    for (const auto& v : ns) CHECK(dot(iv({1, 1, 1}), v) == 0);
}

TEST_CASE("lp_feasible with strict rows") {
    std::vector<LinearInequality> box{ge({1}, 0), ge({-1}, -1)};
    auto r = lp_feasible(box, {true, true});
    REQUIRE(r.feasible);
    CHECK(r.witness[0] > 0);
    CHECK(r.witness[0] < 1);

    std::vector<LinearInequality> point{ge({1}, 0), ge({-1}, 0)};
    auto s = lp_feasible(point, {true, true});
    CHECK_FALSE(s.feasible);
    REQUIRE(s.certificate);
    CHECK(s.certificate->verify(point, {true, true}));
    CHECK(lp_feasible(point).feasible);

    std::vector<LinearInequality> empty{ge({1, 1}, 3), ge({-1, 0}, 0), ge({0, -1}, -1)};
    auto t = lp_feasible(empty);
    CHECK_FALSE(t.feasible);
    REQUIRE(t.certificate);
    CHECK(t.certificate->verify(empty, {}));
}

TEST_CASE("lp_maximize") {
    std::vector<LinearInequality> sys{ge({-1, 0}, -2), ge({0, -1}, -3), ge({1, 0}, 0), ge({0, 1}, 0)};
    auto r = lp_maximize({1, 1}, sys);
    CHECK(r.status == LpStatus::Optimal);
    CHECK(r.value == 5);
    std::vector<LinearInequality> open{ge({1, 0}, 0)};
    CHECK(lp_maximize({1, 0}, open).status == LpStatus::Unbounded);
}

TEST_CASE("cell witness for the pairs 15 and 26 of Type 12") {
    // x_i + x_j = d_ij on {15, 26}, strict elsewhere, and some maximal cell
    // containing both: a face of Δ_d contains the edge.
    auto d = helpers::representative(12);
    const int n = 6;
    PairSet edge = helpers::pairs("15 26");
    bool found = false;
    for (PairSet cell : regular_subdivision(d).cells) found = found || (cell & edge) == edge;
    CHECK(found);
    std::vector<LinearInequality> rows;
    std::vector<bool> strict;
    for (int k = 0; k < pair_count(n); ++k) {
        Pair p = pair_at(n, k);
        RationalVector a(n, Rational(0));
        a[p.i] = a[p.j] = 1;
        bool on = (edge >> k) & 1u;
        rows.push_back({a, d[k], on ? Relation::Equal : Relation::GreaterEqual});
        strict.push_back(!on);
    }
    auto r = lp_feasible(rows, strict);
    REQUIRE(r.feasible);
    for (std::size_t i = 0; i < rows.size(); ++i) CHECK((strict[i] ? rows[i].holds_strictly(r.witness) : rows[i].holds(r.witness)));
}

TEST_CASE("double description on small cones") {
    Cone orthant{3, {iv({1, 0, 0}), iv({0, 1, 0}), iv({0, 0, 1})}};
    CHECK(dual_rays(orthant) == std::vector<IntVector>{iv({0, 0, 1}), iv({0, 1, 0}), iv({1, 0, 0})});

    Cone wedge{2, {iv({1, 1}), iv({1, -1})}};
    CHECK(dual_rays(wedge) == sorted({iv({1, 1}), iv({1, -1})}));

    Cone redundant = orthant;
    redundant.rows.push_back(iv({1, 1, 1}));
    CHECK(irredundant_facets(redundant) == sorted({iv({1, 0, 0}), iv({0, 1, 0}), iv({0, 0, 1})}));

    Cone halfspace{2, {iv({1, 0})}};
    try {
        dual_rays(halfspace);
        FAIL("expected NotPointedError");
    } catch (const NotPointedError& e) {
        CHECK(dot(iv({1, 0}), e.direction()) == 0);
    }

    Cone zero{2, {iv({1, 0}), iv({-1, 0}), iv({0, 1}), iv({0, -1})}};
    CHECK_THROWS_AS(irredundant_facets(zero), EmptyConeError);
}

TEST_CASE("double description agrees with the brute-force ray oracle and round-trips") {
    std::mt19937 rng(2024);
    for (int trial = 0; trial < 50; ++trial) {
        int dim = 2 + trial % 5;
        int rows = dim + 1 + static_cast<int>(rng() % 6);
        auto cone = oracle::random_pointed_cone(rng, dim, rows);
        auto rays = dual_rays(cone);
        CHECK(rays == oracle::extreme_rays(cone.rows, dim));

        auto fd = facet_description(cone, rays);
        CHECK(fd.dimension == dim);
        for (const auto& r : rays) {
            int tight = 0;
            for (const auto& f : fd.facets) {
                CHECK(dot(f, r) >= 0);
                tight += dot(f, r) == 0;
            }
            CHECK(tight >= dim - 1);
        }
        Cone back{dim, fd.facets};
        CHECK(dual_rays(back) == rays);
        for (std::size_t i = 0; i < fd.facets.size(); ++i) CHECK(certify_facet(fd.facets, i));
    }
}

TEST_CASE("double description in dimension 8 with 20 rows") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 5; ++trial) {
        auto cone = oracle::random_pointed_cone(rng, 8, 20);
        auto rays = dual_rays(cone);
        auto facets = facet_description(cone, rays).facets;
        CHECK(dual_rays(Cone{8, facets}) == rays);
        CHECK(rays == oracle::extreme_rays(cone.rows, 8));
    }
}

TEST_CASE("bounded faces of the unit square") {
    HPolyhedron sq{2, {ge({1, 0}, 0), ge({0, 1}, 0), ge({-1, 0}, -1), ge({0, -1}, -1)}};
    auto fl = bounded_face_lattice(sq);
    CHECK(fl.fvector() == std::vector<int>{4, 4, 1});
    for (const auto& dim : fl.faces)
        for (const auto& f : dim)
            for (int v : f.vertices) CHECK(f.tight.is_subset_of(fl.vertex_tight[v]));

    HPolyhedron empty{1, {ge({1}, 1), ge({-1}, 0)}};
    CHECK(bounded_face_lattice(empty).faces.empty());
    HPolyhedron line{2, {ge({1, 0}, 0)}};
    CHECK_THROWS_AS(bounded_face_lattice(line), NotPointedError);
}

TEST_CASE("bounded faces of P_d") {
    auto p4 = bounded_face_lattice(polyhedron_Pd(helpers::metric_of(fixtures::primes()[6].d)));
    CHECK(p4.fvector() == std::vector<int>{10, 20, 12, 1});
    auto p1 = bounded_face_lattice(polyhedron_Pd(helpers::metric_of(fixtures::primes()[3].d)));
    CHECK(p1.fvector() == std::vector<int>{6, 9, 4});

    // Every bounded 3-face has a boundary of Euler characteristic 2.
    for (const auto& f3 : p4.faces[3]) {
        int chi = 0;
        for (int k = 0; k < 3; ++k)
            for (const auto& f : p4.faces[k])
                if (std::includes(f3.vertices.begin(), f3.vertices.end(), f.vertices.begin(), f.vertices.end()))
                    chi += (k % 2 == 0) ? 1 : -1;
        CHECK(chi == 2);
    }
}

TEST_CASE("bounded faces agree with a brute-force tight-set oracle for four points") {
    // Faces of P_d are the nonempty sets {x in P : rows in T tight}; a bounded
    // one has a vertex set of affine dimension equal to its face dimension and
    // no recession direction. Enumerate all row subsets for n = 4.
    std::mt19937 rng(5);
    for (int trial = 0; trial < 10; ++trial) {
        auto d = trial == 0 ? Metric::from_integers(4, std::array<long, 6>{1, 1, 1, 1, 1, 1})
                            : oracle::random_metric(4, rng, 1, 8);
        auto p = polyhedron_Pd(d);
        auto fl = bounded_face_lattice(p);
        auto vr = vertices_and_rays(p);
        std::set<std::vector<int>> oracle_faces;
        const int m = static_cast<int>(p.rows.size());
        for (int mask = 0; mask < (1 << m); ++mask) {
            std::vector<int> verts;
            for (std::size_t v = 0; v < vr.vertices.size(); ++v) {
                bool tight = true;
                for (int r = 0; r < m && tight; ++r)
                    if ((mask >> r) & 1) tight = p.rows[r].slack(vr.vertices[v]) == 0;
                if (tight) verts.push_back(static_cast<int>(v));
            }
            if (verts.empty()) continue;
            bool bounded = true;
            for (const auto& ray : vr.rays) {
                bool in = true;
                for (int r = 0; r < m && in; ++r)
                    if ((mask >> r) & 1) in = dot(to_rational(ray), p.rows[r].coeffs) == 0;
                if (in) bounded = false;
            }
            if (bounded) oracle_faces.insert(verts);
        }
        std::set<std::vector<int>> ours;
        // Translate lattice vertex indices into vertices_and_rays indices.
        for (const auto& dim : fl.faces)
            for (const auto& f : dim) {
                std::vector<int> verts;
                for (int v : f.vertices) {
                    auto it = std::find(vr.vertices.begin(), vr.vertices.end(), fl.vertices[v]);
                    REQUIRE(it != vr.vertices.end());
                    verts.push_back(static_cast<int>(it - vr.vertices.begin()));
                }
                std::sort(verts.begin(), verts.end());
                ours.insert(verts);
            }
        CHECK(ours == oracle_faces);
        if (trial == 0) CHECK(fl.dimension() == 1);  // equilateral: a star of four segments
    }
}
