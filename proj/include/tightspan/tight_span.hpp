#pragma once

// The tight span T_d: the complex of bounded faces of
// P_d = {x ∈ R^n : x >= 0, x_i + x_j >= d_ij}.

#include "tightspan/cell_complex.hpp"
#include "tightspan/metric.hpp"
#include "tightspan/polyhedron.hpp"
#include "tightspan/subdivision.hpp"

namespace tightspan {

struct TightSpan {
    int n = 0;
    std::vector<RationalVector> coords;  // per vertex, exact
    std::vector<PairSet> vertex_pairs;   // pairs ij with x_i + x_j = d_ij at the vertex
    CellComplex complex;
    std::vector<int> taxa;               // taxon k -> vertex index
    std::vector<bool> exterior;          // per edge of `complex`: removed by contraction
    bool contracted = false;
    bool tree_like = false;              // whole complex has dimension <= 1

    /// Whether 2-face `i` is a face of the (unique) 3-cell.
    bool on_three_cell(int i) const;
};

/// n nonnegativity rows x_k >= 0 followed by the pair rows in pair order.
HPolyhedron polyhedron_Pd(const Metric& d);

/// Throws std::invalid_argument unless d is a metric.
TightSpan tight_span(const Metric& d);

/// Repeatedly removes a degree-one vertex lying in no 2-face together with
/// its edge; taxa move to the surviving endpoint. Complexes of dimension
/// <= 1 are returned unchanged with tree_like set.
TightSpan contract_exterior_segments(const TightSpan& t);

int combinatorial_dimension(const TightSpan& t);

/// Distinct vertices carrying a taxon (points at distance zero share one).
int trivial_vertex_count(const TightSpan& t);

struct K33Vertex {
    int vertex = -1;
    int polygons = 0;
};

/// For a 2-dimensional generic six-point metric: the vertex dual to the
/// two-disjoint-triangles simplex of Δ_d and the number of polygons around it.
/// Throws CensusError when d is not of that kind.
K33Vertex k33_vertex(const Metric& d, const TightSpan& contracted);

}  // namespace tightspan
