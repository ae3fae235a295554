#pragma once

// Regular subdivisions of the second hypersimplex Δ(n,2) = conv{e_i + e_j}.
// A cell is a subgraph G of K_n, i.e. the vertex set {e_i + e_j : ij ∈ G},
// stored as a PairSet.

#include "tightspan/metric.hpp"

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace tightspan {

/// Affine dimension of conv{e_i + e_j : ij ∈ G}. Computed combinatorially:
/// the linear rank of the edge vectors of a graph is (#touched points) minus
/// (#bipartite components).
int cell_dimension(int n, PairSet cell);

/// Same quantity by exact Gaussian elimination on the points.
int cell_dimension_exact(int n, PairSet cell);

/// Points of the cell as 0/1/2 integer vectors in R^n.
std::vector<IntVector> cell_points(int n, PairSet cell);

/// Set of points i touched by some pair of the cell.
PointSet cell_support(int n, PairSet cell);

/// "12,34,56" (pair labels in index order).
std::string format_cell(int n, PairSet cell);
PairSet parse_cell(int n, std::string_view text);

struct Subdivision {
    int n = 0;
    std::vector<PairSet> cells;             // maximal cells, ascending
    std::vector<RationalVector> witnesses;  // x with x_i + x_j = d_ij exactly on the cell, > off it

    bool operator==(const Subdivision& o) const { return n == o.n && cells == o.cells; }
};

/// Δ_d via the vertices of {x ∈ R^n : x_i + x_j >= d_ij}: every vertex is the
/// supporting functional of one maximal cell, namely its tight pair set.
/// Throws std::invalid_argument unless d is a metric.
Subdivision regular_subdivision(const Metric& d);

/// Every maximal cell is an (n-1)-simplex: exactly n pairs of full rank.
bool is_triangulation(const Subdivision& s);
bool is_triangulation(int n, const std::vector<PairSet>& cells);

/// Maximal simplices of a triangulation, ascending.
struct Triangulation {
    int n = 0;
    std::vector<PairSet> simplices;

    bool contains(PairSet simplex) const;
    friend bool operator==(const Triangulation&, const Triangulation&) = default;
    friend auto operator<=>(const Triangulation&, const Triangulation&) = default;
};

/// Throws std::invalid_argument when the subdivision is not a triangulation.
Triangulation as_triangulation(const Subdivision& s);

Triangulation permuted(const Triangulation& t, const Permutation& sigma);

/// Text format: header "n=<k>", then one simplex per line as "12,34,56,...".
/// Parsing throws ParseError unless the cells are maximal simplices whose
/// volumes add up to that of Δ(n,2).
std::string format_triangulation(const Triangulation& t);
Triangulation parse_triangulation(std::string_view text);

/// Normalized volume (unit = smallest lattice simplex in the affine lattice
/// of Δ(n,2)) of a full-dimensional simplex: |det| / 2.
Integer simplex_volume(int n, PairSet simplex);

/// Normalized volume of Δ(n,2) (Eulerian number A(n-1, 1)).
Integer hypersimplex_volume(int n);

/// Volumes of the maximal cells, obtained by refining the subdivision with a
/// generic perturbation of the witness heights and summing simplex volumes
/// per cell. Throws std::logic_error if some refining simplex lies in no cell.
std::vector<Integer> cell_volumes(const Subdivision& s, const Metric& d);

/// Minimal non-faces of the simplicial complex, grouped by size.
struct StanleyReisnerIdeal {
    std::map<int, std::vector<PairSet>> generators;  // size -> minimal non-faces, ascending

    const std::vector<PairSet>& of_size(int k) const;
    std::size_t quadric_count() const { return of_size(2).size(); }
    std::size_t cubic_count() const { return of_size(3).size(); }
    /// c_i = number of cubics whose pairs touch exactly i points; indexed 0..n.
    std::vector<int> cubic_support_counts(int n) const;
};

StanleyReisnerIdeal stanley_reisner(const Triangulation& t);
std::vector<PairSet> empty_triangles(const Triangulation& t);

enum class CentroidKind { MatchingTriangle, TwoTrianglesSimplex };

struct CentroidCell {
    CentroidKind kind;
    PairSet cell;  // the matching (3 pairs) or the maximal simplex (6 pairs)
};

/// Which simplex of a triangulation of Δ(6,2) contains (1/3, ..., 1/3) in its
/// relative interior. Throws std::invalid_argument for n != 6 or a
/// non-triangulation (no candidate found).
CentroidCell centroid_cell(const Triangulation& t);

}  // namespace tightspan
