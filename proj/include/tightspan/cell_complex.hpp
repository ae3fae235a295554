#pragma once

// Polyhedral cell complexes described combinatorially: each face is the
// sorted list of its vertices, faces are graded by dimension, and face
// containment is containment of vertex sets.

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

namespace tightspan {

using VertexList = std::vector<int>;

struct CellComplex {
    std::vector<std::vector<VertexList>> faces;  // faces[k]: k-faces; faces[0][i] == {i}

    int dimension() const { return static_cast<int>(faces.size()) - 1; }
    int vertex_count() const { return faces.empty() ? 0 : static_cast<int>(faces[0].size()); }
    std::vector<int> fvector() const;
    const std::vector<VertexList>& of_dim(int k) const;
    int euler_characteristic() const;
    /// Edges as vertex pairs (faces[1]).
    std::vector<std::array<int, 2>> edges() const;
    std::vector<int> degrees() const;
};

/// Indices of the k-faces contained in `face`.
std::vector<int> subfaces(const CellComplex& c, const VertexList& face, int k);
bool contains(const VertexList& big, const VertexList& small);

class CensusError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Polygon counts by edge number, split by whether the polygon is a face of
/// the unique 3-cell. Index i holds polygons with i edges (0..max).
struct PolygonCensus {
    std::vector<int> on_cell;   // r_i
    std::vector<int> off_cell;  // b_i
    int polygons() const;
};

/// Requires at most one 3-cell and no faces of dimension > 3; throws
/// CensusError otherwise.
PolygonCensus polygon_census(const CellComplex& c);

struct ThreeCellStats {
    int facets = 0;    // f
    int vertices = 0;  // v
    int edges = 0;     // e
    bool simple = false;
};

/// Throws CensusError unless there is exactly one 3-cell.
ThreeCellStats three_cell_stats(const CellComplex& c);

/// Number of 2-faces containing vertex v.
int polygons_at(const CellComplex& c, int v);

/// Fixed-width digit string for small counts: 0-9 then a=10, b=11, ...
std::string digit_string(const std::vector<int>& counts);
char count_digit(int v);

}  // namespace tightspan
