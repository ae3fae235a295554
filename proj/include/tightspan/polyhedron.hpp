#pragma once

#include "tightspan/cone.hpp"
#include "tightspan/lp.hpp"

#include <vector>

namespace tightspan {

/// {x : a_i · x >= b_i}; every row must use Relation::GreaterEqual.
struct HPolyhedron {
    int dim = 0;
    std::vector<LinearInequality> rows;
};

struct Face {
    int dim = 0;
    std::vector<int> vertices;  // sorted indices into FaceLattice::vertices
    Bitset tight;               // rows of the polyhedron tight on the whole face
};

/// The bounded faces of a pointed polyhedron, graded by dimension.
struct FaceLattice {
    int ambient_dim = 0;
    std::vector<RationalVector> vertices;
    std::vector<Bitset> vertex_tight;
    std::vector<IntVector> recession_rays;
    std::vector<std::vector<Face>> faces;  // faces[k] = bounded k-faces; faces[0][i].vertices == {i}

    int dimension() const { return static_cast<int>(faces.size()) - 1; }
    std::vector<int> fvector() const;
};

/// Vertices and extreme recession rays via double description of the
/// homogenization {(x, t) : a·x - b t >= 0, t >= 0}.
struct VRepresentation {
    std::vector<RationalVector> vertices;  // lexicographic order of the homogeneous rays
    std::vector<IntVector> rays;
};
/// Throws NotPointedError when the polyhedron is nonempty with lineality.
VRepresentation vertices_and_rays(const HPolyhedron& p);

/// All bounded faces with exact vertex coordinates. Vertices are generated
/// first; each face is closed upward by intersecting tight sets, and a face
/// is kept iff no recession ray of the polyhedron lies in its recession cone.
/// An empty polyhedron gives an empty lattice.
FaceLattice bounded_face_lattice(const HPolyhedron& p);

}  // namespace tightspan
