#pragma once

// Polyhedral cones {x : a·x >= 0 for every row a} over the integers, and the
// double description method converting between facets and extreme rays.

#include "tightspan/rational.hpp"

#include <boost/dynamic_bitset.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace tightspan {

using Bitset = boost::dynamic_bitset<>;

class NotPointedError : public std::runtime_error {
public:
    explicit NotPointedError(IntVector direction)
        : std::runtime_error("cone is not pointed; lineality direction (" + to_string(direction) + ")"),
          direction_(std::move(direction)) {}
    const IntVector& direction() const { return direction_; }

private:
    IntVector direction_;
};

class EmptyConeError : public std::runtime_error {
public:
    EmptyConeError() : std::runtime_error("cone is {0}: no facets") {}
};

/// Homogeneous inequality system; rows are kept as given.
struct Cone {
    int dim = 0;
    std::vector<IntVector> rows;
};

/// Rays and lineality of a cone as produced by the double description method.
struct ConeGenerators {
    std::vector<IntVector> rays;       // primitive, lexicographically sorted
    std::vector<IntVector> lineality;  // basis, primitive
};

/// Full double description: every extreme ray plus a lineality basis. Rows are
/// inserted in lexicographic order after normalization and deduplication.
ConeGenerators double_description(const Cone& cone);

/// Extreme rays of a pointed cone as primitive integer vectors in
/// lexicographic order. Throws NotPointedError otherwise.
std::vector<IntVector> dual_rays(const Cone& cone);

/// Facet description computed from the rays: rows (normalized to primitive
/// vectors) that are tight on a codimension-one set of rays, one per facet,
/// sorted. Rows tight on every ray (implicit equalities of a lower-dimensional
/// cone) are reported separately.
struct FacetDescription {
    int dimension = 0;                        // dimension of the cone
    std::vector<IntVector> facets;
    std::vector<IntVector> implicit_equalities;
};

FacetDescription facet_description(const Cone& cone, const std::vector<IntVector>& rays);

/// Minimal inequality description of a pointed cone. Throws EmptyConeError
/// for the zero cone.
std::vector<IntVector> irredundant_facets(const Cone& cone);

/// LP certificate that `facet` supports a facet of the full-dimensional cone:
/// a point tight on it and strictly inside every other listed facet.
bool certify_facet(const std::vector<IntVector>& facets, std::size_t index);

/// Plain-text dump: one row per line, integers separated by spaces.
std::string format_rows(const std::vector<IntVector>& rows);

/// Bitset of row indices vanishing on v.
Bitset tight_set(const std::vector<IntVector>& rows, const IntVector& v);

}  // namespace tightspan
