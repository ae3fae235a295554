#pragma once

// Cones of the metric fan: for a triangulation T of Δ(n,2), the closed cone
// of metrics d with Δ_d coarsening T. It is cut out by one circuit
// inequality per interior wall of T together with the triangle inequalities
// of the metric cone.

#include "tightspan/cone.hpp"
#include "tightspan/subdivision.hpp"

#include <array>
#include <optional>
#include <string>

namespace tightspan {

/// Interior walls of T as (simplex index, simplex index) pairs.
std::vector<std::pair<int, int>> interior_walls(const Triangulation& t);

/// The affine dependence among the n + 1 points of two adjacent simplices,
/// indexed by pair, oriented so that the two apexes get negative weight. A
/// metric d lies on the correct side of the wall iff row · d >= 0.
IntVector wall_inequality(int n, PairSet s1, PairSet s2);

/// All distinct wall inequalities of T, primitive and sorted.
std::vector<IntVector> wall_inequalities(const Triangulation& t);

/// d_ik + d_kj - d_ij >= 0 for every pair ij and third point k.
std::vector<IntVector> triangle_inequalities(int n);

struct SecondaryCone {
    int n = 0;
    Triangulation triangulation;
    std::vector<IntVector> walls;
    int dimension = 0;
    std::vector<IntVector> facets;  // irredundant, primitive, sorted
    std::vector<IntVector> implicit_equalities;
    std::vector<IntVector> rays;    // extreme rays, primitive, sorted

    bool full_dimensional() const { return dimension == pair_count(n); }
    Cone cone() const;
};

/// Throws std::invalid_argument when the input is not a triangulation.
SecondaryCone secondary_cone(const Triangulation& t);

struct Regularity {
    bool regular = false;
    std::optional<Metric> witness;  // integer metric inducing T, when regular
};

/// LP with every wall inequality required to have slack at least 1. The
/// witness is shifted by a multiple of the all-ones vector (which does not
/// change Δ) until every triangle inequality is strict, then made primitive.
Regularity is_regular(const Triangulation& t);

enum class PrimeType { Split15, Split24, Split33, P1, P2, P3, P4, P5, P6, P7, P8, P9, P10, P11 };
inline constexpr int kPrimeTypeCount = 14;

std::string to_string(PrimeType p);

struct PrimeRepresentative {
    PrimeType type;
    std::array<long, 15> vector;
};

/// The fourteen representatives of rays of the six-point metric fan.
const std::array<PrimeRepresentative, kPrimeTypeCount>& prime_representatives();

class UnknownRayError : public std::runtime_error {
public:
    explicit UnknownRayError(const IntVector& r) : std::runtime_error("unknown ray (" + to_string(r) + ")") {}
};

/// Lexicographically smallest image of the primitive vector over all point
/// permutations.
std::vector<long> canonical_ray(int n, const IntVector& r);

/// Six-point rays only; throws UnknownRayError if no representative matches.
PrimeType classify_ray(const IntVector& r);

struct SPVector {
    int splits15 = 0;
    std::array<int, 2> S{};   // (s_2, s_3): 2/4 and 3/3 splits
    std::array<int, 11> P{};  // p_1 .. p_11

    int total() const;
    friend bool operator==(const SPVector&, const SPVector&) = default;
    friend auto operator<=>(const SPVector&, const SPVector&) = default;
};

SPVector sp_invariant(const SecondaryCone& c);

}  // namespace tightspan
