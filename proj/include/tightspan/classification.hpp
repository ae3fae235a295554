#pragma once

// Enumeration of triangulations of Δ(n,2) up to relabeling of the points:
// bistellar flips, canonical forms, invariants, and type numbering.

#include "tightspan/cell_complex.hpp"
#include "tightspan/metric_fan.hpp"
#include "tightspan/subdivision.hpp"
#include "tightspan/tight_span.hpp"

#include <functional>
#include <optional>
#include <string>

namespace tightspan {

/// Every triangulation obtained from t by one bistellar flip, sorted and
/// duplicate-free. For each interior wall the circuit Z of its n + 1 points
/// splits into Z+ and Z-; if t contains the triangulation of Z on the side of
/// the two apexes and every one of its simplices has the same link, that part
/// is exchanged for the other triangulation of Z joined with the same link.
std::vector<Triangulation> flips(const Triangulation& t);

struct CanonicalTriangulation {
    Triangulation form;  // lexicographically smallest sorted image
    int g = 0;           // order of the stabilizer
};

/// Reusable canonicalizer with precomputed pair actions for all n!
/// permutations. Thread-safe after construction.
class Canonicalizer {
public:
    explicit Canonicalizer(int n);
    int points() const { return n_; }
    CanonicalTriangulation canonical(const Triangulation& t) const;
    PairSet apply(std::size_t perm, PairSet s) const;
    std::size_t group_order() const { return perms_.size(); }
    const Permutation& permutation(std::size_t i) const { return perms_[i]; }

private:
    int n_;
    int chunks_;
    std::vector<Permutation> perms_;
    std::vector<PairSet> table_;  // [perm][chunk][byte]
};

CanonicalTriangulation canonical_form(const Triangulation& t);

/// The dual of the interior faces of a triangulation: vertices are maximal
/// simplices, and an interior face of codimension k gives a k-cell whose
/// vertices are the simplices containing it. A face is interior iff its
/// pairs touch every point and do not all share one point.
struct AbstractTightSpan {
    CellComplex complex;
    std::vector<std::vector<PairSet>> duals;  // duals[k][i]: face of t dual to k-cell i
};

bool is_interior_face(int n, PairSet face);
AbstractTightSpan abstract_tight_span(const Triangulation& t);

struct Fingerprint {
    int dim = 0;
    int f = 0;                 // facets of the 3-cell, 0 in dimension 2
    std::array<int, 4> R{};    // r_3..r_6
    std::array<int, 4> B{};    // b_3..b_6
    std::array<int, 2> S{};    // (s_2, s_3)
    std::array<int, 2> C{};    // (c_5, c_6)
    int cubics = 0;
    int g = 0;
    int t = 0;                 // classes sharing the rendered string; catalog level
    SPVector sp;

    /// "R B S C gt" in single digits (a = 10) for dimension 3; "(b3,b4,b5),g,c"
    /// for dimension 2.
    std::string to_string() const;
    /// The string without the t digit; classes sharing it are counted by t.
    std::string key() const;
};

struct ClassInfo {
    Triangulation canonical;
    int g = 0;
    long orbit = 0;
    bool regular = false;
    std::optional<Metric> witness;
    Fingerprint fingerprint;
    int facet_count = 0;  // secondary cone, regular classes
    int ray_count = 0;
    int type = 0;         // 1-based after numbering
};

/// All invariants of one class. Regular classes are measured on the tight
/// span of the regularity witness; non-regular ones on the abstract tight
/// span, with S read off the rays of their lower-dimensional cone.
ClassInfo analyze_class(const Triangulation& canonical, int g);

/// Fingerprint pieces from a combinatorial complex (realized or abstract).
void fill_census(Fingerprint& fp, const CellComplex& contracted);

struct ClassCatalog {
    int n = 0;
    std::vector<ClassInfo> classes;  // in type order
    long explored = 0;               // triangulations generated by flips

    long regular_total() const;
    long nonregular_total() const;
    int regular_classes() const;
    int nonregular_classes() const;
};

/// Representative metrics (flat format) of the twelve two-dimensional
/// regular types of six points, in type order.
const std::array<std::string, 12>& two_dimensional_representatives();

/// Orders classes: regular before non-regular, 2-dimensional before
/// 3-dimensional, then by the invariant vector, ties broken by the canonical
/// form. For six points the twelve two-dimensional regular classes are
/// instead numbered by their representative metrics. Assigns `type` and the
/// t values.
void number_types(std::vector<ClassInfo>& classes);

struct EnumerationOptions {
    int jobs = 1;
    std::string checkpoint;  // written every `checkpoint_every` explored states
    std::string resume;      // checkpoint to continue from
    long checkpoint_every = 1000;
    std::function<void(const std::string&)> progress;
};

/// Breadth-first search of the flip graph on canonical forms, then
/// per-class analysis (in parallel with options.jobs threads) and type
/// numbering. The result does not depend on the thread count.
ClassCatalog enumerate_classes(int n, const Triangulation& seed, const EnumerationOptions& options = {});

/// Δ_d for the first two-dimensional representative metric, used as the
/// default seed for six points; for other n, Δ_d of a fixed generic metric.
Triangulation default_seed(int n);

}  // namespace tightspan
