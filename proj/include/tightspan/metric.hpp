#pragma once

// Finite metrics on {0, ..., n-1} stored as a flat vector over unordered
// pairs in lexicographic order (0,1),(0,2),...,(0,n-1),(1,2),...,(n-2,n-1).
// Textual interfaces use 1-based point labels.

#include "tightspan/rational.hpp"

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tightspan {

/// Bitmask over pair indices. Supports up to 11 points.
using PairSet = std::uint64_t;
/// Bitmask over points.
using PointSet = std::uint32_t;

inline constexpr int kMaxPoints = 11;

constexpr int pair_count(int n) { return n * (n - 1) / 2; }

/// Linear index of the pair {i, j}, i != j, 0-based.
constexpr int pair_index(int n, int i, int j) {
    if (i > j) std::swap(i, j);
    return i * (2 * n - i - 1) / 2 + (j - i - 1);
}

struct Pair {
    int i;
    int j;
    friend bool operator==(const Pair&, const Pair&) = default;
};

/// Inverse of pair_index.
Pair pair_at(int n, int k);

/// Point count n with pair_count(n) == m, if any.
std::optional<int> points_for_pair_count(std::size_t m);

/// "ij" with 1-based labels, e.g. pair (0,4) -> "15". Labels above 9 use
/// letters (a = 10).
std::string pair_label(int n, int k);
/// Inverse of pair_label.
int parse_pair_label(int n, std::string_view label);

/// A bijection of {0, ..., n-1}; `image[i]` is the image of i.
class Permutation {
public:
    explicit Permutation(std::vector<int> image);
    static Permutation identity(int n);
    static Permutation transposition(int n, int a, int b);

    int size() const { return static_cast<int>(image_.size()); }
    int operator()(int i) const { return image_[i]; }
    const std::vector<int>& image() const { return image_; }

    /// (this ∘ other)(i) = this(other(i)).
    Permutation compose(const Permutation& other) const;
    Permutation inverse() const;

    /// Induced action on pair indices: pair k = {i,j} maps to {σi, σj}.
    std::vector<int> pair_action() const;
    PairSet apply(PairSet s) const;
    PointSet apply_points(PointSet s) const;

    friend bool operator==(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> image_;
};

/// All n! permutations in lexicographic order of their image arrays.
std::vector<Permutation> all_permutations(int n);

/// A bipartition {A, complement}; stored by the side containing point 0.
class Split {
public:
    Split(int n, PointSet side);
    int points() const { return n_; }
    PointSet side() const { return side_; }
    PointSet complement() const { return full() & ~side_; }
    bool contains(int i) const { return (side_ >> i) & 1u; }
    /// Size of the smaller part (1 for 1/5 splits, 2 for 2/4 ...).
    int small_size() const;
    /// "123|456" with 1-based labels.
    std::string to_string() const;
    Split permuted(const Permutation& p) const;

    /// Every split of {0,...,n-1}: 2^(n-1) - 1 of them, ordered by mask.
    static std::vector<Split> all(int n);

    friend bool operator==(const Split&, const Split&) = default;
    friend auto operator<=>(const Split& a, const Split& b) { return a.side_ <=> b.side_; }

private:
    PointSet full() const { return (PointSet{1} << n_) - 1; }
    int n_;
    PointSet side_;
};

class Metric {
public:
    Metric(int n, RationalVector entries);
    static Metric zero(int n);
    static Metric from_integers(int n, std::span<const long> entries);

    int points() const { return n_; }
    std::size_t size() const { return d_.size(); }
    const Rational& operator[](int k) const { return d_[k]; }
    /// Distance between points i and j (0-based); zero on the diagonal.
    Rational operator()(int i, int j) const;
    const RationalVector& entries() const { return d_; }

    friend bool operator==(const Metric&, const Metric&) = default;

private:
    int n_;
    RationalVector d_;
};

struct TriangleViolation {
    int i;  // d(i,j) + d(j,k) < d(i,k); 0-based
    int j;
    int k;
};

struct MetricCheck {
    bool ok = true;
    std::vector<int> negative_pairs;
    std::vector<TriangleViolation> violations;
};

/// Nonnegativity and every triangle inequality, checked exactly.
MetricCheck is_metric(const Metric& d);

/// The metric that is 1 across the bipartition and 0 inside each part.
Metric split_metric(const Split& s);

/// e with e(σi, σj) = d(i, j).
Metric apply_permutation(const Metric& d, const Permutation& sigma);

/// n(n-1)/2 whitespace-separated rationals; see parse_rational.
Metric parse_metric(std::string_view text, int n);
/// Inverse of parse_metric.
std::string format_metric(const Metric& d);

/// n lines of n entries; symmetry and a zero diagonal are validated.
Metric parse_matrix(std::string_view text);

enum class MetricFormat { Auto, Flat, Matrix };

/// Reads a metric file. Flat: one metric per line, '#' starts a comment line,
/// blank lines ignored, point count inferred per line. Matrix: one square
/// matrix. Auto picks Matrix when the lines form a symmetric k x k block with
/// zero diagonal, otherwise Flat.
std::vector<Metric> read_metric_file(std::istream& in, MetricFormat format = MetricFormat::Auto);
std::vector<Metric> read_metric_file(const std::string& path, MetricFormat format = MetricFormat::Auto);

}  // namespace tightspan
