#pragma once

// Split decomposition of a metric: isolation indices of all splits, the
// split-prime residue, and a cross-check against the secondary cone of Δ_d.

#include "tightspan/lp.hpp"
#include "tightspan/metric.hpp"
#include "tightspan/metric_fan.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace tightspan {

/// α_d(A,B) = 1/2 min over i,j in A and k,l in B (repetitions allowed) of
/// max(d_ik + d_jl, d_il + d_jk, d_ij + d_kl) - d_ij - d_kl.
Rational isolation_index(const Metric& d, const Split& s);

struct WeightedSplitSystem {
    int n = 0;
    std::vector<std::pair<Split, Rational>> weights;  // positive weights, ordered by split
    Metric residual = Metric::zero(2);

    Metric split_part() const;
};

/// Throws std::invalid_argument unless d is a metric, and std::logic_error
/// if the residue fails to be a metric.
WeightedSplitSystem split_decompose(const Metric& d);

/// Whether d has no split with positive isolation index.
bool is_split_prime(const Metric& d);

/// Splits whose split metric is a ray of the cone, by ray index.
std::vector<std::pair<Split, int>> split_rays(const SecondaryCone& c);

struct FanSplitReport {
    std::vector<Split> cone_splits;      // split rays of the secondary cone of Δ_d
    std::vector<Split> support;          // splits with positive weight
    std::vector<Split> missing;          // support \ cone_splits
    std::vector<IntVector> prime_rays;   // the non-split rays
    bool residue_expressible = false;
    RationalVector coefficients;         // residue = Σ coefficients[i] · prime_rays[i]
    std::optional<InfeasibilityCertificate> certificate;

    bool ok() const { return missing.empty() && residue_expressible; }
};

/// Requires Δ_d to be a triangulation (std::invalid_argument otherwise).
FanSplitReport fan_split_check(const Metric& d);

}  // namespace tightspan
