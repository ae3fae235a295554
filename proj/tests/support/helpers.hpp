#pragma once

#include "fixtures.hpp"

#include "tightspan/classification.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <thread>
#include <string>
#include <vector>

namespace helpers {

using namespace tightspan;

inline Metric metric_of(const std::array<long, 15>& a) { return Metric::from_integers(6, a); }

inline IntVector int_vector(const std::array<long, 15>& a) {
    IntVector v;
    for (long x : a) v.emplace_back(x);
    return v;
}

inline Metric representative(int type) {
    return parse_metric(fixtures::two_dimensional_types().at(type - 1).metric, 6);
}

inline Triangulation triangulation_of(const Metric& d) { return as_triangulation(regular_subdivision(d)); }

/// "15 26 34" -> pair set; a repeated label is ignored.
inline PairSet pairs(const std::string& labels, int n = 6) {
    PairSet s = 0;
    std::size_t i = 0;
    while (i < labels.size()) {
        if (labels[i] == ' ') {
            ++i;
            continue;
        }
        s |= PairSet{1} << parse_pair_label(n, labels.substr(i, 2));
        i += 2;
    }
    return s;
}

/// "12 25" >= "15" as an integer row over the pairs.
inline IntVector inequality_row(const std::string& lhs, const std::string& rhs, int n = 6) {
    IntVector row(pair_count(n), Integer(0));
    auto add = [&](const std::string& side, int sign) {
        for (std::size_t i = 0; i + 1 < side.size() + 1; i += 3) row[parse_pair_label(n, side.substr(i, 2))] += sign;
    };
    add(lhs, 1);
    add(rhs, -1);
    return row;
}

inline IntVector permute_vector(const IntVector& v, const Permutation& sigma) {
    auto act = sigma.pair_action();
    IntVector out(v.size());
    for (std::size_t k = 0; k < v.size(); ++k) out[act[k]] = v[k];
    return out;
}

/// Whether some relabeling maps every listed vector into `rays`.
inline bool contained_up_to_relabeling(const std::vector<IntVector>& listed, const std::vector<IntVector>& rays,
                                       int n = 6) {
    std::set<IntVector> have(rays.begin(), rays.end());
    for (const auto& sigma : all_permutations(n)) {
        bool all = std::all_of(listed.begin(), listed.end(),
                               [&](const IntVector& v) { return have.count(permute_vector(v, sigma)) > 0; });
        if (all) return true;
    }
    return false;
}

inline std::vector<std::string> fingerprint_table() {
    std::ifstream in(std::string(TEST_DATA_DIR) + "/fingerprints_3d.txt");
    std::vector<std::string> out;
    std::string line;
    while (std::getline(in, line))
        if (!line.empty()) out.push_back(line);
    return out;
}

/// The six-point catalog, enumerated once per process.
inline const ClassCatalog& six_point_catalog() {
    static const ClassCatalog catalog = [] {
        EnumerationOptions opt;
        opt.jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
        return enumerate_classes(6, default_seed(6), opt);
    }();
    return catalog;
}

inline const ClassInfo& type(int k) { return six_point_catalog().classes.at(k - 1); }

}  // namespace helpers
