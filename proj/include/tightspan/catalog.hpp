#pragma once

// Class catalogs as JSON lines (one class per line) and their independent
// re-verification.

#include "tightspan/classification.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace tightspan {

std::string catalog_line(const ClassInfo& c);
ClassInfo parse_catalog_line(std::string_view line, int n);

void write_catalog(std::ostream& out, const ClassCatalog& catalog);
void write_catalog(const std::string& path, const ClassCatalog& catalog);

/// Throws ParseError on malformed lines.
ClassCatalog read_catalog(std::istream& in);
ClassCatalog read_catalog(const std::string& path);

/// Histogram of counts: entry i is the number of classes with value lo + i.
struct Histogram {
    int lo = 0;
    std::vector<int> counts;
};

struct FanStatistics {
    Histogram facets;  // over regular classes
    Histogram rays;
    int simplicial = 0;          // regular classes with facets == rays == dimension
    int ray_classes = 0;         // rays of all regular cones up to permutation
    int unknown_rays = 0;        // rays matching no prime representative (n = 6)
};

/// Recomputes the secondary cones of the regular classes.
FanStatistics fan_statistics(const ClassCatalog& catalog, int jobs = 1);

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct CatalogVerification {
    std::vector<CheckResult> checks;
    FanStatistics stats;
    bool ok() const;
};

/// Re-derives every class from its canonical cells (canonical form,
/// stabilizer, regularity, witness, cone, fingerprint), then checks totals
/// and, for n <= 6, the known class counts and cone histograms.
CatalogVerification verify_catalog(const ClassCatalog& catalog, int jobs = 1);

}  // namespace tightspan
