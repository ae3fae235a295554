#pragma once

// Spring embedding of the 2-skeleton of a tight span and its export as
// tightspan-v1 JSON or OFF.

#include "tightspan/tight_span.hpp"

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace tightspan {

struct EmbeddedSkeleton {
    std::vector<std::array<double, 3>> positions;
    std::vector<std::array<int, 2>> edges;
    std::vector<VertexList> polygons;  // vertex cycles
    std::vector<std::string> labels;   // per vertex: taxon labels, comma separated, or empty
    std::vector<bool> exterior;        // per edge
};

/// Vertices of a 2-face in cyclic order.
VertexList polygon_cycle(const CellComplex& c, const VertexList& face);

/// Force-directed layout: unit-length springs on the edges, inverse-square
/// repulsion between all vertex pairs, start on the unit sphere from a
/// seeded generator. Deterministic for a fixed seed.
EmbeddedSkeleton spring_embed(const TightSpan& t, std::uint64_t seed, int iterations = 500);

/// tightspan-v1 JSON: exact coordinates as strings, every face, taxa,
/// exterior flags, and the embedding.
std::string export_json(const TightSpan& t, const EmbeddedSkeleton& e, const Metric& d);

struct ImportedTightSpan {
    TightSpan span;
    Metric metric = Metric::zero(2);
    std::vector<std::array<double, 3>> positions;
};

/// Throws ParseError on malformed input.
ImportedTightSpan import_json(std::string_view text);

/// ASCII OFF: vertices at the embedded positions, polygons as faces, and
/// edges on no polygon as two-vertex faces.
std::string export_off(const EmbeddedSkeleton& e);

}  // namespace tightspan
