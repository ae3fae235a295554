#include "tightspan/cell_complex.hpp"

#include <algorithm>

namespace tightspan {

std::vector<int> CellComplex::fvector() const {
    std::vector<int> f;
    for (const auto& level : faces) f.push_back(static_cast<int>(level.size()));
    return f;
}

const std::vector<VertexList>& CellComplex::of_dim(int k) const {
    static const std::vector<VertexList> none;
    return k >= 0 && k < static_cast<int>(faces.size()) ? faces[k] : none;
}

int CellComplex::euler_characteristic() const {
    int chi = 0, sign = 1;
    for (const auto& level : faces) {
        chi += sign * static_cast<int>(level.size());
        sign = -sign;
    }
    return chi;
}

std::vector<std::array<int, 2>> CellComplex::edges() const {
    std::vector<std::array<int, 2>> out;
    for (const auto& e : of_dim(1)) out.push_back({e[0], e[1]});
    return out;
}

std::vector<int> CellComplex::degrees() const {
    std::vector<int> deg(vertex_count(), 0);
    for (const auto& e : of_dim(1)) {
        ++deg[e[0]];
        ++deg[e[1]];
    }
    return deg;
}

bool contains(const VertexList& big, const VertexList& small) {
    return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

std::vector<int> subfaces(const CellComplex& c, const VertexList& face, int k) {
    std::vector<int> out;
    const auto& level = c.of_dim(k);
    for (std::size_t i = 0; i < level.size(); ++i)
        if (contains(face, level[i])) out.push_back(static_cast<int>(i));
    return out;
}

int PolygonCensus::polygons() const {
    int total = 0;
    for (int v : on_cell) total += v;
    for (int v : off_cell) total += v;
    return total;
}

PolygonCensus polygon_census(const CellComplex& c) {
    if (c.dimension() > 3) throw CensusError("complex has cells of dimension > 3");
    const auto& cells = c.of_dim(3);
    if (cells.size() > 1) throw CensusError("not a generic six-point tight span: more than one 3-cell");
    PolygonCensus census;
    for (const auto& poly : c.of_dim(2)) {
        int edges = static_cast<int>(subfaces(c, poly, 1).size());
        bool on = !cells.empty() && contains(cells.front(), poly);
        auto& bucket = on ? census.on_cell : census.off_cell;
        if (static_cast<int>(bucket.size()) <= edges) bucket.resize(edges + 1, 0);
        ++bucket[edges];
    }
    return census;
}

ThreeCellStats three_cell_stats(const CellComplex& c) {
    const auto& cells = c.of_dim(3);
    if (cells.size() != 1) throw CensusError("expected exactly one 3-cell");
    const auto& cell = cells.front();
    ThreeCellStats s;
    auto facets = subfaces(c, cell, 2);
    s.facets = static_cast<int>(facets.size());
    s.vertices = static_cast<int>(cell.size());
    s.edges = static_cast<int>(subfaces(c, cell, 1).size());
    s.simple = std::all_of(cell.begin(), cell.end(), [&](int v) {
        int count = 0;
        for (int f : facets)
            if (std::binary_search(c.faces[2][f].begin(), c.faces[2][f].end(), v)) ++count;
        return count == 3;
    });
    return s;
}

int polygons_at(const CellComplex& c, int v) {
    int count = 0;
    for (const auto& poly : c.of_dim(2))
        if (std::binary_search(poly.begin(), poly.end(), v)) ++count;
    return count;
}

char count_digit(int v) {
    if (v < 0) throw std::invalid_argument("negative count");
    if (v < 10) return static_cast<char>('0' + v);
    if (v < 36) return static_cast<char>('a' + (v - 10));
    throw std::invalid_argument("count too large for a single digit");
}

std::string digit_string(const std::vector<int>& counts) {
    std::string out;
    for (int v : counts) out += count_digit(v);
    return out;
}

}  // namespace tightspan
