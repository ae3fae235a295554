#include "tightspan/embedding.hpp"

#include <json.hpp>

#include <cmath>
#include <random>
#include <set>
#include <sstream>

namespace tightspan {

using nlohmann::json;

VertexList polygon_cycle(const CellComplex& c, const VertexList& face) {
    std::vector<std::array<int, 2>> es;
    for (int i : subfaces(c, face, 1)) {
        const auto& e = c.of_dim(1)[i];
        es.push_back({e[0], e[1]});
    }
    VertexList cycle{face.front()};
    std::vector<bool> used(es.size(), false);
    while (true) {
        int cur = cycle.back();
        bool moved = false;
        for (std::size_t i = 0; i < es.size() && !moved; ++i) {
            if (used[i] || (es[i][0] != cur && es[i][1] != cur)) continue;
            used[i] = true;
            int next = es[i][0] == cur ? es[i][1] : es[i][0];
            if (next == cycle.front()) return cycle;
            cycle.push_back(next);
            moved = true;
        }
        if (!moved) throw CensusError("2-face is not bounded by a cycle");
    }
}

EmbeddedSkeleton spring_embed(const TightSpan& t, std::uint64_t seed, int iterations) {
    EmbeddedSkeleton out;
    const auto& c = t.complex;
    const int nv = c.vertex_count();
    out.edges = c.edges();
    if (c.dimension() >= 2)
        for (const auto& f : c.of_dim(2)) out.polygons.push_back(polygon_cycle(c, f));
    out.exterior = t.exterior;
    out.exterior.resize(out.edges.size(), false);
    out.labels.assign(nv, "");
    for (std::size_t k = 0; k < t.taxa.size(); ++k) {
        auto& l = out.labels[t.taxa[k]];
        l += (l.empty() ? "" : ",") + std::to_string(k + 1);
    }

    out.positions.assign(nv, {0.0, 0.0, 0.0});
    if (nv <= 1) return out;
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal(0.0, 1.0);
    for (auto& p : out.positions) {
        double len = 0;
        do {
            for (auto& x : p) x = normal(rng);
            len = std::sqrt(p[0] * p[0] + p[1] * p[1] + p[2] * p[2]);
        } while (len < 1e-9);
        for (auto& x : p) x /= len;
    }

    std::vector<std::array<double, 3>> force(nv);
    for (int it = 0; it < iterations; ++it) {
        for (auto& f : force) f = {0.0, 0.0, 0.0};
        for (int a = 0; a < nv; ++a)
            for (int b = a + 1; b < nv; ++b) {
                std::array<double, 3> delta;
                double d2 = 0;
                for (int k = 0; k < 3; ++k) {
                    delta[k] = out.positions[a][k] - out.positions[b][k];
                    d2 += delta[k] * delta[k];
                }
                d2 = std::max(d2, 1e-6);
                double dist = std::sqrt(d2);
                double push = 0.1 / d2;
                for (int k = 0; k < 3; ++k) {
                    force[a][k] += push * delta[k] / dist;
                    force[b][k] -= push * delta[k] / dist;
                }
            }
        for (const auto& e : out.edges) {
            std::array<double, 3> delta;
            double d2 = 0;
            for (int k = 0; k < 3; ++k) {
                delta[k] = out.positions[e[1]][k] - out.positions[e[0]][k];
                d2 += delta[k] * delta[k];
            }
            double dist = std::max(std::sqrt(d2), 1e-9);
            double pull = dist - 1.0;
            for (int k = 0; k < 3; ++k) {
                force[e[0]][k] += pull * delta[k] / dist;
                force[e[1]][k] -= pull * delta[k] / dist;
            }
        }
        double step = 0.1 * (1.0 - static_cast<double>(it) / iterations);
        for (int v = 0; v < nv; ++v) {
            double len = std::sqrt(force[v][0] * force[v][0] + force[v][1] * force[v][1] + force[v][2] * force[v][2]);
            double scale = len > 1.0 ? step / len : step;
            for (int k = 0; k < 3; ++k) out.positions[v][k] += scale * force[v][k];
        }
    }
    return out;
}

std::string export_json(const TightSpan& t, const EmbeddedSkeleton& e, const Metric& d) {
    json j;
    j["format"] = "tightspan-v1";
    j["n"] = t.n;
    j["metric"] = format_metric(d);
    json verts = json::array();
    for (std::size_t v = 0; v < t.coords.size(); ++v) {
        json coords = json::array();
        for (const auto& x : t.coords[v]) coords.push_back(to_string(x));
        json pairs = json::array();
        for (int k = 0; k < pair_count(t.n); ++k)
            if ((t.vertex_pairs[v] >> k) & 1u) pairs.push_back(pair_label(t.n, k));
        verts.push_back({{"coords", coords}, {"pairs", pairs}, {"position", e.positions.at(v)}, {"label", e.labels.at(v)}});
    }
    j["vertices"] = verts;
    j["faces"] = t.complex.faces;
    j["edges"] = e.edges;
    j["polygons"] = e.polygons;
    j["taxa"] = t.taxa;
    j["exterior"] = e.exterior;
    j["contracted"] = t.contracted;
    j["tree_like"] = t.tree_like;
    return j.dump(1);
}

ImportedTightSpan import_json(std::string_view text) {
    try {
        auto j = json::parse(text);
        if (j.value("format", "") != "tightspan-v1") throw ParseError("not a tightspan-v1 document", 0);
        ImportedTightSpan out;
        auto& t = out.span;
        t.n = j.at("n").get<int>();
        out.metric = parse_metric(j.at("metric").get<std::string>(), t.n);
        std::size_t pos = 0;
        for (const auto& v : j.at("vertices")) {
            RationalVector coords;
            for (const auto& x : v.at("coords")) coords.push_back(parse_rational(x.get<std::string>(), pos++));
            PairSet pairs = 0;
            for (const auto& p : v.at("pairs")) pairs |= PairSet{1} << parse_pair_label(t.n, p.get<std::string>());
            t.coords.push_back(std::move(coords));
            t.vertex_pairs.push_back(pairs);
            out.positions.push_back(v.at("position").get<std::array<double, 3>>());
        }
        t.complex.faces = j.at("faces").get<std::vector<std::vector<VertexList>>>();
        t.taxa = j.at("taxa").get<std::vector<int>>();
        t.exterior = j.at("exterior").get<std::vector<bool>>();
        t.contracted = j.value("contracted", false);
        t.tree_like = j.value("tree_like", false);
        int nv = t.complex.vertex_count();
        if (static_cast<int>(t.coords.size()) != nv) throw ParseError("vertex count does not match faces", 0);
        for (const auto& dim : t.complex.faces)
            for (const auto& f : dim)
                for (int v : f)
                    if (v < 0 || v >= nv) throw ParseError("face index out of range", 0);
        return out;
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad tightspan-v1 document: ") + e.what(), 0);
    }
}

std::string export_off(const EmbeddedSkeleton& e) {
    std::set<std::array<int, 2>> on_polygon;
    for (const auto& p : e.polygons)
        for (std::size_t i = 0; i < p.size(); ++i) {
            int a = p[i], b = p[(i + 1) % p.size()];
            on_polygon.insert({std::min(a, b), std::max(a, b)});
        }
    std::vector<VertexList> faces = e.polygons;
    for (const auto& ed : e.edges)
        if (!on_polygon.count(ed)) faces.push_back({ed[0], ed[1]});

    std::ostringstream out;
    out.precision(9);
    out << "OFF\n" << e.positions.size() << ' ' << faces.size() << ' ' << e.edges.size() << '\n';
    for (const auto& p : e.positions) out << p[0] << ' ' << p[1] << ' ' << p[2] << '\n';
    for (const auto& f : faces) {
        out << f.size();
        for (int v : f) out << ' ' << v;
        out << '\n';
    }
    return out.str();
}

}  // namespace tightspan
