#include "tightspan/classification.hpp"

#include "tightspan/linalg.hpp"
#include "tightspan/parallel.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <bit>
#include <fstream>
#include <cstdio>
#include <map>
#include <mutex>
#include <random>
#include <set>
#include <thread>

namespace tightspan {

namespace {

std::vector<PairSet> link_of(const Triangulation& t, PairSet face) {
    std::vector<PairSet> link;
    for (PairSet s : t.simplices)
        if ((s & face) == face) link.push_back(s & ~face);
    std::sort(link.begin(), link.end());
    return link;
}

}  // namespace

std::vector<Triangulation> flips(const Triangulation& t) {
    const int n = t.n;
    std::set<PairSet> seen_circuits;
    std::vector<Triangulation> out;
    for (auto [a, b] : interior_walls(t)) {
        const PairSet s1 = t.simplices[a], s2 = t.simplices[b];
        const PairSet u = s1 | s2;
        IntVector row = wall_inequality(n, s1, s2);  // apex entries negative
        PairSet neg = 0, pos = 0;
        for (int k = 0; k < pair_count(n); ++k) {
            if (sgn(row[k]) < 0) neg |= PairSet{1} << k;
            if (sgn(row[k]) > 0) pos |= PairSet{1} << k;
        }
        const PairSet z = neg | pos;
        if ((z & ~u) != 0) throw std::logic_error("flips: circuit outside the wall");
        if (!seen_circuits.insert(z).second) continue;

        const auto link = link_of(t, z & ~(s2 & ~s1));
        bool flippable = true;
        for (PairSet r = neg; r && flippable; r &= r - 1)
            if (link_of(t, z & ~(r & -r)) != link) flippable = false;
        if (!flippable) continue;

        std::vector<PairSet> simplices;
        std::set<PairSet> removed;
        for (PairSet r = neg; r; r &= r - 1)
            for (PairSet l : link) removed.insert((z & ~(r & -r)) | l);
        for (PairSet s : t.simplices)
            if (!removed.count(s)) simplices.push_back(s);
        for (PairSet r = pos; r; r &= r - 1)
            for (PairSet l : link) simplices.push_back((z & ~(r & -r)) | l);
        std::sort(simplices.begin(), simplices.end());
        out.push_back({n, std::move(simplices)});
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Canonicalizer::Canonicalizer(int n) : n_(n), perms_(all_permutations(n)) {
    const int m = pair_count(n);
    chunks_ = (m + 7) / 8;
    table_.assign(perms_.size() * chunks_ * 256, 0);
    for (std::size_t p = 0; p < perms_.size(); ++p) {
        auto act = perms_[p].pair_action();
        for (int c = 0; c < chunks_; ++c)
            for (int byte = 0; byte < 256; ++byte) {
                PairSet img = 0;
                for (int bit = 0; bit < 8; ++bit) {
                    int k = c * 8 + bit;
                    if (((byte >> bit) & 1) && k < m) img |= PairSet{1} << act[k];
                }
                table_[(p * chunks_ + c) * 256 + byte] = img;
            }
    }
}

PairSet Canonicalizer::apply(std::size_t perm, PairSet s) const {
    PairSet img = 0;
    const PairSet* row = &table_[perm * chunks_ * 256];
    for (int c = 0; c < chunks_; ++c, s >>= 8) img |= row[c * 256 + (s & 0xff)];
    return img;
}

CanonicalTriangulation Canonicalizer::canonical(const Triangulation& t) const {
    if (t.n != n_) throw std::invalid_argument("canonicalizer: point count mismatch");
    std::vector<PairSet> best, img(t.simplices.size());
    int ties = 0;
    for (std::size_t p = 0; p < perms_.size(); ++p) {
        for (std::size_t i = 0; i < img.size(); ++i) img[i] = apply(p, t.simplices[i]);
        std::sort(img.begin(), img.end());
        if (best.empty() || img < best) {
            best = img;
            ties = 1;
        } else if (img == best) {
            ++ties;
        }
    }
    return {{n_, std::move(best)}, ties};
}

CanonicalTriangulation canonical_form(const Triangulation& t) {
    static std::mutex mu;
    static std::map<int, std::unique_ptr<Canonicalizer>> cache;
    const Canonicalizer* c;
    {
        std::lock_guard lock(mu);
        auto& slot = cache[t.n];
        if (!slot) slot = std::make_unique<Canonicalizer>(t.n);
        c = slot.get();
    }
    return c->canonical(t);
}

bool is_interior_face(int n, PairSet face) {
    const PointSet all = (PointSet{1} << n) - 1;
    if (cell_support(n, face) != all) return false;
    for (int i = 0; i < n; ++i) {
        bool star = true;
        for (PairSet r = face; r && star; r &= r - 1) {
            Pair p = pair_at(n, std::countr_zero(r));
            if (p.i != i && p.j != i) star = false;
        }
        if (star) return false;
    }
    return true;
}

AbstractTightSpan abstract_tight_span(const Triangulation& t) {
    const int n = t.n;
    AbstractTightSpan out;
    out.complex.faces.emplace_back();
    out.duals.emplace_back();
    for (std::size_t i = 0; i < t.simplices.size(); ++i) {
        out.complex.faces[0].push_back({static_cast<int>(i)});
        out.duals[0].push_back(t.simplices[i]);
    }
    for (int k = 1; k < n; ++k) {
        std::map<PairSet, VertexList> faces;
        for (std::size_t i = 0; i < t.simplices.size(); ++i) {
            const PairSet s = t.simplices[i];
            // subsets of s with n - k elements
            for (PairSet sub = s;; sub = (sub - 1) & s) {
                if (std::popcount(sub) == n - k && is_interior_face(n, sub)) faces[sub].push_back(static_cast<int>(i));
                if (sub == 0) break;
            }
        }
        if (faces.empty()) break;
        std::vector<std::pair<VertexList, PairSet>> level;
        for (auto& [face, verts] : faces) level.emplace_back(std::move(verts), face);
        std::sort(level.begin(), level.end());
        out.complex.faces.emplace_back();
        out.duals.emplace_back();
        for (auto& [verts, face] : level) {
            out.complex.faces[k].push_back(std::move(verts));
            out.duals[k].push_back(face);
        }
    }
    return out;
}

std::string Fingerprint::key() const {
    auto digits = [](auto const& arr) {
        std::string s;
        for (int v : arr) s += count_digit(v);
        return s;
    };
    if (dim == 3)
        return digits(R) + " " + digits(B) + " " + digits(S) + " " + digits(C) + " " + std::string(1, count_digit(g));
    return "(" + std::to_string(B[0]) + "," + std::to_string(B[1]) + "," + std::to_string(B[2]) + ")," +
           std::to_string(g) + "," + std::to_string(cubics);
}

std::string Fingerprint::to_string() const {
    if (dim == 3) return key() + count_digit(t);
    return key();
}

void fill_census(Fingerprint& fp, const CellComplex& contracted) {
    fp.dim = contracted.dimension();
    auto census = polygon_census(contracted);
    auto copy = [](const std::vector<int>& from, std::array<int, 4>& to) {
        to.fill(0);
        for (std::size_t i = 0; i < from.size(); ++i) {
            if (from[i] == 0) continue;
            if (i < 3 || i > 6) throw CensusError("polygon with " + std::to_string(i) + " edges");
            to[i - 3] = from[i];
        }
    };
    copy(census.on_cell, fp.R);
    copy(census.off_cell, fp.B);
    fp.f = fp.dim == 3 ? three_cell_stats(contracted).facets : 0;
}

ClassInfo analyze_class(const Triangulation& canonical, int g) {
    const int n = canonical.n;
    ClassInfo info;
    info.canonical = canonical;
    info.g = g;
    long group = 1;
    for (int i = 2; i <= n; ++i) group *= i;
    info.orbit = group / g;

    Fingerprint& fp = info.fingerprint;
    fp.g = g;
    auto ideal = stanley_reisner(canonical);
    fp.cubics = static_cast<int>(ideal.cubic_count());
    if (n == 6) {
        auto c = ideal.cubic_support_counts(n);
        fp.C = {c[5], c[6]};
    }

    auto reg = is_regular(canonical);
    info.regular = reg.regular;
    auto cone = secondary_cone(canonical);
    if (reg.regular) {
        info.witness = reg.witness;
        info.facet_count = static_cast<int>(cone.facets.size());
        info.ray_count = static_cast<int>(cone.rays.size());
        auto span = contract_exterior_segments(tight_span(*reg.witness));
        if (n == 6) {
            fill_census(fp, span.complex);
            fp.sp = sp_invariant(cone);
            fp.S = fp.sp.S;
        } else {
            fp.dim = span.complex.dimension();
        }
    } else {
        auto abstract = abstract_tight_span(canonical);
        if (n == 6) {
            fill_census(fp, abstract.complex);
            for (const auto& r : cone.rays) {
                auto canon = canonical_ray(n, r);
                for (const auto& rep : prime_representatives()) {
                    if (rep.type != PrimeType::Split24 && rep.type != PrimeType::Split33) continue;
                    IntVector v;
                    for (long x : rep.vector) v.emplace_back(x);
                    if (canonical_ray(n, v) == canon) ++fp.S[rep.type == PrimeType::Split24 ? 0 : 1];
                }
            }
        } else {
            fp.dim = abstract.complex.dimension();
        }
    }
    return info;
}

long ClassCatalog::regular_total() const {
    long s = 0;
    for (const auto& c : classes)
        if (c.regular) s += c.orbit;
    return s;
}

long ClassCatalog::nonregular_total() const {
    long s = 0;
    for (const auto& c : classes)
        if (!c.regular) s += c.orbit;
    return s;
}

int ClassCatalog::regular_classes() const {
    return static_cast<int>(std::count_if(classes.begin(), classes.end(), [](const auto& c) { return c.regular; }));
}

int ClassCatalog::nonregular_classes() const { return static_cast<int>(classes.size()) - regular_classes(); }

namespace {

std::vector<std::string> decimal(const std::array<int, 4>& a) {
    return {std::to_string(a[0]), std::to_string(a[1]), std::to_string(a[2]), std::to_string(a[3])};
}
std::vector<std::string> decimal(const std::array<int, 2>& a) { return {std::to_string(a[0]), std::to_string(a[1])}; }

std::vector<int> sp_key(const Fingerprint& fp) {
    std::vector<int> k{fp.sp.S[0], fp.sp.S[1]};
    k.insert(k.end(), fp.sp.P.begin(), fp.sp.P.end());
    return k;
}

bool type_less(const ClassInfo& a, const ClassInfo& b) {
    const auto& x = a.fingerprint;
    const auto& y = b.fingerprint;
    if (a.regular != b.regular) return a.regular;
    if (x.dim != y.dim) return x.dim < y.dim;
    if (x.dim == 3) {
        // Counts compare as decimal strings, so 10, 11, 12 precede 2..9.
        auto kx = std::tie(x.f);
        auto ky = std::tie(y.f);
        if (kx != ky) return kx < ky;
        if (decimal(x.R) != decimal(y.R)) return decimal(x.R) < decimal(y.R);
        if (decimal(x.B) != decimal(y.B)) return decimal(x.B) < decimal(y.B);
        if (a.regular) {
            if (decimal(x.S) != decimal(y.S)) return decimal(x.S) < decimal(y.S);
            if (decimal(x.C) != decimal(y.C)) return decimal(x.C) < decimal(y.C);
            if (x.g != y.g) return x.g < y.g;
        } else {
            if (x.g != y.g) return x.g < y.g;
            if (decimal(x.C) != decimal(y.C)) return decimal(x.C) < decimal(y.C);
            if (decimal(x.S) != decimal(y.S)) return decimal(x.S) < decimal(y.S);
        }
    } else {
        if (x.B != y.B) return x.B < y.B;
        if (x.g != y.g) return x.g < y.g;
        if (x.cubics != y.cubics) return x.cubics < y.cubics;
    }
    if (sp_key(x) != sp_key(y)) return sp_key(x) < sp_key(y);
    return a.canonical < b.canonical;
}

}  // namespace

const std::array<std::string, 12>& two_dimensional_representatives() {
    static const std::array<std::string, 12> reps{
        "9 9 10 13 18 18 17 6 11 17 14 9 11 8 17", "8 8 8 14 15 16 14 6 9 12 12 7 8 7 13",
        "5 6 7 8 12 11 10 5 7 11 6 6 7 5 10",      "7 5 7 12 12 12 12 5 7 10 9 7 7 5 10",
        "6 7 8 10 14 13 12 6 8 13 9 7 6 6 10",     "7 7 7 11 14 12 12 6 7 14 10 7 6 7 11",
        "5 5 5 8 10 10 8 5 5 8 5 5 5 5 8",         "5 5 7 10 11 10 10 5 8 10 7 6 5 4 7",
        "7 7 8 10 14 14 13 5 9 13 9 7 10 6 14",    "5 4 5 8 9 7 8 3 6 9 6 5 5 4 7",
        "4 5 5 8 9 9 7 4 7 8 5 4 5 4 7",           "3 3 5 6 6 6 6 3 5 6 5 3 3 3 6",
    };
    return reps;
}

void number_types(std::vector<ClassInfo>& classes) {
    std::sort(classes.begin(), classes.end(), type_less);
    // The two-dimensional regular types of six points are identified by
    // their representative metrics; everything else follows the sort order.
    if (!classes.empty() && classes.front().canonical.n == 6) {
        std::vector<ClassInfo> anchored;
        for (const auto& text : two_dimensional_representatives()) {
            auto form = canonical_form(as_triangulation(regular_subdivision(parse_metric(text, 6)))).form;
            auto it = std::find_if(classes.begin(), classes.end(), [&](const ClassInfo& c) { return c.canonical == form; });
            if (it == classes.end()) {
                anchored.clear();
                break;
            }
            anchored.push_back(*it);
        }
        if (!anchored.empty()) {
            std::vector<ClassInfo> rest;
            for (auto& c : classes)
                if (std::none_of(anchored.begin(), anchored.end(),
                                 [&](const ClassInfo& a) { return a.canonical == c.canonical; }))
                    rest.push_back(std::move(c));
            classes = std::move(anchored);
            classes.insert(classes.end(), std::make_move_iterator(rest.begin()), std::make_move_iterator(rest.end()));
        }
    }
    std::map<std::tuple<bool, int, std::string>, int> shared;
    for (const auto& c : classes) ++shared[{c.regular, c.fingerprint.dim, c.fingerprint.key()}];
    for (std::size_t i = 0; i < classes.size(); ++i) {
        classes[i].type = static_cast<int>(i) + 1;
        auto& fp = classes[i].fingerprint;
        fp.t = shared[{classes[i].regular, fp.dim, fp.key()}];
    }
}

Triangulation default_seed(int n) {
    if (n == 6) {
        auto d = parse_metric(two_dimensional_representatives().front(), 6);
        return as_triangulation(regular_subdivision(d));
    }
    std::mt19937 rng(12345);
    std::uniform_int_distribution<int> dist(10, 19);
    for (;;) {
        RationalVector v(pair_count(n));
        for (auto& x : v) x = dist(rng);
        Metric d(n, std::move(v));
        auto s = regular_subdivision(d);
        if (is_triangulation(s)) return as_triangulation(s);
    }
}

namespace {

using nlohmann::json;

struct SearchState {
    std::map<Triangulation, int> visited;  // canonical form -> g
    std::set<Triangulation> expanded;
    long explored = 0;
};

json cells_json(const Triangulation& t) {
    json cells = json::array();
    for (PairSet s : t.simplices) cells.push_back(format_cell(t.n, s));
    return cells;
}

Triangulation cells_from_json(int n, const json& cells) {
    Triangulation t{n, {}};
    for (const auto& c : cells) t.simplices.push_back(parse_cell(n, c.get<std::string>()));
    std::sort(t.simplices.begin(), t.simplices.end());
    return t;
}

void write_checkpoint(const std::string& path, int n, const SearchState& st) {
    json j;
    j["format"] = "tightspan-checkpoint-v1";
    j["n"] = n;
    j["explored"] = st.explored;
    j["classes"] = json::array();
    for (const auto& [t, g] : st.visited)
        j["classes"].push_back({{"cells", cells_json(t)}, {"g", g}, {"expanded", st.expanded.count(t) > 0}});
    std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp);
        if (!out) throw std::runtime_error("cannot write checkpoint " + tmp);
        out << j.dump() << "\n";
    }
    std::rename(tmp.c_str(), path.c_str());
}

SearchState read_checkpoint(const std::string& path, int n) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open checkpoint " + path);
    json j = json::parse(in);
    if (j.value("format", "") != "tightspan-checkpoint-v1" || j.at("n").get<int>() != n)
        throw std::runtime_error("checkpoint " + path + " does not match this run");
    SearchState st;
    st.explored = j.at("explored").get<long>();
    for (const auto& c : j.at("classes")) {
        auto t = cells_from_json(n, c.at("cells"));
        st.visited[t] = c.at("g").get<int>();
        if (c.at("expanded").get<bool>()) st.expanded.insert(t);
    }
    return st;
}

}  // namespace

ClassCatalog enumerate_classes(int n, const Triangulation& seed, const EnumerationOptions& options) {
    if (!is_triangulation(n, seed.simplices) || seed.n != n)
        throw std::invalid_argument("enumerate_classes: seed is not a triangulation of the hypersimplex");
    Canonicalizer canon(n);
    SearchState st;
    if (!options.resume.empty()) {
        st = read_checkpoint(options.resume, n);
    } else {
        auto c = canon.canonical(seed);
        st.visited[c.form] = c.g;
    }
    long next_checkpoint = (st.explored / options.checkpoint_every + 1) * options.checkpoint_every;

    for (;;) {
        std::vector<Triangulation> frontier;
        for (const auto& [t, g] : st.visited)
            if (!st.expanded.count(t)) frontier.push_back(t);
        if (frontier.empty()) break;
        // Expand in bounded batches so checkpoints stay frequent.
        const std::size_t batch = std::max<std::size_t>(1, std::min<std::size_t>(frontier.size(), 64));
        frontier.resize(batch);
        std::vector<std::vector<CanonicalTriangulation>> found(frontier.size());
        parallel_for(frontier.size(), options.jobs, [&](std::size_t i) {
            for (const auto& nb : flips(frontier[i])) found[i].push_back(canon.canonical(nb));
        });
        for (std::size_t i = 0; i < frontier.size(); ++i) {
            st.expanded.insert(frontier[i]);
            for (auto& c : found[i]) {
                ++st.explored;
                st.visited.emplace(std::move(c.form), c.g);
            }
        }
        if (options.progress)
            options.progress("explored " + std::to_string(st.explored) + " states, " +
                             std::to_string(st.visited.size()) + " classes");
        if (!options.checkpoint.empty() && st.explored >= next_checkpoint) {
            write_checkpoint(options.checkpoint, n, st);
            next_checkpoint = (st.explored / options.checkpoint_every + 1) * options.checkpoint_every;
        }
    }
    if (!options.checkpoint.empty()) write_checkpoint(options.checkpoint, n, st);

    ClassCatalog cat;
    cat.n = n;
    cat.explored = st.explored;
    std::vector<std::pair<Triangulation, int>> reps(st.visited.begin(), st.visited.end());
    cat.classes.resize(reps.size());
    parallel_for(reps.size(), options.jobs,
                 [&](std::size_t i) { cat.classes[i] = analyze_class(reps[i].first, reps[i].second); });
    if (options.progress) options.progress("analyzed " + std::to_string(reps.size()) + " classes");
    number_types(cat.classes);
    return cat;
}

}  // namespace tightspan
