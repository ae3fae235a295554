#include "tightspan/catalog.hpp"

#include "tightspan/parallel.hpp"

#include <json.hpp>

#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace tightspan {

using nlohmann::json;

namespace {

template <std::size_t N>
std::array<int, N> to_array(const json& j) {
    std::array<int, N> a{};
    if (j.size() != N) throw ParseError("array of length " + std::to_string(N) + " expected", 0);
    for (std::size_t i = 0; i < N; ++i) a[i] = j[i].get<int>();
    return a;
}

long factorial(int n) {
    long f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

struct KnownCounts {
    int regular_classes, nonregular_classes;
    long regular_total, nonregular_total;
};

std::optional<KnownCounts> known_counts(int n) {
    switch (n) {
        case 4: return KnownCounts{1, 0, 3, 0};
        case 5: return KnownCounts{3, 0, 102, 0};
        case 6: return KnownCounts{339, 14, 194160, 3840};
        default: return std::nullopt;
    }
}

std::string join(const std::vector<int>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s;
}

void bump(Histogram& h, int value) {
    if (h.counts.empty()) h.lo = value;
    if (value < h.lo) {
        h.counts.insert(h.counts.begin(), h.lo - value, 0);
        h.lo = value;
    }
    if (value - h.lo >= static_cast<int>(h.counts.size())) h.counts.resize(value - h.lo + 1, 0);
    ++h.counts[value - h.lo];
}

}  // namespace

std::string catalog_line(const ClassInfo& c) {
    const auto& fp = c.fingerprint;
    json cells = json::array();
    for (PairSet s : c.canonical.simplices) cells.push_back(format_cell(c.canonical.n, s));
    json j;
    j["type"] = c.type;
    j["n"] = c.canonical.n;
    j["canonical_cells"] = cells;
    j["regular"] = c.regular;
    j["g"] = c.g;
    j["orbit"] = c.orbit;
    j["dimension"] = fp.dim;
    j["fingerprint"] = {{"string", fp.to_string()}, {"f", fp.f},           {"R", fp.R},
                        {"B", fp.B},                {"S", fp.S},           {"C", fp.C},
                        {"cubics", fp.cubics},      {"t", fp.t},           {"splits15", fp.sp.splits15},
                        {"P", fp.sp.P}};
    j["facets"] = c.facet_count;
    j["rays"] = c.ray_count;
    if (c.witness) j["witness_metric"] = format_metric(*c.witness);
    return j.dump();
}

ClassInfo parse_catalog_line(std::string_view line, int n) {
    json j;
    try {
        j = json::parse(line);
    } catch (const json::exception& e) {
        throw ParseError(std::string("catalog line is not JSON: ") + e.what(), 0);
    }
    try {
        ClassInfo c;
        if (j.contains("n")) n = j["n"].get<int>();
        c.type = j.value("type", 0);
        c.canonical.n = n;
        for (const auto& cell : j.at("canonical_cells")) c.canonical.simplices.push_back(parse_cell(n, cell.get<std::string>()));
        c.regular = j.at("regular").get<bool>();
        c.g = j.at("g").get<int>();
        c.orbit = j.at("orbit").get<long>();
        auto& fp = c.fingerprint;
        fp.dim = j.value("dimension", 0);
        fp.g = c.g;
        if (j.contains("fingerprint")) {
            const auto& f = j["fingerprint"];
            fp.f = f.value("f", 0);
            if (f.contains("R")) fp.R = to_array<4>(f["R"]);
            if (f.contains("B")) fp.B = to_array<4>(f["B"]);
            if (f.contains("S")) fp.S = to_array<2>(f["S"]);
            if (f.contains("C")) fp.C = to_array<2>(f["C"]);
            if (f.contains("P")) fp.sp.P = to_array<11>(f["P"]);
            fp.cubics = f.value("cubics", 0);
            fp.t = f.value("t", 0);
            fp.sp.splits15 = f.value("splits15", 0);
        }
        if (c.regular) fp.sp.S = fp.S;
        c.facet_count = j.value("facets", 0);
        c.ray_count = j.value("rays", 0);
        if (j.contains("witness_metric")) c.witness = parse_metric(j["witness_metric"].get<std::string>(), n);
        return c;
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad catalog line: ") + e.what(), 0);
    }
}

void write_catalog(std::ostream& out, const ClassCatalog& catalog) {
    for (const auto& c : catalog.classes) out << catalog_line(c) << '\n';
}

void write_catalog(const std::string& path, const ClassCatalog& catalog) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    write_catalog(out, catalog);
}

ClassCatalog read_catalog(std::istream& in) {
    ClassCatalog catalog;
    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line)) {
        ++number;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        try {
            catalog.classes.push_back(parse_catalog_line(line, catalog.n));
        } catch (const std::exception& e) {
            throw ParseError("line " + std::to_string(number) + ": " + e.what(), number);
        }
        int n = catalog.classes.back().canonical.n;
        if (catalog.n != 0 && n != catalog.n) throw ParseError("line " + std::to_string(number) + ": mixed n", number);
        catalog.n = n;
    }
    return catalog;
}

ClassCatalog read_catalog(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return read_catalog(in);
}

FanStatistics fan_statistics(const ClassCatalog& catalog, int jobs) {
    std::vector<const ClassInfo*> regular;
    for (const auto& c : catalog.classes)
        if (c.regular) regular.push_back(&c);
    std::vector<SecondaryCone> cones(regular.size());
    parallel_for(regular.size(), jobs, [&](std::size_t i) { cones[i] = secondary_cone(regular[i]->canonical); });

    FanStatistics st;
    st.facets.lo = st.rays.lo = pair_count(catalog.n);
    std::set<std::vector<long>> classes;
    for (const auto& cone : cones) {
        bump(st.facets, static_cast<int>(cone.facets.size()));
        bump(st.rays, static_cast<int>(cone.rays.size()));
        if (static_cast<int>(cone.facets.size()) == cone.dimension && static_cast<int>(cone.rays.size()) == cone.dimension)
            ++st.simplicial;
        for (const auto& r : cone.rays) {
            classes.insert(canonical_ray(catalog.n, r));
            if (catalog.n == 6) {
                try {
                    classify_ray(r);
                } catch (const UnknownRayError&) {
                    ++st.unknown_rays;
                }
            }
        }
    }
    st.ray_classes = static_cast<int>(classes.size());
    return st;
}

bool CatalogVerification::ok() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

CatalogVerification verify_catalog(const ClassCatalog& catalog, int jobs) {
    CatalogVerification out;
    auto add = [&](std::string name, bool passed, std::string detail) {
        out.checks.push_back({std::move(name), passed, std::move(detail)});
    };
    const int n = catalog.n;
    const auto& cls = catalog.classes;
    if (cls.empty()) {
        add("nonempty", false, "catalog has no classes");
        return out;
    }

    std::vector<ClassInfo> fresh(cls.size());
    std::vector<std::string> problems(cls.size());
    parallel_for(cls.size(), jobs, [&](std::size_t i) {
        const auto& c = cls[i];
        if (!is_triangulation(n, c.canonical.simplices)) {
            problems[i] = "not a triangulation";
            return;
        }
        auto canon = canonical_form(c.canonical);
        if (canon.form != c.canonical || canon.g != c.g) {
            problems[i] = "not in canonical form or wrong g";
            return;
        }
        fresh[i] = analyze_class(c.canonical, c.g);
        if (c.witness) {
            auto sub = regular_subdivision(*c.witness);
            if (!is_triangulation(sub) || as_triangulation(sub) != c.canonical) problems[i] = "witness induces another subdivision";
        }
    });

    int bad = 0;
    std::string first;
    for (std::size_t i = 0; i < cls.size(); ++i)
        if (!problems[i].empty() && bad++ == 0) first = "type " + std::to_string(cls[i].type) + ": " + problems[i];
    add("classes canonical", bad == 0, bad ? first : std::to_string(cls.size()) + " classes");
    if (bad) return out;

    std::set<Triangulation> distinct;
    for (const auto& c : cls) distinct.insert(c.canonical);
    add("classes distinct", distinct.size() == cls.size(), std::to_string(distinct.size()) + " distinct");

    bool orbits = std::all_of(cls.begin(), cls.end(), [&](const ClassInfo& c) { return c.orbit * c.g == factorial(n); });
    add("orbit x g = n!", orbits, "n! = " + std::to_string(factorial(n)));

    int mismatched = 0;
    std::string detail;
    for (std::size_t i = 0; i < cls.size(); ++i) {
        const auto& a = cls[i];
        const auto& b = fresh[i];
        bool same = a.regular == b.regular && a.facet_count == b.facet_count && a.ray_count == b.ray_count &&
                    a.fingerprint.key() == b.fingerprint.key() && a.fingerprint.dim == b.fingerprint.dim &&
                    a.fingerprint.f == b.fingerprint.f && a.fingerprint.sp == b.fingerprint.sp;
        if (!same && mismatched++ == 0)
            detail = "type " + std::to_string(a.type) + ": recorded " + a.fingerprint.key() + ", recomputed " +
                     b.fingerprint.key();
    }
    add("invariants recomputed", mismatched == 0, mismatched ? detail : "all match");

    std::map<std::tuple<bool, int, std::string>, int> shared;
    for (const auto& c : cls) ++shared[{c.regular, c.fingerprint.dim, c.fingerprint.key()}];
    bool t_ok = std::all_of(cls.begin(), cls.end(), [&](const ClassInfo& c) {
        return c.fingerprint.t == shared[{c.regular, c.fingerprint.dim, c.fingerprint.key()}];
    });
    add("t values", t_ok, std::to_string(shared.size()) + " fingerprints");

    std::ostringstream totals;
    totals << catalog.regular_classes() << " regular (" << catalog.regular_total() << "), "
           << catalog.nonregular_classes() << " non-regular (" << catalog.nonregular_total() << ")";
    if (auto known = known_counts(n)) {
        bool ok = catalog.regular_classes() == known->regular_classes &&
                  catalog.nonregular_classes() == known->nonregular_classes &&
                  catalog.regular_total() == known->regular_total && catalog.nonregular_total() == known->nonregular_total;
        add("totals", ok, totals.str());
    } else {
        add("totals", true, totals.str());
    }

    out.stats = fan_statistics(catalog, jobs);
    if (n == 6) {
        int reg2 = 0, reg3 = 0, non2 = 0, non3 = 0;
        for (const auto& c : cls) {
            int dim = c.fingerprint.dim;
            (c.regular ? (dim == 2 ? reg2 : reg3) : (dim == 2 ? non2 : non3))++;
        }
        add("dimension census", reg2 == 12 && reg3 == 327 && non2 == 4 && non3 == 10,
            "regular " + std::to_string(reg2) + "/" + std::to_string(reg3) + ", non-regular " + std::to_string(non2) +
                "/" + std::to_string(non3));

        std::vector<const ClassInfo*> thrackle;
        for (const auto& c : cls)
            if (c.regular && c.fingerprint.to_string() == "0600 0c00 63 00 c1") thrackle.push_back(&c);
        add("split-decomposable class", thrackle.size() == 1 && thrackle.front()->fingerprint.cubics == 0,
            std::to_string(thrackle.size()) + " classes with fingerprint 0600 0c00 63 00 c1");

        const std::vector<int> f{197, 42, 63, 18, 8, 10, 1};
        const std::vector<int> e{197, 60, 28, 19, 20, 2, 5, 2, 1, 5};
        add("facet histogram", out.stats.facets.lo == 15 && out.stats.facets.counts == f, join(out.stats.facets.counts));
        add("ray histogram", out.stats.rays.lo == 15 && out.stats.rays.counts == e, join(out.stats.rays.counts));
        add("ray classes", out.stats.ray_classes == 14 && out.stats.unknown_rays == 0,
            std::to_string(out.stats.ray_classes) + " classes, " + std::to_string(out.stats.unknown_rays) + " unknown");
    }
    return out;
}

}  // namespace tightspan
