#include "tightspan/cli.hpp"

#include "tightspan/catalog.hpp"
#include "tightspan/classification.hpp"
#include "tightspan/embedding.hpp"
#include "tightspan/split_decomposition.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace tightspan {

using nlohmann::json;

namespace {

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

MetricFormat parse_format(const std::string& f) {
    if (f == "flat") return MetricFormat::Flat;
    if (f == "matrix") return MetricFormat::Matrix;
    return MetricFormat::Auto;
}

std::string describe_violation(const Metric& d, const MetricCheck& check) {
    if (!check.negative_pairs.empty())
        return "negative entry d(" + pair_label(d.points(), check.negative_pairs.front()) + ")";
    const auto& v = check.violations.front();
    auto name = [](int x) { return std::to_string(x + 1); };
    return "triangle inequality violated at (" + name(v.i) + "," + name(v.j) + "," + name(v.k) + "): d(" + name(v.i) +
           "," + name(v.j) + ") + d(" + name(v.j) + "," + name(v.k) + ") < d(" + name(v.i) + "," + name(v.k) + ")";
}

Metric load_metric(const std::string& path, const std::string& format) {
    std::vector<Metric> metrics;
    try {
        metrics = read_metric_file(path, parse_format(format));
    } catch (const std::exception& e) {
        throw InputError(path + ": " + e.what());
    }
    if (metrics.empty()) throw InputError(path + ": no metric found");
    if (metrics.size() > 1) throw InputError(path + ": expected one metric, found " + std::to_string(metrics.size()));
    auto check = is_metric(metrics.front());
    if (!check.ok) throw InputError(path + ": not a metric: " + describe_violation(metrics.front(), check));
    return metrics.front();
}

Triangulation generic_triangulation(const Metric& d) {
    auto sub = regular_subdivision(d);
    if (!is_triangulation(sub)) throw InputError("metric is not generic: its subdivision is not a triangulation");
    return as_triangulation(sub);
}

}  // namespace

std::string analyze_report(const Metric& d) {
    const int n = d.points();
    json r;
    r["n"] = n;
    r["metric"] = format_metric(d);
    r["is_metric"] = is_metric(d).ok;
    auto span = tight_span(d);
    auto contracted = contract_exterior_segments(span);
    r["dimension"] = span.complex.dimension();
    r["fvector"] = span.complex.fvector();
    r["contracted_fvector"] = contracted.complex.fvector();
    r["trivial_vertices"] = trivial_vertex_count(span);
    auto sub = regular_subdivision(d);
    r["subdivision"] = {{"cells", sub.cells.size()}, {"triangulation", is_triangulation(sub)}};
    r["generic"] = is_triangulation(sub);
    auto splits = split_decompose(d);
    json sj = json::array();
    for (const auto& [s, w] : splits.weights) sj.push_back({{"split", s.to_string()}, {"weight", to_string(w)}});
    r["splits"] = sj;
    r["split_prime_residue"] = format_metric(splits.residual);

    if (n == 6 && is_triangulation(sub)) {
        auto t = as_triangulation(sub);
        auto canon = canonical_form(t);
        Fingerprint fp;
        fp.g = canon.g;
        auto ideal = stanley_reisner(t);
        fp.cubics = static_cast<int>(ideal.cubic_count());
        auto c = ideal.cubic_support_counts(n);
        fp.C = {c[5], c[6]};
        auto cone = secondary_cone(t);
        fp.sp = sp_invariant(cone);
        fp.S = fp.sp.S;
        r["g"] = fp.g;
        r["quadrics"] = ideal.quadric_count();
        r["cubics"] = fp.cubics;
        r["C"] = fp.C;
        r["S"] = fp.S;
        r["P"] = fp.sp.P;
        r["splits15"] = fp.sp.splits15;
        r["cone"] = {{"facets", cone.facets.size()}, {"rays", cone.rays.size()}};
        try {
            fill_census(fp, contracted.complex);
            if (fp.dim == 2) {
                r["B"] = {fp.B[0], fp.B[1], fp.B[2]};
            } else {
                r["f"] = fp.f;
                r["R"] = fp.R;
                r["B"] = fp.B;
            }
            fp.t = 1;
            r["fingerprint"] = fp.key();
        } catch (const CensusError& e) {
            r["census_error"] = e.what();
        }
    }
    return r.dump(2);
}

int cli_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Tight spans, subdivisions of hypersimplices and the metric fan", "tightspan"};
    app.require_subcommand(1);
    std::string format = "auto";
    auto format_option = [&](CLI::App* sub) {
        sub->add_option("--input-format", format, "Metric file format")->check(CLI::IsMember({"auto", "flat", "matrix"}));
    };

    std::string metric_file;
    auto* analyze = app.add_subcommand("analyze", "Report on one metric as JSON");
    analyze->add_option("metric-file", metric_file)->required();
    format_option(analyze);

    int n = 6, jobs = 1;
    std::string seed_metric, out_path, resume, checkpoint;
    auto* enumerate = app.add_subcommand("enumerate", "Enumerate triangulation classes via flips");
    enumerate->add_option("--n", n, "Number of points")->check(CLI::Range(3, 6));
    enumerate->add_option("--seed-metric", seed_metric, "Generic metric whose subdivision seeds the search");
    enumerate->add_option("--out", out_path, "Catalog output (JSON lines); stdout if omitted");
    enumerate->add_option("--resume", resume, "Checkpoint to resume from");
    enumerate->add_option("--checkpoint", checkpoint, "Checkpoint file to write");
    enumerate->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);

    auto* rays = app.add_subcommand("rays", "Extreme rays of the secondary cone of a generic metric");
    rays->add_option("metric-file", metric_file)->required();
    format_option(rays);
    auto* facets = app.add_subcommand("facets", "Facets of the secondary cone of a generic metric");
    facets->add_option("metric-file", metric_file)->required();
    format_option(facets);

    bool check = false;
    auto* decompose = app.add_subcommand("decompose", "Split decomposition");
    decompose->add_option("metric-file", metric_file)->required();
    decompose->add_flag("--check", check, "Also verify against the secondary cone");
    format_option(decompose);

    std::string export_format = "json";
    std::uint64_t seed = 1;
    int iterations = 500;
    auto* exp = app.add_subcommand("export", "Export the spring-embedded tight span");
    exp->add_option("metric-file", metric_file)->required();
    exp->add_option("--format", export_format)->check(CLI::IsMember({"json", "off"}));
    exp->add_option("--seed", seed, "Layout seed");
    exp->add_option("--iterations", iterations)->check(CLI::NonNegativeNumber);
    exp->add_option("--out", out_path, "Output file; stdout if omitted");
    format_option(exp);

    std::string catalog_path;
    auto* verify = app.add_subcommand("catalog-verify", "Re-check a class catalog");
    verify->add_option("catalog", catalog_path)->required();
    verify->add_option("--jobs", jobs)->check(CLI::PositiveNumber);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n\n" << app.help();
        return kExitInput;
    }

    auto emit = [&](const std::string& text) {
        if (out_path.empty()) {
            out << text;
            return;
        }
        std::ofstream f(out_path);
        if (!f) throw InputError("cannot write " + out_path);
        f << text;
    };

    try {
        if (analyze->parsed()) {
            out << analyze_report(load_metric(metric_file, format)) << '\n';
        } else if (enumerate->parsed()) {
            Triangulation seed_t = default_seed(n);
            if (!seed_metric.empty()) {
                auto d = load_metric(seed_metric, "auto");
                if (d.points() != n) throw InputError("seed metric has " + std::to_string(d.points()) + " points");
                seed_t = generic_triangulation(d);
            }
            EnumerationOptions opt;
            opt.jobs = jobs;
            opt.resume = resume;
            opt.checkpoint = checkpoint;
            opt.progress = [&](const std::string& msg) { err << msg << '\n'; };
            auto catalog = enumerate_classes(n, seed_t, opt);
            std::ostringstream lines;
            write_catalog(lines, catalog);
            emit(lines.str());
            err << catalog.regular_classes() << " regular classes (" << catalog.regular_total() << " triangulations), "
                << catalog.nonregular_classes() << " non-regular classes (" << catalog.nonregular_total()
                << " triangulations)\n";
        } else if (rays->parsed() || facets->parsed()) {
            auto cone = secondary_cone(generic_triangulation(load_metric(metric_file, format)));
            out << format_rows(rays->parsed() ? cone.rays : cone.facets);
        } else if (decompose->parsed()) {
            auto d = load_metric(metric_file, format);
            auto dec = split_decompose(d);
            for (const auto& [s, w] : dec.weights) out << s.to_string() << ' ' << to_string(w) << '\n';
            out << "residual " << format_metric(dec.residual) << '\n';
            if (check) {
                auto report = fan_split_check(d);
                for (const auto& s : report.missing) out << "split not on a ray of the cone: " << s.to_string() << '\n';
                out << "residue over " << report.prime_rays.size() << " non-split rays: "
                    << (report.residue_expressible ? "expressible" : "not expressible") << '\n';
                if (!report.ok()) return kExitVerification;
            }
        } else if (exp->parsed()) {
            auto d = load_metric(metric_file, format);
            auto span = tight_span(d);
            auto e = spring_embed(span, seed, iterations);
            emit(export_format == "off" ? export_off(e) : export_json(span, e, d) + "\n");
        } else if (verify->parsed()) {
            ClassCatalog catalog;
            try {
                catalog = read_catalog(catalog_path);
            } catch (const std::exception& e) {
                throw InputError(catalog_path + ": " + e.what());
            }
            auto result = verify_catalog(catalog, jobs);
            for (const auto& c : result.checks)
                out << (c.passed ? "PASS " : "FAIL ") << c.name << ": " << c.detail << '\n';
            return result.ok() ? kExitOk : kExitVerification;
        }
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInput;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInput;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitInput;
    } catch (const std::runtime_error& e) {
        err << "error: " << e.what() << '\n';
        return kExitInput;
    }
    return kExitOk;
}

int cli_dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    std::vector<std::string> args(argv + std::min(argc, 1), argv + argc);
    return cli_dispatch(args, out, err);
}

}  // namespace tightspan
