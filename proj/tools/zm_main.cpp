#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <memory>

#include "zm/errors.hpp"
#include "zm/io.hpp"
#include "zm/matching.hpp"
#include "zm/parallel.hpp"
#include "zm/spherical.hpp"
#include "zm/verify.hpp"
#include "zm/zmeasure.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitDomain = 3;
constexpr int kExitVerifyFailed = 4;

struct OutputTarget {
    std::string path;
    std::ofstream file;
    std::ostream& stream() {
        if (path.empty()) return std::cout;
        if (!file.is_open()) {
            file.open(path);
            if (!file) throw zm::DomainError("cannot open output file: " + path);
        }
        return file;
    }
};

struct TableArgs {
    std::string z, zp, theta = "1", format = "text", out;
    unsigned n = 1;
    bool plancherel = false;
    int threads = 0;
};

struct ClassifyArgs {
    std::string z, zp, theta = "1", reading = "mirrored";
};

struct VerifyArgs {
    std::string suite = "all", z, zp, theta, t, format = "json", out;
    int n = -1, max_n = -1, threads = 0;
};

struct SampleArgs {
    std::string z, zp, theta = "1", t = "1", format = "text", out;
    unsigned n = 1;
    std::size_t count = 1;
    std::uint64_t seed = 0;
    bool plancherel = false;
    bool render = false;
};

int run_table(const TableArgs& a) {
    zm::set_thread_count(a.threads);
    zm::MeasureTable table;
    if (a.plancherel) {
        table = zm::plancherel_table(zm::parse_rational(a.theta), a.n);
    } else {
        zm::ZMeasureParams params;
        params.z = zm::parse_gaussian(a.z);
        params.zp = zm::parse_gaussian(a.zp);
        params.theta = zm::parse_rational(a.theta);
        params.n = a.n;
        table = zm::zmeasure_table(params);
    }
    OutputTarget out{a.out, {}};
    if (a.format == "csv")
        zm::write_csv(out.stream(), table);
    else if (a.format == "json")
        zm::write_json(out.stream(), table);
    else
        zm::write_text(out.stream(), table);
    return kExitOk;
}

int run_classify(const ClassifyArgs& a) {
    const auto reading = a.reading == "as-printed" ? zm::DegenerateReading::AsPrinted
                                                   : zm::DegenerateReading::Mirrored;
    auto rep = zm::classify_parameters(zm::parse_gaussian(a.z), zm::parse_gaussian(a.zp),
                                       zm::parse_rational(a.theta), reading);
    std::cout << zm::to_string(rep.series) << "\n";
    if (!rep.detail.empty()) std::cout << "# " << rep.detail << "\n";
    if (rep.reading_sensitive)
        std::cout << "# note: result depends on the degenerate-series reading (" << a.reading << ")\n";
    return kExitOk;
}

int run_verify(const VerifyArgs& a) {
    zm::set_thread_count(a.threads);
    zm::VerifyOptions opt;
    opt.n = a.n;
    opt.max_n = a.max_n;
    if (!a.z.empty()) opt.z = zm::parse_gaussian(a.z);
    if (!a.zp.empty()) opt.zp = zm::parse_gaussian(a.zp);
    if (!a.theta.empty()) opt.theta = zm::parse_rational(a.theta);
    if (!a.t.empty()) opt.t = zm::parse_rational(a.t);
    auto report = zm::run_suite(a.suite, opt);
    OutputTarget out{a.out, {}};
    if (a.format == "text") {
        for (const auto& c : report.cases) {
            out.stream() << (c.pass ? "PASS" : "FAIL") << "  " << c.identity << "  n<=" << c.n
                         << (c.params.empty() ? "" : "  " + c.params)
                         << (c.counterexample.empty() ? "" : "  [" + c.counterexample + "]") << "\n";
        }
        out.stream() << (report.all_pass() ? "all identities hold" : "FAILURES above") << " ("
                     << report.elapsed_ms << " ms)\n";
    } else {
        out.stream() << zm::report_to_json(report) << "\n";
    }
    return report.all_pass() ? kExitOk : kExitVerifyFailed;
}

int run_sample_matching(const SampleArgs& a) {
    const zm::Rational t = zm::parse_rational(a.t);
    OutputTarget out{a.out, {}};
    zm::Rng rng(a.seed);
    for (std::size_t i = 0; i < a.count; ++i) {
        zm::Matching x = zm::sample_matching(t, static_cast<int>(a.n), rng);
        if (a.render)
            out.stream() << zm::render_cycles(x) << "\n";
        else
            out.stream() << zm::matching_to_json(x) << "\n";
    }
    return kExitOk;
}

int run_sample_partition(const SampleArgs& a) {
    std::vector<zm::Partition> draws;
    if (a.plancherel) {
        draws = zm::sample_partitions_plancherel(zm::parse_rational(a.theta), a.n, a.count, a.seed);
    } else {
        zm::ZMeasureParams params;
        params.z = zm::parse_gaussian(a.z);
        params.zp = zm::parse_gaussian(a.zp);
        params.theta = zm::parse_rational(a.theta);
        params.n = a.n;
        draws = zm::sample_partitions(params, a.count, a.seed);
    }
    OutputTarget out{a.out, {}};
    for (const auto& lam : draws) out.stream() << lam.to_string() << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact tables, samplers and identity checks for z-measures on partitions,"
                 " Ewens-type measures on pairing spaces, and zonal spherical functions"};
    app.require_subcommand(1);

    TableArgs ta;
    auto* table = app.add_subcommand("table", "Print an exact measure table over partitions of n");
    table->add_option("--z", ta.z, "z as an exact literal, e.g. 2, 5/3, 1+1i");
    table->add_option("--zp", ta.zp, "z' as an exact literal");
    table->add_option("--theta", ta.theta, "Jack parameter theta > 0");
    table->add_option("--n", ta.n, "level n >= 1")->required();
    table->add_flag("--plancherel", ta.plancherel, "use the theta-Plancherel limit instead of (z, z')");
    table->add_option("--format", ta.format, "csv|json|text")->check(CLI::IsMember({"csv", "json", "text"}));
    table->add_option("--out", ta.out, "output file (default stdout)");
    table->add_option("--threads", ta.threads, "worker threads (0 = default)");

    ClassifyArgs ca;
    auto* classify = app.add_subcommand("classify", "Classify (z, z', theta) into parameter series");
    classify->add_option("--z", ca.z)->required();
    classify->add_option("--zp", ca.zp)->required();
    classify->add_option("--theta", ca.theta);
    classify->add_option("--degenerate-reading", ca.reading, "as-printed|mirrored")
        ->check(CLI::IsMember({"as-printed", "mirrored"}));

    VerifyArgs va;
    auto* verify = app.add_subcommand("verify", "Run exact identity suites and emit a report");
    std::string suite_help = "suite: all";
    for (const auto& s : zm::suite_names()) suite_help += "|" + s;
    verify->add_option("--suite", va.suite, suite_help);
    verify->add_option("--n", va.n, "run a single level n");
    verify->add_option("--max-n", va.max_n, "cap the level sweep");
    verify->add_option("--z", va.z, "override the z grid");
    verify->add_option("--zp", va.zp, "override the z' grid");
    verify->add_option("--theta", va.theta, "override the theta grid");
    verify->add_option("--t", va.t, "override the Ewens t grid");
    verify->add_option("--format", va.format, "json|text")->check(CLI::IsMember({"json", "text"}));
    verify->add_option("--out", va.out, "output file (default stdout)");
    verify->add_option("--threads", va.threads, "worker threads (0 = default)");

    SampleArgs sa;
    auto* sample = app.add_subcommand("sample", "Draw i.i.d. samples (deterministic under --seed)");
    sample->require_subcommand(1);
    auto* sm = sample->add_subcommand("matching", "draw from the Ewens-type measure mu_t on X(n)");
    sm->add_option("--t", sa.t, "Ewens parameter t > 0");
    sm->add_option("--n", sa.n, "level n")->required();
    sm->add_option("--count", sa.count, "number of draws")->required();
    sm->add_option("--seed", sa.seed, "RNG seed");
    sm->add_flag("--render", sa.render, "emit cycle pictures instead of pair lists");
    sm->add_option("--out", sa.out, "output file (default stdout)");
    auto* sp = sample->add_subcommand("partition", "draw from a z-measure or Plancherel table");
    sp->add_option("--z", sa.z);
    sp->add_option("--zp", sa.zp);
    sp->add_option("--theta", sa.theta);
    sp->add_flag("--plancherel", sa.plancherel);
    sp->add_option("--n", sa.n, "level n")->required();
    sp->add_option("--count", sa.count, "number of draws")->required();
    sp->add_option("--seed", sa.seed, "RNG seed");
    sp->add_option("--out", sa.out, "output file (default stdout)");

    std::string pairs_json;
    auto* render = app.add_subcommand("render", "Print the cycle picture of a matching");
    render->add_option("--pairs", pairs_json, "matching as a JSON array of pairs")->required();

    struct {
        unsigned n = 1;
        std::string route = "jack", out;
        int threads = 0;
    } wa;
    auto* wtable = app.add_subcommand("wtable", "Print the zonal spherical table w^lambda(rho) as CSV");
    wtable->add_option("--n", wa.n, "level n")->required();
    wtable->add_option("--route", wa.route, "jack|brute")->check(CLI::IsMember({"jack", "brute"}));
    wtable->add_option("--out", wa.out, "output file (default stdout)");
    wtable->add_option("--threads", wa.threads, "worker threads (0 = default)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*table) return run_table(ta);
        if (*classify) return run_classify(ca);
        if (*verify) return run_verify(va);
        if (*sample) {
            if (sample->get_subcommands().at(0)->get_name() == "matching") return run_sample_matching(sa);
            return run_sample_partition(sa);
        }
        if (*render) {
            std::cout << zm::render_cycles(zm::matching_from_json(pairs_json)) << "\n";
            return kExitOk;
        }
        if (*wtable) {
            zm::set_thread_count(wa.threads);
            auto tbl = zm::zonal_spherical_table(static_cast<int>(wa.n),
                                                 wa.route == "brute" ? zm::ZonalRoute::BruteForce
                                                                     : zm::ZonalRoute::Jack);
            OutputTarget out{wa.out, {}};
            zm::write_csv(out.stream(), tbl);
            return kExitOk;
        }
    } catch (const zm::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const zm::DomainError& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return kExitUsage;
}
