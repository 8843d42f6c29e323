#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "rimsurg/report.hpp"

using namespace rimsurg;

namespace {

struct SpecArgs {
    std::string knot;
    long d = 1, m = 0, n = 0;
    std::string kind = "rim";
    int framing = 0;

    void add(CLI::App* app) {
        app->add_option("--knot", knot, "builtin name (unknot, 3_1, 4_1, 5_1, 5_2, ...) or braid text 'B3: 1 -2 1 -2'")
            ->required();
        app->add_option("--d", d, "order of the complement group")->required();
        app->add_option("--m", m, "twists");
        app->add_option("--n", n, "rolls");
        app->add_option("--kind", kind, "rim or annulus");
        app->add_option("--framing", framing, "band framing for annulus surgery");
    }
    SurgerySpec spec() const { return {knot, d, m, n, parse_surgery_kind(kind), framing}; }
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Certifies that knot surgeries on surfaces are cyclic"};
    app.require_subcommand(1);

    RunLimits defaults;
    try {
        defaults = RunLimits::from_environment();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }

    SpecArgs cert_args;
    RunLimits cert_limits = defaults;
    bool json = false;
    auto* cert = app.add_subcommand("certify", "certify one surgery spec");
    cert_args.add(cert);
    cert->add_option("--max-cosets", cert_limits.max_cosets, "coset table limit");
    cert->add_option("--timeout", cert_limits.timeout_seconds, "seconds, 0 for none");
    cert->add_flag("--json", json, "print the JSON report");

    std::string config_path, out_path;
    int parallelism = 0;
    auto* bat = app.add_subcommand("batch", "run a JSON config of specs and sweeps");
    bat->add_option("--config", config_path, "config file")->required()->check(CLI::ExistingFile);
    bat->add_option("--out", out_path, "results file (default: config 'output' or stdout)");
    bat->add_option("--parallelism", parallelism, "worker threads (overrides config)");

    SpecArgs explain_args;
    auto* exp = app.add_subcommand("explain", "print the construction of a spec");
    explain_args.add(exp);

    std::string inv_knot;
    bool inv_json = false;
    auto* inv = app.add_subcommand("invariants", "Alexander polynomial, determinant and Arf invariant of a knot");
    inv->add_option("--knot", inv_knot, "builtin name or braid text")->required();
    inv->add_flag("--json", inv_json, "print JSON");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*cert) {
            const Report r = certify(cert_args.spec(), cert_limits);
            if (json)
                std::cout << r.to_json().dump(2) << '\n';
            else
                std::cout << r.to_text();
            return exit_code(r.verdict.kind);
        }
        if (*bat) {
            std::ifstream in(config_path);
            nlohmann::json j;
            in >> j;
            BatchConfig c = BatchConfig::from_json(j, defaults);
            if (parallelism > 0) c.parallelism = parallelism;
            if (!out_path.empty()) c.output = out_path;
            const BatchResult res = batch(c);
            const std::string text = res.to_json().dump(2) + "\n";
            if (c.output.empty()) {
                std::cout << text;
            } else {
                std::ofstream out(c.output, std::ios::binary);
                if (!(out << text)) throw std::runtime_error("cannot write " + c.output);
                std::cerr << res.rows.size() << " specs: " << res.cyclic << " cyclic, " << res.noncyclic
                          << " non-cyclic, " << res.inconclusive << " inconclusive, " << res.errors << " errors\n";
            }
            return res.exit_code();
        }
        if (*exp) {
            std::cout << explain(explain_args.spec());
            return 0;
        }
        if (*inv) {
            const KnotInvariants k = knot_invariants(resolve_knot(inv_knot));
            if (inv_json)
                std::cout << k.to_json().dump(2) << '\n';
            else
                std::cout << "Delta = " << k.alexander.to_string() << "\n|Delta(-1)| = " << k.determinant.get_str()
                          << "\nArf = " << k.arf << "\nnormal invariant " << k.normal.class_label << '\n';
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 1;
}
