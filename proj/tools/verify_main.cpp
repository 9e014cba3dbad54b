#include <CLI11.hpp>

#include "rieffel/report.hpp"
#include "rieffel/suite.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

int write_out(const std::string& text, const std::string& out) {
    if (out.empty() || out == "-") {
        std::cout << text;
        return 0;
    }
    std::ofstream f(out, std::ios::binary);
    if (!f) {
        std::cerr << "error: cannot write " << out << "\n";
        return 2;
    }
    f << text;
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"numerical identity checks for the deformation toolkit"};
    app.require_subcommand(1);

    std::string config_path, out = "-", format = "jsonl", backend = "all";
    uint64_t seed = 0;
    bool seed_set = false, timings = false;
    std::vector<std::string> checks;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--config", config_path, "JSON config file");
        sub->add_option("--seed", seed, "RNG seed")->each([&](const std::string&) {
            seed_set = true;
        });
        sub->add_option("--backend", backend, "all|translation|inner|torus");
        sub->add_option("--check", checks, "restrict to named checks");
        sub->add_option("--out", out, "output file ('-' = stdout)");
        sub->add_option("--format", format, "jsonl|csv|svg");
        sub->add_flag("--timings", timings, "record wall-clock seconds per check");
    };

    CLI::App* verify = app.add_subcommand("verify", "run the identity checks");
    add_common(verify);

    CLI::App* sweep = app.add_subcommand("sweep", "re-run checks along an axis");
    add_common(sweep);
    std::string axis = "N";
    std::vector<int> values;
    sweep->add_option("--axis", axis, "N|d");
    sweep->add_option("--values", values, "axis values")->required();

    CLI::App* report = app.add_subcommand("report", "re-render a saved report");
    std::string in_path;
    report->add_option("--in", in_path, "JSON-lines report file")->required();
    report->add_option("--out", out, "output file ('-' = stdout)");
    report->add_option("--format", format, "jsonl|csv|svg");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e);
        return 0;
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        rieffel::Report rep;
        if (report->parsed()) {
            std::ifstream f(in_path, std::ios::binary);
            if (!f) {
                std::cerr << "error: cannot read " << in_path << "\n";
                return 2;
            }
            std::stringstream buf;
            buf << f.rdbuf();
            rep = rieffel::parse_jsonl(buf.str());
            const int rc = write_out(rieffel::render(rep, format), out);
            return rc != 0 ? rc : 0;
        }

        rieffel::SuiteConfig cfg;
        if (!config_path.empty()) cfg = rieffel::load_config(config_path);
        if (seed_set) cfg.seed = seed;
        if (backend != "all" || cfg.backend.empty()) cfg.backend = backend;
        if (!checks.empty()) cfg.checks = checks;
        cfg.timings = cfg.timings || timings;
        {
            const auto bk = rieffel::known_backends();
            if (std::find(bk.begin(), bk.end(), cfg.backend) == bk.end()) {
                std::cerr << "error: unknown backend " << cfg.backend << "\n";
                return 2;
            }
            const auto ck = rieffel::known_checks();
            for (const auto& c : cfg.checks)
                if (std::find(ck.begin(), ck.end(), c) == ck.end()) {
                    std::cerr << "error: unknown check " << c << "\n";
                    return 2;
                }
        }

        if (verify->parsed()) {
            rep = rieffel::run_suite(cfg);
        } else {
            rep = rieffel::convergence_sweep(cfg, axis, values);
        }
        const int rc = write_out(rieffel::render(rep, format), out);
        if (rc != 0) return rc;
        return rieffel::count_failures(rep) > 0 ? 1 : 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
