// Batch verification runner: every suite is a subcommand-style positional
// argument, configuration comes from a flat key=value file plus flag
// overrides, and results are written as JSON reports.
//
//   kklab <suite> [--config file] [--seed N] [--set key=value ...] [--out report.json]
//
// Exit codes: 0 all properties pass, 1 a property failed (the report carries
// a witness), 2 configuration or usage error.

#include "kklab/suites.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>

int main(int argc, char** argv) {
    CLI::App app{"kklab: exhaustive desk-scale checks for finite-field constructions"};
    app.footer("Suites: " + [] {
        std::string s;
        for (const auto& n : kklab::suite_names()) {
            if (!s.empty()) s += ", ";
            s += n;
        }
        return s;
    }());

    std::string suite;
    std::string config_path;
    std::string out_path;
    std::vector<std::string> overrides;
    std::optional<uint64_t> seed;

    app.add_option("suite", suite, "suite to run")->required();
    app.add_option("--config", config_path, "flat key=value config file");
    app.add_option("--seed", seed, "random seed (mandatory unless set in the config)");
    app.add_option("--set", overrides, "override a config key, as key=value");
    app.add_option("--out", out_path, "write the JSON report to this path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) ? 2 : 0;
    }

    using namespace kklab;
    try {
        SuiteConfig cfg;
        if (!config_path.empty()) {
            cfg = SuiteConfig::from_file(suite, config_path);
        } else {
            cfg.suite = suite;
        }
        if (seed) cfg.seed = *seed;
        for (const auto& o : overrides) {
            size_t eq = o.find('=');
            require(eq != std::string::npos, Errc::ConfigInvalid,
                    "--set expects key=value, got: " + o);
            cfg.apply_override(o.substr(0, eq), o.substr(eq + 1));
        }

        SuiteReport rep = run_suite(cfg);
        std::string json = rep.to_json();
        if (!out_path.empty()) {
            std::ofstream out(out_path);
            if (!out.good()) {
                std::cerr << "cannot write " << out_path << "\n";
                return 2;
            }
            out << json << "\n";
        }
        std::cout << json << "\n";
        for (const auto& r : rep.results)
            std::cerr << (r.pass ? "pass" : "FAIL") << "  " << r.property << "\n";
        return rep.ok() ? 0 : 1;
    } catch (const Error& e) {
        bool config_error = e.code() == Errc::UnknownSuite || e.code() == Errc::ConfigInvalid;
        std::cerr << "error: " << e.what() << "\n";
        return config_error ? 2 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
