#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dwell/config.hpp"
#include "dwell/eig.hpp"
#include "dwell/errors.hpp"
#include "dwell/sweep.hpp"
#include "dwell/version.hpp"

namespace {

struct Options {
    std::string config_path;
    std::string out = "out";
    int workers = 1;
    std::string grid;  // "N,h" override
    std::string preset;
};

void add_common(CLI::App* sub, Options& o, bool with_config = true) {
    if (with_config)
        sub->add_option("--config", o.config_path, "key = value config file");
    sub->add_option("--out", o.out, "output directory");
    sub->add_option("--workers", o.workers, "concurrent sweep points")
        ->check(CLI::Range(1, 64));
    sub->add_option("--grid", o.grid, "grid override as N,h (N odd)");
}

void apply_grid_override(dwell::SweepConfig& cfg, const std::string& grid) {
    if (grid.empty()) return;
    const auto comma = grid.find(',');
    if (comma == std::string::npos) throw dwell::config_error("--grid expects N,h");
    try {
        cfg.n = std::stoi(grid.substr(0, comma));
        cfg.h = std::stod(grid.substr(comma + 1));
    } catch (...) {
        throw dwell::config_error("--grid expects N,h");
    }
}

dwell::SweepConfig load_config(const Options& o) {
    dwell::SweepConfig cfg;
    if (!o.config_path.empty()) {
        std::ifstream f(o.config_path);
        if (!f) throw dwell::config_error("cannot read config file " + o.config_path);
        std::stringstream buf;
        buf << f.rdbuf();
        cfg = dwell::parse_config(buf.str());
    }
    apply_grid_override(cfg, o.grid);
    cfg.out_dir = o.out;
    cfg.workers = o.workers;
    cfg.validate();
    return cfg;
}

int run_and_report(const dwell::SweepConfig& cfg) {
    const dwell::SweepOutput res = dwell::run_sweep(cfg);
    std::cout << "wrote " << res.files.size() << " files to " << cfg.out_dir << "\n";
    for (const std::string& f : res.files) std::cout << "  " << f << "\n";
    if (res.failed_points > 0) {
        std::cerr << res.failed_points
                  << " point(s) failed; see manifest.json flags\n";
        return 1;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    dwell::pin_blas_threads();

    CLI::App app{"two contact-interacting bosons in a 1D quartic double well (sinc-DVR)"};
    app.set_version_flag("--version", std::string(dwell::version));
    app.require_subcommand(1);

    Options opt;
    std::string fixture_dir = "fixtures";

    struct Mode {
        const char* name;
        const char* help;
        std::vector<dwell::Observable> observables;
    };
    const Mode modes[] = {
        {"spectrum", "band energies over the (kappa, g1d) sweep",
         {dwell::Observable::spectrum}},
        {"wavefunction", "two-particle wavefunction maps",
         {dwell::Observable::wavefunction}},
        {"momentum", "momentum distributions per band",
         {dwell::Observable::momentum}},
        {"entropy", "von Neumann entropy and Schmidt number per band",
         {dwell::Observable::entropy, dwell::Observable::schmidt}},
        {"moments", "dipole/quadrupole transition moments between bands",
         {dwell::Observable::moments}},
        {"hubbard", "two-site dimer entropy surface over (J, U)",
         {dwell::Observable::hubbard_surface}},
    };
    std::vector<CLI::App*> mode_subs;
    for (const Mode& m : modes) {
        CLI::App* sub = app.add_subcommand(m.name, m.help);
        add_common(sub, opt);
        mode_subs.push_back(sub);
    }

    CLI::App* oracle_sub = app.add_subcommand(
        "oracle", "write finite-difference fixtures and compare against the DVR path");
    oracle_sub->add_option("--out", fixture_dir, "fixture directory");

    CLI::App* rep = app.add_subcommand("reproduce", "rebuild one figure's data tables");
    rep->add_option("preset", opt.preset, "fig1..fig11")->required();
    add_common(rep, opt, /*with_config=*/false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;  // bad invocation is a configuration error
    }

    try {
        if (oracle_sub->parsed()) {
            const auto files = dwell::write_oracle_fixtures(fixture_dir);
            std::cout << "wrote " << files.size() << " fixtures to " << fixture_dir << "\n";
            for (const std::string& f : files) std::cout << "  " << f << "\n";
            for (const auto& r : dwell::oracle_reports())
                std::printf("%-36s main=%.12g oracle=%.12g abs=%.3e rel=%.3e\n",
                            r.quantity.c_str(), r.main_value, r.oracle_value,
                            r.abs_diff, r.rel_diff);
            return 0;
        }
        if (rep->parsed()) {
            dwell::SweepConfig cfg;
            try {
                cfg = dwell::figure_preset(opt.preset);
            } catch (const dwell::invalid_parameter& e) {
                throw dwell::config_error(e.what());
            }
            apply_grid_override(cfg, opt.grid);
            cfg.out_dir = opt.out;
            cfg.workers = opt.workers;
            cfg.validate();
            return run_and_report(cfg);
        }
        for (size_t i = 0; i < mode_subs.size(); ++i)
            if (mode_subs[i]->parsed()) {
                dwell::SweepConfig cfg = load_config(opt);
                cfg.observables = modes[i].observables;
                return run_and_report(cfg);
            }
    } catch (const dwell::config_error& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
