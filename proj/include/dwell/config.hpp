#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "dwell/errors.hpp"

namespace dwell {

enum class Observable {
    spectrum,
    wavefunction,
    rspdm,
    momentum,
    entropy,
    schmidt,
    moments,
    hubbard_surface,
};

inline const char* to_string(Observable o) {
    switch (o) {
        case Observable::spectrum: return "spectrum";
        case Observable::wavefunction: return "wavefunction";
        case Observable::rspdm: return "rspdm";
        case Observable::momentum: return "momentum";
        case Observable::entropy: return "entropy";
        case Observable::schmidt: return "schmidt";
        case Observable::moments: return "moments";
        case Observable::hubbard_surface: return "hubbard-surface";
    }
    return "?";
}

struct KGridSpec {
    bool automatic = true;          // Nyquist window of the position grid
    std::vector<double> values;     // explicit k samples otherwise

    friend bool operator==(const KGridSpec&, const KGridSpec&) = default;
};

struct SweepConfig {
    int n = 61;
    double h = 0.16;
    std::vector<double> kappa{0.0};
    std::vector<double> g1d{0.0};
    std::vector<int> states{0, 1, 2, 3};
    std::vector<Observable> observables{Observable::spectrum};
    KGridSpec kgrid;
    std::vector<double> hubbard_j{1.0};
    std::vector<double> hubbard_u{1.0};
    double hubbard_eps = 0.0;

    // Runtime knobs carried alongside; CLI flags, not config keys.
    std::string out_dir = "out";
    int workers = 1;

    friend bool operator==(const SweepConfig& a, const SweepConfig& b) {
        return a.n == b.n && a.h == b.h && a.kappa == b.kappa && a.g1d == b.g1d &&
               a.states == b.states && a.observables == b.observables &&
               a.kgrid == b.kgrid && a.hubbard_j == b.hubbard_j &&
               a.hubbard_u == b.hubbard_u && a.hubbard_eps == b.hubbard_eps;
    }

    void validate(int line = 0) const {
        if (n < 5 || n % 2 == 0) throw config_error("N must be odd and at least 5", line);
        if (!(h > 0.0) || !std::isfinite(h)) throw config_error("h must be positive", line);
        if (kappa.empty()) throw config_error("kappa list empty", line);
        if (g1d.empty()) throw config_error("g1d list empty", line);
        if (states.empty()) throw config_error("states list empty", line);
        for (const int s : states)
            if (s < 0 || s > 3) throw config_error("states must be band indices 0..3", line);
        if (observables.empty()) throw config_error("observables list empty", line);
        if (hubbard_j.empty() || hubbard_u.empty()) throw config_error("J/U list empty", line);
        if (!std::isfinite(hubbard_eps)) throw config_error("eps must be finite", line);
        for (const double v : kappa)
            if (!std::isfinite(v)) throw config_error("kappa values must be finite", line);
        for (const double v : g1d)
            if (!std::isfinite(v)) throw config_error("g1d values must be finite", line);
        if (!kgrid.automatic && kgrid.values.empty())
            throw config_error("kgrid list empty", line);
    }
};

namespace detail {

inline std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

inline double parse_double(const std::string& s, int line) {
    try {
        size_t pos = 0;
        const double v = std::stod(s, &pos);
        if (pos != s.size()) throw config_error("trailing characters in number '" + s + "'", line);
        return v;
    } catch (const config_error&) {
        throw;
    } catch (...) {
        throw config_error("malformed number '" + s + "'", line);
    }
}

// Comma-separated items, each a scalar or an inclusive start:stop:step range.
inline std::vector<double> parse_list(const std::string& s, int line) {
    std::vector<double> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (item.empty()) throw config_error("empty list item", line);
        const auto c1 = item.find(':');
        if (c1 == std::string::npos) {
            out.push_back(parse_double(item, line));
            continue;
        }
        const auto c2 = item.find(':', c1 + 1);
        if (c2 == std::string::npos) throw config_error("range needs start:stop:step", line);
        const double start = parse_double(trim(item.substr(0, c1)), line);
        const double stop = parse_double(trim(item.substr(c1 + 1, c2 - c1 - 1)), line);
        const double step = parse_double(trim(item.substr(c2 + 1)), line);
        if (!(step > 0.0)) throw config_error("range step must be positive", line);
        if (stop < start) throw config_error("range stop below start", line);
        const int count = static_cast<int>(std::floor((stop - start) / step + 1e-9)) + 1;
        for (int i = 0; i < count; ++i) out.push_back(start + i * step);
    }
    if (out.empty()) throw config_error("list must not be empty", line);
    return out;
}

inline std::vector<int> parse_int_list(const std::string& s, int line) {
    std::vector<int> out;
    for (const double v : parse_list(s, line)) {
        if (std::abs(v - std::round(v)) > 1e-9)
            throw config_error("expected integer list", line);
        out.push_back(static_cast<int>(std::round(v)));
    }
    return out;
}

inline Observable parse_observable(const std::string& s, int line) {
    for (const Observable o :
         {Observable::spectrum, Observable::wavefunction, Observable::rspdm,
          Observable::momentum, Observable::entropy, Observable::schmidt,
          Observable::moments, Observable::hubbard_surface})
        if (s == to_string(o)) return o;
    throw config_error("unknown observable '" + s + "'", line);
}

inline std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

inline std::string join_doubles(const std::vector<double>& v) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ',';
        s += format_double(v[i]);
    }
    return s;
}

}

inline SweepConfig figure_preset(const std::string& name);  // defined below

// Line-oriented key = value text; '#' starts a comment; lists are
// comma-separated; ranges are inclusive start:stop:step.  A `preset` line
// resets the config to that preset, later lines override it.
inline SweepConfig parse_config(const std::string& text) {
    SweepConfig cfg;
    std::stringstream ss(text);
    std::string raw;
    int line = 0;
    while (std::getline(ss, raw)) {
        ++line;
        const auto hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        raw = detail::trim(raw);
        if (raw.empty()) continue;
        const auto eq = raw.find('=');
        if (eq == std::string::npos) throw config_error("expected key = value", line);
        const std::string key = detail::trim(raw.substr(0, eq));
        const std::string val = detail::trim(raw.substr(eq + 1));
        if (key.empty()) throw config_error("missing key", line);
        if (val.empty()) throw config_error("missing value for '" + key + "'", line);

        if (key == "N") {
            const auto v = detail::parse_int_list(val, line);
            if (v.size() != 1) throw config_error("N takes a single value", line);
            cfg.n = v[0];
            if (cfg.n % 2 == 0) throw config_error("N must be odd", line);
        } else if (key == "h") {
            cfg.h = detail::parse_double(val, line);
        } else if (key == "kappa") {
            cfg.kappa = detail::parse_list(val, line);
        } else if (key == "g1d") {
            cfg.g1d = detail::parse_list(val, line);
        } else if (key == "states") {
            cfg.states = detail::parse_int_list(val, line);
            for (const int s : cfg.states)
                if (s < 0 || s > 3)
                    throw config_error("states must be band indices 0..3", line);
        } else if (key == "observables") {
            cfg.observables.clear();
            std::stringstream os(val);
            std::string item;
            while (std::getline(os, item, ','))
                cfg.observables.push_back(detail::parse_observable(detail::trim(item), line));
        } else if (key == "kgrid") {
            if (val == "auto") {
                cfg.kgrid = KGridSpec{};
            } else {
                cfg.kgrid.automatic = false;
                cfg.kgrid.values = detail::parse_list(val, line);
            }
        } else if (key == "J") {
            cfg.hubbard_j = detail::parse_list(val, line);
        } else if (key == "U") {
            cfg.hubbard_u = detail::parse_list(val, line);
        } else if (key == "eps") {
            cfg.hubbard_eps = detail::parse_double(val, line);
        } else if (key == "preset") {
            try {
                cfg = figure_preset(val);
            } catch (const error& e) {
                throw config_error(e.what(), line);
            }
        } else {
            throw config_error("unknown key '" + key + "'", line);
        }
    }
    cfg.validate();
    return cfg;
}

// Canonical text form; parse_config(emit_config(c)) == c.
inline std::string emit_config(const SweepConfig& cfg) {
    std::string s;
    s += "N = " + std::to_string(cfg.n) + "\n";
    s += "h = " + detail::format_double(cfg.h) + "\n";
    s += "kappa = " + detail::join_doubles(cfg.kappa) + "\n";
    s += "g1d = " + detail::join_doubles(cfg.g1d) + "\n";
    s += "states = ";
    for (size_t i = 0; i < cfg.states.size(); ++i)
        s += (i ? "," : "") + std::to_string(cfg.states[i]);
    s += "\n";
    s += "observables = ";
    for (size_t i = 0; i < cfg.observables.size(); ++i)
        s += std::string(i ? "," : "") + to_string(cfg.observables[i]);
    s += "\n";
    s += "kgrid = " + (cfg.kgrid.automatic ? std::string("auto")
                                           : detail::join_doubles(cfg.kgrid.values)) + "\n";
    s += "J = " + detail::join_doubles(cfg.hubbard_j) + "\n";
    s += "U = " + detail::join_doubles(cfg.hubbard_u) + "\n";
    s += "eps = " + detail::format_double(cfg.hubbard_eps) + "\n";
    return s;
}

// Hard-coded parameter sets for the figure reproductions, numbered in the
// order the figures appear.  Where a figure fixes no numeric axis range the
// preset reuses the spectrum sweep's kappa range with a step chosen for
// smooth curves.
inline SweepConfig figure_preset(const std::string& name) {
    const auto range = [](double a, double b, double step) {
        std::vector<double> v;
        const int count = static_cast<int>(std::floor((b - a) / step + 1e-9)) + 1;
        for (int i = 0; i < count; ++i) v.push_back(a + i * step);
        return v;
    };
    SweepConfig c;
    if (name == "fig1") {  // single-particle levels vs kappa
        c.kappa = range(0.0, 5.0, 0.25);
        c.g1d = {0.0};
        c.observables = {Observable::spectrum};
    } else if (name == "fig2") {  // two-particle bands vs kappa, four couplings
        c.kappa = range(0.0, 5.0, 0.25);
        c.g1d = {0.0, 1.0, 2.0, 10.0};
        c.observables = {Observable::spectrum};
    } else if (name == "fig3" || name == "fig8" || name == "fig9" || name == "fig10") {
        // wavefunction maps on the wider plotting grid
        c.n = 81;
        c.h = 0.14;
        c.kappa = {0.0, 1.0, 2.0, 5.0};
        c.g1d = {0.0, 1.0, 2.0, 5.0};
        c.observables = {Observable::wavefunction};
        c.states = {name == "fig3" ? 0 : name == "fig8" ? 1 : name == "fig9" ? 2 : 3};
    } else if (name == "fig4" || name == "fig11") {  // momentum distributions
        c.kappa = {0.0, 1.0, 2.0, 5.0};
        c.g1d = {0.0, 1.0, 2.0, 5.0};
        c.observables = {Observable::momentum};
        c.states = {name == "fig4" ? 0 : 2};
    } else if (name == "fig5") {  // ground entropy vs coupling per barrier
        c.kappa = {0.0, 1.0, 2.0, 3.0, 4.0};
        c.g1d = range(0.0, 10.0, 0.5);
        c.observables = {Observable::entropy};
        c.states = {0};
    } else if (name == "fig6") {  // ground entropy vs barrier per coupling
        c.kappa = range(0.0, 5.0, 0.25);
        c.g1d = {1.0, 2.0, 5.0, 10.0};
        c.observables = {Observable::entropy};
        c.states = {0};
    } else if (name == "fig7") {  // dimer entropy surface over (J, U)
        c.observables = {Observable::hubbard_surface};
        c.hubbard_j = range(0.1, 2.0, 0.1);
        c.hubbard_u = range(0.0, 10.0, 0.25);
        c.hubbard_eps = 0.0;
    } else {
        throw invalid_parameter("unknown preset '" + name + "'");
    }
    c.validate();
    return c;
}

}
