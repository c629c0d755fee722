#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <array>
#include <atomic>
#include <cstdint>
#include <cstdio>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <string>
#include <string_view>
#include <thread>
#include <utility>
#include <vector>

#include <json.hpp>

#include "dwell/bose_hubbard.hpp"
#include "dwell/config.hpp"
#include "dwell/correlations.hpp"
#include "dwell/dvr.hpp"
#include "dwell/eig.hpp"
#include "dwell/errors.hpp"
#include "dwell/oracle.hpp"
#include "dwell/single_particle.hpp"
#include "dwell/two_particle.hpp"
#include "dwell/version.hpp"

namespace dwell {

inline std::uint64_t fnv1a64(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (const unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

inline std::string digest_hex(std::string_view s) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx",
                  static_cast<unsigned long long>(fnv1a64(s)));
    return buf;
}

namespace detail {

inline std::string fmt_num(double v) {
    char b[40];
    std::snprintf(b, sizeof b, "%.12g", v);
    return b;
}

inline std::string fmt_full(double v) {
    char b[40];
    std::snprintf(b, sizeof b, "%.17g", v);
    return b;
}

inline std::string fmt_tag(double v) {
    char b[40];
    std::snprintf(b, sizeof b, "%.10g", v);
    return b;
}

inline std::string utc_stamp() {
    const std::time_t t = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

template <class T>
inline std::vector<T> sorted_unique(std::vector<T> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

}

struct ResultRow {
    double kappa = 0.0;
    double g1d = 0.0;
    int band = -1;  // -1: row spans the band / not band-resolved
    Observable observable = Observable::spectrum;
    std::vector<double> values;
    std::string file_ref;    // array payloads live in their own file
    std::string provenance;  // code version + grid; run stamp is manifest-only
};

struct SweepOutput {
    std::vector<std::string> files;  // relative to the output directory
    int failed_points = 0;
    std::string manifest_json;
};

inline bool wants(const SweepConfig& cfg, Observable o) {
    return std::find(cfg.observables.begin(), cfg.observables.end(), o) !=
           cfg.observables.end();
}

namespace detail {

inline const char* gnuplot_value_names(Observable o, bool& with_band) {
    with_band = true;
    switch (o) {
        case Observable::spectrum: with_band = false; return "E0 E1 E2 E3";
        case Observable::entropy: return "S";
        case Observable::schmidt: return "schmidt_number";
        case Observable::moments: with_band = false; return "band_a band_b dipole quadrupole";
        case Observable::hubbard_surface: with_band = false; return "J U S";
        default: return "value";
    }
}

}

// Plot-ready text: '#'-prefixed headers, whitespace-separated columns, one
// block per kappa value (blank-line separated) in ascending kappa order.
inline std::string emit_gnuplot_data(std::vector<ResultRow> rows) {
    if (rows.empty()) throw invalid_parameter("gnuplot emit: no rows");
    for (const ResultRow& r : rows)
        if (r.observable != rows.front().observable)
            throw invalid_parameter("gnuplot emit: rows span multiple observables");

    std::stable_sort(rows.begin(), rows.end(), [](const ResultRow& a, const ResultRow& b) {
        if (a.kappa != b.kappa) return a.kappa < b.kappa;
        if (a.g1d != b.g1d) return a.g1d < b.g1d;
        return a.band < b.band;
    });

    bool with_band = true;
    const char* names = detail::gnuplot_value_names(rows.front().observable, with_band);
    std::string s = "# observable: ";
    s += to_string(rows.front().observable);
    s += "\n";
    if (!rows.front().provenance.empty())
        s += "# provenance: " + rows.front().provenance + "\n";
    s += std::string("# columns: g1d ") + (with_band ? "band " : "") + names + "\n";

    double block_kappa = rows.front().kappa;
    s += "# kappa = " + detail::fmt_num(block_kappa) + "\n";
    for (const ResultRow& r : rows) {
        if (r.kappa != block_kappa) {
            block_kappa = r.kappa;
            s += "\n# kappa = " + detail::fmt_num(block_kappa) + "\n";
        }
        s += detail::fmt_num(r.g1d);
        if (with_band) s += " " + std::to_string(r.band);
        for (const double v : r.values) s += " " + detail::fmt_num(v);
        if (!r.file_ref.empty()) s += " " + r.file_ref;
        s += "\n";
    }
    return s;
}

namespace detail {

struct PointJob {
    double kappa = 0.0, g1d = 0.0;
    bool ok = false;
    std::string error;
    std::array<double, 4> energies{};
    std::vector<double> entropy;                    // parallel to requested bands
    std::vector<int> schmidt;
    std::vector<Eigen::MatrixXd> wavefunction;
    std::vector<Eigen::MatrixXd> rho;
    std::vector<std::vector<double>> momentum;
    std::vector<std::array<double, 4>> pair_moments;  // band_a, band_b, dip, quad
};

inline void compute_point(PointJob& job, const Grid& grid, const SweepConfig& cfg,
                          const std::vector<int>& bands,
                          const std::vector<double>& kvals) {
    const bool want_wf = wants(cfg, Observable::wavefunction);
    const bool want_rho = wants(cfg, Observable::rspdm);
    const bool want_ent = wants(cfg, Observable::entropy);
    const bool want_sch = wants(cfg, Observable::schmidt);
    const bool want_mom = wants(cfg, Observable::momentum);
    const bool want_mts = wants(cfg, Observable::moments);

    const std::array<TwoBodyState, 4> band = lowest_band(grid, job.kappa, job.g1d);
    for (int b = 0; b < 4; ++b) job.energies[b] = band[b].energy;

    for (const int b : bands) {
        const TwoBodyState& st = band[b];
        if (want_wf) job.wavefunction.push_back(st.coeff);
        if (want_rho || want_ent || want_sch || want_mom) {
            const Rspdm r = rspdm(st, grid);
            if (want_rho) job.rho.push_back(r.rho);
            if (want_ent || want_sch || want_mom) {
                const SpectralDecomposition d = natural_orbitals(r, grid);
                if (want_ent) job.entropy.push_back(von_neumann_entropy(d));
                if (want_sch) job.schmidt.push_back(schmidt_number(d, 0.01));
                if (want_mom)
                    job.momentum.push_back(momentum_distribution(d, grid, kvals).n);
            }
        }
    }
    if (want_mts)
        for (size_t a = 0; a < bands.size(); ++a)
            for (size_t b = a + 1; b < bands.size(); ++b) {
                const Moments m =
                    transition_moments(band[bands[a]], band[bands[b]], grid);
                job.pair_moments.push_back({static_cast<double>(bands[a]),
                                            static_cast<double>(bands[b]),
                                            m.dipole, m.quadrupole});
            }
    job.ok = true;
}

}

// Runs all requested (kappa, g1d) points (work queue, cfg.workers threads),
// then writes every output in canonical sorted order so the bytes do not
// depend on scheduling.  Per-point failures are flagged in the manifest and
// the sweep continues.
inline SweepOutput run_sweep(const SweepConfig& cfg) {
    cfg.validate();
    pin_blas_threads();
    namespace fs = std::filesystem;
    fs::create_directories(cfg.out_dir);

    const std::vector<int> bands = detail::sorted_unique(cfg.states);
    const bool two_body =
        wants(cfg, Observable::spectrum) || wants(cfg, Observable::wavefunction) ||
        wants(cfg, Observable::rspdm) || wants(cfg, Observable::momentum) ||
        wants(cfg, Observable::entropy) || wants(cfg, Observable::schmidt) ||
        wants(cfg, Observable::moments);

    const Grid grid = make_grid(cfg.n, cfg.h);
    const std::vector<double> kvals =
        cfg.kgrid.automatic ? default_k_grid(grid) : cfg.kgrid.values;

    std::vector<detail::PointJob> jobs;
    if (two_body) {
        std::vector<std::pair<double, double>> pts;
        pts.reserve(cfg.kappa.size() * cfg.g1d.size());
        for (const double k : cfg.kappa)
            for (const double g : cfg.g1d) pts.emplace_back(k, g);
        pts = detail::sorted_unique(std::move(pts));
        jobs.resize(pts.size());
        for (size_t i = 0; i < pts.size(); ++i) {
            jobs[i].kappa = pts[i].first;
            jobs[i].g1d = pts[i].second;
        }

        std::atomic<size_t> next{0};
        const auto work = [&] {
            for (;;) {
                const size_t i = next.fetch_add(1);
                if (i >= jobs.size()) return;
                try {
                    detail::compute_point(jobs[i], grid, cfg, bands, kvals);
                } catch (const std::exception& e) {
                    jobs[i].ok = false;
                    jobs[i].error = e.what();
                }
            }
        };
        const int nw = std::clamp(cfg.workers, 1, 64);
        if (nw <= 1) {
            work();
        } else {
            std::vector<std::jthread> pool;
            pool.reserve(nw);
            for (int t = 0; t < nw; ++t) pool.emplace_back(work);
        }
    }

    struct SingleRow {
        double kappa;
        bool ok = false;
        std::string error;
        std::array<double, 4> e{};
    };
    std::vector<SingleRow> srows;
    if (wants(cfg, Observable::spectrum))
        for (const double k : detail::sorted_unique(cfg.kappa)) {
            SingleRow r{k, false, {}, {}};
            try {
                const auto ss = solve_single(grid, k, 4);
                for (int i = 0; i < 4; ++i) r.e[i] = ss[i].energy;
                r.ok = true;
            } catch (const std::exception& e) {
                r.error = e.what();
            }
            srows.push_back(std::move(r));
        }

    struct HubRow {
        double j, u;
        bool ok = false;
        std::string error;
        double s = 0.0;
    };
    std::vector<HubRow> hrows;
    if (wants(cfg, Observable::hubbard_surface))
        for (const double j : detail::sorted_unique(cfg.hubbard_j))
            for (const double u : detail::sorted_unique(cfg.hubbard_u)) {
                HubRow r{j, u, false, {}, 0.0};
                try {
                    r.s = ground_entropy({j, u, cfg.hubbard_eps});
                    r.ok = true;
                } catch (const std::exception& e) {
                    r.error = e.what();
                }
                hrows.push_back(std::move(r));
            }

    // Emission: fixed file order, content independent of worker count.
    SweepOutput out;
    nlohmann::json manifest;
    manifest["outputs"] = nlohmann::json::array();
    const auto emit = [&](const std::string& name, const std::string& content) {
        std::ofstream f(fs::path(cfg.out_dir) / name, std::ios::binary);
        if (!f) throw error("cannot write output file " + name);
        f << content;
        manifest["outputs"].push_back({{"file", name}, {"fnv1a64", digest_hex(content)}});
        out.files.push_back(name);
    };
    const std::string head_common = std::string("# version: ") + version +
                                    "\n# grid: N=" + std::to_string(cfg.n) +
                                    " h=" + detail::fmt_num(cfg.h) + "\n";
    const std::string prov = std::string("version=") + version +
                             " grid=N" + std::to_string(cfg.n) + ",h" +
                             detail::fmt_num(cfg.h);

    if (wants(cfg, Observable::spectrum)) {
        std::string sp = "# single_particle: lowest levels of -1/2 d2/dx2 + x^4 - kappa x^2\n" +
                         head_common + "kappa,e0,e1,e2,e3\n";
        for (const SingleRow& r : srows) {
            if (!r.ok) continue;
            sp += detail::fmt_num(r.kappa);
            for (const double e : r.e) sp += "," + detail::fmt_num(e);
            sp += "\n";
        }
        emit("single_particle.csv", sp);

        std::string s = "# spectrum: lowest-band two-particle energies by band index\n" +
                        head_common + "kappa,g1d,E0,E1,E2,E3\n";
        std::vector<ResultRow> rows;
        for (const detail::PointJob& j : jobs) {
            if (!j.ok) continue;
            s += detail::fmt_num(j.kappa) + "," + detail::fmt_num(j.g1d);
            for (const double e : j.energies) s += "," + detail::fmt_num(e);
            s += "\n";
            rows.push_back({j.kappa, j.g1d, -1, Observable::spectrum,
                            {j.energies.begin(), j.energies.end()}, {}, prov});
        }
        emit("spectrum.csv", s);
        if (!rows.empty()) emit("spectrum.dat", emit_gnuplot_data(std::move(rows)));
    }

    if (wants(cfg, Observable::entropy)) {
        std::string s = "# entropy: von Neumann entropy of the RSPDM, base-2\n" +
                        head_common + "kappa,g1d,band,S\n";
        std::vector<ResultRow> rows;
        for (const detail::PointJob& j : jobs) {
            if (!j.ok) continue;
            for (size_t i = 0; i < bands.size(); ++i) {
                s += detail::fmt_num(j.kappa) + "," + detail::fmt_num(j.g1d) + "," +
                     std::to_string(bands[i]) + "," + detail::fmt_num(j.entropy[i]) + "\n";
                rows.push_back({j.kappa, j.g1d, bands[i], Observable::entropy,
                                {j.entropy[i]}, {}, prov});
            }
        }
        emit("entropy.csv", s);
        if (!rows.empty()) emit("entropy.dat", emit_gnuplot_data(std::move(rows)));
    }

    if (wants(cfg, Observable::schmidt)) {
        std::string s = "# schmidt: occupations above threshold\n# threshold: 0.01\n" +
                        head_common + "kappa,g1d,band,schmidt_number\n";
        std::vector<ResultRow> rows;
        for (const detail::PointJob& j : jobs) {
            if (!j.ok) continue;
            for (size_t i = 0; i < bands.size(); ++i) {
                s += detail::fmt_num(j.kappa) + "," + detail::fmt_num(j.g1d) + "," +
                     std::to_string(bands[i]) + "," + std::to_string(j.schmidt[i]) + "\n";
                rows.push_back({j.kappa, j.g1d, bands[i], Observable::schmidt,
                                {static_cast<double>(j.schmidt[i])}, {}, prov});
            }
        }
        emit("schmidt.csv", s);
        if (!rows.empty()) emit("schmidt.dat", emit_gnuplot_data(std::move(rows)));
    }

    if (wants(cfg, Observable::moments)) {
        std::string s =
            "# moments: transition matrix elements <a| x1 + x2 |b>, <a| x1^2 + x2^2 |b>\n" +
            head_common + "kappa,g1d,band_a,band_b,dipole,quadrupole\n";
        for (const detail::PointJob& j : jobs) {
            if (!j.ok) continue;
            for (const auto& row : j.pair_moments)
                s += detail::fmt_num(j.kappa) + "," + detail::fmt_num(j.g1d) + "," +
                     detail::fmt_num(row[0]) + "," + detail::fmt_num(row[1]) + "," +
                     detail::fmt_num(row[2]) + "," + detail::fmt_num(row[3]) + "\n";
        }
        emit("moments.csv", s);
    }

    // Per-point array payloads, sorted point order, band-major within a point.
    const auto matrix_csv = [&](const std::string& title, const Eigen::MatrixXd& m,
                                double kap, double g) {
        std::string s = "# " + title + "\n" + head_common;
        s += "# point: kappa=" + detail::fmt_num(kap) + " g1d=" + detail::fmt_num(g) + "\n";
        s += "# layout: line i holds value(x1_i, x2_j) for j = 0..N-1, comma-separated\n";
        s += "# x:";
        for (const double xi : grid.x) s += " " + detail::fmt_num(xi);
        s += "\n";
        for (int i = 0; i < m.rows(); ++i) {
            for (int j = 0; j < m.cols(); ++j)
                s += (j ? "," : "") + detail::fmt_num(m(i, j));
            s += "\n";
        }
        return s;
    };
    for (const detail::PointJob& j : jobs) {
        if (!j.ok) continue;
        const std::string tag =
            "kappa" + detail::fmt_tag(j.kappa) + "_g" + detail::fmt_tag(j.g1d);
        for (size_t i = 0; i < bands.size(); ++i) {
            const std::string suffix = tag + "_band" + std::to_string(bands[i]) + ".csv";
            if (wants(cfg, Observable::momentum)) {
                std::string s = "# momentum: n(k), normalized so trapezoid integral is 1\n" +
                                head_common;
                s += "# point: kappa=" + detail::fmt_num(j.kappa) +
                     " g1d=" + detail::fmt_num(j.g1d) +
                     " band=" + std::to_string(bands[i]) + "\n";
                s += "k,n\n";
                for (size_t a = 0; a < kvals.size(); ++a)
                    s += detail::fmt_num(kvals[a]) + "," +
                         detail::fmt_num(j.momentum[i][a]) + "\n";
                emit("momentum_" + suffix, s);
            }
            if (wants(cfg, Observable::rspdm))
                emit("rspdm_" + suffix,
                     matrix_csv("rspdm: rho(x1, x2), h * trace = 1", j.rho[i],
                                j.kappa, j.g1d));
            if (wants(cfg, Observable::wavefunction))
                emit("wavefunction_" + suffix,
                     matrix_csv("wavefunction: Psi(x1, x2), h^2 * sum Psi^2 = 1",
                                j.wavefunction[i], j.kappa, j.g1d));
        }
    }

    if (wants(cfg, Observable::hubbard_surface)) {
        std::string s = "# hubbard_surface: dimer ground-state entropy over (J, U)\n" +
                        head_common + "# eps: " + detail::fmt_num(cfg.hubbard_eps) + "\n" +
                        "J,U,S\n";
        for (const HubRow& r : hrows) {
            if (!r.ok) continue;
            s += detail::fmt_num(r.j) + "," + detail::fmt_num(r.u) + "," +
                 detail::fmt_num(r.s) + "\n";
        }
        emit("hubbard_surface.csv", s);
    }

    manifest["version"] = version;
    manifest["generated"] = detail::utc_stamp();  // manifest-only; CSVs carry none
    manifest["grid"] = {{"N", cfg.n}, {"h", cfg.h}};
    manifest["workers"] = cfg.workers;
    manifest["config"] = emit_config(cfg);
    manifest["points"] = nlohmann::json::array();
    int failed = 0;
    for (const SingleRow& r : srows) {
        nlohmann::json p{{"type", "single_particle"}, {"kappa", r.kappa},
                         {"status", r.ok ? "ok" : "failed"}};
        if (!r.ok) {
            p["error"] = r.error;
            ++failed;
        }
        manifest["points"].push_back(std::move(p));
    }
    for (const detail::PointJob& j : jobs) {
        nlohmann::json p{{"type", "two_body"}, {"kappa", j.kappa}, {"g1d", j.g1d},
                         {"status", j.ok ? "ok" : "failed"}};
        if (!j.ok) {
            p["error"] = j.error;
            ++failed;
        }
        manifest["points"].push_back(std::move(p));
    }
    for (const HubRow& r : hrows) {
        nlohmann::json p{{"type", "hubbard"}, {"J", r.j}, {"U", r.u},
                         {"status", r.ok ? "ok" : "failed"}};
        if (!r.ok) {
            p["error"] = r.error;
            ++failed;
        }
        manifest["points"].push_back(std::move(p));
    }
    manifest["failed"] = failed;
    out.failed_points = failed;

    out.manifest_json = manifest.dump(2) + "\n";
    {
        std::ofstream f(fs::path(cfg.out_dir) / "manifest.json", std::ios::binary);
        if (!f) throw error("cannot write manifest.json");
        f << out.manifest_json;
    }
    out.files.push_back("manifest.json");
    return out;
}

// Committed reference numbers: regenerating with the same pinned (n_fine,
// span) reproduces these files byte for byte (no timestamps).
inline std::vector<std::string> write_oracle_fixtures(const std::string& dir) {
    namespace fs = std::filesystem;
    fs::create_directories(dir);
    std::vector<std::string> files;
    const auto emit = [&](const std::string& name, const std::string& content) {
        std::ofstream f(fs::path(dir) / name, std::ios::binary);
        if (!f) throw error("cannot write fixture " + name);
        f << content;
        files.push_back(name);
    };

    {
        std::string s =
            "# fd_single_spectrum: finite-difference oracle, Dirichlet box\n"
            "# pinned: span=10 n_fine=2001 n_states=8\n"
            "# regenerate: dwell oracle --out <dir>\n"
            "kappa,span,n_fine,e0,e1,e2,e3,e4,e5,e6,e7\n";
        for (const double kappa : {0.0, 2.0, 5.0}) {
            const auto e = oracle::fd_single_spectrum(kappa, 10.0, 2001, 8);
            s += detail::fmt_num(kappa) + ",10,2001";
            for (const double v : e) s += "," + detail::fmt_full(v);
            s += "\n";
        }
        emit("fd_single_spectrum.csv", s);
    }

    {
        std::string s =
            "# fd_two_body_band: finite-difference oracle, product grid with\n"
            "# contact g1d/h_f on the x1 = x2 diagonal, Dirichlet box\n"
            "# pinned: n_fine=101, span=max(3, sqrt(kappa/2) + 1.7)\n"
            "# labels: s symmetric, a antisymmetric (ascending energy)\n"
            "# regenerate: dwell oracle --out <dir>\n"
            "kappa,g1d,n_fine,span,h_f,E0,E1,E2,E3,l0,l1,l2,l3\n";
        const std::pair<double, double> pts[] = {{0.0, 0.0}, {0.0, 2.0}, {0.0, 100.0},
                                                 {5.0, 0.0}, {5.0, 1.0}, {5.0, 2.0}};
        for (const auto& [kappa, g1d] : pts) {
            const auto band = oracle::fd_two_body_band(kappa, g1d, 101);
            s += detail::fmt_num(kappa) + "," + detail::fmt_num(g1d) + ",101," +
                 detail::fmt_full(band.span) + "," + detail::fmt_full(band.h);
            for (const double v : band.energies) s += "," + detail::fmt_full(v);
            for (const Exchange ex : band.exchange)
                s += (ex == Exchange::symmetric) ? ",s" : ",a";
            s += "\n";
        }
        emit("fd_two_body_band.csv", s);
    }

    {
        std::string s =
            "# dimer_partial_trace: numeric 3x3 ground vector (|20>, |11>, |02>)\n"
            "# traced to one-particle populations; no closed forms involved\n"
            "# regenerate: dwell oracle --out <dir>\n"
            "J,U,eps,c20,c11,c02,lambda1,lambda2\n";
        const std::array<double, 3> params[] = {
            {1.0, 1.0, 0.0}, {1.0, 0.0, 0.0}, {0.3, 5.0, 0.7}, {2.0, -1.0, -0.4}};
        for (const auto& [j, u, eps] : params) {
            Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> es(
                hamiltonian_matrix({j, u, eps}));
            Eigen::Vector3d v = es.eigenvectors().col(0);
            if (v[0] < 0.0) v = -v;  // deterministic sign
            const auto lam = oracle::dimer_partial_trace(v);
            s += detail::fmt_num(j) + "," + detail::fmt_num(u) + "," +
                 detail::fmt_num(eps);
            for (int i = 0; i < 3; ++i) s += "," + detail::fmt_full(v[i]);
            s += "," + detail::fmt_full(lam[0]) + "," + detail::fmt_full(lam[1]) + "\n";
        }
        emit("dimer_partial_trace.csv", s);
    }
    return files;
}

// DVR main path against the FD oracle at the pinned comparison points.
inline std::vector<oracle::OracleReport> oracle_reports() {
    pin_blas_threads();
    std::vector<oracle::OracleReport> reps;
    const Grid g = make_grid(61, 0.16);
    const std::string main_grid = "sinc-DVR N=61 h=0.16";
    for (const double kappa : {0.0, 2.0, 5.0}) {
        const double main_e = solve_single(g, kappa, 1)[0].energy;
        const double orc_e = oracle::fd_single_spectrum(kappa, 10.0, 2001, 1)[0];
        reps.push_back(oracle::make_report(
            "single_ground kappa=" + detail::fmt_num(kappa), main_e, orc_e,
            main_grid, "FD n_fine=2001 span=10"));
    }
    for (const double kappa : {0.0, 5.0})
        for (const double g1d : {0.0, 2.0}) {
            const double main_e = lowest_band(g, kappa, g1d)[0].energy;
            const auto band = oracle::fd_two_body_band(kappa, g1d, 101);
            reps.push_back(oracle::make_report(
                "two_body_ground kappa=" + detail::fmt_num(kappa) +
                    " g1d=" + detail::fmt_num(g1d),
                main_e, band.energies[0], main_grid,
                "FD n_fine=101 span=" + detail::fmt_num(band.span)));
        }
    return reps;
}

}
