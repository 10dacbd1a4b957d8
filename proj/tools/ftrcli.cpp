// Command-line front end: sweep any statistic of the FTR fading model,
// validate against Monte Carlo, and emit figure CSV/SVG artifacts.

#include <algorithm>
#include <atomic>
#include <clocale>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "ftr/mc.hpp"
#include "ftr/models.hpp"
#include "ftr/outage.hpp"
#include "ftr/quad.hpp"
#include "ftr/stats.hpp"

namespace {

using namespace ftr;

const quad::QuadSpec kSpec;

double db_to_lin(double db) { return std::pow(10.0, db / 10.0); }

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;

    void write_csv(std::ostream& os) const {
        for (size_t i = 0; i < header.size(); ++i)
            os << header[i] << (i + 1 == header.size() ? "\n" : ",");
        for (const auto& r : rows) {
            for (size_t i = 0; i < r.size(); ++i)
                os << fmt(r[i]) << (i + 1 == r.size() ? "\n" : ",");
        }
    }
};

void emit(const Table& t, const std::string& out) {
    if (out.empty()) {
        t.write_csv(std::cout);
    } else {
        std::ofstream f(out, std::ios::binary);
        if (!f) throw std::runtime_error("cannot open output file: " + out);
        t.write_csv(f);
    }
}

std::vector<double> linspace(double a, double b, int n) {
    std::vector<double> v(n);
    for (int i = 0; i < n; ++i) v[i] = a + (b - a) * i / (n - 1.0);
    return v;
}

// Evaluate one function per axis point on a small worker pool; results are
// assembled in axis order so output stays deterministic.
std::vector<std::vector<double>> pool_map(
    int n, const std::function<std::vector<double>(int)>& f) {
    std::vector<std::vector<double>> out(n);
    std::atomic<int> next{0};
    unsigned workers = std::max(1u, std::thread::hardware_concurrency());
    workers = std::min<unsigned>(workers, n);
    std::vector<std::thread> ts;
    std::exception_ptr err;
    std::mutex err_mtx;
    for (unsigned w = 0; w < workers; ++w) {
        ts.emplace_back([&] {
            for (int i = next.fetch_add(1); i < n; i = next.fetch_add(1)) {
                try {
                    out[i] = f(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lk(err_mtx);
                    if (!err) err = std::current_exception();
                    return;
                }
            }
        });
    }
    for (auto& t : ts) t.join();
    if (err) std::rethrow_exception(err);
    return out;
}

struct Common {
    double gamma_bar = 1.0;
    double m = 1.5;
    double k = 10.0;
    double delta = 0.5;
    std::uint64_t seed = 1;
    std::uint64_t samples = 100000;
    std::string out;
    bool validate = false;
    double tol = 3.0;  // sigma multiplier for validation

    FtrParams params() const { return FtrParams(gamma_bar, m, k, delta); }
};

struct Axis {
    double start;
    double stop;
    int points;

    std::vector<double> grid() const {
        if (points < 2) throw std::domain_error("axis: points must be >= 2");
        if (!(start < stop)) throw std::domain_error("axis: start must be < stop");
        return linspace(start, stop, points);
    }
};

void add_common(CLI::App* cmd, Common& c) {
    cmd->add_option("--gamma-bar", c.gamma_bar, "mean SNR (linear)");
    cmd->add_option("--m", c.m, "fluctuation shape parameter");
    cmd->add_option("--k", c.k, "specular-to-diffuse power ratio");
    cmd->add_option("--delta", c.delta, "specular similarity, 0..1");
    cmd->add_option("--seed", c.seed, "RNG seed");
    cmd->add_option("--samples", c.samples, "Monte Carlo sample count");
    cmd->add_option("--out", c.out, "output CSV path (default: stdout)");
    cmd->add_flag("--validate", c.validate, "attach Monte Carlo columns");
    cmd->add_option("--tol", c.tol, "validation tolerance in standard errors");
}

void add_axis(CLI::App* cmd, Axis& a, double start, double stop, int points) {
    a = {start, stop, points};
    cmd->add_option("--start", a.start, "axis start");
    cmd->add_option("--stop", a.stop, "axis stop");
    cmd->add_option("--points", a.points, "number of axis points");
}

// Tracks whether every validated point agreed within tol standard errors.
struct Validation {
    bool ok = true;
    void check(double analytic, double mc_est, double mc_se, double tol) {
        double slack = (mc_se > 0.0) ? tol * mc_se : 1e-9;
        if (std::fabs(analytic - mc_est) > slack) ok = false;
    }
};

void axis_defaults(const CLI::App* cmd, Axis& ax, double start, double stop, int points) {
    if (!cmd->count("--start")) ax.start = start;
    if (!cmd->count("--stop")) ax.stop = stop;
    if (!cmd->count("--points")) ax.points = points;
}

int finish(const Table& t, const Common& c, const Validation& v) {
    emit(t, c.out);
    if (c.validate && !v.ok) {
        std::cerr << "validation: at least one point outside " << c.tol
                  << " standard errors\n";
        return 1;
    }
    return 0;
}

// pdf/cdf validation shares one sample stream across the whole sweep.
int run_density_sweep(const Common& c, const Axis& ax, bool cdf) {
    FtrParams p = c.params();
    auto grid = ax.grid();
    Table t;
    t.header = {"x", cdf ? "cdf" : "pdf"};
    if (c.validate) {
        t.header.push_back("mc");
        t.header.push_back("mc_stderr");
    }
    std::vector<double> samples;
    if (c.validate) {
        samples = mc::sample_snr_vec(p, {c.samples, c.seed});
        std::sort(samples.begin(), samples.end());
    }
    double h = std::max(1e-3, (ax.stop - ax.start) / 400.0);
    auto rows = pool_map(ax.points, [&](int i) -> std::vector<double> {
        double x = grid[i];
        double a = cdf ? ftr_cdf(x, p, kSpec) : ftr_pdf(x, p, kSpec);
        std::vector<double> row{x, a};
        if (c.validate) {
            double n = static_cast<double>(samples.size());
            if (cdf) {
                double fe = mc::empirical_cdf(samples, {x})[0];
                row.push_back(fe);
                row.push_back(std::sqrt(std::max(fe * (1.0 - fe), 1.0 / n) / n));
            } else {
                double lo = std::max(0.0, x - h);
                auto e = mc::empirical_cdf(samples, {lo, x + h});
                double pr = e[1] - e[0];
                double width = (x + h) - lo;
                row.push_back(pr / width);
                row.push_back(std::sqrt(std::max(pr * (1.0 - pr), 1.0 / n) / n) / width);
            }
        }
        return row;
    });
    Validation v;
    for (auto& r : rows) {
        if (c.validate) v.check(r[1], r[2], r[3], c.tol);
        t.rows.push_back(std::move(r));
    }
    return finish(t, c, v);
}

// Sweeps whose MC column is the sample mean of g(snr).
int run_functional_sweep(const Common& c, const Axis& ax, const std::string& axis_name,
                         const std::string& value_name,
                         const std::function<double(double)>& analytic,
                         const std::function<std::function<double(double)>(double)>& make_g) {
    FtrParams p = c.params();
    auto grid = ax.grid();
    Table t;
    t.header = {axis_name, value_name};
    if (c.validate) {
        t.header.push_back("mc");
        t.header.push_back("mc_stderr");
    }
    auto rows = pool_map(ax.points, [&](int i) -> std::vector<double> {
        double xv = grid[i];
        std::vector<double> row{xv, analytic(xv)};
        if (c.validate) {
            auto est = mc::mc_functional(p, {c.samples, c.seed + static_cast<std::uint64_t>(i)},
                                         make_g(xv));
            row.push_back(est.estimate);
            row.push_back(est.stderr_);
        }
        return row;
    });
    Validation v;
    for (auto& r : rows) {
        if (c.validate) v.check(r[1], r[2], r[3], c.tol);
        t.rows.push_back(std::move(r));
    }
    return finish(t, c, v);
}

// ---------------------------------------------------------------- figures

struct Curve {
    std::string name;
    std::vector<double> y;
};

void write_svg(const std::string& path, const std::string& title, const std::string& xlabel,
               const std::string& ylabel, const std::vector<double>& x,
               const std::vector<Curve>& curves, bool logy) {
    const int w = 720, h = 480, ml = 70, mr = 160, mt = 40, mb = 50;
    const char* colors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                            "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"};
    double xmin = x.front(), xmax = x.back();
    double ymin = 1e300, ymax = -1e300;
    auto ty = [&](double v) { return logy ? std::log10(std::max(v, 1e-12)) : v; };
    for (const auto& cv : curves)
        for (double v : cv.y) {
            double u = ty(v);
            ymin = std::min(ymin, u);
            ymax = std::max(ymax, u);
        }
    if (ymax <= ymin) ymax = ymin + 1.0;
    auto px = [&](double v) { return ml + (v - xmin) / (xmax - xmin) * (w - ml - mr); };
    auto py = [&](double v) { return h - mb - (ty(v) - ymin) / (ymax - ymin) * (h - mt - mb); };

    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output file: " + path);
    f << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h
      << "\" viewBox=\"0 0 " << w << " " << h << "\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
      << "<text x=\"" << (ml + (w - ml - mr) / 2) << "\" y=\"22\" text-anchor=\"middle\" "
         "font-family=\"sans-serif\" font-size=\"15\">" << title << "</text>\n"
      << "<rect x=\"" << ml << "\" y=\"" << mt << "\" width=\"" << (w - ml - mr)
      << "\" height=\"" << (h - mt - mb) << "\" fill=\"none\" stroke=\"black\"/>\n";
    // ticks
    for (int i = 0; i <= 4; ++i) {
        double xv = xmin + (xmax - xmin) * i / 4.0;
        double yv = ymin + (ymax - ymin) * i / 4.0;
        double xpx = px(xv), ypy = h - mb - (yv - ymin) / (ymax - ymin) * (h - mt - mb);
        char xb[32], yb[32];
        std::snprintf(xb, sizeof xb, "%.3g", xv);
        std::snprintf(yb, sizeof yb, "%.3g", logy ? std::pow(10.0, yv) : yv);
        f << "<line x1=\"" << xpx << "\" y1=\"" << (h - mb) << "\" x2=\"" << xpx << "\" y2=\""
          << (h - mb + 5) << "\" stroke=\"black\"/>\n"
          << "<text x=\"" << xpx << "\" y=\"" << (h - mb + 18)
          << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">" << xb
          << "</text>\n"
          << "<line x1=\"" << (ml - 5) << "\" y1=\"" << ypy << "\" x2=\"" << ml << "\" y2=\""
          << ypy << "\" stroke=\"black\"/>\n"
          << "<text x=\"" << (ml - 8) << "\" y=\"" << (ypy + 4)
          << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" << yb
          << "</text>\n";
    }
    f << "<text x=\"" << (ml + (w - ml - mr) / 2) << "\" y=\"" << (h - 12)
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">" << xlabel
      << "</text>\n"
      << "<text x=\"18\" y=\"" << (mt + (h - mt - mb) / 2)
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\" "
         "transform=\"rotate(-90 18 " << (mt + (h - mt - mb) / 2) << ")\">" << ylabel
      << "</text>\n";
    for (size_t ci = 0; ci < curves.size(); ++ci) {
        const char* col = colors[ci % 8];
        f << "<polyline fill=\"none\" stroke=\"" << col << "\" stroke-width=\"1.5\" points=\"";
        for (size_t i = 0; i < x.size(); ++i) f << px(x[i]) << "," << py(curves[ci].y[i]) << " ";
        f << "\"/>\n";
        double ly = mt + 16 + 18.0 * ci;
        f << "<line x1=\"" << (w - mr + 10) << "\" y1=\"" << ly << "\" x2=\"" << (w - mr + 34)
          << "\" y2=\"" << ly << "\" stroke=\"" << col << "\" stroke-width=\"1.5\"/>\n"
          << "<text x=\"" << (w - mr + 40) << "\" y=\"" << (ly + 4)
          << "\" font-family=\"sans-serif\" font-size=\"12\">" << curves[ci].name
          << "</text>\n";
    }
    f << "</svg>\n";
}

void write_figure(const std::string& name, const std::string& title, const std::string& xlabel,
                  const std::string& ylabel, const std::string& out_dir,
                  const std::string& axis_name, const std::vector<double>& x,
                  const std::vector<Curve>& curves, bool logy) {
    std::filesystem::create_directories(out_dir);
    Table t;
    t.header.push_back(axis_name);
    for (const auto& c : curves) t.header.push_back(c.name);
    for (size_t i = 0; i < x.size(); ++i) {
        std::vector<double> row{x[i]};
        for (const auto& c : curves) row.push_back(c.y[i]);
        t.rows.push_back(std::move(row));
    }
    std::ofstream f(out_dir + "/" + name + ".csv", std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output file in " + out_dir);
    t.write_csv(f);
    write_svg(out_dir + "/" + name + ".svg", title, xlabel, ylabel, x, curves, logy);
}

int run_figure(const std::string& name, const std::string& out_dir, std::uint64_t seed,
               std::uint64_t samples) {
    if (name == "fig1") {
        // PDF via both formulations plus a Monte Carlo density overlay.
        double gb = 1.0, kk = 10.0, dd = 0.5;
        auto x = linspace(0.0, 4.0, 161);
        FtrParams p15(gb, 1.5, kk, dd), p3(gb, 3.0, kk, dd);
        Curve rs15{"pdf_rs_m1.5", {}}, rs3{"pdf_rs_m3", {}}, nak3{"pdf_nak_m3", {}};
        for (double xv : x) {
            rs15.y.push_back(ftr_pdf(xv, p15, kSpec));
            rs3.y.push_back(ftr_pdf(xv, p3, kSpec));
            nak3.y.push_back(ftr_pdf_integer(xv, p3, kSpec));
        }
        Curve mc15{"mc_m1.5", {}}, mc3{"mc_m3", {}};
        double h = 0.05;
        for (int which = 0; which < 2; ++which) {
            auto s = mc::sample_snr_vec(which == 0 ? p15 : p3, {samples, seed + which});
            std::sort(s.begin(), s.end());
            Curve& out = which == 0 ? mc15 : mc3;
            for (double xv : x) {
                double lo = std::max(0.0, xv - h);
                auto e = mc::empirical_cdf(s, {lo, xv + h});
                out.y.push_back((e[1] - e[0]) / ((xv + h) - lo));
            }
        }
        write_figure(name, "FTR SNR density, both formulations", "snr", "density", out_dir,
                     "x", x, {rs15, rs3, nak3, mc15, mc3}, false);
        return 0;
    }
    if (name == "fig2" || name == "fig3") {
        // Interference-limited MRC outage vs SIR threshold; mean SIR 10 dB.
        double gb = 10.0, kk = 10.0, dd = 0.6, p_i = 1.0;
        auto xdb = linspace(-10.0, 10.0, 81);
        std::vector<Curve> curves;
        if (name == "fig2") {
            for (double m : {0.5, 1.0, 1.5, 2.5}) {
                char nm[32];
                std::snprintf(nm, sizeof nm, "m%.3g", m);
                Curve c{nm, {}};
                for (double db : xdb)
                    c.y.push_back(
                        outage_b(ScenarioB(FtrParams(gb, m, kk, dd), 2, 1, p_i, db_to_lin(db))));
                curves.push_back(std::move(c));
            }
        } else {
            for (int n : {1, 2, 4}) {
                for (int l : {1, 2}) {
                    char nm[32];
                    std::snprintf(nm, sizeof nm, "N%d_L%d", n, l);
                    Curve c{nm, {}};
                    for (double db : xdb)
                        c.y.push_back(outage_b(
                            ScenarioB(FtrParams(gb, 2.5, kk, dd), n, l, p_i, db_to_lin(db))));
                    curves.push_back(std::move(c));
                }
            }
        }
        write_figure(name, "MRC outage probability vs SIR threshold", "SIR threshold (dB)",
                     "outage probability", out_dir, "rth_db", xdb, curves, true);
        return 0;
    }
    if (name == "fig4" || name == "fig5") {
        // CCI-plus-noise outage vs normalized SINR; L=2, P_I=0.01, N0=1.
        int L = 2;
        double p_i = 0.01, n0 = 1.0;
        auto xdb = linspace(0.0, 40.0, 81);
        std::vector<Curve> curves;
        struct Cfg {
            double m, k, d, rth;
            const char* nm;
        };
        std::vector<Cfg> cfgs;
        if (name == "fig4") {
            cfgs = {{1, 10, 0.6, 1, "m1_K10_d0.6"},
                    {2, 10, 0.6, 1, "m2_K10_d0.6"},
                    {3, 10, 0.6, 1, "m3_K10_d0.6"},
                    {2, 15, 0.6, 1, "m2_K15_d0.6"},
                    {2, 10, 0.2, 1, "m2_K10_d0.2"}};
        } else {
            cfgs = {{2, 10, 0.6, 6, "Rth6"}, {2, 10, 0.6, 8, "Rth8"}, {2, 10, 0.6, 10, "Rth10"}};
        }
        for (const auto& cf : cfgs) {
            Curve c{cf.nm, {}};
            for (double db : xdb) {
                double wbar = db_to_lin(db) * (L * p_i + n0);
                c.y.push_back(
                    outage_a(ScenarioA(FtrParams(wbar, cf.m, cf.k, cf.d), L, p_i, n0, cf.rth),
                             kSpec));
            }
            curves.push_back(std::move(c));
        }
        write_figure(name, "Outage probability with CCI and noise", "normalized SINR (dB)",
                     "outage probability", out_dir, "sinr_db", xdb, curves, true);
        return 0;
    }
    throw CLI::ValidationError("figure", "unknown figure name: " + name);
}

// ---------------------------------------------------------------- selftest

int run_selftest(const std::string& level, std::uint64_t seed) {
    std::uint64_t n_mc = level == "full" ? 10000000ull : 100000ull;
    struct Check {
        std::string name;
        bool ok;
        std::string detail;
    };
    std::vector<Check> checks;
    auto rel = [](double a, double b) {
        return std::fabs(a - b) / std::max(1e-300, std::fabs(b));
    };

    {
        double worst = 0.0;
        for (double m : {0.7, 1.0, 2.5})
            for (double k : {0.0, 3.0, 15.0})
                for (double d : {0.0, 0.5, 1.0}) {
                    FtrParams p(2.0, m, k, d);
                    for (double s : {-0.1, -1.0, -10.0}) {
                        double ti = lift_rs_metric(
                            [&](const RsParams& rs) { return rs_mgf(s, rs); }, p, kSpec);
                        worst = std::max(worst, rel(ftr_mgf(s, p), ti));
                    }
                }
        char d[64];
        std::snprintf(d, sizeof d, "max rel err %.3g", worst);
        checks.push_back({"mgf closed form vs theta integral", worst < 1e-10, d});
    }
    {
        double worst = 0.0;
        FtrParams p(1.0, 3.0, 10.0, 0.5);
        for (int i = 0; i < 50; ++i) {
            double x = 0.02 + 0.1 * i;
            worst = std::max(worst, rel(ftr_pdf_integer(x, p, kSpec), ftr_pdf(x, p, kSpec)));
        }
        char d[64];
        std::snprintf(d, sizeof d, "max rel err %.3g", worst);
        checks.push_back({"mixture equivalence (m=3)", worst < 1e-9, d});
    }
    {
        FtrParams p(1.0, 2.2, 3.0, 0.4);
        double s = -0.2, z = 1.5;
        double err = std::fabs(ftr_imgf_lower(s, z, p, kSpec) + ftr_imgf_upper(s, z, p, kSpec) -
                               ftr_mgf(s, p));
        char d[64];
        std::snprintf(d, sizeof d, "abs err %.3g", err);
        checks.push_back({"imgf lower+upper = mgf", err < 1e-12, d});
    }
    {
        FtrParams p(1.0, 2.0, 10.0, 0.6);
        double s = -0.3;
        double err = rel(ftr_igmgf(0, s, 0.0, p, kSpec), ftr_mgf(s, p));
        char d[64];
        std::snprintf(d, sizeof d, "rel err %.3g", err);
        checks.push_back({"igmgf(0,s,0) = mgf", err < 1e-9, d});
    }
    {
        FtrParams p(2.7, 1.7, 6.0, 0.3);
        double err = rel(ftr_moment(1, p), 2.7);
        char d[64];
        std::snprintf(d, sizeof d, "rel err %.3g", err);
        checks.push_back({"first moment = gamma_bar", err < 1e-9, d});
    }
    {
        FtrParams p(1.0, 2.0, 5.0, 0.9);
        double err = rel(ftr_cdf(1.0, p, kSpec, CdfPath::quadrature),
                         ftr_cdf(1.0, p, kSpec, CdfPath::phi2));
        char d[64];
        std::snprintf(d, sizeof d, "rel err %.3g", err);
        checks.push_back({"cdf dual-path agreement", err < 1e-6, d});
    }
    {
        FtrParams p(2.5, 1.8, 8.0, 0.6);
        auto est = mc::mc_mean_snr(p, {n_mc, seed});
        double dev = std::fabs(est.estimate - 2.5) / est.stderr_;
        char d[64];
        std::snprintf(d, sizeof d, "deviation %.2f sigma", dev);
        checks.push_back({"mc mean within 3 sigma", dev < 3.0, d});
    }
    {
        FtrParams p(1.0, 1.5, 10.0, 0.5);
        auto v = mc::sample_snr_vec(p, {n_mc, seed + 1});
        std::sort(v.begin(), v.end());
        std::vector<double> grid = linspace(0.05, 3.0, 30);
        auto emp = mc::empirical_cdf(v, grid);
        double eps = std::sqrt(std::log(2.0 / 1e-6) / (2.0 * static_cast<double>(n_mc)));
        double worst = 0.0;
        for (size_t i = 0; i < grid.size(); ++i)
            worst = std::max(worst, std::fabs(emp[i] - ftr_cdf(grid[i], p, kSpec)));
        char d[64];
        std::snprintf(d, sizeof d, "sup dev %.3g, bound %.3g", worst, eps);
        checks.push_back({"empirical cdf within DKW band", worst < eps, d});
    }

    bool all = true;
    for (const auto& c : checks) {
        std::printf("%-40s %s  (%s)\n", c.name.c_str(), c.ok ? "PASS" : "FAIL",
                    c.detail.c_str());
        if (!c.ok) all = false;
    }
    std::printf("selftest: %s\n", all ? "PASS" : "FAIL");
    return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    std::setlocale(LC_NUMERIC, "C");
    CLI::App app{"FTR fading model statistics and outage calculator"};
    app.require_subcommand(1);
    app.set_config("--config", "", "key=value configuration file");

    Common c;
    Axis ax{};
    int gn = 1;
    double gs = -1.0;
    int sc_l = 2, sc_n = 2;
    double sc_pi = 0.01, sc_n0 = 1.0, sc_rth = 1.0, sc_rth_db = 0.0;
    bool have_rth_db = false;
    std::string fig_name, fig_dir = ".", st_level = "fast";

    auto* pdf = app.add_subcommand("pdf", "probability density sweep");
    auto* cdf = app.add_subcommand("cdf", "distribution function sweep");
    auto* mgf = app.add_subcommand("mgf", "moment generating function sweep");
    auto* gmgf = app.add_subcommand("gmgf", "generalized MGF sweep over s");
    auto* mom = app.add_subcommand("moments", "raw moments over order n");
    auto* imgf = app.add_subcommand("imgf", "lower incomplete MGF sweep over z");
    auto* igmgf = app.add_subcommand("igmgf", "incomplete generalized MGF sweep over lambda");
    auto* oa = app.add_subcommand("outage-a", "CCI+noise outage vs normalized SINR (dB)");
    auto* ob = app.add_subcommand("outage-b", "MRC SIR outage vs threshold (dB)");
    auto* fig = app.add_subcommand("figure", "emit a preset figure as CSV + SVG");
    auto* st = app.add_subcommand("selftest", "run the built-in validation suite");

    for (auto* s : {pdf, cdf, mgf, gmgf, mom, imgf, igmgf, oa, ob}) add_common(s, c);
    add_axis(pdf, ax, 0.0, 5.0, 100);
    cdf->add_option("--start", ax.start);
    cdf->add_option("--stop", ax.stop);
    cdf->add_option("--points", ax.points);
    for (auto* s : {mgf, gmgf}) {
        s->add_option("--start", ax.start);
        s->add_option("--stop", ax.stop);
        s->add_option("--points", ax.points);
    }
    gmgf->add_option("--n", gn, "moment order weight");
    mom->add_option("--n", gn, "highest moment order");
    imgf->add_option("--s", gs, "fixed Laplace argument (<= 0)");
    imgf->add_option("--start", ax.start);
    imgf->add_option("--stop", ax.stop);
    imgf->add_option("--points", ax.points);
    igmgf->add_option("--n", gn, "moment order weight");
    igmgf->add_option("--s", gs, "fixed Laplace argument (<= 0)");
    igmgf->add_option("--start", ax.start);
    igmgf->add_option("--stop", ax.stop);
    igmgf->add_option("--points", ax.points);
    for (auto* s : {oa, ob}) {
        s->add_option("--start", ax.start);
        s->add_option("--stop", ax.stop);
        s->add_option("--points", ax.points);
        s->add_option("--L", sc_l, "number of interferers");
        s->add_option("--p-i", sc_pi, "mean interferer power");
    }
    oa->add_option("--n0", sc_n0, "noise power");
    oa->add_option("--r-th", sc_rth, "SINR threshold (linear)");
    auto* rdb = oa->add_option("--r-th-db", sc_rth_db, "SINR threshold (dB)");
    ob->add_option("--n-antennas", sc_n, "receive antennas");
    fig->add_option("name", fig_name, "fig1|fig2|fig3|fig4|fig5")->required();
    fig->add_option("--out", fig_dir, "output directory");
    fig->add_option("--seed", c.seed, "RNG seed");
    fig->add_option("--samples", c.samples, "Monte Carlo sample count");
    st->add_option("--level", st_level, "fast|full")
        ->check(CLI::IsMember({"fast", "full"}));
    st->add_option("--seed", c.seed, "RNG seed");

    try {
        app.parse(argc, argv);
        have_rth_db = rdb->count() > 0;

        if (pdf->parsed()) return run_density_sweep(c, ax, false);
        if (cdf->parsed()) {
            axis_defaults(cdf, ax, 0.0, 5.0, 100);
            return run_density_sweep(c, ax, true);
        }
        if (mgf->parsed() || gmgf->parsed()) {
            bool g = gmgf->parsed();
            axis_defaults(g ? gmgf : mgf, ax, -10.0, -0.1, 50);
            FtrParams p = c.params();
            int n = g ? gn : 0;
            return run_functional_sweep(
                c, ax, "s", g ? "gmgf" : "mgf",
                [&](double s) { return g ? ftr_gmgf(n, s, p) : ftr_mgf(s, p); },
                [&](double s) {
                    return [s, n](double x) { return std::pow(x, n) * std::exp(s * x); };
                });
        }
        if (mom->parsed()) {
            FtrParams p = c.params();
            Axis axn{0.0, static_cast<double>(std::max(1, gn)), std::max(1, gn) + 1};
            return run_functional_sweep(
                c, axn, "n", "moment",
                [&](double nv) { return ftr_moment(static_cast<int>(std::lround(nv)), p); },
                [&](double nv) {
                    int n = static_cast<int>(std::lround(nv));
                    return [n](double x) { return std::pow(x, n); };
                });
        }
        if (imgf->parsed() || igmgf->parsed()) {
            bool g = igmgf->parsed();
            axis_defaults(g ? igmgf : imgf, ax, 0.01, 5.0, 50);
            FtrParams p = c.params();
            if (g) p.m_int();  // integer-m only; throws otherwise
            int n = g ? gn : 0;
            double s = gs;
            return run_functional_sweep(
                c, ax, g ? "lambda" : "z", g ? "igmgf" : "imgf",
                [&](double zv) {
                    return g ? ftr_igmgf(n, s, zv, p, kSpec) : ftr_imgf_lower(s, zv, p, kSpec);
                },
                [&](double zv) {
                    return [zv, s, n, g](double x) {
                        if (g) return x > zv ? std::pow(x, n) * std::exp(s * x) : 0.0;
                        return x <= zv ? std::exp(s * x) : 0.0;
                    };
                });
        }
        if (oa->parsed()) {
            axis_defaults(oa, ax, 0.0, 30.0, 31);
            double rth = have_rth_db ? db_to_lin(sc_rth_db) : sc_rth;
            auto grid = ax.grid();
            Table t;
            t.header = {"sinr_db", "outage"};
            if (c.validate) {
                t.header.push_back("mc");
                t.header.push_back("mc_stderr");
            }
            auto rows = pool_map(ax.points, [&](int i) -> std::vector<double> {
                double wbar = db_to_lin(grid[i]) * (sc_l * sc_pi + sc_n0);
                ScenarioA sc(FtrParams(wbar, c.m, c.k, c.delta), sc_l, sc_pi, sc_n0, rth);
                std::vector<double> row{grid[i], outage_a(sc, kSpec)};
                if (c.validate) {
                    auto est = mc::mc_outage_a(
                        sc, {c.samples, c.seed + static_cast<std::uint64_t>(i)});
                    row.push_back(est.estimate);
                    row.push_back(est.stderr_);
                }
                return row;
            });
            Validation v;
            for (auto& r : rows) {
                if (c.validate) v.check(r[1], r[2], r[3], c.tol);
                t.rows.push_back(std::move(r));
            }
            return finish(t, c, v);
        }
        if (ob->parsed()) {
            axis_defaults(ob, ax, -10.0, 10.0, 21);
            if (!ob->count("--L")) sc_l = 1;
            if (!ob->count("--p-i")) sc_pi = 1.0;
            auto grid = ax.grid();
            Table t;
            t.header = {"rth_db", "outage"};
            if (c.validate) {
                t.header.push_back("mc");
                t.header.push_back("mc_stderr");
            }
            auto rows = pool_map(ax.points, [&](int i) -> std::vector<double> {
                ScenarioB sc(c.params(), sc_n, sc_l, sc_pi, db_to_lin(grid[i]));
                std::vector<double> row{grid[i], outage_b(sc)};
                if (c.validate) {
                    auto est = mc::mc_outage_b(
                        sc, {c.samples, c.seed + static_cast<std::uint64_t>(i)});
                    row.push_back(est.estimate);
                    row.push_back(est.stderr_);
                }
                return row;
            });
            Validation v;
            for (auto& r : rows) {
                if (c.validate) v.check(r[1], r[2], r[3], c.tol);
                t.rows.push_back(std::move(r));
            }
            return finish(t, c, v);
        }
        if (fig->parsed()) return run_figure(fig_name, fig_dir, c.seed, c.samples);
        if (st->parsed()) return run_selftest(st_level, c.seed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
