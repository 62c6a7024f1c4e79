#include <CLI11.hpp>

#include "tvat/genfun.hpp"
#include "tvat/oracles.hpp"
#include "tvat/report.hpp"
#include "tvat/verify.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace tvat;

void emit(const std::string& text, const std::string& outpath) {
    if (outpath.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(outpath);
    if (!f) throw config_error("cannot open output file: " + outpath);
    f << text;
}

std::string emit_values(const std::string& format, const RunConfig& cfg,
                        const std::vector<ValueRecord>& recs) {
    if (format == "json") return values_to_json(cfg, recs);
    if (format == "csv") return values_to_csv(recs);
    return values_to_text(recs);
}

std::vector<std::string> poly_values(const UniPoly<Int>& p) {
    std::vector<std::string> v;
    for (long i = 0; i <= p.degree(); ++i) v.push_back(int_to_decimal(p.coeff(i)));
    return v;
}

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - t0)
        .count();
}

/// Z(P_{n,k}) or Z(T_{n,k}) by the cheapest available route.
Int table_value(const std::string& model, long n, long k, std::string& route) {
    if (k == n - 1) {
        route = "determinant";
        return model == "dt" ? zdt_det(n) : z20v_det(n);
    }
    if (k == n - 2) {
        route = "recursion";
        return z20v_det(n) - z20v_det(n - 1);
    }
    if (k == n - 3) {
        route = "recursion";
        if (model == "dt")
            return z20v_det(n) - zdt_poly(n).coeff(n - 2) -
                   Int(2 * n - 3) * z20v_det(n - 1);
        return z20v_det(n) - z20v_poly(n).coeff(1) -
               Int(2 * (n - 1)) * z20v_det(n - 1);
    }
    route = "oracle";
    if (model == "dt")
        throw config_error("triangle columns need k >= n-3; no route for n=" +
                           std::to_string(n) + ", k=" + std::to_string(k));
    return count_20v(n, k);  // throws with the supported bound when too large
}

int cmd_table(const RunConfig& cfg, const std::string& format,
              const std::string& outpath) {
    std::vector<ValueRecord> recs;
    long start = cfg.has_k ? cfg.k + 1 : 1;
    for (long n = start; n <= cfg.n_max; ++n) {
        auto t0 = std::chrono::steady_clock::now();
        ValueRecord r;
        r.kind = "table";
        r.model = cfg.model;
        r.n = n;
        long k = cfg.has_k ? cfg.k : n - 1;
        if (cfg.has_k) r.k = k;
        Int v = table_value(cfg.model, n, k, r.extra);
        r.values = {int_to_decimal(v)};
        r.ms = ms_since(t0);
        recs.push_back(std::move(r));
    }
    emit(emit_values(format, cfg, recs), outpath);
    return 0;
}

int cmd_refined(const RunConfig& cfg, const std::string& format,
                const std::string& outpath) {
    auto t0 = std::chrono::steady_clock::now();
    ValueRecord r;
    r.kind = "refined";
    r.model = cfg.model;
    r.n = cfg.n;
    if (cfg.model == "20v") {
        r.values = poly_values(z20v_poly(cfg.n));
    } else if (cfg.model == "dt") {
        r.values = poly_values(zdt_poly(cfg.n));
    } else {
        H6v h = h6v_value(cfg.n);
        r.values = poly_values(h.num);
        r.extra = "den=" + int_to_decimal(h.den);
    }
    r.ms = ms_since(t0);
    emit(emit_values(format, cfg, {r}), outpath);
    return 0;
}

int cmd_oracle(const RunConfig& cfg, bool refined, bool gamma,
               const std::string& boundary_file, bool print_boundary,
               const std::string& format, const std::string& outpath) {
    long n = cfg.n;
    long k = cfg.has_k ? cfg.k : n - 1;
    if (cfg.model == "20v" && gamma)
        throw config_error("the gamma weight applies to tilings only");
    if (cfg.model == "dt" && (print_boundary || !boundary_file.empty()))
        throw config_error("boundary specs apply to the ice model only");
    if (refined && cfg.has_k && k != n - 1)
        throw config_error("refined counts are defined on the full domain (k = n-1)");
    if (refined && !boundary_file.empty())
        throw config_error("refined counts assume the default boundary");

    if (print_boundary) {
        emit(boundary_to_json(default_boundary_spec(n, k)), outpath);
        return 0;
    }

    std::vector<ValueRecord> recs;
    auto t0 = std::chrono::steady_clock::now();
    if (cfg.model == "dt") {
        if (gamma) {
            UniPoly<Int> p = dt_gamma_oracle(n, k);
            ValueRecord r{"oracle", "dt", n, k, poly_values(p),
                          "gamma polynomial; value at 1 = " +
                              int_to_decimal(p.eval(Int(1))),
                          0.0};
            r.ms = ms_since(t0);
            recs.push_back(std::move(r));
        } else if (refined) {
            auto vals = dt_refined_oracle(n);
            Int total(0);
            std::vector<std::string> vs;
            for (const auto& v : vals) {
                total += v;
                vs.push_back(int_to_decimal(v));
            }
            ValueRecord r{"oracle", "dt", n, k, std::move(vs),
                          "total=" + int_to_decimal(total), 0.0};
            r.ms = ms_since(t0);
            recs.push_back(std::move(r));
        } else {
            ValueRecord r{"oracle", "dt",
                          n,        k,
                          {int_to_decimal(count_dt(n, k))},
                          "",       0.0};
            r.ms = ms_since(t0);
            recs.push_back(std::move(r));
        }
    } else {
        if (refined) {
            auto ref = refined_20v_oracle(n);
            ValueRecord rh{"oracle", "20v", n, k, {}, "entry=horizontal", 0.0};
            ValueRecord rd{"oracle", "20v", n, k, {}, "entry=diagonal", 0.0};
            for (const auto& v : ref.horiz) rh.values.push_back(int_to_decimal(v));
            for (const auto& v : ref.diag) rd.values.push_back(int_to_decimal(v));
            rh.ms = rd.ms = ms_since(t0) / 2;
            recs.push_back(std::move(rh));
            recs.push_back(std::move(rd));
        } else {
            Int v;
            std::string extra;
            if (!boundary_file.empty()) {
                std::ifstream f(boundary_file);
                if (!f) throw config_error("cannot read boundary file: " + boundary_file);
                std::stringstream ss;
                ss << f.rdbuf();
                BoundarySpec spec = boundary_from_json(ss.str());
                if (spec.n != n || spec.k != k)
                    throw config_error("boundary file is for n=" +
                                       std::to_string(spec.n) + ", k=" +
                                       std::to_string(spec.k) +
                                       "; pass matching --n/--k");
                validate_boundary(spec);
                v = count_20v(spec);
                extra = "boundary=" + boundary_file;
            } else {
                v = count_20v(n, k);
            }
            ValueRecord r{"oracle", "20v", n, k, {int_to_decimal(v)}, extra, 0.0};
            r.ms = ms_since(t0);
            recs.push_back(std::move(r));
        }
    }
    emit(emit_values(format, cfg, recs), outpath);
    return 0;
}

int cmd_verify(const RunConfig& cfg, const std::string& format,
               const std::string& outpath) {
    Bounds b = cfg.n_max >= 1 ? Bounds::capped(cfg.n_max) : Bounds{};
    auto results = run_suite(cfg.suite, b);
    std::string text;
    if (format == "json") text = checks_to_json(cfg, results);
    else if (format == "csv") text = checks_to_csv(results);
    else text = checks_to_text(results);
    emit(text, outpath);
    bool gating_failure = false;
    for (const auto& r : results)
        if (r.status == CheckStatus::fail &&
            (!r.conjecture || cfg.strict_conjecture))
            gating_failure = true;
    return gating_failure ? 1 : 0;
}

// --- SVG rendering -------------------------------------------------------

struct SvgCanvas {
    std::ostringstream body;
    double unit = 30, margin = 45, ymax = 0;
    double px(double x) const { return margin + x * unit; }
    double py(double y) const { return margin + (ymax - y) * unit; }
};

std::string svg_document(const SvgCanvas& c, double xspan, const std::string& title) {
    std::ostringstream os;
    double w = 2 * c.margin + xspan * c.unit;
    double h = 2 * c.margin + c.ymax * c.unit;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w
       << "\" height=\"" << h << "\" viewBox=\"0 0 " << w << " " << h << "\">\n";
    os << "  <title>" << title << "</title>\n";
    os << c.body.str();
    os << "</svg>\n";
    return os.str();
}

std::string render_dt(long n, long k) {
    if (k < 0 || k > n - 1 || k < n - 3)
        throw config_error("triangle renderings need n-3 <= k <= n-1");
    SvgCanvas c;
    c.ymax = 3 * n - 2;
    bool full = k == n - 1;
    // canonical family: path j rises j+1 times then falls j times
    for (long j = 0; j < n; ++j) {
        c.body << "  <polyline fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"2\"";
        if (!full) c.body << " stroke-dasharray=\"4 3\"";
        c.body << " points=\"";
        long x = 0, y = 2 * j;
        c.body << c.px(x) << "," << c.py(y);
        for (long s = 0; s < j + 1; ++s)
            c.body << " " << c.px(++x) << "," << c.py(++y);
        for (long s = 0; s < j; ++s)
            c.body << " " << c.px(++x) << "," << c.py(--y);
        c.body << "\"/>\n";
    }
    for (long j = 0; j < n; ++j) {
        c.body << "  <rect x=\"" << c.px(0) - 4 << "\" y=\"" << c.py(2 * j) - 4
               << "\" width=\"8\" height=\"8\" fill=\"#2ca02c\"/>\n";
        c.body << "  <circle cx=\"" << c.px(2 * j + 1) << "\" cy=\""
               << c.py(2 * j + 1) << "\" r=\"4\" fill=\"#d62728\"/>\n";
    }
    std::vector<std::pair<long, long>> forbidden;
    if (k <= n - 2) forbidden.push_back({n, 3 * n - 2});
    if (k <= n - 3) {
        forbidden.push_back({n - 1, 3 * n - 3});
        forbidden.push_back({n + 1, 3 * n - 3});
    }
    for (auto [fx, fy] : forbidden) {
        double x = c.px(fx), y = c.py(fy);
        c.body << "  <path d=\"M" << x - 5 << " " << y - 5 << " L" << x + 5 << " "
               << y + 5 << " M" << x - 5 << " " << y + 5 << " L" << x + 5 << " "
               << y - 5 << "\" stroke=\"#d62728\" stroke-width=\"2\"/>\n";
    }
    return svg_document(c, 2 * n - 1,
                        "Aztec triangle T(" + std::to_string(n) + "," +
                            std::to_string(k) + "): lattice path family");
}

std::string render_20v(long n, long k) {
    if (k < 0 || k > n - 1) throw config_error("ice renderings need 0 <= k <= n-1");
    SvgCanvas c;
    c.ymax = 2 * n - 1;
    auto bot = [&](long x) { return std::max(n - k, n + 1 - x); };
    auto in_dom = [&](long x, long y) {
        return x >= 1 && x <= n && y >= bot(x) && y <= 2 * n - 1;
    };
    for (long x = 1; x <= n; ++x)
        for (long y = bot(x); y <= 2 * n - 1; ++y) {
            auto edge = [&](long x2, long y2) {
                if (!in_dom(x2, y2)) return;
                c.body << "  <line x1=\"" << c.px(x) << "\" y1=\"" << c.py(y)
                       << "\" x2=\"" << c.px(x2) << "\" y2=\"" << c.py(y2)
                       << "\" stroke=\"#bbbbbb\" stroke-width=\"1\"/>\n";
            };
            edge(x + 1, y);      // E
            edge(x + 1, y - 1);  // SE
            edge(x, y - 1);      // S
        }
    for (const auto& s : default_boundary_spec(n, k).stubs) {
        double dx = 0, dy = 0;
        if (s.side == "W") dx = -1;
        else if (s.side == "NW") dx = -1, dy = 1;
        else if (s.side == "N") dy = 1;
        else if (s.side == "E") dx = 1;
        else if (s.side == "SE") dx = 1, dy = -1;
        else dy = -1;  // S
        double x0 = c.px(s.x), y0 = c.py(s.y);
        double x1 = c.px(s.x + 0.45 * dx), y1 = c.py(s.y + 0.45 * dy);
        c.body << "  <line x1=\"" << x0 << "\" y1=\"" << y0 << "\" x2=\"" << x1
               << "\" y2=\"" << y1 << "\" stroke=\"#555555\" stroke-width=\"1.5\"/>\n";
        c.body << "  <circle cx=\"" << x1 << "\" cy=\"" << y1 << "\" r=\"3.2\""
               << " fill=\"" << (s.occupied ? "#d62728" : "#ffffff")
               << "\" stroke=\"#555555\"/>\n";
    }
    for (long x = 1; x <= n; ++x)
        for (long y = bot(x); y <= 2 * n - 1; ++y)
            c.body << "  <circle cx=\"" << c.px(x) << "\" cy=\"" << c.py(y)
                   << "\" r=\"2.5\" fill=\"#333333\"/>\n";
    return svg_document(c, double(n),
                        "Pentagon P(" + std::to_string(n) + "," +
                            std::to_string(k) +
                            "): vertex grid with boundary edge stubs");
}

int cmd_render(const RunConfig& cfg, const std::string& outpath) {
    long k = cfg.has_k ? cfg.k : cfg.n - 1;
    std::string svg =
        cfg.model == "dt" ? render_dt(cfg.n, k) : render_20v(cfg.n, k);
    emit(svg, outpath);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact counts for pentagon ice configurations and Aztec triangle tilings"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(tvat::kVersion));

    std::string format = "text", outpath;
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    app.add_option("--out", outpath, "write output to a file instead of stdout");

    std::string model;
    long n = 1, k = 0, n_max = -1;
    std::string suite = "all";
    bool strict = false, refined = false, gamma = false, print_boundary = false;
    std::string boundary_file;

    auto* t = app.add_subcommand("table", "partition function tables");
    t->fallthrough();
    t->add_option("--model", model, "20v or dt")
        ->required()
        ->check(CLI::IsMember({"20v", "dt"}));
    auto* t_k = t->add_option("--pentagon", k, "fix the second index k of the domain")
                    ->check(CLI::NonNegativeNumber);
    t->add_option("--n-max", n_max, "largest n")->required()->check(CLI::PositiveNumber);

    auto* rf = app.add_subcommand("refined", "refined polynomial coefficients");
    rf->fallthrough();
    rf->add_option("--model", model, "20v, dt, or 6v")
        ->required()
        ->check(CLI::IsMember({"20v", "dt", "6v"}));
    rf->add_option("--n", n, "size")->required()->check(CLI::PositiveNumber);

    auto* o = app.add_subcommand("oracle", "independent combinatorial counts");
    o->fallthrough();
    o->add_option("--model", model, "20v or dt")
        ->required()
        ->check(CLI::IsMember({"20v", "dt"}));
    o->add_option("--n", n, "size")->required()->check(CLI::PositiveNumber);
    auto* o_k = o->add_option("--k", k, "domain truncation (default n-1)")
                    ->check(CLI::NonNegativeNumber);
    o->add_flag("--refined", refined, "split counts by boundary refinement");
    o->add_flag("--gamma", gamma, "weight long horizontal steps by gamma");
    o->add_option("--boundary", boundary_file, "JSON boundary spec to count against");
    o->add_flag("--print-boundary", print_boundary,
                "emit the default boundary spec as JSON and exit");

    auto* v = app.add_subcommand("verify", "run identity checks");
    v->fallthrough();
    v->add_option("--suite", suite, "check suite")
        ->check(CLI::IsMember(tvat::suite_names()));
    auto* v_n = v->add_option("--n-max", n_max, "cap every per-check bound")
                    ->check(CLI::PositiveNumber);
    v->add_flag("--strict-conjecture", strict,
                "let conjecture-consistency failures gate the exit code");

    auto* rd = app.add_subcommand("render", "SVG sketch of a domain");
    rd->fallthrough();
    rd->add_option("--model", model, "20v or dt")
        ->required()
        ->check(CLI::IsMember({"20v", "dt"}));
    rd->add_option("--n", n, "size")->required()->check(CLI::PositiveNumber);
    auto* rd_k = rd->add_option("--k", k, "domain truncation (default n-1)")
                     ->check(CLI::NonNegativeNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        tvat::RunConfig cfg;
        cfg.model = model;
        cfg.n = n;
        cfg.n_max = n_max;
        if (t->parsed()) {
            cfg.command = "table";
            cfg.has_k = t_k->count() > 0;
            cfg.k = k;
            cfg.n = -1;
            return cmd_table(cfg, format, outpath);
        }
        if (rf->parsed()) {
            cfg.command = "refined";
            return cmd_refined(cfg, format, outpath);
        }
        if (o->parsed()) {
            cfg.command = "oracle";
            cfg.has_k = o_k->count() > 0;
            cfg.k = k;
            return cmd_oracle(cfg, refined, gamma, boundary_file, print_boundary,
                              format, outpath);
        }
        if (v->parsed()) {
            cfg.command = "verify";
            cfg.suite = suite;
            cfg.strict_conjecture = strict;
            cfg.n = -1;
            if (v_n->count() == 0) cfg.n_max = -1;
            return cmd_verify(cfg, format, outpath);
        }
        cfg.command = "render";
        cfg.has_k = rd_k->count() > 0;
        cfg.k = k;
        return cmd_render(cfg, outpath);
    } catch (const tvat::config_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const tvat::parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
