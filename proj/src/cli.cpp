#include "skinning/cli.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "skinning/constants.hpp"
#include "skinning/contraction.hpp"
#include "skinning/errors.hpp"
#include "skinning/oracles.hpp"
#include "skinning/surface.hpp"

namespace skinning {

namespace {

using json = nlohmann::ordered_json;

constexpr const char* kVersion = "0.1.0";

std::string fmt(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

std::string fmt(int v) { return std::to_string(v); }

// ---------------------------------------------------------------------------
// argument parsing helpers
// ---------------------------------------------------------------------------

std::pair<int, int> parse_int_range(const std::string& s) {
    const auto colon = s.find(':');
    const auto one = [](const std::string& part) {
        int v = 0;
        auto r = std::from_chars(part.data(), part.data() + part.size(), v);
        if (r.ec != std::errc() || r.ptr != part.data() + part.size()) {
            throw DomainError("bad integer '" + part + "'");
        }
        return v;
    };
    if (colon == std::string::npos) {
        const int v = one(s);
        return {v, v};
    }
    const int lo = one(s.substr(0, colon));
    const int hi = one(s.substr(colon + 1));
    if (hi < lo) throw DomainError("empty range '" + s + "'");
    return {lo, hi};
}

struct SystoleRange {
    double start, stop, step;
};

SystoleRange parse_systole_range(const std::string& s) {
    std::vector<std::string> parts;
    std::size_t pos = 0;
    while (true) {
        const auto colon = s.find(':', pos);
        parts.push_back(s.substr(pos, colon == std::string::npos ? colon : colon - pos));
        if (colon == std::string::npos) break;
        pos = colon + 1;
    }
    const auto one = [](const std::string& part) {
        double v = 0;
        auto r = std::from_chars(part.data(), part.data() + part.size(), v);
        if (r.ec != std::errc() || r.ptr != part.data() + part.size()) {
            throw DomainError("bad number '" + part + "'");
        }
        return v;
    };
    if (parts.size() == 1) return {one(parts[0]), one(parts[0]), 1.0};
    if (parts.size() != 3) throw DomainError("systole range must be start:stop:step");
    SystoleRange r{one(parts[0]), one(parts[1]), one(parts[2])};
    if (!(r.step > 0.0) || r.stop < r.start) throw DomainError("bad systole range '" + s + "'");
    return r;
}

std::vector<double> expand(const SystoleRange& r) {
    std::vector<double> out;
    for (int i = 0;; ++i) {
        const double v = r.start + i * r.step;
        if (v > r.stop + 1e-9 * r.step) break;
        out.push_back(v);
    }
    return out;
}

unsigned thread_cap() {
    if (const char* env = std::getenv("SKINNING_BOUNDS_THREADS")) {
        int v = 0;
        auto r = std::from_chars(env, env + std::string_view(env).size(), v);
        if (r.ec == std::errc() && v >= 1) return static_cast<unsigned>(v);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

// Strided parallel map; results land at their own index, so the caller's
// output order never depends on scheduling.
void parallel_for(std::size_t count, unsigned threads,
                  const std::function<void(std::size_t)>& body) {
    threads = std::min<std::size_t>(threads, count);
    if (threads <= 1) {
        for (std::size_t i = 0; i < count; ++i) body(i);
        return;
    }
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(threads);
    pool.reserve(threads);
    for (unsigned w = 0; w < threads; ++w) {
        pool.emplace_back([&, w] {
            try {
                for (std::size_t i = w; i < count; i += threads) body(i);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    for (auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
}

// ---------------------------------------------------------------------------
// report serialization
// ---------------------------------------------------------------------------

json tower_json(const TowerReal& x) {
    return json{{"render", render(x)},
                {"sign", x.sign()},
                {"recip", x.recip()},
                {"level", x.level()},
                {"mag", x.mag()}};
}

json report_json(const BoundReport& r) {
    json j;
    j["genus"] = r.genus;
    j["punctures"] = r.punctures;
    j["abs_chi"] = r.abs_chi;
    j["kappa"] = r.kappa;
    j["systole"] = r.systole;
    j["epsilon"] = r.epsilon;
    j["t"] = r.t;
    j["a1"] = r.a1;
    j["ln_a2"] = r.ln_a2;
    j["ln_c_finite"] = r.ln_c_finite;
    j["suppression_exponent"] = r.suppression_exponent;
    j["ln_c"] = tower_json(r.ln_c);
    j["c"] = tower_json(r.c);
    j["gap"] = tower_json(r.gap);
    j["norm_bound"] = json{{"render", render(r.norm_bound)},
                           {"one_minus", tower_json(r.norm_bound.deficit)}};
    j["loglog_ell_over_c"] = r.loglog_ell_over_c;
    j["asymptotic_rhs"] = r.asymptotic_rhs;
    j["asymptotic_ratio"] = r.asymptotic_ratio;
    return j;
}

const char* kSweepHeader =
    "g,n,abs_chi,kappa,ell,epsilon,t,a1,ln_a2,ln_C,loglog_ell_over_C,asymptotic_rhs,"
    "asymptotic_ratio";

std::vector<std::string> report_cells(const BoundReport& r) {
    return {fmt(r.genus),   fmt(r.punctures),          fmt(r.abs_chi),
            fmt(r.kappa),   fmt(r.systole),            fmt(r.epsilon),
            fmt(r.t),       fmt(r.a1),                 fmt(r.ln_a2),
            render(r.ln_c), fmt(r.loglog_ell_over_c),  fmt(r.asymptotic_rhs),
            fmt(r.asymptotic_ratio)};
}

std::string join_csv(const std::vector<std::string>& cells) {
    std::string line;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) line += ',';
        line += cells[i];
    }
    return line;
}

void print_report_text(const BoundReport& r, std::ostream& out) {
    out << "surface: genus=" << r.genus << " punctures=" << r.punctures
        << " |chi|=" << r.abs_chi << " kappa=" << r.kappa << "\n"
        << "systole: " << fmt(r.systole) << "\n"
        << "epsilon: " << fmt(r.epsilon) << "\n"
        << "t: " << fmt(r.t) << "\n"
        << "a1: " << fmt(r.a1) << "\n"
        << "ln_a2: " << fmt(r.ln_a2) << "\n"
        << "ln_C: " << render(r.ln_c) << "\n"
        << "C: " << render(r.c) << "\n"
        << "gap: " << render(r.gap) << "\n"
        << "norm_bound: " << render(r.norm_bound) << "\n"
        << "loglog_ell_over_C: " << fmt(r.loglog_ell_over_c) << "\n"
        << "asymptotic_rhs: " << fmt(r.asymptotic_rhs) << "\n"
        << "asymptotic_ratio: " << fmt(r.asymptotic_ratio) << "\n";
}

// ---------------------------------------------------------------------------
// subcommands
// ---------------------------------------------------------------------------

int cmd_bound(int genus, int punctures, double systole, std::optional<double> epsilon,
              double t, const std::string& format, std::ostream& out) {
    const SurfaceGeometry geom = make_geometry(make_topology(genus, punctures), systole, epsilon);
    const BoundReport r = contraction_constant(geom, t);
    if (format == "json") {
        out << report_json(r).dump(2) << "\n";
    } else if (format == "csv") {
        out << kSweepHeader << "\n" << join_csv(report_cells(r)) << "\n";
    } else {
        print_report_text(r, out);
    }
    return kExitOk;
}

struct SweepCell {
    int genus;
    int punctures;
    double systole;
};

int cmd_sweep(const std::string& genus_range, const std::string& punct_range,
              const std::string& systole_range, std::optional<double> epsilon, double t,
              const std::string& format, const std::string& output, std::ostream& out,
              std::ostream& err) {
    const auto [g_lo, g_hi] = parse_int_range(genus_range);
    const auto [n_lo, n_hi] = parse_int_range(punct_range);
    const std::vector<double> systoles = expand(parse_systole_range(systole_range));
    if (systoles.empty()) throw DomainError("empty systole range");
    if (epsilon && (!(*epsilon > 0.0) || *epsilon > universal_constants().eps0)) {
        throw EpsilonOutOfRangeError("epsilon " + fmt(*epsilon) + " outside (0, arcsinh(1)]");
    }
    if (!(t >= 1.0)) throw DomainError("sweep requires t >= 1");

    std::vector<SweepCell> cells;
    long skipped = 0;
    for (int g = g_lo; g <= g_hi; ++g) {
        for (int n = n_lo; n <= n_hi; ++n) {
            SurfaceTopology topo;
            try {
                topo = make_topology(g, n);
                if (topo.kappa == 0) throw KappaZeroError("kappa=0");
            } catch (const Error& e) {
                err << "sweep: skip (" << g << "," << n << "): " << e.what() << "\n";
                skipped += static_cast<long>(systoles.size());
                continue;
            }
            for (double l : systoles) {
                try {
                    make_geometry(topo, l, epsilon);
                } catch (const Error& e) {
                    err << "sweep: skip (" << g << "," << n << ",ell=" << fmt(l)
                        << "): " << e.what() << "\n";
                    ++skipped;
                    continue;
                }
                cells.push_back({g, n, l});
            }
        }
    }

    std::vector<BoundReport> reports(cells.size());
    parallel_for(cells.size(), thread_cap(), [&](std::size_t i) {
        const SweepCell& c = cells[i];
        reports[i] = contraction_constant(
            make_geometry(make_topology(c.genus, c.punctures), c.systole, epsilon), t);
    });

    std::ostringstream data;
    if (format == "json") {
        json arr = json::array();
        for (const auto& r : reports) arr.push_back(report_json(r));
        data << arr.dump(2) << "\n";
    } else if (format == "csv") {
        data << kSweepHeader << "\n";
        for (const auto& r : reports) data << join_csv(report_cells(r)) << "\n";
    } else {
        std::vector<std::vector<std::string>> rows;
        rows.emplace_back();
        {
            std::istringstream hdr(kSweepHeader);
            std::string col;
            while (std::getline(hdr, col, ',')) rows.back().push_back(col);
        }
        for (const auto& r : reports) rows.push_back(report_cells(r));
        std::vector<std::size_t> width(rows[0].size(), 0);
        for (const auto& row : rows) {
            for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
        }
        for (const auto& row : rows) {
            for (std::size_t i = 0; i < row.size(); ++i) {
                data << std::left << std::setw(static_cast<int>(width[i]) + 2) << row[i];
            }
            data << "\n";
        }
    }

    if (output.empty()) {
        out << data.str();
    } else {
        std::ofstream f(output, std::ios::binary);
        if (!f) throw IoError("cannot open output file '" + output + "'");
        f << data.str();
        if (!f) throw IoError("write failed for '" + output + "'");
    }
    err << "sweep: generated=" << reports.size() << " skipped=" << skipped << "\n";
    return kExitOk;
}

int cmd_constants(const std::string& format, std::ostream& out) {
    const UniversalConstants& k = universal_constants();
    const struct {
        const char* name;
        double value;
        const char* closed_form;
    } rows[] = {
        {"eps0", k.eps0, "arcsinh(1)"},
        {"c1", k.c1, "coth(pi/12)"},
        {"c2", k.c2, "arcsinh(tanh(pi/12))"},
        {"c3", k.c3, "pi*sinh(c2/2)/c2"},
        {"c4", k.c4, "(1-tanh^2(1/2))^2"},
        {"c5", k.c5, "4*pi*(1+sinh(1))"},
        {"c7", k.c7, "max_x x*arcsinh(csch(x/2))"},
    };
    if (format == "json") {
        json j;
        for (const auto& r : rows) j[r.name] = json{{"value", r.value}, {"closed_form", r.closed_form}};
        j["c6_printed"] = k.c6_printed;
        j["c6_formula"] = tower_json(k.c6_formula);
        out << j.dump(2) << "\n";
    } else if (format == "csv") {
        out << "name,value,closed_form\n";
        for (const auto& r : rows) out << r.name << ',' << fmt(r.value) << ',' << r.closed_form << "\n";
        out << "c6_printed," << fmt(k.c6_printed) << ",\n";
        out << "c6_formula," << render(k.c6_formula) << ",(e*c4)^(e^(2*c3+2))\n";
    } else {
        for (const auto& r : rows) {
            out << std::left << std::setw(11) << r.name << fmt(r.value) << "   (" << r.closed_form
                << ")\n";
        }
        out << std::left << std::setw(11) << "c6_printed" << fmt(k.c6_printed) << "\n";
        out << std::left << std::setw(11) << "c6_formula" << render(k.c6_formula)
            << "   ((e*c4)^(e^(2*c3+2)))\n";
    }
    return kExitOk;
}

int cmd_verify(long grid, std::optional<double> tol, std::ostream& out) {
    const std::vector<OracleResult> oracles = run_all_oracles(grid, tol);
    const std::vector<IdentityCheck> identities = check_constant_identities();
    long failures = 0;
    long documented = 0;

    out << "oracle suite (grid=" << grid;
    if (tol) out << ", tol=" << fmt(*tol);
    out << "):\n";
    for (const auto& o : oracles) {
        const char* status = o.passed ? "PASS" : o.documented_failure ? "DOCUMENTED-FAIL" : "FAIL";
        if (!o.passed && !o.documented_failure) ++failures;
        if (o.documented_failure) ++documented;
        out << "  " << std::left << std::setw(16) << status << std::setw(34) << o.claim_id
            << " worst_residual=" << fmt(o.worst_residual) << " at " << fmt(o.worst_point)
            << " samples=" << o.samples << "\n";
    }
    out << "constant identities:\n";
    for (const auto& c : identities) {
        const char* status = c.pass ? "PASS" : c.documented ? "DOCUMENTED-INCONSISTENT" : "FAIL";
        if (!c.pass && !c.documented) ++failures;
        if (c.documented) ++documented;
        out << "  " << std::left << std::setw(24) << status << std::setw(26) << c.name
            << " residual=" << fmt(c.residual) << " tol=" << fmt(c.tolerance);
        if (!c.note.empty()) out << "  [" << c.note << "]";
        out << "\n";
    }
    out << "verify: " << failures << " undocumented failure(s), " << documented
        << " documented finding(s)\n";
    return failures == 0 ? kExitOk : kExitVerifyFailure;
}

int cmd_asymptotic(int max_genus, const std::string& format, std::ostream& out,
                   std::ostream& err) {
    if (max_genus < 10) throw DomainError("--max-genus must be at least 10");
    std::vector<int> ladder;
    for (int decade = 10; decade <= max_genus; decade *= 10) {
        for (int m : {1, 2, 5}) {
            const int g = m * decade;
            if (g >= 10 && g <= max_genus) ladder.push_back(g);
        }
    }
    if (ladder.empty() || ladder.back() != max_genus) ladder.push_back(max_genus);

    struct Row {
        int g, n, chi, kappa;
        double loglog, rhs, ratio, leading_ratio;
    };
    std::vector<Row> rows;
    const double eps0 = universal_constants().eps0;
    for (int n_branch = 0; n_branch < 2; ++n_branch) {
        for (int g : ladder) {
            const int n = n_branch == 0 ? 0 : g;
            const SurfaceTopology topo = make_topology(g, n);
            const SurfaceGeometry geom = make_geometry(topo, short_geodesic_threshold());
            Row r;
            r.g = g;
            r.n = n;
            r.chi = topo.abs_chi;
            r.kappa = topo.kappa;
            r.loglog = loglog_ell_over_c(geom);
            r.rhs = asymptotic_rhs(topo);
            r.ratio = r.loglog / r.rhs;
            r.leading_ratio = r.loglog / (4.0 / eps0 * topo.abs_chi * topo.abs_chi);
            rows.push_back(r);
        }
    }

    const auto decreasing = [&](int n_branch) {
        bool ok = true;
        double prev = -1.0;
        for (const auto& r : rows) {
            if ((n_branch == 0) != (r.n == 0)) continue;
            const double dev = std::fabs(r.ratio - 1.0);
            if (prev >= 0.0 && dev >= prev) ok = false;
            prev = dev;
        }
        return ok;
    };

    if (format == "json") {
        json arr = json::array();
        for (const auto& r : rows) {
            arr.push_back(json{{"g", r.g},
                               {"n", r.n},
                               {"abs_chi", r.chi},
                               {"kappa", r.kappa},
                               {"loglog_ell_over_c", r.loglog},
                               {"asymptotic_rhs", r.rhs},
                               {"ratio", r.ratio},
                               {"leading_ratio", r.leading_ratio}});
        }
        json j;
        j["rows"] = arr;
        j["deviation_decreasing_n0"] = decreasing(0);
        j["deviation_decreasing_ng"] = decreasing(1);
        out << j.dump(2) << "\n";
    } else {
        const char* hdr = "g,n,abs_chi,kappa,loglog_ell_over_C,asymptotic_rhs,ratio,leading_ratio";
        if (format == "csv") {
            out << hdr << "\n";
            for (const auto& r : rows) {
                out << r.g << ',' << r.n << ',' << r.chi << ',' << r.kappa << ',' << fmt(r.loglog)
                    << ',' << fmt(r.rhs) << ',' << fmt(r.ratio) << ',' << fmt(r.leading_ratio)
                    << "\n";
            }
            err << "asymptotic: deviation decreasing (n=0): " << (decreasing(0) ? "yes" : "no")
                << ", (n=g): " << (decreasing(1) ? "yes" : "no") << "\n";
        } else {
            out << hdr << "\n";
            for (const auto& r : rows) {
                out << r.g << "  " << r.n << "  " << r.chi << "  " << r.kappa << "  "
                    << fmt(r.loglog) << "  " << fmt(r.rhs) << "  " << fmt(r.ratio) << "  "
                    << fmt(r.leading_ratio) << "\n";
            }
            out << "deviation |ratio-1| decreasing in g (n=0): " << (decreasing(0) ? "yes" : "no")
                << "\n";
            out << "deviation |ratio-1| decreasing in g (n=g): " << (decreasing(1) ? "yes" : "no")
                << "\n";
        }
    }
    return kExitOk;
}

std::vector<BoundaryComponent> parse_boundary(const std::string& spec) {
    std::vector<BoundaryComponent> out;
    std::size_t pos = 0;
    std::size_t index = 0;
    while (pos <= spec.size()) {
        const auto semi = spec.find(';', pos);
        const std::string item =
            spec.substr(pos, semi == std::string::npos ? semi : semi - pos);
        std::vector<std::string> parts;
        std::size_t p = 0;
        while (true) {
            const auto comma = item.find(',', p);
            parts.push_back(item.substr(p, comma == std::string::npos ? comma : comma - p));
            if (comma == std::string::npos) break;
            p = comma + 1;
        }
        if (parts.size() != 3) {
            throw DomainError("component " + std::to_string(index + 1) +
                              ": expected 'g,n,systole', got '" + item + "'");
        }
        BoundaryComponent c;
        try {
            c.genus = std::stoi(parts[0]);
            c.punctures = std::stoi(parts[1]);
            c.systole = std::stod(parts[2]);
        } catch (const std::exception&) {
            throw DomainError("component " + std::to_string(index + 1) + ": bad number in '" +
                              item + "'");
        }
        out.push_back(c);
        ++index;
        if (semi == std::string::npos) break;
        pos = semi + 1;
    }
    return out;
}

int cmd_skinning(const std::string& boundary_spec, const std::string& format, std::ostream& out) {
    const std::vector<BoundaryComponent> boundary = parse_boundary(boundary_spec);
    const SkinningResult res = skinning_factor(boundary);
    if (format == "json") {
        json arr = json::array();
        for (const auto& r : res.components) arr.push_back(report_json(r));
        json j;
        j["components"] = arr;
        j["dominating_component"] = res.dominating_index + 1;
        j["max_norm_bound"] = json{{"render", render(res.max_norm_bound)},
                                   {"one_minus", tower_json(res.max_norm_bound.deficit)}};
        out << j.dump(2) << "\n";
    } else if (format == "csv") {
        out << kSweepHeader << "\n";
        for (const auto& r : res.components) out << join_csv(report_cells(r)) << "\n";
    } else {
        for (std::size_t i = 0; i < res.components.size(); ++i) {
            const BoundReport& r = res.components[i];
            out << "component " << (i + 1) << ": (" << r.genus << "," << r.punctures
                << ") systole=" << fmt(r.systole) << "  norm_bound " << render(r.norm_bound)
                << "\n";
        }
        const BoundReport& dom = res.components[res.dominating_index];
        out << "max norm bound: component " << (res.dominating_index + 1) << " (" << dom.genus
            << "," << dom.punctures << "): " << render(res.max_norm_bound) << "\n";
    }
    return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Explicit contraction bounds for skinning maps / Poincare series operators"};
    app.require_subcommand(1);

    bool quiet = false;
    app.add_flag("-q,--quiet", quiet, "suppress the version banner");

    // bound
    auto* bound = app.add_subcommand("bound", "evaluate the bound for one surface");
    int genus = 0, punctures = 0;
    double systole = 0.0, t = 1.0;
    std::optional<double> epsilon;
    std::string format = "text";
    bound->add_option("-g,--genus", genus, "genus")->required();
    bound->add_option("-n,--punctures", punctures, "number of punctures")->required();
    bound->add_option("-l,--systole", systole, "systole in (0, 2*arcsinh(1)]")->required();
    bound->add_option("--epsilon", epsilon, "thickening parameter in (0, arcsinh(1)]");
    bound->add_option("-t,--t", t, "depth parameter t >= 1");
    bound->add_option("--format", format, "output format: text|json|csv");

    // sweep
    auto* sweep = app.add_subcommand("sweep", "evaluate the bound over a parameter grid");
    std::string genus_range, punct_range, systole_range, output;
    std::optional<double> sweep_eps;
    double sweep_t = 1.0;
    std::string sweep_format = "text";
    sweep->add_option("--genus", genus_range, "genus range 'a:b' or single value")->required();
    sweep->add_option("--punctures", punct_range, "puncture range 'a:b' or single value")
        ->required();
    sweep->add_option("--systole", systole_range, "systole range 'start:stop:step' or value")
        ->required();
    sweep->add_option("--epsilon", sweep_eps, "thickening parameter");
    sweep->add_option("-t,--t", sweep_t, "depth parameter t >= 1");
    sweep->add_option("--format", sweep_format, "output format: text|csv|json");
    sweep->add_option("-o,--output", output, "output file (default: stdout)");

    // constants
    auto* constants = app.add_subcommand("constants", "print the universal constants table");
    std::string const_format = "text";
    constants->add_option("--format", const_format, "output format: text|json|csv");

    // verify
    auto* verify = app.add_subcommand("verify", "run the oracle suite and identity checks");
    long grid = 10000;
    std::optional<double> tol;
    verify->add_option("--grid", grid, "scan grid size (>= 1000)");
    verify->add_option("--tol", tol, "override every oracle tolerance");

    // asymptotic
    auto* asym = app.add_subcommand("asymptotic", "study the log log expansion for large genus");
    int max_genus = 0;
    std::string asym_format = "text";
    asym->add_option("--max-genus", max_genus, "largest genus (>= 10)")->required();
    asym->add_option("--format", asym_format, "output format: text|json|csv");

    // skinning
    auto* skin = app.add_subcommand("skinning", "max norm bound over boundary components");
    std::string boundary;
    std::string skin_format = "text";
    skin->add_option("--boundary", boundary, "components 'g,n,systole;g,n,systole;...'")
        ->required();
    skin->add_option("--format", skin_format, "output format: text|json|csv");

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("skinning_bounds");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    }

    if (!quiet) err << "skinning-bounds " << kVersion << "\n";

    try {
        if (bound->parsed()) return cmd_bound(genus, punctures, systole, epsilon, t, format, out);
        if (sweep->parsed()) {
            return cmd_sweep(genus_range, punct_range, systole_range, sweep_eps, sweep_t,
                             sweep_format, output, out, err);
        }
        if (constants->parsed()) return cmd_constants(const_format, out);
        if (verify->parsed()) return cmd_verify(grid, tol, out);
        if (asym->parsed()) return cmd_asymptotic(max_genus, asym_format, out, err);
        if (skin->parsed()) return cmd_skinning(boundary, skin_format, out);
    } catch (const IoError& e) {
        err << "error: " << e.what() << "\n";
        return kExitIoError;
    } catch (const InternalError& e) {
        err << "internal error: " << e.what() << "\n";
        return kExitVerifyFailure;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    err << "error: no subcommand\n";
    return kExitInputError;
}

}  // namespace skinning
