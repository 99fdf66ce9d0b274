#include <omp.h>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <variant>

#include <CLI11.hpp>

#include "cartanlab/ball.hpp"
#include "cartanlab/cartan.hpp"
#include "cartanlab/group_spec.hpp"
#include "cartanlab/properness.hpp"
#include "cartanlab/report_io.hpp"
#include "cartanlab/sampling.hpp"
#include "cartanlab/scalar_io.hpp"
#include "cartanlab/spectral.hpp"

namespace fs = std::filesystem;
using namespace cartanlab;

namespace {

// exit codes: 0 pass, 2 parse, 3 math, 4 violation, 5 inconclusive, 6 element cap
constexpr int kExitParse = 2;
constexpr int kExitMath = 3;
constexpr int kExitViolation = 4;
constexpr int kExitInconclusive = 5;
constexpr int kExitCap = 6;

int fail(int code, const std::string& kind, const std::string& msg) {
    std::cerr << "error: code=" << code << " kind=" << kind << " msg=\"" << msg << "\"\n";
    return code;
}

FieldDescriptor parse_field_flag(const std::string& s) {
    if (s == "real") return FieldDescriptor::real();
    if (s.rfind("padic:", 0) == 0) return FieldDescriptor::padic(std::stoull(s.substr(6)));
    if (s.rfind("laurent:", 0) == 0) return FieldDescriptor::laurent(std::stoull(s.substr(8)));
    throw ParseError("field must be real, padic:<p> or laurent:<p>", 0);
}

std::vector<double> parse_double_list(const std::string& s) {
    std::vector<double> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) out.push_back(std::stod(item));
    }
    return out;
}

std::vector<long long> parse_ll_list(const std::string& s) {
    std::vector<long long> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) out.push_back(std::stoll(item));
    }
    return out;
}

std::vector<std::pair<long long, long long>> parse_pair_list(const std::string& s) {
    std::vector<std::pair<long long, long long>> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto colon = item.find(':');
        if (colon == std::string::npos) throw ParseError("pair list items look like a:b", 0);
        out.emplace_back(std::stoll(item.substr(0, colon)), std::stoll(item.substr(colon + 1)));
    }
    return out;
}

void write_run_meta(const std::string& dir, int workers) {
    // the one output with run-specific content, kept apart from the data files
    const auto now = std::chrono::system_clock::now().time_since_epoch();
    const auto secs = std::chrono::duration_cast<std::chrono::seconds>(now).count();
    std::ostringstream meta;
    meta << "{\n  \"workers\": " << workers << ",\n  \"unix_time\": " << secs << "\n}\n";
    write_file(dir + "/run_meta.json", meta.str());
}

struct CommonOpts {
    std::string input;
    std::string field_flag;
    int radius = 4;
    std::string thresholds;
    std::string r_grid = "0,1,2";
    std::string out_dir;
    int workers = 0; // 0 = library default
    std::string oracle = "snf";
};

void apply_workers(int workers) {
    if (workers > 0) omp_set_num_threads(workers);
}

Scenario scenario_for(const LoadedGroup& g) {
    return g.is_pair ? Scenario::double_rank_one() : Scenario::sl_mod_sl(g.n);
}

std::string weyl_line(const WeylVector& v) {
    std::string out = "mu = " + v.str();
    if (v.dim() == 2) {
        if (v.is_exact()) {
            out += "; scalar = " + v.exact_scalar().str();
        } else {
            char buf[32];
            std::snprintf(buf, sizeof buf, "%.9g", v.scalar());
            out += std::string("; scalar = ") + buf;
        }
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.9g", chamber_norm(v));
    out += std::string("; norm = ") + buf;
    out += "; iota = " + opposition_involution(v).str();
    return out;
}

template <class M>
WeylVector mu_with_oracle(const M& m, const FieldDescriptor& field, const std::string& oracle) {
    if (!field.nonarchimedean() || oracle == "snf") return mu(m, field);
    const WeylVector minors = mu_nonarch_minors(m, field);
    if (oracle == "minors") return minors;
    if (oracle == "both") {
        const WeylVector snf = mu_nonarch_snf(m, field);
        if (!(snf == minors)) throw Error("oracle disagreement between snf and minors paths");
        return snf;
    }
    throw ParseError("oracle must be snf, minors or both", 0);
}

FieldDescriptor override_field(const FieldDescriptor& from_spec, const std::string& flag, bool laurent_entries) {
    if (flag.empty()) return from_spec;
    const FieldDescriptor f = parse_field_flag(flag);
    if (laurent_entries != (f.kind == FieldKind::LaurentFormal)) {
        throw ParseError("--field override must match the entry domain of the input", 0);
    }
    return f;
}

int cmd_mu(const CommonOpts& opt) {
    // group specs get one line per generator; plain matrix specs get one line
    bool as_group = false;
    LoadedGroup g;
    try {
        g = load_group_spec_file(opt.input);
        as_group = true;
    } catch (const ParseError&) {
    }
    if (as_group && !g.is_pair) {
        const bool laurent_entries = g.field.kind == FieldKind::LaurentFormal;
        const FieldDescriptor field = override_field(g.field, opt.field_flag, laurent_entries);
        std::visit(
            [&](const auto& gens) {
                using Elem = std::decay_t<decltype(gens.generators[0])>;
                if constexpr (std::is_same_v<Elem, MatrixQ> || std::is_same_v<Elem, MatrixL>) {
                    for (std::size_t i = 0; i < gens.generators.size(); ++i) {
                        std::cout << gens.labels[i] << ": "
                                  << weyl_line(mu_with_oracle(gens.generators[i], field, opt.oracle)) << "\n";
                    }
                }
            },
            g.gens);
        return 0;
    }
    LoadedMatrix lm = load_matrix_spec_file(opt.input);
    const FieldDescriptor field =
        override_field(lm.field, opt.field_flag, std::holds_alternative<MatrixL>(lm.matrix));
    const WeylVector v = std::visit([&](const auto& m) { return mu_with_oracle(m, field, opt.oracle); }, lm.matrix);
    std::cout << weyl_line(v) << "\n";
    return 0;
}

template <class Elem>
int run_ball(const GeneratorSet<Elem>& gens, const Scenario& s, const CommonOpts& opt) {
    EnumConfig cfg{opt.radius, default_max_elements(), opt.workers != 1};
    try {
        const auto ball = generate_ball(gens, cfg);
        const auto rows = make_report_rows(ball, gens.field, s, cfg.parallel);
        std::cout << "ball radius " << ball.radius() << ": " << ball.size() << " elements\n";
        if (!opt.out_dir.empty()) {
            fs::create_directories(opt.out_dir);
            write_file(opt.out_dir + "/ball.csv", ball_csv(rows));
            write_run_meta(opt.out_dir, opt.workers);
        }
        return 0;
    } catch (const BallCapError<Elem>& e) {
        if (!opt.out_dir.empty()) {
            fs::create_directories(opt.out_dir);
            const auto rows = make_report_rows(e.partial_ball, gens.field, s, cfg.parallel);
            write_file(opt.out_dir + "/ball.csv", ball_csv(rows));
            write_file(opt.out_dir + "/TRUNCATED",
                       "partial result: completed radius " + std::to_string(e.completed_radius) + "\n");
            write_run_meta(opt.out_dir, opt.workers);
        }
        return fail(kExitCap, "cap", e.what());
    }
}

template <class Elem>
int run_properness(const GeneratorSet<Elem>& gens, const Scenario& s, const CommonOpts& opt) {
    EnumConfig cfg{opt.radius, default_max_elements(), opt.workers != 1};
    std::vector<double> thresholds =
        opt.thresholds.empty() ? std::vector<double>{} : parse_double_list(opt.thresholds);
    bool truncated = false;
    std::string cap_msg;
    MarginReport rep;
    try {
        const auto ball = generate_ball(gens, cfg);
        rep = properness_report(ball, s, gens.field, thresholds, cfg.parallel);
    } catch (const BallCapError<Elem>& e) {
        truncated = true;
        cap_msg = e.what();
        rep = properness_report(e.partial_ball, s, gens.field, thresholds, cfg.parallel);
    }
    if (!opt.out_dir.empty()) {
        fs::create_directories(opt.out_dir);
        write_file(opt.out_dir + "/report.csv", margin_report_csv(rep));
        write_file(opt.out_dir + "/summary.json", margin_report_summary_json(rep));
        write_file(opt.out_dir + "/mu_scatter.svg", margin_report_svg(rep));
        if (truncated) write_file(opt.out_dir + "/TRUNCATED", cap_msg + "\n");
        write_run_meta(opt.out_dir, opt.workers);
    }
    std::cout << "verdict: " << rep.verdict << " (ball size " << rep.ball_size << ")\n";
    if (!rep.discrepancy_note.empty()) std::cout << "note: " << rep.discrepancy_note << "\n";
    if (truncated) return fail(kExitCap, "cap", cap_msg);
    if (rep.verdict == "VIOLATION") return fail(kExitViolation, "verdict", "VIOLATION");
    if (rep.verdict == "INCONCLUSIVE") return fail(kExitInconclusive, "verdict", "INCONCLUSIVE");
    return 0;
}

template <class Elem>
int run_graph_check(const GeneratorSet<Elem>& gens, const std::vector<Elem>& phi, const CommonOpts& opt) {
    EnumConfig cfg{opt.radius, default_max_elements(), opt.workers != 1};
    const auto ball = generate_ball(gens, cfg);
    const auto grid = parse_double_list(opt.r_grid);
    const auto res = graph_admissibility(ball, phi, gens.field, grid, cfg.parallel);
    const auto pair_rows = graph_pair_rows(ball, phi, gens.field, cfg.parallel);
    const auto t12 = single_component_check(pair_rows, Scenario::double_rank_one());
    if (!opt.out_dir.empty()) {
        fs::create_directories(opt.out_dir);
        write_file(opt.out_dir + "/admissibility.csv", graph_check_csv(res));
        write_file(opt.out_dir + "/summary.json", graph_check_summary_json(res, &t12));
        write_run_meta(opt.out_dir, opt.workers);
    }
    std::cout << (res.admissible_at_scale ? "ADMISSIBLE-at-scale" : "NOT admissible at scale") << " (ball size "
              << res.ball_size << ")\n";
    if (!res.admissible_at_scale) return fail(kExitViolation, "verdict", "graph admissibility violated");
    return 0;
}

int cmd_torsion_demo(std::uint64_t p, const std::string& n_list, const std::string& pair_list, const CommonOpts& opt,
                     const std::string& emit_spec) {
    std::vector<std::pair<long long, long long>> pairs;
    if (!pair_list.empty()) {
        pairs = parse_pair_list(pair_list);
    } else {
        pairs = standard_torsion_pairs(parse_ll_list(n_list.empty() ? "1,2,3" : n_list));
    }
    if (!emit_spec.empty()) {
        write_file(emit_spec, save_group_spec_text(torsion_pair_group(p, pairs)));
        std::cout << "wrote " << emit_spec << "\n";
        return 0;
    }
    std::vector<double> thresholds =
        opt.thresholds.empty() ? std::vector<double>{} : parse_double_list(opt.thresholds);
    const auto demo =
        torsion_demo(p, pairs, opt.radius, default_max_elements(), opt.workers != 1, thresholds);
    if (!opt.out_dir.empty()) {
        fs::create_directories(opt.out_dir);
        write_file(opt.out_dir + "/report.csv", margin_report_csv(demo.report));
        write_file(opt.out_dir + "/summary.json", margin_report_summary_json(demo.report));
        write_file(opt.out_dir + "/torsion_summary.json", torsion_demo_summary_json(demo));
        write_file(opt.out_dir + "/mu_scatter.svg", margin_report_svg(demo.report));
        write_run_meta(opt.out_dir, opt.workers);
    }
    bool mu_ok = true;
    for (const auto& c : demo.mu_checks) mu_ok = mu_ok && c.ok;
    std::cout << "mu power checks: " << (mu_ok ? "ok" : "FAILED") << "; orders all p: "
              << (demo.orders_all_p ? "ok" : "FAILED") << "; ball size " << demo.ball_size << "\n";
    std::cout << "verdict: " << demo.report.verdict << "\n";
    if (demo.discrepancy) std::cout << "note: " << demo.discrepancy_note << "\n";
    if (!mu_ok || !demo.orders_all_p) return fail(kExitMath, "math", "demo checks failed");
    if (demo.report.verdict == "VIOLATION") return fail(kExitViolation, "verdict", "VIOLATION");
    if (demo.report.verdict == "INCONCLUSIVE") return fail(kExitInconclusive, "verdict", "INCONCLUSIVE");
    return 0;
}

int cmd_quadric(const CommonOpts& opt, int samples, unsigned long seed) {
    if (!opt.input.empty()) {
        // explicit triple: {"field":..., "n":2, "g1":..., "g2":..., "u":...}
        throw ParseError("explicit quadric input is not supported; use the random sweep", 0);
    }
    Rng rng(seed);
    // exact fixed point: the diagonal pair fixes u = identity
    const MatrixQ id = MatrixQ::identity(2, Rational::zero());
    for (int i = 0; i < samples; ++i) {
        const MatrixQ g1 = random_sl_rational(rng, 2, 5);
        const MatrixQ g2 = random_sl_rational(rng, 2, 5);
        MatrixQ u(2, Rational::zero());
        for (int r = 0; r < 2; ++r) {
            for (int c = 0; c < 2; ++c) u.at(r, c) = random_rational(rng);
        }
        if (!quadric_check(g1, g2, u)) return fail(kExitViolation, "verdict", "quadric form not preserved");
        if (!((g1 * id * g1.inverse()) == id)) return fail(kExitViolation, "verdict", "diagonal fixed point moved");
    }
    std::cout << "PASS: quadric form preserved on " << samples << " random triples\n";
    return 0;
}

int cmd_selftest() {
    int failures = 0;
    auto check = [&](const std::string& name, bool ok) {
        std::cout << (ok ? "[ok]   " : "[FAIL] ") << name << "\n";
        if (!ok) ++failures;
    };

    {
        Rng rng(1);
        bool ok = true;
        for (int i = 0; i < 200 && ok; ++i) {
            const Rational a = random_rational(rng, 50, 50), b = random_rational(rng, 50, 50);
            const auto va = a.valuation(2), vb = b.valuation(2);
            ok = (a * b).valuation(2) == va + vb;
            if (!(a + b).is_zero()) ok = ok && !((a + b).valuation(2) < min(va, vb));
        }
        check("valuation is a homomorphism (p=2)", ok);
    }
    {
        Rng rng(2);
        bool ok = true;
        const auto f2 = FieldDescriptor::padic(2);
        const auto f3 = FieldDescriptor::padic(3);
        for (int i = 0; i < 50 && ok; ++i) {
            const MatrixQ g = random_sl_rational(rng, 2 + i % 3, 6);
            ok = mu_nonarch_snf(g, f2) == mu_nonarch_minors(g, f2) &&
                 mu_nonarch_snf(g, f3) == mu_nonarch_minors(g, f3);
        }
        check("snf and minors oracles agree", ok);
    }
    {
        Rng rng(3);
        bool ok = true;
        const auto fp = FieldDescriptor::padic(2);
        for (int i = 0; i < 50 && ok; ++i) {
            const MatrixQ g = random_sl_rational(rng, 3, 6);
            ok = mu(g.inverse(), fp) == opposition_involution(mu(g, fp));
            const MatrixQ k = random_sl_padic_integral(rng, 3, 2);
            ok = ok && mu(k * g, fp) == mu(g, fp);
        }
        check("iota-equivariance and K-bi-invariance (padic:2)", ok);
    }
    {
        Rng rng(4);
        bool ok = true;
        const auto fp = FieldDescriptor::padic(2);
        const auto fr = FieldDescriptor::real();
        for (int i = 0; i < 200 && ok; ++i) {
            const MatrixQ g = random_sl_rational(rng, 3, 5), h = random_sl_rational(rng, 3, 5);
            ok = check_mu_subadditivity(g, h, fp).nonnegative && check_mu_subadditivity(g, h, fr).nonnegative;
        }
        check("mu subadditivity slacks nonnegative", ok);
    }
    {
        const auto gens = sanov_generator_set();
        const auto ball = generate_ball(gens, EnumConfig{4, 100000, true});
        check("free ball census 2*3^4-1", ball.size() == 161);
    }
    {
        Rng rng(5);
        bool ok = true;
        for (int i = 0; i < 500 && ok; ++i) {
            const MatrixQ g1 = random_sl_rational(rng, 2, 4), g2 = random_sl_rational(rng, 2, 4);
            MatrixQ u(2, Rational::zero());
            for (int r = 0; r < 2; ++r) {
                for (int c = 0; c < 2; ++c) u.at(r, c) = random_rational(rng);
            }
            ok = quadric_check(g1, g2, u);
        }
        check("quadric form preserved", ok);
    }

    if (failures > 0) return fail(kExitMath, "selftest", std::to_string(failures) + " suites failed");
    std::cout << "PASS: selftest\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"cartan-lab: Cartan projections and properness experiments over local fields"};
    app.require_subcommand(1);

    CommonOpts opt;
    std::uint64_t demo_p = 2;
    std::string demo_n, demo_pairs, emit_spec;
    int quadric_samples = 10000;
    unsigned long quadric_seed = 20240901;

    auto add_common = [&](CLI::App* sub, bool needs_input) {
        auto* in = sub->add_option("--input", opt.input, "path to a JSON group or matrix spec");
        if (needs_input) in->required();
        sub->add_option("--field", opt.field_flag, "real | padic:<p> | laurent:<p> (override)");
        sub->add_option("--radius", opt.radius, "word-ball radius");
        sub->add_option("--thresholds", opt.thresholds, "comma-separated norm thresholds");
        sub->add_option("--r-grid", opt.r_grid, "comma-separated R values for graph checks");
        sub->add_option("--out", opt.out_dir, "output directory");
        sub->add_option("--workers", opt.workers, "worker threads (results are worker-independent)");
        sub->add_option("--oracle", opt.oracle, "snf | minors | both");
    };

    auto* mu_cmd = app.add_subcommand("mu", "Cartan projection of a matrix");
    add_common(mu_cmd, true);
    auto* ball_cmd = app.add_subcommand("ball", "enumerate a word ball");
    add_common(ball_cmd, true);
    auto* prop_cmd = app.add_subcommand("properness", "margin analysis and verdict for a ball");
    add_common(prop_cmd, true);
    auto* graph_cmd = app.add_subcommand("graph-check", "graph admissibility and component census");
    add_common(graph_cmd, true);
    std::string phi_flag;
    graph_cmd->add_option("--phi", phi_flag, "trivial | identity (overrides the spec's phi)");
    auto* torsion_cmd = app.add_subcommand("torsion-demo", "unipotent pair family over F_p[t,1/t]");
    add_common(torsion_cmd, false);
    torsion_cmd->add_option("--p", demo_p, "characteristic (prime)");
    torsion_cmd->add_option("--n", demo_n, "comma-separated n set (pairs (n,2n),(2n,n))");
    torsion_cmd->add_option("--pairs", demo_pairs, "explicit pair exponents a:b,...");
    torsion_cmd->add_option("--emit-spec", emit_spec, "write the pair group spec and exit");
    auto* quadric_cmd = app.add_subcommand("quadric", "invariance of the 2x2 determinant form");
    add_common(quadric_cmd, false);
    quadric_cmd->add_option("--samples", quadric_samples, "random triples to test");
    quadric_cmd->add_option("--seed", quadric_seed, "RNG seed");
    auto* selftest_cmd = app.add_subcommand("selftest", "quick cross-module property suite");
    add_common(selftest_cmd, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return fail(kExitParse, "cli", e.what());
    }

    apply_workers(opt.workers);

    try {
        if (mu_cmd->parsed()) return cmd_mu(opt);
        if (selftest_cmd->parsed()) return cmd_selftest();
        if (quadric_cmd->parsed()) return cmd_quadric(opt, quadric_samples, quadric_seed);
        if (torsion_cmd->parsed()) return cmd_torsion_demo(demo_p, demo_n, demo_pairs, opt, emit_spec);

        if (ball_cmd->parsed() || prop_cmd->parsed()) {
            LoadedGroup g = load_group_spec_file(opt.input);
            if (!opt.field_flag.empty()) {
                const FieldDescriptor f = parse_field_flag(opt.field_flag);
                const bool laurent_entries = g.field.kind == FieldKind::LaurentFormal;
                if (laurent_entries != (f.kind == FieldKind::LaurentFormal)) {
                    throw ParseError("--field override must match the entry domain of the input", 0);
                }
                g.field = f;
            }
            const Scenario s = scenario_for(g);
            return std::visit(
                [&](auto& gens) {
                    gens.field = g.field;
                    return ball_cmd->parsed() ? run_ball(gens, s, opt) : run_properness(gens, s, opt);
                },
                g.gens);
        }

        if (graph_cmd->parsed()) {
            LoadedGroup g = load_group_spec_file(opt.input);
            if (g.is_pair) throw ParseError("graph-check expects a single-factor group plus phi", 0);
            auto run = [&](auto& gens, auto phi_images) {
                using Elem = std::decay_t<decltype(gens.generators[0])>;
                std::vector<Elem> phi = std::move(phi_images);
                if (phi_flag == "trivial") {
                    phi.assign(gens.generators.size(), Elem::identity_like(gens.generators[0]));
                } else if (phi_flag == "identity") {
                    phi = gens.generators;
                } else if (!phi_flag.empty()) {
                    throw ParseError("--phi must be trivial or identity", 0);
                }
                if (phi.empty()) throw ParseError("graph-check needs phi (in the spec or via --phi)", 0);
                return run_graph_check(gens, phi, opt);
            };
            if (std::holds_alternative<GeneratorSet<MatrixQ>>(g.gens)) {
                std::vector<MatrixQ> phi;
                if (g.phi) phi = std::get<std::vector<MatrixQ>>(*g.phi);
                return run(std::get<GeneratorSet<MatrixQ>>(g.gens), std::move(phi));
            }
            std::vector<MatrixL> phi;
            if (g.phi) phi = std::get<std::vector<MatrixL>>(*g.phi);
            return run(std::get<GeneratorSet<MatrixL>>(g.gens), std::move(phi));
        }
    } catch (const ParseError& e) {
        return fail(kExitParse, "parse", e.what());
    } catch (const Error& e) {
        return fail(kExitMath, "math", e.what());
    } catch (const std::exception& e) {
        return fail(kExitMath, "internal", e.what());
    }
    return fail(kExitParse, "cli", "no subcommand");
}
