// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure.  argv[1] (optional) is the CLI binary path for the determinism
// criterion.
#include <omp.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include "cartanlab/ball.hpp"
#include "cartanlab/cartan.hpp"
#include "cartanlab/group_spec.hpp"
#include "cartanlab/properness.hpp"
#include "cartanlab/report_io.hpp"
#include "cartanlab/sampling.hpp"
#include "cartanlab/spectral.hpp"

namespace fs = std::filesystem;
using namespace cartanlab;

namespace {

std::string g_cli_path;

bool criterion1_oracle_equivalence(std::string& detail) {
    Rng rng(1001);
    for (int n = 2; n <= 4; ++n) {
        for (std::uint64_t p : {2ull, 3ull, 5ull}) {
            const FieldDescriptor field = FieldDescriptor::padic(p);
            for (int i = 0; i < 1000; ++i) {
                const MatrixQ g = random_sl_rational(rng, n, 6);
                if (!(mu_nonarch_snf(g, field) == mu_nonarch_minors(g, field))) {
                    detail = "snf/minors mismatch at n=" + std::to_string(n) + " p=" + std::to_string(p);
                    return false;
                }
            }
        }
    }
    for (std::uint64_t p : {2ull, 3ull}) {
        const FieldDescriptor field = FieldDescriptor::laurent(p);
        for (int i = 0; i < 1000; ++i) {
            const MatrixL g = random_sl2_laurent(rng, p, 5);
            if (!(mu_nonarch_snf(g, field) == mu_nonarch_minors(g, field))) {
                detail = "laurent snf/minors mismatch at p=" + std::to_string(p);
                return false;
            }
        }
    }
    return true;
}

bool criterion2_mu_powers(std::string& detail) {
    for (std::uint64_t p : {2ull, 3ull, 5ull}) {
        const FieldDescriptor field = FieldDescriptor::laurent(p);
        for (long long n = 1; n <= 5; ++n) {
            const MatrixL u = laurent_unipotent(p, n);
            MatrixL power = u;
            for (int r = 1; r <= static_cast<int>(p) - 1; ++r) {
                if (!(mu(power, field).exact_scalar() == Frac(2 * n))) {
                    detail = "mu(u_" + std::to_string(n) + "^" + std::to_string(r) + ") scalar != " +
                             std::to_string(2 * n) + " at p=" + std::to_string(p);
                    return false;
                }
                power = power * u;
            }
        }
    }
    return true;
}

bool criterion3_subadditivity(std::string& detail) {
    Rng rng(1003);
    const FieldDescriptor padic2 = FieldDescriptor::padic(2);
    const FieldDescriptor real = FieldDescriptor::real();
    for (int i = 0; i < 10000; ++i) {
        const MatrixQ g = random_sl_rational(rng, 3, 5);
        const MatrixQ h = random_sl_rational(rng, 3, 5);
        if (!check_mu_subadditivity(g, h, padic2).nonnegative) {
            detail = "negative exact slack at sample " + std::to_string(i);
            return false;
        }
        if (!check_mu_subadditivity(g, h, real).nonnegative) {
            detail = "real slack below -1e-8 at sample " + std::to_string(i);
            return false;
        }
    }
    return true;
}

bool criterion4_equivariance(std::string& detail) {
    Rng rng(1004);
    const FieldDescriptor padic2 = FieldDescriptor::padic(2);
    const FieldDescriptor laurent2 = FieldDescriptor::laurent(2);
    const FieldDescriptor real = FieldDescriptor::real();
    auto close = [](const WeylVector& a, const WeylVector& b) {
        for (int i = 0; i < a.dim(); ++i) {
            if (std::fabs(a.coord(i) - b.coord(i)) > 1e-8) return false;
        }
        return true;
    };
    for (int i = 0; i < 1000; ++i) {
        const MatrixQ g = random_sl_rational(rng, 3, 5);
        if (!(mu(g.inverse(), padic2) == opposition_involution(mu(g, padic2)))) {
            detail = "padic iota-equivariance failed";
            return false;
        }
        const MatrixQ k1 = random_sl_padic_integral(rng, 3, 2);
        const MatrixQ k2 = random_sl_padic_integral(rng, 3, 2);
        if (!(mu(k1 * g * k2, padic2) == mu(g, padic2))) {
            detail = "padic K-bi-invariance failed";
            return false;
        }
    }
    for (int i = 0; i < 1000; ++i) {
        const MatrixL g = random_sl2_laurent(rng, 2, 5);
        if (!(mu(g.inverse(), laurent2) == opposition_involution(mu(g, laurent2)))) {
            detail = "laurent iota-equivariance failed";
            return false;
        }
        const MatrixL k1 = random_sl2_laurent_integral(rng, 2, 4);
        const MatrixL k2 = random_sl2_laurent_integral(rng, 2, 4);
        if (!(mu(k1 * g * k2, laurent2) == mu(g, laurent2))) {
            detail = "laurent K-bi-invariance failed";
            return false;
        }
    }
    int kept = 0;
    while (kept < 1000) {
        // keep the Gram spectrum within the range where double precision can
        // honor the 1e-8 tolerance: log-singular spread at most ~13
        const MatrixQ gq = random_sl_rational(rng, 3, 4, 3, 3);
        const MatrixD g = to_real(gq);
        const WeylVector m = mu(g, real);
        if (chamber_norm(m) > 9.0) continue;
        ++kept;
        if (!close(mu(gq.inverse(), real), opposition_involution(m))) {
            detail = "real iota-equivariance failed";
            return false;
        }
        const MatrixD k1 = random_orthogonal(rng, 3);
        const MatrixD k2 = random_orthogonal(rng, 3);
        if (!close(mu(k1 * g * k2, real), m)) {
            detail = "real K-bi-invariance failed";
            return false;
        }
    }
    return true;
}

bool criterion5_torsion_demo(std::string& detail) {
    const auto demo = torsion_demo(2, standard_torsion_pairs({1, 2, 3}), 4, 200000, true, {});
    for (const auto& c : demo.mu_checks) {
        if (!c.ok) {
            detail = "mu power check failed";
            return false;
        }
    }
    if (!demo.orders_all_p) {
        detail = "a non-identity element does not have order 2";
        return false;
    }
    std::set<long long> plus_norms, minus_norms;
    for (const auto& r : demo.report.rows) {
        const long long rounded = std::llround(r.norm * 1048576.0);
        if (r.label == ComponentLabel::c_plus()) plus_norms.insert(rounded);
        if (r.label == ComponentLabel::c_minus()) minus_norms.insert(rounded);
    }
    if (plus_norms.size() < 3 || minus_norms.size() < 3) {
        detail = "fewer than 3 distinct norms in a component: C_plus " + std::to_string(plus_norms.size()) +
                 ", C_minus " + std::to_string(minus_norms.size());
        return false;
    }
    if (demo.diagonal_hits.empty() || !demo.discrepancy) {
        detail = "diagonal-intersection list empty or flag not raised";
        return false;
    }
    // each listed element must verify left = right by exact matrix equality
    const auto gens = torsion_pair_group(2, standard_torsion_pairs({1, 2, 3}));
    const auto ball = generate_ball(gens, EnumConfig{4, 200000, true});
    for (const auto& hit : demo.diagonal_hits) {
        const auto* e = ball.find(hit.key);
        if (e == nullptr || !(e->element.left == e->element.right)) {
            detail = "diagonal hit does not verify left = right";
            return false;
        }
    }
    return true;
}

bool criterion6_graph_mechanics(std::string& detail) {
    const FieldDescriptor real = FieldDescriptor::real();
    const auto sanov = sanov_generator_set(real);
    const MatrixQ id = MatrixQ::identity(2, Rational::zero());

    for (int radius = 3; radius <= 5; ++radius) {
        const auto b = generate_ball(sanov, EnumConfig{radius, 200000, true});
        const auto t = graph_admissibility(b, {id, id}, real, {0.0, 1.0, 2.0});
        if (t.per_r.front().violation_count != 0) {
            detail = "trivial phi has violations at R = 0, radius " + std::to_string(radius);
            return false;
        }
        if (!t.admissible_at_scale) {
            detail = "trivial phi not admissible at radius " + std::to_string(radius);
            return false;
        }
    }
    const auto ball = generate_ball(sanov, EnumConfig{5, 200000, true});

    const auto ident = graph_admissibility(ball, {sanov.generators[0], sanov.generators[1]}, real, {0.0, 1.0, 2.0});
    for (const auto& st : ident.per_r) {
        if (st.violation_count != ball.size() - 1) {
            detail = "identity phi violation count is not 100% of non-identity elements";
            return false;
        }
    }

    const auto rows = graph_pair_rows(ball, {id, id}, real);
    const auto t12 = single_component_check(rows, Scenario::double_rank_one());
    if (!t12.has_component || !t12.exceptions.empty() || !t12.pass) {
        detail = "single-component check on the trivial graph is not (one component, zero exceptions)";
        return false;
    }
    return true;
}

bool criterion7_spectral_cross_oracle(std::string& detail) {
    Rng rng(1007);
    const FieldDescriptor field = FieldDescriptor::laurent(2);
    for (int i = 0; i < 100; ++i) {
        const MatrixL g = random_sl2_laurent_split(rng, 2, 4, 4);
        const WeylVector lambda = lyapunov_newton_polygon(g, field);
        if (lambda.exact_coord(0).is_zero()) {
            detail = "sampler produced equal slopes";
            return false;
        }
        const auto res = lyapunov_power_limit(g, field, 12);
        if (res.k_final != 12 || !(res.value == lambda)) {
            detail = "power limit != newton polygon at sample " + std::to_string(i);
            return false;
        }
        for (int m : {2, 3, 5}) {
            MatrixL power = g;
            for (int j = 1; j < m; ++j) power = power * g;
            const WeylVector lm = lyapunov_newton_polygon(power, field);
            for (int c = 0; c < 2; ++c) {
                if (!(lm.exact_coord(c) == lambda.exact_coord(c) * Frac(m))) {
                    detail = "lambda(g^m) != m lambda(g) at m=" + std::to_string(m);
                    return false;
                }
            }
        }
    }
    return true;
}

bool criterion8_free_ball_census(std::string& detail) {
    const auto sanov = sanov_generator_set();
    for (int radius = 0; radius <= 6; ++radius) {
        const auto ball = generate_ball(sanov, EnumConfig{radius, 2000000, true});
        std::size_t pow3 = 1;
        for (int i = 0; i < radius; ++i) pow3 *= 3;
        const std::size_t want_count = 2 * pow3 - 1;
        if (ball.size() != want_count) {
            detail = "|B_" + std::to_string(radius) + "| = " + std::to_string(ball.size()) + ", want " +
                     std::to_string(want_count);
            return false;
        }
        std::set<std::string> keys;
        for (const auto& e : ball.entries()) keys.insert(e.key);
        if (keys.size() != ball.size()) {
            detail = "key collision at radius " + std::to_string(radius);
            return false;
        }
    }
    return true;
}

bool criterion9_quadric(std::string& detail) {
    Rng rng(1009);
    const MatrixQ id = MatrixQ::identity(2, Rational::zero());
    for (int i = 0; i < 10000; ++i) {
        const MatrixQ g1 = random_sl_rational(rng, 2, 5);
        const MatrixQ g2 = random_sl_rational(rng, 2, 5);
        MatrixQ u(2, Rational::zero());
        for (int r = 0; r < 2; ++r) {
            for (int c = 0; c < 2; ++c) u.at(r, c) = random_rational(rng);
        }
        if (!quadric_check(g1, g2, u)) {
            detail = "quadric form not preserved at sample " + std::to_string(i);
            return false;
        }
    }
    Rng rng2(1010);
    for (int i = 0; i < 100; ++i) {
        const MatrixQ g = random_sl_rational(rng2, 2, 5);
        if (!(g * id * g.inverse() == id)) {
            detail = "diagonal pair does not fix the identity point";
            return false;
        }
    }
    return true;
}

bool criterion10_determinism(std::string& detail) {
    if (g_cli_path.empty()) {
        detail = "no CLI path given (pass the binary as argv[1])";
        return false;
    }
    const fs::path dir = fs::temp_directory_path() / "cartanlab_acceptance";
    fs::remove_all(dir);
    fs::create_directories(dir);
    const fs::path spec = dir / "torsion_pairs.json";
    write_file(spec.string(), save_group_spec_text(torsion_pair_group(2, standard_torsion_pairs({1, 2, 3}))));

    auto run = [&](int workers, const std::string& out) {
        std::ostringstream cmd;
        cmd << g_cli_path << " properness --input " << spec << " --radius 4 --workers " << workers << " --out "
            << (dir / out) << " > " << (dir / (out + ".log")) << " 2>&1";
        const int status = std::system(cmd.str().c_str());
        return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    };
    const int c1 = run(1, "w1");
    const int c8 = run(8, "w8");
    // the torsion family is a genuine VIOLATION; both runs must agree on it
    if (c1 != 4 || c8 != 4) {
        detail = "unexpected exit codes " + std::to_string(c1) + ", " + std::to_string(c8);
        return false;
    }
    for (const char* name : {"report.csv", "summary.json", "mu_scatter.svg"}) {
        std::ifstream a(dir / "w1" / name, std::ios::binary);
        std::ifstream b(dir / "w8" / name, std::ios::binary);
        std::stringstream sa, sb;
        sa << a.rdbuf();
        sb << b.rdbuf();
        if (sa.str().empty() || sa.str() != sb.str()) {
            detail = std::string(name) + " differs between --workers 1 and --workers 8";
            return false;
        }
    }
    return true;
}

} // namespace

int main(int argc, char** argv) {
    if (argc > 1) g_cli_path = argv[1];
    struct Criterion {
        int id;
        const char* name;
        std::function<bool(std::string&)> run;
        double budget_s;
    };
    const std::vector<Criterion> criteria{
        {1, "nonarchimedean mu oracle equivalence (snf = minors)", criterion1_oracle_equivalence, 60.0},
        {2, "unipotent power scalars mu(u_n^r) = 2n", criterion2_mu_powers, 1.0},
        {3, "subadditivity slack nonnegativity (10^4 pairs)", criterion3_subadditivity, 120.0},
        {4, "iota-equivariance and K-bi-invariance (10^3 per field)", criterion4_equivariance, 30.0},
        {5, "torsion demo: orders, components, diagonal hits", criterion5_torsion_demo, 60.0},
        {6, "graph mechanics: admissibility and component census", criterion6_graph_mechanics, 60.0},
        {7, "spectral cross-oracle: polygon = power limit, linearity", criterion7_spectral_cross_oracle, 60.0},
        {8, "free-ball census 2*3^L - 1 through L = 6", criterion8_free_ball_census, 10.0},
        {9, "quadric invariance on 10^4 triples", criterion9_quadric, 10.0},
        {10, "byte-identical properness outputs across workers", criterion10_determinism, 120.0},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        std::string detail;
        bool ok = false;
        try {
            ok = c.run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        const double secs =
            std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count() /
            1000.0;
        if (ok && secs > c.budget_s) {
            ok = false;
            detail = "over runtime budget of " + std::to_string(c.budget_s) + " s";
        }
        std::printf("[%s] criterion %2d: %s (%.2f s)%s%s\n", ok ? "PASS" : "FAIL", c.id, c.name, secs,
                    detail.empty() ? "" : " -- ", detail.c_str());
        if (!ok) ++failures;
    }
    return failures == 0 ? 0 : 1;
}
