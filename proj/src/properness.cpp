#include "cartanlab/properness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace cartanlab {

namespace {

std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

std::string factor_text(const WeylVector& x) {
    std::string out;
    for (int i = 0; i < x.dim(); ++i) {
        if (i) out += ';';
        out += x.is_exact() ? x.exact_coord(i).str() : fmt_double(x.coord(i));
    }
    return out;
}

constexpr double kWallTol = 1e-8;

} // namespace

Scenario Scenario::sl_mod_sl(int n) {
    if (n < 2) throw DimensionError("SL_n / SL_{n-1} scenario needs n >= 2");
    return {Kind::SLnModSLnMinus1, n};
}

std::string Scenario::str() const {
    if (kind == Kind::DoubleRankOne) return "double-rank-one";
    return "sl" + std::to_string(n) + "-mod-sl" + std::to_string(n - 1);
}

std::string ComponentLabel::str() const {
    switch (kind) {
        case Kind::Ci: return "C_" + std::to_string(i);
        case Kind::CPlus: return "C_plus";
        case Kind::CMinus: return "C_minus";
        case Kind::OnWall: return "OnWall";
    }
    return "?";
}

ComponentLabel classify_component(const WeylVector& x, const Scenario& s) {
    if (s.kind != Scenario::Kind::SLnModSLnMinus1) {
        throw DimensionError("scalar-pair scenario cannot classify a single Weyl vector");
    }
    if (x.dim() != s.n) throw DimensionError("Weyl vector dimension does not match the scenario");
    if (x.is_exact()) {
        for (int i = 0; i < x.dim(); ++i) {
            if (x.exact_coord(i).is_zero()) return ComponentLabel::on_wall();
        }
        for (int i = 0; i + 1 < x.dim(); ++i) {
            if (x.exact_coord(i).sign() > 0 && x.exact_coord(i + 1).sign() < 0) {
                return ComponentLabel::ci(i + 1);
            }
        }
        return ComponentLabel::on_wall(); // unreachable for sum-zero nonzero vectors
    }
    for (int i = 0; i < x.dim(); ++i) {
        if (std::fabs(x.coord(i)) <= kWallTol) return ComponentLabel::on_wall();
    }
    for (int i = 0; i + 1 < x.dim(); ++i) {
        if (x.coord(i) > 0 && x.coord(i + 1) < 0) return ComponentLabel::ci(i + 1);
    }
    return ComponentLabel::on_wall();
}

ComponentLabel classify_component(const PairWeyl& x, const Scenario& s) {
    if (s.kind != Scenario::Kind::DoubleRankOne) {
        throw DimensionError("SL_n scenario cannot classify a scalar pair");
    }
    if (x.left.dim() != 2 || x.right.dim() != 2) throw DimensionError("rank-one pair needs dim-2 factors");
    if (x.left.is_exact() && x.right.is_exact()) {
        const Frac u = x.left.exact_scalar();
        const Frac v = x.right.exact_scalar();
        if (u == v) return ComponentLabel::on_wall();
        return v > u ? ComponentLabel::c_plus() : ComponentLabel::c_minus();
    }
    const double u = x.left.scalar();
    const double v = x.right.scalar();
    if (std::fabs(u - v) <= kWallTol) return ComponentLabel::on_wall();
    return v > u ? ComponentLabel::c_plus() : ComponentLabel::c_minus();
}

double margin(const WeylVector& x, const Scenario& s) {
    if (s.kind != Scenario::Kind::SLnModSLnMinus1 || x.dim() != s.n) {
        throw DimensionError("margin: Weyl vector does not match the scenario");
    }
    double m = std::fabs(x.coord(0));
    for (int i = 1; i < x.dim(); ++i) m = std::min(m, std::fabs(x.coord(i)));
    return m;
}

double margin(const PairWeyl& x, const Scenario& s) {
    if (s.kind != Scenario::Kind::DoubleRankOne) throw DimensionError("margin: pair needs the pair scenario");
    return std::fabs(x.left.scalar() - x.right.scalar());
}

double mu_norm(const WeylVector& x, const Scenario&) { return chamber_norm(x); }

double mu_norm(const PairWeyl& x, const Scenario&) {
    return std::hypot(x.left.scalar(), x.right.scalar());
}

ComponentLabel iota_component(const ComponentLabel& c, const Scenario& s) {
    if (s.kind == Scenario::Kind::SLnModSLnMinus1 && c.kind == ComponentLabel::Kind::Ci) {
        return ComponentLabel::ci(s.n - c.i);
    }
    return c; // rank-one pair: iota acts trivially on components
}

ReportRow make_report_row(std::string word, int length, std::string key, const WeylVector& pt, const Scenario& s) {
    ReportRow r;
    r.word = std::move(word);
    r.length = length;
    r.key = std::move(key);
    r.mu_text = factor_text(pt);
    r.mu_coords = {pt.coords()};
    if (pt.dim() == 2) r.factor_scalars = {pt.scalar()};
    r.norm = mu_norm(pt, s);
    r.margin = margin(pt, s);
    r.label = classify_component(pt, s);
    return r;
}

ReportRow make_report_row(std::string word, int length, std::string key, const PairWeyl& pt, const Scenario& s) {
    ReportRow r;
    r.word = std::move(word);
    r.length = length;
    r.key = std::move(key);
    r.mu_text = factor_text(pt.left) + "|" + factor_text(pt.right);
    r.mu_coords = {pt.left.coords(), pt.right.coords()};
    r.factor_scalars = {pt.left.scalar(), pt.right.scalar()};
    r.norm = mu_norm(pt, s);
    r.margin = margin(pt, s);
    r.label = classify_component(pt, s);
    return r;
}

std::vector<double> default_thresholds(const std::vector<ReportRow>& rows) {
    std::vector<double> norms;
    for (const auto& r : rows) {
        if (!r.is_identity) norms.push_back(r.norm);
    }
    if (norms.empty()) return {0.0};
    std::sort(norms.begin(), norms.end());
    auto rank = [&](double q) {
        const std::size_t idx = static_cast<std::size_t>(std::ceil(q * static_cast<double>(norms.size())));
        return norms[std::min(norms.size() - 1, idx == 0 ? 0 : idx - 1)];
    };
    std::vector<double> t{0.0, rank(0.25), rank(0.5), rank(0.75)};
    t.erase(std::unique(t.begin(), t.end()), t.end());
    return t;
}

MarginReport build_margin_report(std::vector<ReportRow> rows, const Scenario& s, const FieldDescriptor& field,
                                 int ball_radius, std::vector<double> thresholds) {
    if (rows.empty()) throw Error("properness report needs a nonempty ball");
    if (thresholds.empty()) thresholds = default_thresholds(rows);
    std::sort(thresholds.begin(), thresholds.end());

    MarginReport rep;
    rep.scenario = s.str();
    rep.field = field.str();
    rep.ball_radius = ball_radius;
    rep.ball_size = rows.size();

    // census in a fixed label order
    std::vector<std::string> order;
    if (s.kind == Scenario::Kind::SLnModSLnMinus1) {
        for (int i = 1; i <= s.n - 1; ++i) order.push_back(ComponentLabel::ci(i).str());
    } else {
        order.push_back(ComponentLabel::c_minus().str());
        order.push_back(ComponentLabel::c_plus().str());
    }
    order.push_back(ComponentLabel::on_wall().str());
    for (const auto& name : order) {
        std::size_t count = 0;
        for (const auto& r : rows) {
            if (r.label.str() == name) ++count;
        }
        rep.census.emplace_back(name, count);
    }

    for (double t : thresholds) {
        MarginReport::ThresholdStat st;
        st.threshold = t;
        for (const auto& r : rows) {
            if (r.norm < t) continue;
            if (!st.any || r.margin < st.min_margin) {
                st.any = true;
                st.min_margin = r.margin;
                st.witness_word = r.word;
            }
        }
        rep.table.push_back(std::move(st));
    }

    const double t_min = thresholds.front();
    const double t_max = thresholds.back();
    for (const auto& r : rows) {
        if (!r.is_identity && r.label.is_wall() && r.norm >= t_min) rep.violations.push_back(r);
    }

    if (!rep.violations.empty()) {
        rep.verdict = "VIOLATION";
    } else {
        bool all_slices = true, nondecreasing = true;
        for (std::size_t i = 0; i < rep.table.size(); ++i) {
            if (!rep.table[i].any) all_slices = false;
            if (i > 0 && rep.table[i].any && rep.table[i - 1].any &&
                rep.table[i].min_margin < rep.table[i - 1].min_margin) {
                nondecreasing = false;
            }
        }
        bool top_wall_free = true;
        for (const auto& r : rows) {
            if (!r.is_identity && r.norm >= t_max && r.label.is_wall()) top_wall_free = false;
        }
        const bool growth = rep.table.size() >= 2 && rep.table.front().any && rep.table.back().any &&
                            rep.table.back().min_margin > rep.table.front().min_margin;
        rep.verdict = (all_slices && nondecreasing && growth && top_wall_free) ? "EMPIRICALLY_PROPER" : "INCONCLUSIVE";
    }

    const SingleComponentResult sc = single_component_check(rows, s);
    rep.component_found = sc.has_component;
    if (sc.has_component) {
        rep.component = sc.component.str();
        rep.component_iota = sc.iota_image.str();
    }
    rep.component_pass = sc.pass;
    rep.component_norm_budget = sc.exception_norm_budget;
    rep.component_exceptions = sc.exceptions;

    rep.orientation_note = "pairs are ordered (left, right); C_plus means the right scalar exceeds the left";
    rep.scale_note = "verdicts are scale-limited: a finite ball cannot certify properness";
    rep.rows = std::move(rows);
    return rep;
}

SingleComponentResult single_component_check(const std::vector<ReportRow>& rows, const Scenario& s) {
    SingleComponentResult out;
    std::vector<std::pair<std::string, std::size_t>> counts;
    for (const auto& r : rows) {
        if (r.label.is_wall()) continue;
        auto it = std::find_if(counts.begin(), counts.end(),
                               [&](const auto& c) { return c.first == r.label.str(); });
        if (it == counts.end()) {
            counts.emplace_back(r.label.str(), 1);
        } else {
            ++it->second;
        }
    }
    if (counts.empty()) return out; // everything on the walls: no valid component

    std::sort(counts.begin(), counts.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return a.first < b.first;
    });
    const std::string chosen = counts.front().first;
    out.has_component = true;
    for (const auto& r : rows) {
        if (!r.label.is_wall() && r.label.str() == chosen) {
            out.component = r.label;
            break;
        }
    }
    out.iota_image = iota_component(out.component, s);
    out.iota_symmetric = out.iota_image == out.component;

    std::vector<double> norms;
    norms.reserve(rows.size());
    for (const auto& r : rows) norms.push_back(r.norm);
    std::sort(norms.begin(), norms.end());
    const std::size_t idx = static_cast<std::size_t>(std::ceil(0.1 * static_cast<double>(norms.size())));
    out.exception_norm_budget = norms[std::min(norms.size() - 1, idx == 0 ? 0 : idx - 1)];

    for (const auto& r : rows) {
        if (r.is_identity) continue;
        if (r.label == out.component || r.label == out.iota_image) continue;
        out.exceptions.push_back(r);
    }
    out.pass = true;
    for (const auto& e : out.exceptions) {
        if (e.norm > out.exception_norm_budget) out.pass = false;
    }
    return out;
}

GraphCheckResult graph_admissibility_core(const std::vector<GraphRow>& rows, int ball_radius,
                                          const std::vector<double>& r_grid) {
    GraphCheckResult out;
    out.ball_radius = ball_radius;
    out.ball_size = rows.size();
    out.admissible_at_scale = true;
    for (double r : r_grid) {
        GraphCheckResult::RStat st;
        st.r = r;
        for (const auto& row : rows) {
            if (row.is_identity) continue;
            if (row.scalar_phi >= row.scalar_gamma - r) {
                ++st.violation_count;
                st.max_violation_length = std::max(st.max_violation_length, row.length);
                if (st.examples.size() < 5) st.examples.push_back(row);
            }
        }
        st.confined = st.violation_count == 0 || st.max_violation_length < ball_radius;
        if (!st.confined) out.admissible_at_scale = false;
        out.per_r.push_back(std::move(st));
    }
    return out;
}

MatrixL laurent_unipotent(std::uint64_t p, long long n) {
    MatrixL g(2, LaurentPoly(p));
    g.at(0, 0) = LaurentPoly::constant(p, 1);
    g.at(0, 1) = LaurentPoly::monomial(p, 1, -n);
    g.at(1, 1) = LaurentPoly::constant(p, 1);
    return g;
}

std::vector<std::pair<long long, long long>> standard_torsion_pairs(const std::vector<long long>& n_set) {
    std::vector<std::pair<long long, long long>> out;
    for (long long n : n_set) {
        out.emplace_back(n, 2 * n);
        out.emplace_back(2 * n, n);
    }
    return out;
}

GeneratorSet<PairElem<LaurentPoly>> torsion_pair_group(std::uint64_t p,
                                                       const std::vector<std::pair<long long, long long>>& pairs) {
    GeneratorSet<MatrixL> left{FieldDescriptor::laurent(p), 2, {}, {}};
    GeneratorSet<MatrixL> right{FieldDescriptor::laurent(p), 2, {}, {}};
    for (const auto& [a, b] : pairs) {
        left.generators.push_back(laurent_unipotent(p, a));
        left.labels.push_back("u" + std::to_string(a));
        right.generators.push_back(laurent_unipotent(p, b));
        right.labels.push_back("u" + std::to_string(b));
    }
    return pair_group(left, right);
}

TorsionDemoResult torsion_demo(std::uint64_t p, const std::vector<std::pair<long long, long long>>& pair_exponents,
                               int radius, std::size_t max_elements, bool parallel, std::vector<double> thresholds) {
    if (pair_exponents.empty()) throw Error("torsion demo needs at least one generator pair");
    const FieldDescriptor field = FieldDescriptor::laurent(p);
    TorsionDemoResult out;

    // mu(u_n^r) must have scalar 2n for 1 <= r < p
    std::vector<long long> exps;
    for (const auto& [a, b] : pair_exponents) {
        exps.push_back(a);
        exps.push_back(b);
    }
    std::sort(exps.begin(), exps.end());
    exps.erase(std::unique(exps.begin(), exps.end()), exps.end());
    for (long long n : exps) {
        const MatrixL u = laurent_unipotent(p, n);
        MatrixL power = u;
        for (int r = 1; r <= static_cast<int>(p) - 1; ++r) {
            const Frac scalar = mu(power, field).exact_scalar();
            out.mu_checks.push_back({n, r, scalar.str(), scalar == Frac(2 * n)});
            power = power * u;
        }
    }

    const auto gens = torsion_pair_group(p, pair_exponents);
    EnumConfig cfg{radius, max_elements, parallel};
    const auto ball = generate_ball(gens, cfg);
    out.ball_size = ball.size();

    out.orders_all_p = true;
    for (const auto& e : ball.entries()) {
        if (e.length == 0) continue;
        const auto ord = element_order(e.element, static_cast<int>(p));
        if (!ord || *ord != static_cast<int>(p)) {
            out.orders_all_p = false;
            out.order_offenders.push_back(e.word.str(gens.labels));
        }
    }

    const Scenario s = Scenario::double_rank_one();
    auto rows = make_report_rows(ball, field, s, parallel);
    out.report = build_margin_report(rows, s, field, ball.radius(), std::move(thresholds));

    for (const auto& r : out.report.rows) {
        if (r.is_identity || !r.label.is_wall()) continue;
        const auto* entry = ball.find(r.key);
        if (entry != nullptr && entry->element.left == entry->element.right) {
            out.diagonal_hits.push_back(r);
        }
    }
    if (!out.diagonal_hits.empty()) {
        out.discrepancy = true;
        out.discrepancy_note =
            "diagonal intersections: commuting unipotent factors make some products land exactly on the "
            "diagonal at unbounded norm, so the ball-scale verdict is VIOLATION for this torsion family; "
            "inspect diagonal_hits and try alternative pair families (--pairs)";
        out.report.discrepancy_note = out.discrepancy_note;
    }
    return out;
}

} // namespace cartanlab
