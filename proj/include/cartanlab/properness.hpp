#pragma once

#include <exception>
#include <optional>
#include <string>
#include <vector>

#include "cartanlab/ball.hpp"
#include "cartanlab/cartan.hpp"
#include "cartanlab/pair_element.hpp"
#include "cartanlab/weyl.hpp"

namespace cartanlab {

/// Homogeneous-space scenario the wall geometry comes from: SL_n modulo the
/// upper-left SL_{n-1} (walls x_i = 0), or a product of two rank-one groups
/// modulo the diagonal (wall u = v on the scalar pair).
struct Scenario {
    enum class Kind { SLnModSLnMinus1, DoubleRankOne };

    Kind kind = Kind::SLnModSLnMinus1;
    int n = 2;

    static Scenario sl_mod_sl(int n);
    static Scenario double_rank_one() { return {Kind::DoubleRankOne, 2}; }

    std::string str() const;
    bool operator==(const Scenario&) const = default;
};

/// Connected component of V+ minus the walls (or the wall set itself).
struct ComponentLabel {
    enum class Kind { Ci, CPlus, CMinus, OnWall };

    Kind kind = Kind::OnWall;
    int i = 0; // 1-based, Ci only

    static ComponentLabel ci(int i) { return {Kind::Ci, i}; }
    static ComponentLabel c_plus() { return {Kind::CPlus, 0}; }
    static ComponentLabel c_minus() { return {Kind::CMinus, 0}; }
    static ComponentLabel on_wall() { return {Kind::OnWall, 0}; }

    bool is_wall() const { return kind == Kind::OnWall; }
    std::string str() const;
    bool operator==(const ComponentLabel&) const = default;
};

/// Component of x in the scenario's chamber decomposition.  Exact sign tests
/// in nonarchimedean fields, 1e-8 wall tolerance over the reals.
ComponentLabel classify_component(const WeylVector& x, const Scenario& s);
ComponentLabel classify_component(const PairWeyl& x, const Scenario& s);

/// Distance proxy to the wall set: min_i |x_i| for SL_n / SL_{n-1}, |u - v|
/// for the rank-one pair scalars.  Two-sided comparable to the Euclidean
/// wall distance: with m = min_i |x_i|, every wall point is at distance
/// >= sqrt(n/(n-1)) * m (a wall zeroes a coordinate inside the sum-zero
/// hyperplane), and zeroing the minimal coordinate, repairing the sum on the
/// largest one, and re-sorting lands on a wall within 2*sqrt(2) * m.  For
/// the pair case the diagonal distance is exactly |u - v| / sqrt(2).  So a
/// margin is an exact integer in nonarchimedean runs and diverges along a
/// sequence iff the wall distance does.
double margin(const WeylVector& x, const Scenario& s);
double margin(const PairWeyl& x, const Scenario& s);

/// Norm used in reports: chamber norm, or l2 of the scalar pair.
double mu_norm(const WeylVector& x, const Scenario& s);
double mu_norm(const PairWeyl& x, const Scenario& s);

/// Component image under the opposition involution: C_i -> C_{n-i} for SL_n,
/// identity on the rank-one pair components.
ComponentLabel iota_component(const ComponentLabel& c, const Scenario& s);

inline WeylVector mu_element(const MatrixQ& g, const FieldDescriptor& f) { return mu(g, f); }
inline WeylVector mu_element(const MatrixL& g, const FieldDescriptor& f) { return mu(g, f); }

template <class S>
PairWeyl mu_element(const PairElem<S>& g, const FieldDescriptor& f) {
    return {mu(g.left, f), mu(g.right, f)};
}

/// One ball element, normalized for reporting.
struct ReportRow {
    std::string word;
    int length = 0;
    std::string mu_text;                       // ';'-joined coords, '|' between factors
    std::vector<std::vector<double>> mu_coords; // per factor
    std::vector<double> factor_scalars;         // per dim-2 factor: x1 - x2
    double norm = 0.0;
    double margin = 0.0;
    ComponentLabel label;
    std::string key;
    bool is_identity = false;
};

ReportRow make_report_row(std::string word, int length, std::string key, const WeylVector& pt, const Scenario& s);
ReportRow make_report_row(std::string word, int length, std::string key, const PairWeyl& pt, const Scenario& s);

namespace detail {

/// Parallel map with exception transport: a throw inside an OpenMP region
/// must not escape it, so the first failure is stashed and rethrown after.
template <class Fn>
void parallel_indexed(std::size_t count, bool parallel, Fn&& fn) {
    std::exception_ptr failure = nullptr;
#pragma omp parallel for schedule(dynamic, 8) if (parallel)
    for (std::size_t i = 0; i < count; ++i) {
        try {
            fn(i);
        } catch (...) {
#pragma omp critical(cartanlab_parallel_failure)
            if (failure == nullptr) failure = std::current_exception();
        }
    }
    if (failure != nullptr) std::rethrow_exception(failure);
}

} // namespace detail

/// mu-image rows for every ball element, in ball order (length, then key).
/// The parallel flag only changes scheduling, never the result.
template <class Elem>
std::vector<ReportRow> make_report_rows(const Ball<Elem>& ball, const FieldDescriptor& field, const Scenario& s,
                                        bool parallel = true) {
    const auto& entries = ball.entries();
    std::vector<ReportRow> rows(entries.size());
    const auto& labels = ball.generators().labels;
    detail::parallel_indexed(entries.size(), parallel, [&](std::size_t i) {
        const auto& e = entries[i];
        rows[i] = make_report_row(e.word.str(labels), e.length, e.key, mu_element(e.element, field), s);
        rows[i].is_identity = e.length == 0;
    });
    return rows;
}

/// Per-scenario properness analysis of one ball.
struct MarginReport {
    std::string scenario;
    std::string field;
    int ball_radius = 0;
    std::size_t ball_size = 0;
    std::vector<ReportRow> rows;
    std::vector<std::pair<std::string, std::size_t>> census; // label -> count, fixed order
    struct ThresholdStat {
        double threshold = 0.0;
        bool any = false;         // slice nonempty
        double min_margin = 0.0;  // over elements with norm >= threshold
        std::string witness_word; // element attaining it
    };
    std::vector<ThresholdStat> table;
    std::string verdict; // EMPIRICALLY_PROPER | VIOLATION | INCONCLUSIVE
    std::vector<ReportRow> violations; // margin-0 rows past the smallest threshold
    // single-component census: the dominant component and its exceptions
    bool component_found = false;
    std::string component;
    std::string component_iota;
    bool component_pass = false;
    double component_norm_budget = 0.0;
    std::vector<ReportRow> component_exceptions;
    std::string orientation_note;
    std::string scale_note;
    std::string discrepancy_note; // empty unless a demo raised a structural flag
};

/// Verdict rules: VIOLATION if any non-identity element sits on a wall with
/// norm >= min threshold; EMPIRICALLY_PROPER if every threshold slice is
/// nonempty, the per-threshold min margins grow from first to last and no
/// non-identity element with norm >= max threshold is on a wall; otherwise
/// INCONCLUSIVE.  A finite ball can never prove properness; the verdict is
/// explicitly scale-limited.
MarginReport build_margin_report(std::vector<ReportRow> rows, const Scenario& s, const FieldDescriptor& field,
                                 int ball_radius, std::vector<double> thresholds);

template <class Elem>
MarginReport properness_report(const Ball<Elem>& ball, const Scenario& s, const FieldDescriptor& field,
                               std::vector<double> thresholds, bool parallel = true) {
    return build_margin_report(make_report_rows(ball, field, s, parallel), s, field, ball.radius(),
                               std::move(thresholds));
}

/// Nearest-rank percentiles {0, q25, q50, q75} of the non-identity norms.
std::vector<double> default_thresholds(const std::vector<ReportRow>& rows);

/// Ball-scale check of the single-component statement: picks the strict
/// component with the most mu-images, lists non-identity elements outside
/// C u iota(C), and passes when every exception has norm within the bottom
/// decile of ball norms.
struct SingleComponentResult {
    bool has_component = false;
    ComponentLabel component;
    ComponentLabel iota_image;
    bool iota_symmetric = false;
    std::vector<ReportRow> exceptions;
    double exception_norm_budget = 0.0;
    bool pass = false;
};

SingleComponentResult single_component_check(const std::vector<ReportRow>& rows, const Scenario& s);

template <class Elem>
SingleComponentResult single_component_check(const Ball<Elem>& ball, const Scenario& s, const FieldDescriptor& field) {
    return single_component_check(make_report_rows(ball, field, s), s);
}

/// Scalar data for the graph-admissibility test on rank-one groups.
struct GraphRow {
    std::string word;
    int length = 0;
    double scalar_gamma = 0.0; // mu scalar of gamma
    double scalar_phi = 0.0;   // mu scalar of phi(gamma)
    bool is_identity = false;
};

struct GraphCheckResult {
    struct RStat {
        double r = 0.0;
        std::size_t violation_count = 0;
        int max_violation_length = -1;
        bool confined = false; // violations (if any) stop short of the ball radius
        std::vector<GraphRow> examples; // at most a handful, for reporting
    };
    std::vector<RStat> per_r;
    bool admissible_at_scale = false;
    int ball_radius = 0;
    std::size_t ball_size = 0;
};

GraphCheckResult graph_admissibility_core(const std::vector<GraphRow>& rows, int ball_radius,
                                          const std::vector<double>& r_grid);

/// phi is given by its values on the generators of Gamma_0 and applied
/// letterwise to each stored shortest word.
template <class Elem>
std::vector<GraphRow> graph_rows(const Ball<Elem>& ball0, const std::vector<Elem>& phi_images,
                                 const FieldDescriptor& field, bool parallel = true) {
    const auto& gens = ball0.generators();
    if (phi_images.size() != gens.generators.size()) {
        throw WordIndexError("phi must provide exactly one image per generator");
    }
    GeneratorSet<Elem> phi_gens{gens.field, gens.n, phi_images, gens.labels};
    const auto& entries = ball0.entries();
    std::vector<GraphRow> rows(entries.size());
    detail::parallel_indexed(entries.size(), parallel, [&](std::size_t i) {
        const auto& e = entries[i];
        const WeylVector m_gamma = mu_element(e.element, field);
        const WeylVector m_phi = mu_element(evaluate_word(e.word, phi_gens), field);
        rows[i] = {e.word.str(gens.labels), e.length, m_gamma.scalar(), m_phi.scalar(), e.length == 0};
    });
    return rows;
}

template <class Elem>
GraphCheckResult graph_admissibility(const Ball<Elem>& ball0, const std::vector<Elem>& phi_images,
                                     const FieldDescriptor& field, const std::vector<double>& r_grid,
                                     bool parallel = true) {
    return graph_admissibility_core(graph_rows(ball0, phi_images, field, parallel), ball0.radius(), r_grid);
}

/// Rows of the graph group {(gamma, phi(gamma))} for component analysis.
template <class Elem>
std::vector<ReportRow> graph_pair_rows(const Ball<Elem>& ball0, const std::vector<Elem>& phi_images,
                                       const FieldDescriptor& field, bool parallel = true) {
    const auto& gens = ball0.generators();
    if (phi_images.size() != gens.generators.size()) {
        throw WordIndexError("phi must provide exactly one image per generator");
    }
    GeneratorSet<Elem> phi_gens{gens.field, gens.n, phi_images, gens.labels};
    const Scenario s = Scenario::double_rank_one();
    const auto& entries = ball0.entries();
    std::vector<ReportRow> rows(entries.size());
    detail::parallel_indexed(entries.size(), parallel, [&](std::size_t i) {
        const auto& e = entries[i];
        const PairWeyl pt{mu_element(e.element, field), mu_element(evaluate_word(e.word, phi_gens), field)};
        rows[i] = make_report_row(e.word.str(gens.labels), e.length, e.key, pt, s);
        rows[i].is_identity = e.length == 0;
    });
    return rows;
}

/// Torsion demo over F_p[t,1/t]: the pair family (u_a, u_b) of upper
/// unipotents u_k = (1, t^-k; 0, 1) for the configured exponents.
struct TorsionDemoResult {
    struct MuCheck {
        long long n = 0;
        int r = 0;
        std::string scalar; // observed exact scalar of mu(u_n^r)
        bool ok = false;    // equals 2n
    };
    std::vector<MuCheck> mu_checks;
    bool orders_all_p = false;
    std::vector<std::string> order_offenders;
    MarginReport report;
    std::vector<ReportRow> diagonal_hits; // non-identity rows with left = right, verified exactly
    bool discrepancy = false;
    std::string discrepancy_note;
    std::size_t ball_size = 0;
};

/// Standard family: pairs (n, 2n) and (2n, n) for n in n_set.
std::vector<std::pair<long long, long long>> standard_torsion_pairs(const std::vector<long long>& n_set);

TorsionDemoResult torsion_demo(std::uint64_t p, const std::vector<std::pair<long long, long long>>& pair_exponents,
                               int radius, std::size_t max_elements = 200000, bool parallel = true,
                               std::vector<double> thresholds = {});

/// The unipotent (1, t^-n; 0, 1) over F_p.
MatrixL laurent_unipotent(std::uint64_t p, long long n);

/// Generator set of the torsion-demo pair group.
GeneratorSet<PairElem<LaurentPoly>> torsion_pair_group(std::uint64_t p,
                                                       const std::vector<std::pair<long long, long long>>& pairs);

/// Whether the quadratic form Q = det on 2x2 matrices is preserved by the
/// two-sided action u -> g1 * u * g2^-1.  Always true for det-1 g1, g2.
template <class S>
bool quadric_check(const SquareMatrix<S>& g1, const SquareMatrix<S>& g2, const SquareMatrix<S>& u) {
    if (g1.dim() != 2 || g2.dim() != 2 || u.dim() != 2) throw DimensionError("quadric check needs 2x2 matrices");
    const SquareMatrix<S> moved = g1 * u * g2.inverse();
    return moved.det() == u.det();
}

} // namespace cartanlab
