#include "cartanlab/cartan.hpp"

#include <cmath>

namespace cartanlab {

namespace {

// Quotients of finite-support Laurent polynomials by a non-monomial pivot
// leave F_p[t,1/t] (t/(1+t) is an infinite series), so the Smith reduction
// carries entries as exact unreduced fractions.  Only is_zero and the t-adic
// valuation are ever read off, and both are exact without gcd reduction;
// term counts stay small at the reduction depths used here (n <= 4).
struct LaurentFraction {
    LaurentPoly num;
    LaurentPoly den;

    explicit LaurentFraction(const LaurentPoly& n)
        : num(n), den(LaurentPoly::constant(n.prime(), 1)) {}
    LaurentFraction(LaurentPoly n, LaurentPoly d) : num(std::move(n)), den(std::move(d)) {
        if (den.is_zero()) throw DivisionByZeroError("laurent fraction with zero denominator");
    }

    bool is_zero() const { return num.is_zero(); }

    Valuation valuation() const {
        if (num.is_zero()) return Valuation::infinity();
        return Valuation::of(num.min_exp() - den.min_exp());
    }

    LaurentFraction operator-(const LaurentFraction& o) const {
        return {num * o.den - o.num * den, den * o.den};
    }
    LaurentFraction operator*(const LaurentFraction& o) const { return {num * o.num, den * o.den}; }
    LaurentFraction operator/(const LaurentFraction& o) const {
        if (o.is_zero()) throw DivisionByZeroError("laurent fraction division by zero");
        return {num * o.den, den * o.num};
    }
};

// Invariant-factor valuations over the valuation ring of a field K with
// additive valuation `val`, by row/column reduction pivoting on a
// minimum-valuation entry (lexicographically smallest (row, col) on ties).
// Elimination divides only by the pivot, so quotients have valuation >= 0.
template <class K, class ValFn>
std::vector<long long> invariant_valuations(std::vector<std::vector<K>> a, ValFn val) {
    const int n = static_cast<int>(a.size());
    std::vector<long long> out;
    out.reserve(static_cast<std::size_t>(n));
    for (int s = 0; s < n; ++s) {
        int pr = -1, pc = -1;
        Valuation best = Valuation::infinity();
        for (int i = s; i < n; ++i) {
            for (int j = s; j < n; ++j) {
                const Valuation v = val(a[i][j]);
                if (v < best) {
                    best = v;
                    pr = i;
                    pc = j;
                }
            }
        }
        if (best.is_infinite()) throw DeterminantError("matrix is singular over the valuation ring");
        std::swap(a[static_cast<std::size_t>(s)], a[static_cast<std::size_t>(pr)]);
        if (pc != s) {
            for (int i = 0; i < n; ++i) std::swap(a[static_cast<std::size_t>(i)][static_cast<std::size_t>(s)],
                                                  a[static_cast<std::size_t>(i)][static_cast<std::size_t>(pc)]);
        }
        const K pivot = a[static_cast<std::size_t>(s)][static_cast<std::size_t>(s)];
        for (int i = s + 1; i < n; ++i) {
            if (a[static_cast<std::size_t>(i)][static_cast<std::size_t>(s)].is_zero()) continue;
            const K q = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(s)] / pivot;
            for (int j = s; j < n; ++j) {
                a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                    a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -
                    q * a[static_cast<std::size_t>(s)][static_cast<std::size_t>(j)];
            }
        }
        for (int j = s + 1; j < n; ++j) {
            if (a[static_cast<std::size_t>(s)][static_cast<std::size_t>(j)].is_zero()) continue;
            const K q = a[static_cast<std::size_t>(s)][static_cast<std::size_t>(j)] / pivot;
            for (int i = s; i < n; ++i) {
                a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                    a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -
                    q * a[static_cast<std::size_t>(i)][static_cast<std::size_t>(s)];
            }
        }
        out.push_back(best.value());
    }
    return out;
}

WeylVector weyl_from_invariant_valuations(const std::vector<long long>& vals) {
    std::vector<Frac> coords;
    coords.reserve(vals.size());
    for (long long v : vals) coords.emplace_back(-v);
    return WeylVector::from_exact(std::move(coords));
}

void require_padic(const FieldDescriptor& field) {
    if (field.kind != FieldKind::PAdic) {
        throw DomainMismatchError("rational matrix entries need a padic field, got " + field.str());
    }
}

void require_laurent(const FieldDescriptor& field, std::uint64_t p) {
    if (field.kind != FieldKind::LaurentFormal) {
        throw DomainMismatchError("laurent matrix entries need a laurent field, got " + field.str());
    }
    if (field.p != p) {
        throw DomainMismatchError("laurent field F_" + std::to_string(field.p) +
                                  "((t)) vs entries over F_" + std::to_string(p));
    }
}

void require_det_one(const MatrixQ& g) {
    if (!g.det().is_one()) throw DeterminantError("mu requires det = 1");
}

void require_det_one(const MatrixL& g) {
    if (!g.det().is_one()) throw DeterminantError("mu requires det = 1");
}

std::uint64_t entries_prime(const MatrixL& g) { return g.at(0, 0).prime(); }

// Partial-sum minors characterization shared by both exact domains.
template <class M, class ValFn>
WeylVector minors_mu(const M& g, ValFn val) {
    const int n = g.dim();
    std::vector<long long> partial; // partial[i-1] = min valuation over i x i minors
    partial.reserve(static_cast<std::size_t>(n));
    for (int k = 1; k <= n; ++k) {
        Valuation best = Valuation::infinity();
        std::vector<int> rows(static_cast<std::size_t>(k));
        std::vector<int> cols(static_cast<std::size_t>(k));
        // iterate over k-subsets via the standard odometer
        for (int i = 0; i < k; ++i) rows[static_cast<std::size_t>(i)] = i;
        while (true) {
            for (int i = 0; i < k; ++i) cols[static_cast<std::size_t>(i)] = i;
            while (true) {
                best = min(best, val(g.submatrix_det(rows, cols)));
                int j = k - 1;
                while (j >= 0 && cols[static_cast<std::size_t>(j)] == n - k + j) --j;
                if (j < 0) break;
                ++cols[static_cast<std::size_t>(j)];
                for (int t = j + 1; t < k; ++t) cols[static_cast<std::size_t>(t)] = cols[static_cast<std::size_t>(t - 1)] + 1;
            }
            int j = k - 1;
            while (j >= 0 && rows[static_cast<std::size_t>(j)] == n - k + j) --j;
            if (j < 0) break;
            ++rows[static_cast<std::size_t>(j)];
            for (int t = j + 1; t < k; ++t) rows[static_cast<std::size_t>(t)] = rows[static_cast<std::size_t>(t - 1)] + 1;
        }
        if (best.is_infinite()) throw DeterminantError("matrix is singular over the valuation ring");
        partial.push_back(best.value());
    }
    std::vector<Frac> coords;
    coords.reserve(static_cast<std::size_t>(n));
    long long prev = 0;
    for (int i = 0; i < n; ++i) {
        coords.emplace_back(prev - partial[static_cast<std::size_t>(i)]);
        prev = partial[static_cast<std::size_t>(i)];
    }
    return WeylVector::from_exact(std::move(coords));
}

} // namespace

std::vector<double> symmetric_eigenvalues_jacobi(MatrixD a, int max_sweeps) {
    const int n = a.dim();
    if (n == 1) return {a.at(0, 0)};
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        double off = 0.0, diag = 0.0;
        for (int i = 0; i < n; ++i) {
            diag += a.at(i, i) * a.at(i, i);
            for (int j = i + 1; j < n; ++j) off += 2.0 * a.at(i, j) * a.at(i, j);
        }
        if (std::sqrt(off) < 1e-12 * std::sqrt(diag)) {
            std::vector<double> eig(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i) eig[static_cast<std::size_t>(i)] = a.at(i, i);
            return eig;
        }
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double apq = a.at(p, q);
                if (apq == 0.0) continue;
                const double theta = (a.at(q, q) - a.at(p, p)) / (2.0 * apq);
                const double t = (theta >= 0 ? 1.0 : -1.0) / (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (int k = 0; k < n; ++k) {
                    const double akp = a.at(k, p), akq = a.at(k, q);
                    a.at(k, p) = c * akp - s * akq;
                    a.at(k, q) = s * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    const double apk = a.at(p, k), aqk = a.at(q, k);
                    a.at(p, k) = c * apk - s * aqk;
                    a.at(q, k) = s * apk + c * aqk;
                }
            }
        }
    }
    throw ConvergenceError("Jacobi eigenvalue iteration exceeded its sweep budget");
}

WeylVector log_singular_values(const MatrixD& g) {
    const MatrixD gram = g.transpose() * g;
    std::vector<double> eig = symmetric_eigenvalues_jacobi(gram);
    std::vector<double> coords(eig.size());
    for (std::size_t i = 0; i < eig.size(); ++i) {
        if (!(eig[i] > 0.0)) throw ConvergenceError("Gram eigenvalue underflowed to zero");
        coords[i] = 0.5 * std::log(eig[i]);
    }
    return WeylVector::from_real(std::move(coords));
}

WeylVector mu_archimedean(const MatrixD& g) {
    if (!det_near_one(g)) throw DeterminantError("mu_archimedean requires det close to 1");
    return log_singular_values(g);
}

WeylVector mu_nonarch_snf(const MatrixQ& g, const FieldDescriptor& field) {
    require_padic(field);
    require_det_one(g);
    const int n = g.dim();
    const std::uint64_t p = field.p;
    std::vector<std::vector<Rational>> a(static_cast<std::size_t>(n), std::vector<Rational>());
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) a[static_cast<std::size_t>(i)].push_back(g.at(i, j));
    }
    return weyl_from_invariant_valuations(
        invariant_valuations(std::move(a), [p](const Rational& x) { return x.valuation(p); }));
}

WeylVector mu_nonarch_snf(const MatrixL& g, const FieldDescriptor& field) {
    require_laurent(field, entries_prime(g));
    require_det_one(g);
    const int n = g.dim();
    std::vector<std::vector<LaurentFraction>> a(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) a[static_cast<std::size_t>(i)].emplace_back(g.at(i, j));
    }
    return weyl_from_invariant_valuations(
        invariant_valuations(std::move(a), [](const LaurentFraction& x) { return x.valuation(); }));
}

WeylVector mu_nonarch_minors(const MatrixQ& g, const FieldDescriptor& field) {
    require_padic(field);
    require_det_one(g);
    const std::uint64_t p = field.p;
    return minors_mu(g, [p](const Rational& x) { return x.valuation(p); });
}

WeylVector mu_nonarch_minors(const MatrixL& g, const FieldDescriptor& field) {
    require_laurent(field, entries_prime(g));
    require_det_one(g);
    return minors_mu(g, [](const LaurentPoly& x) { return x.valuation(); });
}

WeylVector mu(const MatrixQ& g, const FieldDescriptor& field) {
    switch (field.kind) {
        case FieldKind::Real:
            require_det_one(g);
            return mu_archimedean(to_real(g));
        case FieldKind::PAdic:
            return mu_nonarch_snf(g, field);
        case FieldKind::LaurentFormal:
            break;
    }
    throw DomainMismatchError("rational matrix cannot be read in " + field.str());
}

WeylVector mu(const MatrixL& g, const FieldDescriptor& field) {
    if (field.kind != FieldKind::LaurentFormal) {
        throw DomainMismatchError("laurent matrix cannot be read in " + field.str());
    }
    return mu_nonarch_snf(g, field);
}

WeylVector mu(const MatrixD& g, const FieldDescriptor& field) {
    if (field.kind != FieldKind::Real) {
        throw DomainMismatchError("double-precision matrix cannot be read in " + field.str());
    }
    return mu_archimedean(g);
}

namespace {

template <class M>
SubadditivitySlack slack_impl(const M& g, const M& h, const FieldDescriptor& field) {
    const WeylVector mg = mu(g, field);
    const WeylVector mh = mu(h, field);
    const WeylVector mgh = mu(g * h, field);
    SubadditivitySlack s{};
    if (field.nonarchimedean()) {
        const Frac d1 = exact_sq_norm(exact_coord_diff(mgh, mg));
        const Frac d2 = exact_sq_norm(exact_coord_diff(mgh, mh));
        const Frac nh = exact_sq_norm(mh.exact_coords());
        const Frac ng = exact_sq_norm(mg.exact_coords());
        s.first = std::sqrt(nh.to_double()) - std::sqrt(d1.to_double());
        s.second = std::sqrt(ng.to_double()) - std::sqrt(d2.to_double());
        s.nonnegative = !(nh < d1) && !(ng < d2);
    } else {
        s.first = chamber_norm(mh) - l2_norm(coord_diff(mgh, mg));
        s.second = chamber_norm(mg) - l2_norm(coord_diff(mgh, mh));
        s.nonnegative = s.first >= -1e-8 && s.second >= -1e-8;
    }
    return s;
}

} // namespace

SubadditivitySlack check_mu_subadditivity(const MatrixQ& g, const MatrixQ& h, const FieldDescriptor& field) {
    return slack_impl(g, h, field);
}

SubadditivitySlack check_mu_subadditivity(const MatrixL& g, const MatrixL& h, const FieldDescriptor& field) {
    return slack_impl(g, h, field);
}

} // namespace cartanlab
