#include "cartanlab/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

namespace cartanlab {

namespace {

template <class S>
std::vector<S> leverrier_faddeev(const SquareMatrix<S>& g, const S& like) {
    const int n = g.dim();
    std::vector<S> c(static_cast<std::size_t>(n) + 1, scalar_zero(like));
    c[static_cast<std::size_t>(n)] = scalar_one(like);
    SquareMatrix<S> m = g;
    for (int k = 1; k <= n; ++k) {
        S tr = scalar_zero(like);
        for (int i = 0; i < n; ++i) tr = tr + m.at(i, i);
        const S ck = -(tr / S(k));
        c[static_cast<std::size_t>(n - k)] = ck;
        if (k == n) break;
        SquareMatrix<S> shifted = m;
        for (int i = 0; i < n; ++i) shifted.at(i, i) = shifted.at(i, i) + ck;
        m = g * shifted;
    }
    return c;
}

} // namespace

std::vector<Rational> char_poly(const MatrixQ& g) { return leverrier_faddeev(g, Rational::zero()); }

std::vector<double> char_poly(const MatrixD& g) {
    const int n = g.dim();
    std::vector<double> c(static_cast<std::size_t>(n) + 1, 0.0);
    c[static_cast<std::size_t>(n)] = 1.0;
    MatrixD m = g;
    for (int k = 1; k <= n; ++k) {
        double tr = 0.0;
        for (int i = 0; i < n; ++i) tr += m.at(i, i);
        const double ck = -tr / k;
        c[static_cast<std::size_t>(n - k)] = ck;
        if (k == n) break;
        MatrixD shifted = m;
        for (int i = 0; i < n; ++i) shifted.at(i, i) += ck;
        m = g * shifted;
    }
    return c;
}

std::vector<LaurentPoly> char_poly(const MatrixL& g) {
    // Division-free: the X^(n-k) coefficient is (-1)^k times the sum of the
    // principal k x k minors.
    const int n = g.dim();
    const LaurentPoly zero(g.at(0, 0).prime());
    std::vector<LaurentPoly> c(static_cast<std::size_t>(n) + 1, zero);
    c[static_cast<std::size_t>(n)] = scalar_one(zero);
    for (int k = 1; k <= n; ++k) {
        LaurentPoly sum = zero;
        std::vector<int> idx(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
        while (true) {
            sum = sum + g.submatrix_det(idx, idx);
            int j = k - 1;
            while (j >= 0 && idx[static_cast<std::size_t>(j)] == n - k + j) --j;
            if (j < 0) break;
            ++idx[static_cast<std::size_t>(j)];
            for (int t = j + 1; t < k; ++t) idx[static_cast<std::size_t>(t)] = idx[static_cast<std::size_t>(t - 1)] + 1;
        }
        c[static_cast<std::size_t>(n - k)] = (k % 2 == 0) ? sum : -sum;
    }
    return c;
}

std::vector<Frac> newton_root_valuations(const std::vector<Valuation>& coeff_vals) {
    const int n = static_cast<int>(coeff_vals.size()) - 1;
    if (n < 1) throw DimensionError("newton polygon needs degree >= 1");
    if (coeff_vals[0].is_infinite() || coeff_vals[static_cast<std::size_t>(n)].is_infinite()) {
        throw DeterminantError("newton polygon needs nonzero constant and leading coefficients");
    }
    // lower convex hull of {(i, omega(c_i))}, left to right
    std::vector<std::pair<long long, long long>> hull; // (i, v)
    for (int i = 0; i <= n; ++i) {
        if (coeff_vals[static_cast<std::size_t>(i)].is_infinite()) continue;
        const long long x = i;
        const long long y = coeff_vals[static_cast<std::size_t>(i)].value();
        while (hull.size() >= 2) {
            const auto [x1, y1] = hull[hull.size() - 2];
            const auto [x2, y2] = hull[hull.size() - 1];
            // keep strictly convex: drop (x2,y2) if it is above segment (x1,y1)-(x,y)
            if (static_cast<__int128>(y2 - y1) * (x - x1) >= static_cast<__int128>(y - y1) * (x2 - x1)) {
                hull.pop_back();
            } else {
                break;
            }
        }
        hull.emplace_back(x, y);
    }
    std::vector<Frac> roots;
    roots.reserve(static_cast<std::size_t>(n));
    for (std::size_t s = 0; s + 1 < hull.size(); ++s) {
        const auto [x1, y1] = hull[s];
        const auto [x2, y2] = hull[s + 1];
        const Frac slope(y2 - y1, x2 - x1);
        for (long long m = 0; m < x2 - x1; ++m) roots.push_back(-slope); // omega(root) = -slope
    }
    return roots;
}

namespace {

template <class M, class ValFn>
WeylVector polygon_lambda(const M& g, ValFn val) {
    auto coeffs = char_poly(g);
    std::vector<Valuation> vals;
    vals.reserve(coeffs.size());
    for (const auto& c : coeffs) vals.push_back(val(c));
    const std::vector<Frac> omegas = newton_root_valuations(vals);
    std::vector<Frac> coords;
    coords.reserve(omegas.size());
    for (const Frac& w : omegas) coords.push_back(-w);
    return WeylVector::from_exact(std::move(coords));
}

void require_nonarch_match(const FieldDescriptor& field, FieldKind kind) {
    if (field.kind != kind) throw DomainMismatchError("field " + field.str() + " does not match matrix domain");
}

} // namespace

WeylVector lyapunov_newton_polygon(const MatrixQ& g, const FieldDescriptor& field) {
    require_nonarch_match(field, FieldKind::PAdic);
    if (!g.det().is_one()) throw DeterminantError("lyapunov requires det = 1");
    const std::uint64_t p = field.p;
    return polygon_lambda(g, [p](const Rational& c) { return c.valuation(p); });
}

WeylVector lyapunov_newton_polygon(const MatrixL& g, const FieldDescriptor& field) {
    require_nonarch_match(field, FieldKind::LaurentFormal);
    if (field.p != g.at(0, 0).prime()) throw DomainMismatchError("laurent prime mismatch");
    if (!g.det().is_one()) throw DeterminantError("lyapunov requires det = 1");
    return polygon_lambda(g, [](const LaurentPoly& c) { return c.valuation(); });
}

namespace {

WeylVector scaled_exact(const WeylVector& v, long long den) {
    std::vector<Frac> coords;
    coords.reserve(static_cast<std::size_t>(v.dim()));
    for (int i = 0; i < v.dim(); ++i) coords.push_back(v.exact_coord(i) * Frac(1, den));
    return WeylVector::from_exact(std::move(coords));
}

double exact_distance(const WeylVector& a, const WeylVector& b) {
    return std::sqrt(exact_sq_norm(exact_coord_diff(a, b)).to_double());
}

template <class M>
LyapunovPowerResult exact_power_limit(const M& g, const FieldDescriptor& field, int k_max) {
    if (k_max < 1) throw Error("k_max must be >= 1");
    const WeylVector lambda = lyapunov_newton_polygon(g, field);
    LyapunovPowerResult out;
    M h = g;
    long long denom = 1;
    for (int k = 1; k <= k_max; ++k) {
        h = h * h;
        denom *= 2;
        if (h.bit_size() > kPowerBitCap) {
            throw SizeBudgetError("power iterate exceeded the bit-size cap; use the newton-polygon path");
        }
        out.value = scaled_exact(mu(h, field), denom);
        out.k_final = k;
        out.defect.push_back(exact_distance(out.value, lambda));
    }
    return out;
}

} // namespace

LyapunovPowerResult lyapunov_power_limit(const MatrixQ& g, const FieldDescriptor& field, int k_max) {
    if (field.kind == FieldKind::Real) return lyapunov_power_limit(to_real(g), field, k_max);
    return exact_power_limit(g, field, k_max);
}

LyapunovPowerResult lyapunov_power_limit(const MatrixL& g, const FieldDescriptor& field, int k_max) {
    return exact_power_limit(g, field, k_max);
}

LyapunovPowerResult lyapunov_power_limit(const MatrixD& g, const FieldDescriptor& field, int k_max) {
    if (field.kind != FieldKind::Real) throw DomainMismatchError("double matrix needs the real field");
    if (k_max < 1) throw Error("k_max must be >= 1");
    if (!det_near_one(g)) throw DeterminantError("lyapunov requires det close to 1");
    LyapunovPowerResult out;
    MatrixD a = g;
    std::vector<WeylVector> values;
    double denom = 1.0;
    for (int k = 1; k <= k_max; ++k) {
        // rescale to keep entries representable; re-centered mu is scale-free
        double maxabs = 0.0;
        for (int i = 0; i < a.dim(); ++i) {
            for (int j = 0; j < a.dim(); ++j) maxabs = std::max(maxabs, std::fabs(a.at(i, j)));
        }
        MatrixD b(a.dim(), 0.0);
        for (int i = 0; i < a.dim(); ++i) {
            for (int j = 0; j < a.dim(); ++j) b.at(i, j) = a.at(i, j) / maxabs;
        }
        a = b * b;
        denom *= 2.0;
        const WeylVector m = log_singular_values(a);
        std::vector<double> coords(m.coords());
        for (double& c : coords) c /= denom;
        values.push_back(WeylVector::from_real(std::move(coords)));
        out.k_final = k;
        // stop before the singular spread outruns double exponent range
        const WeylVector& v = values.back();
        if ((v.coord(0) - v.coord(v.dim() - 1)) * denom > 150.0) break;
    }
    out.value = values.back();
    for (const WeylVector& v : values) out.defect.push_back(l2_norm(coord_diff(v, out.value)));
    return out;
}

namespace {

SpectralCensus census_from_exact_lambda(const WeylVector& lambda) {
    SpectralCensus c;
    for (int i = 0; i < lambda.dim(); ++i) {
        const int s = lambda.exact_coord(i).sign(); // coordinate is -omega(t_i)
        if (s > 0) {
            ++c.n_gt;
        } else if (s == 0) {
            ++c.n_eq;
        } else {
            ++c.n_lt;
        }
    }
    return c;
}

std::vector<std::complex<double>> poly_roots_durand_kerner(const std::vector<double>& c) {
    const int n = static_cast<int>(c.size()) - 1;
    double scale = 0.0;
    for (int i = 0; i < n; ++i) scale = std::max(scale, std::pow(std::fabs(c[static_cast<std::size_t>(i)]), 1.0 / (n - i)));
    scale = std::max(scale, 0.5);
    std::vector<std::complex<double>> z(static_cast<std::size_t>(n));
    const std::complex<double> seed(0.4, 0.9);
    std::complex<double> w(1.0, 0.0);
    for (int i = 0; i < n; ++i) {
        w *= seed;
        z[static_cast<std::size_t>(i)] = scale * w;
    }
    auto eval = [&](std::complex<double> x) {
        std::complex<double> acc(0.0, 0.0);
        for (int i = n; i >= 0; --i) acc = acc * x + c[static_cast<std::size_t>(i)];
        return acc;
    };
    for (int iter = 0; iter < 500; ++iter) {
        double moved = 0.0;
        for (int i = 0; i < n; ++i) {
            std::complex<double> denom(1.0, 0.0);
            for (int j = 0; j < n; ++j) {
                if (j != i) denom *= z[static_cast<std::size_t>(i)] - z[static_cast<std::size_t>(j)];
            }
            const std::complex<double> step = eval(z[static_cast<std::size_t>(i)]) / denom;
            z[static_cast<std::size_t>(i)] -= step;
            moved = std::max(moved, std::abs(step));
        }
        if (moved < 1e-13 * scale) return z;
    }
    throw ConvergenceError("polynomial root iteration did not converge");
}

} // namespace

SpectralCensus eigenvalue_modulus_census(const MatrixD& g, const FieldDescriptor& field) {
    if (field.kind != FieldKind::Real) throw DomainMismatchError("double matrix needs the real field");
    if (!det_near_one(g)) throw DeterminantError("census requires det close to 1");
    const std::vector<double> coeffs = char_poly(g);
    SpectralCensus out;
    for (const std::complex<double>& z : poly_roots_durand_kerner(coeffs)) {
        const double lg = std::log(std::abs(z));
        if (std::fabs(lg) <= 1e-8) {
            ++out.n_eq;
        } else if (lg > 0) {
            ++out.n_gt;
        } else {
            ++out.n_lt;
        }
    }
    return out;
}

SpectralCensus eigenvalue_modulus_census(const MatrixQ& g, const FieldDescriptor& field) {
    if (field.kind == FieldKind::Real) {
        if (!g.det().is_one()) throw DeterminantError("census requires det = 1");
        return eigenvalue_modulus_census(to_real(g), field);
    }
    return census_from_exact_lambda(lyapunov_newton_polygon(g, field));
}

SpectralCensus eigenvalue_modulus_census(const MatrixL& g, const FieldDescriptor& field) {
    return census_from_exact_lambda(lyapunov_newton_polygon(g, field));
}

} // namespace cartanlab
