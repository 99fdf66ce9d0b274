#pragma once

#include "cartanlab/cartan.hpp"
#include "cartanlab/field.hpp"
#include "cartanlab/matrix.hpp"
#include "cartanlab/weyl.hpp"

namespace cartanlab {

/// Coefficients of det(X*I - g), index i = coefficient of X^i, monic.
/// Rational path: Leverrier-Faddeev (exact, divides only by 1..n).
/// Laurent path: sums of principal minors, division-free (char p).
std::vector<Rational> char_poly(const MatrixQ& g);
std::vector<LaurentPoly> char_poly(const MatrixL& g);
std::vector<double> char_poly(const MatrixD& g);

/// Valuations of the roots of a polynomial, with multiplicity, from the
/// slopes of the lower Newton polygon of {(i, omega(c_i))}.
std::vector<Frac> newton_root_valuations(const std::vector<Valuation>& coeff_vals);

/// Lyapunov projection: sorted -omega(eigenvalue) with multiplicity, exact,
/// read off the Newton polygon of the characteristic polynomial.
WeylVector lyapunov_newton_polygon(const MatrixQ& g, const FieldDescriptor& field);
WeylVector lyapunov_newton_polygon(const MatrixL& g, const FieldDescriptor& field);

struct LyapunovPowerResult {
    WeylVector value;            // mu(g^(2^k)) / 2^k at the final computed k
    int k_final = 0;
    std::vector<double> defect;  // per step: distance to the exact Lyapunov
                                 // vector (exact fields) or to the final value (real)
};

/// mu(g^(2^k)) / 2^k by repeated squaring.  Exact domains enforce a bit-size
/// cap (SizeBudgetError past it, advising the Newton-polygon path); the real
/// path rescales each iterate and stops early before double range overflows.
LyapunovPowerResult lyapunov_power_limit(const MatrixQ& g, const FieldDescriptor& field, int k_max = 12);
LyapunovPowerResult lyapunov_power_limit(const MatrixL& g, const FieldDescriptor& field, int k_max = 12);
LyapunovPowerResult lyapunov_power_limit(const MatrixD& g, const FieldDescriptor& field, int k_max = 12);

/// Census of eigenvalue moduli, with multiplicity.
struct SpectralCensus {
    int n_gt = 0; // |t| > 1
    int n_eq = 0; // |t| = 1
    int n_lt = 0; // |t| < 1

    int total() const { return n_gt + n_eq + n_lt; }
    bool operator==(const SpectralCensus&) const = default;
};

SpectralCensus eigenvalue_modulus_census(const MatrixQ& g, const FieldDescriptor& field);
SpectralCensus eigenvalue_modulus_census(const MatrixL& g, const FieldDescriptor& field);
SpectralCensus eigenvalue_modulus_census(const MatrixD& g, const FieldDescriptor& field);

/// Entry bit-size cap for the exact power iteration (bits per matrix).
inline constexpr std::size_t kPowerBitCap = 1000000;

} // namespace cartanlab
