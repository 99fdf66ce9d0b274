#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cartanlab/errors.hpp"

namespace cartanlab {

/// Small exact fraction (reduced, positive denominator) for nonarchimedean
/// Weyl-vector coordinates: invariant-factor valuations, Newton-polygon
/// slopes, power-limit values.  Magnitudes stay tiny, so int64 suffices.
struct Frac {
    long long num = 0;
    long long den = 1;

    Frac() = default;
    Frac(long long n) : num(n), den(1) {}
    Frac(long long n, long long d);

    bool is_zero() const { return num == 0; }
    bool is_integer() const { return den == 1; }
    int sign() const { return num > 0 ? 1 : (num < 0 ? -1 : 0); }

    Frac operator+(const Frac& o) const;
    Frac operator-(const Frac& o) const;
    Frac operator*(const Frac& o) const;
    Frac operator-() const { return Frac(-num, den); }

    bool operator==(const Frac&) const = default;
    bool operator<(const Frac& o) const;
    bool operator>(const Frac& o) const { return o < *this; }
    bool operator<=(const Frac& o) const { return !(o < *this); }
    bool operator>=(const Frac& o) const { return !(*this < o); }

    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
    std::string str() const;
};

/// Point of the closed Weyl chamber V+ for SL_n: coordinates sorted in
/// descending order and summing to zero.  Nonarchimedean values carry exact
/// coordinates alongside the double view; archimedean values are double-only
/// with the zero-sum enforced by re-centering (|sum| <= 1e-8 tolerated).
class WeylVector {
public:
    /// Empty placeholder (dim 0); every real value comes from a factory.
    WeylVector() = default;

    /// Sorts descending and re-centers so the coordinates sum to zero.
    static WeylVector from_real(std::vector<double> coords);

    /// Sorts descending; the exact coordinates must sum to zero.
    static WeylVector from_exact(std::vector<Frac> coords);

    bool is_exact() const { return !exact_.empty(); }
    int dim() const { return static_cast<int>(x_.size()); }

    double coord(int i) const { return x_[static_cast<std::size_t>(i)]; }
    const std::vector<double>& coords() const { return x_; }

    const std::vector<Frac>& exact_coords() const;
    Frac exact_coord(int i) const { return exact_coords()[static_cast<std::size_t>(i)]; }

    /// Rank-one scalar x1 - x2 (dimension 2 only).
    double scalar() const;
    Frac exact_scalar() const;

    /// Exact when both sides are exact, else double comparison.
    bool operator==(const WeylVector& o) const;
    bool operator!=(const WeylVector& o) const { return !(*this == o); }

    std::string str() const;

private:

    std::vector<double> x_;
    std::vector<Frac> exact_;
};

/// iota(x1, ..., xn) = (-xn, ..., -x1); an involution of V+.
WeylVector opposition_involution(const WeylVector& x);

/// W-invariant Euclidean norm: plain l2 on coordinates.
double chamber_norm(const WeylVector& x);

/// Dimension tag plus the W-invariant norm; the norm is invariant under
/// coordinate permutations and under the opposition involution.
struct ChamberGeometry {
    int n;
    double norm(const WeylVector& x) const;
};

double l2_norm(const std::vector<double>& v);

std::vector<double> coord_diff(const WeylVector& a, const WeylVector& b);
std::vector<Frac> exact_coord_diff(const WeylVector& a, const WeylVector& b);

/// Sum of squares, exact.
Frac exact_sq_norm(const std::vector<Frac>& v);

/// mu-image of a G x G element: one Weyl vector per factor.
struct PairWeyl {
    WeylVector left;
    WeylVector right;

    bool operator==(const PairWeyl& o) const { return left == o.left && right == o.right; }
};

} // namespace cartanlab
