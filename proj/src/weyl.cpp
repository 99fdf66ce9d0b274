#include "cartanlab/weyl.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace cartanlab {

namespace {

long long checked_mul(long long a, long long b) {
    const __int128 p = static_cast<__int128>(a) * b;
    if (p > INT64_MAX || p < INT64_MIN) throw Error("Frac overflow");
    return static_cast<long long>(p);
}

long long gcd_ll(long long a, long long b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        const long long r = a % b;
        a = b;
        b = r;
    }
    return a;
}

} // namespace

Frac::Frac(long long n, long long d) {
    if (d == 0) throw DivisionByZeroError("Frac with zero denominator");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    const long long g = n == 0 ? d : gcd_ll(n, d);
    num = n / g;
    den = d / g;
}

Frac Frac::operator+(const Frac& o) const {
    return Frac(checked_mul(num, o.den) + checked_mul(o.num, den), checked_mul(den, o.den));
}

Frac Frac::operator-(const Frac& o) const {
    return Frac(checked_mul(num, o.den) - checked_mul(o.num, den), checked_mul(den, o.den));
}

Frac Frac::operator*(const Frac& o) const {
    return Frac(checked_mul(num, o.num), checked_mul(den, o.den));
}

bool Frac::operator<(const Frac& o) const {
    return static_cast<__int128>(num) * o.den < static_cast<__int128>(o.num) * den;
}

std::string Frac::str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

WeylVector WeylVector::from_real(std::vector<double> coords) {
    if (coords.empty()) throw DimensionError("empty Weyl vector");
    std::sort(coords.begin(), coords.end(), std::greater<double>());
    const double mean = std::accumulate(coords.begin(), coords.end(), 0.0) / static_cast<double>(coords.size());
    for (double& c : coords) c -= mean;
    const double sum = std::accumulate(coords.begin(), coords.end(), 0.0);
    if (std::fabs(sum) > 1e-8) throw Error("Weyl vector coordinates do not sum to zero");
    WeylVector v;
    v.x_ = std::move(coords);
    return v;
}

WeylVector WeylVector::from_exact(std::vector<Frac> coords) {
    if (coords.empty()) throw DimensionError("empty Weyl vector");
    std::sort(coords.begin(), coords.end(), [](const Frac& a, const Frac& b) { return b < a; });
    Frac sum(0);
    for (const Frac& c : coords) sum = sum + c;
    if (!sum.is_zero()) throw Error("exact Weyl vector coordinates do not sum to zero");
    WeylVector v;
    v.exact_ = std::move(coords);
    v.x_.reserve(v.exact_.size());
    for (const Frac& c : v.exact_) v.x_.push_back(c.to_double());
    return v;
}

const std::vector<Frac>& WeylVector::exact_coords() const {
    if (!is_exact()) throw DomainMismatchError("archimedean Weyl vector has no exact coordinates");
    return exact_;
}

double WeylVector::scalar() const {
    if (dim() != 2) throw DimensionError("rank-one scalar needs dimension 2");
    return x_[0] - x_[1];
}

Frac WeylVector::exact_scalar() const {
    if (dim() != 2) throw DimensionError("rank-one scalar needs dimension 2");
    return exact_coords()[0] - exact_coords()[1];
}

bool WeylVector::operator==(const WeylVector& o) const {
    if (dim() != o.dim()) return false;
    if (is_exact() && o.is_exact()) return exact_ == o.exact_;
    return x_ == o.x_;
}

std::string WeylVector::str() const {
    std::string out = "(";
    for (int i = 0; i < dim(); ++i) {
        if (i) out += ", ";
        if (is_exact()) {
            out += exact_[static_cast<std::size_t>(i)].str();
        } else {
            char buf[32];
            std::snprintf(buf, sizeof buf, "%.9g", x_[static_cast<std::size_t>(i)]);
            out += buf;
        }
    }
    return out + ")";
}

WeylVector opposition_involution(const WeylVector& x) {
    if (x.is_exact()) {
        std::vector<Frac> flipped;
        flipped.reserve(static_cast<std::size_t>(x.dim()));
        for (int i = x.dim() - 1; i >= 0; --i) flipped.push_back(-x.exact_coord(i));
        return WeylVector::from_exact(std::move(flipped));
    }
    std::vector<double> flipped;
    flipped.reserve(static_cast<std::size_t>(x.dim()));
    for (int i = x.dim() - 1; i >= 0; --i) flipped.push_back(-x.coord(i));
    return WeylVector::from_real(std::move(flipped));
}

double l2_norm(const std::vector<double>& v) {
    double s = 0.0;
    for (double c : v) s += c * c;
    return std::sqrt(s);
}

double chamber_norm(const WeylVector& x) { return l2_norm(x.coords()); }

double ChamberGeometry::norm(const WeylVector& x) const { return chamber_norm(x); }

std::vector<double> coord_diff(const WeylVector& a, const WeylVector& b) {
    if (a.dim() != b.dim()) throw DimensionError("Weyl vector dimension mismatch");
    std::vector<double> d(static_cast<std::size_t>(a.dim()));
    for (int i = 0; i < a.dim(); ++i) d[static_cast<std::size_t>(i)] = a.coord(i) - b.coord(i);
    return d;
}

std::vector<Frac> exact_coord_diff(const WeylVector& a, const WeylVector& b) {
    if (a.dim() != b.dim()) throw DimensionError("Weyl vector dimension mismatch");
    std::vector<Frac> d(static_cast<std::size_t>(a.dim()));
    for (int i = 0; i < a.dim(); ++i) d[static_cast<std::size_t>(i)] = a.exact_coord(i) - b.exact_coord(i);
    return d;
}

Frac exact_sq_norm(const std::vector<Frac>& v) {
    Frac s(0);
    for (const Frac& c : v) s = s + c * c;
    return s;
}

} // namespace cartanlab
