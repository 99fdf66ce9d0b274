#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include "cartanlab/errors.hpp"

namespace cartanlab {

bool is_prime(std::uint64_t m);

enum class FieldKind { Real, PAdic, LaurentFormal };

/// Which local field matrix entries are read in.  Real carries no parameter;
/// PAdic(p) reads rationals p-adically; LaurentFormal(p) reads elements of
/// F_p[t, 1/t] t-adically.
struct FieldDescriptor {
    FieldKind kind = FieldKind::Real;
    std::uint64_t p = 0;

    static FieldDescriptor real() { return {FieldKind::Real, 0}; }
    static FieldDescriptor padic(std::uint64_t p);
    static FieldDescriptor laurent(std::uint64_t p);

    bool nonarchimedean() const { return kind != FieldKind::Real; }
    std::string str() const;

    bool operator==(const FieldDescriptor&) const = default;
};

/// Value of an additive valuation: an integer, or +infinity exactly when the
/// valuated element is zero.
class Valuation {
public:
    static Valuation infinity() { return Valuation(true, 0); }
    static Valuation of(long long v) { return Valuation(false, v); }

    bool is_infinite() const { return inf_; }

    long long value() const {
        if (inf_) throw Error("valuation of zero has no finite value");
        return v_;
    }

    Valuation operator+(const Valuation& o) const {
        if (inf_ || o.inf_) return infinity();
        return of(v_ + o.v_);
    }

    friend Valuation min(const Valuation& a, const Valuation& b) { return a < b ? a : b; }

    bool operator==(const Valuation&) const = default;

    std::strong_ordering operator<=>(const Valuation& o) const {
        if (inf_ && o.inf_) return std::strong_ordering::equal;
        if (inf_) return std::strong_ordering::greater;
        if (o.inf_) return std::strong_ordering::less;
        return v_ <=> o.v_;
    }

    std::string str() const { return inf_ ? "inf" : std::to_string(v_); }

private:
    Valuation(bool inf, long long v) : inf_(inf), v_(v) {}

    bool inf_;
    long long v_;
};

} // namespace cartanlab
