#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "cartanlab/errors.hpp"
#include "cartanlab/field.hpp"

namespace cartanlab {

/// Arbitrary-precision rational, always in lowest terms with positive
/// denominator (mpq canonical form).
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}

    Rational(const mpz_class& num, const mpz_class& den) {
        if (den == 0) throw DivisionByZeroError("rational with zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }

    Rational(long num, long den) : Rational(mpz_class(num), mpz_class(den)) {}

    explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

    static Rational zero() { return Rational(); }
    static Rational one() { return Rational(1); }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }
    int sign() const { return sgn(v_); }

    const mpz_class numerator() const { return v_.get_num(); }
    const mpz_class denominator() const { return v_.get_den(); }

    Rational operator+(const Rational& o) const { return wrap(v_ + o.v_); }
    Rational operator-(const Rational& o) const { return wrap(v_ - o.v_); }
    Rational operator*(const Rational& o) const { return wrap(v_ * o.v_); }

    Rational operator/(const Rational& o) const {
        if (o.is_zero()) throw DivisionByZeroError("rational division by zero");
        return wrap(v_ / o.v_);
    }

    Rational operator-() const { return wrap(-v_); }

    bool operator==(const Rational& o) const { return v_ == o.v_; }
    bool operator!=(const Rational& o) const { return v_ != o.v_; }
    bool operator<(const Rational& o) const { return v_ < o.v_; }

    /// p-adic valuation; infinite exactly for zero.
    Valuation valuation(std::uint64_t p) const;

    /// Valuation in the given field; rationals are read p-adically only.
    Valuation valuation(const FieldDescriptor& field) const {
        if (field.kind != FieldKind::PAdic) {
            throw DomainMismatchError("rational valuation needs a padic field, got " + field.str());
        }
        return valuation(field.p);
    }

    /// Canonical text: "n" or "n/d".
    std::string str() const;

    double to_double() const { return v_.get_d(); }

    /// Bits in numerator plus denominator (entry-growth budgeting).
    std::size_t bit_size() const {
        return mpz_sizeinbase(v_.get_num().get_mpz_t(), 2) + mpz_sizeinbase(v_.get_den().get_mpz_t(), 2);
    }

    const mpq_class& raw() const { return v_; }

private:
    // mpq_class arithmetic keeps results canonical; skip re-canonicalizing.
    static Rational wrap(mpq_class v) {
        Rational r;
        r.v_ = std::move(v);
        return r;
    }

    mpq_class v_;
};

} // namespace cartanlab
