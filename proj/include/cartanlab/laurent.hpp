#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "cartanlab/errors.hpp"
#include "cartanlab/field.hpp"

namespace cartanlab {

/// Element of F_p[t, 1/t]: finitely many terms c * t^k with c in F_p \ {0}.
/// Zero coefficients are never stored.  Units of the ring are exactly the
/// nonzero monomials c * t^k, and division is restricted to them.
class LaurentPoly {
public:
    using TermMap = std::map<long long, std::uint32_t>;

    explicit LaurentPoly(std::uint64_t p) : p_(checked_prime(p)) {}

    static LaurentPoly constant(std::uint64_t p, std::uint64_t c) { return monomial(p, c, 0); }

    static LaurentPoly monomial(std::uint64_t p, std::uint64_t c, long long k) {
        LaurentPoly x(p);
        x.add_term(k, c % p);
        return x;
    }

    std::uint64_t prime() const { return p_; }
    const TermMap& terms() const { return c_; }

    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_.begin()->first == 0 && c_.begin()->second == 1; }
    bool is_unit() const { return c_.size() == 1; }

    /// t-adic valuation (minimum stored exponent); infinite exactly for zero.
    Valuation valuation() const {
        if (is_zero()) return Valuation::infinity();
        return Valuation::of(c_.begin()->first);
    }

    /// Valuation in the given field; the residue characteristic must match.
    Valuation valuation(const FieldDescriptor& field) const {
        if (field.kind != FieldKind::LaurentFormal || field.p != p_) {
            throw DomainMismatchError("laurent valuation over F_" + std::to_string(p_) +
                                      " cannot be read in " + field.str());
        }
        return valuation();
    }

    long long min_exp() const { return require_nonzero().begin()->first; }
    long long max_exp() const { return require_nonzero().rbegin()->first; }

    LaurentPoly operator+(const LaurentPoly& o) const {
        check_same_prime(o);
        LaurentPoly r = *this;
        for (const auto& [k, c] : o.c_) r.add_term(k, c);
        return r;
    }

    LaurentPoly operator-(const LaurentPoly& o) const {
        check_same_prime(o);
        LaurentPoly r = *this;
        for (const auto& [k, c] : o.c_) r.add_term(k, p_ - c);
        return r;
    }

    LaurentPoly operator-() const {
        LaurentPoly r(p_);
        for (const auto& [k, c] : c_) r.c_.emplace(k, static_cast<std::uint32_t>(p_ - c));
        return r;
    }

    LaurentPoly operator*(const LaurentPoly& o) const {
        check_same_prime(o);
        LaurentPoly r(p_);
        for (const auto& [ka, ca] : c_) {
            for (const auto& [kb, cb] : o.c_) {
                r.add_term(ka + kb, (static_cast<std::uint64_t>(ca) * cb) % p_);
            }
        }
        return r;
    }

    /// Division by a unit (nonzero monomial).  Anything else leaves the ring.
    LaurentPoly operator/(const LaurentPoly& o) const {
        check_same_prime(o);
        if (o.is_zero()) throw DivisionByZeroError("laurent division by zero");
        if (!o.is_unit()) throw NonInvertibleError("laurent division by a non-unit (not a monomial)");
        const auto [k, c] = *o.c_.begin();
        const std::uint64_t cinv = mod_inverse(c);
        LaurentPoly r(p_);
        for (const auto& [ke, ce] : c_) {
            r.add_term(ke - k, (static_cast<std::uint64_t>(ce) * cinv) % p_);
        }
        return r;
    }

    bool operator==(const LaurentPoly& o) const { return p_ == o.p_ && c_ == o.c_; }
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

    /// Canonical text, terms in increasing exponent: "t^-2 + 1", "2*t^3", "0".
    std::string str() const;

    std::size_t bit_size() const { return 64 * (c_.size() + 1); }

private:
    static std::uint64_t checked_prime(std::uint64_t p) {
        if (!is_prime(p)) throw DomainMismatchError("F_p coefficients require a prime, got " + std::to_string(p));
        return p;
    }

    void check_same_prime(const LaurentPoly& o) const {
        if (p_ != o.p_) {
            throw DomainMismatchError("laurent operands over F_" + std::to_string(p_) + " and F_" +
                                      std::to_string(o.p_));
        }
    }

    const TermMap& require_nonzero() const {
        if (is_zero()) throw DivisionByZeroError("zero laurent polynomial has no extreme exponent");
        return c_;
    }

    void add_term(long long k, std::uint64_t c) {
        c %= p_;
        if (c == 0) return;
        auto it = c_.find(k);
        if (it == c_.end()) {
            c_.emplace(k, static_cast<std::uint32_t>(c));
        } else {
            const std::uint64_t s = (it->second + c) % p_;
            if (s == 0) {
                c_.erase(it);
            } else {
                it->second = static_cast<std::uint32_t>(s);
            }
        }
    }

    std::uint64_t mod_inverse(std::uint64_t a) const;

    std::uint64_t p_;
    TermMap c_;
};

} // namespace cartanlab
