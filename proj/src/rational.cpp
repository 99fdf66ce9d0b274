#include "cartanlab/rational.hpp"

namespace cartanlab {

Valuation Rational::valuation(std::uint64_t p) const {
    if (!is_prime(p)) throw DomainMismatchError("p-adic valuation requires a prime, got " + std::to_string(p));
    if (is_zero()) return Valuation::infinity();
    mpz_class pz(static_cast<unsigned long>(p));
    mpz_class stripped;
    long long v = 0;
    const mpz_class num = v_.get_num();
    const mpz_class den = v_.get_den();
    if (mpz_divisible_p(num.get_mpz_t(), pz.get_mpz_t())) {
        v += static_cast<long long>(mpz_remove(stripped.get_mpz_t(), num.get_mpz_t(), pz.get_mpz_t()));
    } else if (mpz_divisible_p(den.get_mpz_t(), pz.get_mpz_t())) {
        v -= static_cast<long long>(mpz_remove(stripped.get_mpz_t(), den.get_mpz_t(), pz.get_mpz_t()));
    }
    return Valuation::of(v);
}

std::string Rational::str() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

} // namespace cartanlab
