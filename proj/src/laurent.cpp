#include "cartanlab/laurent.hpp"

namespace cartanlab {

std::string LaurentPoly::str() const {
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [k, c] : c_) {
        if (!first) out += " + ";
        first = false;
        if (k == 0) {
            out += std::to_string(c);
        } else {
            if (c != 1) {
                out += std::to_string(c);
                out += "*";
            }
            out += "t";
            if (k != 1) {
                out += "^";
                out += std::to_string(k);
            }
        }
    }
    return out;
}

std::uint64_t LaurentPoly::mod_inverse(std::uint64_t a) const {
    // Extended Euclid on (a, p); p prime so any nonzero a is invertible.
    long long r0 = static_cast<long long>(p_), r1 = static_cast<long long>(a % p_);
    long long s0 = 0, s1 = 1;
    while (r1 != 0) {
        const long long q = r0 / r1;
        r0 -= q * r1;
        std::swap(r0, r1);
        s0 -= q * s1;
        std::swap(s0, s1);
    }
    long long inv = s0 % static_cast<long long>(p_);
    if (inv < 0) inv += static_cast<long long>(p_);
    return static_cast<std::uint64_t>(inv);
}

} // namespace cartanlab
