#include "cartanlab/field.hpp"

namespace cartanlab {

bool is_prime(std::uint64_t m) {
    if (m < 2) return false;
    if (m % 2 == 0) return m == 2;
    for (std::uint64_t d = 3; d * d <= m; d += 2) {
        if (m % d == 0) return false;
    }
    return true;
}

FieldDescriptor FieldDescriptor::padic(std::uint64_t p) {
    if (!is_prime(p)) throw DomainMismatchError("padic field requires a prime, got " + std::to_string(p));
    return {FieldKind::PAdic, p};
}

FieldDescriptor FieldDescriptor::laurent(std::uint64_t p) {
    if (!is_prime(p)) throw DomainMismatchError("laurent field requires a prime, got " + std::to_string(p));
    return {FieldKind::LaurentFormal, p};
}

std::string FieldDescriptor::str() const {
    switch (kind) {
        case FieldKind::Real: return "real";
        case FieldKind::PAdic: return "padic:" + std::to_string(p);
        case FieldKind::LaurentFormal: return "laurent:" + std::to_string(p);
    }
    return "?";
}

} // namespace cartanlab
