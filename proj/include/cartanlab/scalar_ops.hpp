#pragma once

#include <string>

#include "cartanlab/laurent.hpp"
#include "cartanlab/rational.hpp"

namespace cartanlab {

// Uniform construction/inspection helpers so templated matrix code can work
// over Rational, LaurentPoly (which carries its prime) and double.

inline Rational scalar_zero(const Rational&) { return Rational::zero(); }
inline Rational scalar_one(const Rational&) { return Rational::one(); }
inline bool scalar_is_zero(const Rational& x) { return x.is_zero(); }
inline bool scalar_is_one(const Rational& x) { return x.is_one(); }
inline std::string scalar_key(const Rational& x) { return x.str(); }
inline std::size_t scalar_bit_size(const Rational& x) { return x.bit_size(); }

inline LaurentPoly scalar_zero(const LaurentPoly& like) { return LaurentPoly(like.prime()); }
inline LaurentPoly scalar_one(const LaurentPoly& like) { return LaurentPoly::constant(like.prime(), 1); }
inline bool scalar_is_zero(const LaurentPoly& x) { return x.is_zero(); }
inline bool scalar_is_one(const LaurentPoly& x) { return x.is_one(); }
inline std::string scalar_key(const LaurentPoly& x) { return x.str(); }
inline std::size_t scalar_bit_size(const LaurentPoly& x) { return x.bit_size(); }

inline double scalar_zero(double) { return 0.0; }
inline double scalar_one(double) { return 1.0; }
inline bool scalar_is_zero(double x) { return x == 0.0; }
inline std::size_t scalar_bit_size(double) { return 64; }

} // namespace cartanlab
