#pragma once

#include <random>

#include "cartanlab/field.hpp"
#include "cartanlab/laurent.hpp"
#include "cartanlab/matrix.hpp"
#include "cartanlab/rational.hpp"
#include "cartanlab/word.hpp"

namespace cartanlab {

using Rng = std::mt19937_64;

/// Nonzero rational with numerator in [-max_num, max_num] and denominator in
/// [1, max_den].
Rational random_rational(Rng& rng, int max_num = 9, int max_den = 9);

/// Nonzero Laurent polynomial over F_p with at most max_terms terms and
/// exponents in [min_exp, max_exp].
LaurentPoly random_laurent(Rng& rng, std::uint64_t p, long long min_exp = -3, long long max_exp = 3,
                           int max_terms = 3);

/// Random SL_n(Q) element: product of `factors` elementary transvections
/// E_ij(c) with small rational c.  Exact det 1.
MatrixQ random_sl_rational(Rng& rng, int n, int factors = 6, int max_num = 9, int max_den = 9);

/// Random element of SL_n(Z_p-integers): entries have v_p >= 0, det = 1 and
/// the inverse also has v_p >= 0 (a p-adic K-matrix).
MatrixQ random_sl_padic_integral(Rng& rng, int n, std::uint64_t p, int factors = 6);

/// Random SL_2 over F_p[t, 1/t]: product of transvections with Laurent
/// entries and of diagonals diag(c t^k, c^-1 t^-k).
MatrixL random_sl2_laurent(Rng& rng, std::uint64_t p, int factors = 5, long long max_exp = 2);

/// Random element of SL_2(F_p[[t]]-integers) with unit inverse: polynomial
/// entries, det 1 (a t-adic K-matrix).
MatrixL random_sl2_laurent_integral(Rng& rng, std::uint64_t p, int factors = 5);

/// K-conjugate k * diag(c t^-a, c^-1 t^a) * k^-1 with a >= 1: a random SL_2
/// Laurent element with distinct Newton-polygon slopes whose powers satisfy
/// mu(g^m) = m * (a, -a) exactly.
MatrixL random_sl2_laurent_split(Rng& rng, std::uint64_t p, long long max_a = 4, int k_factors = 4);

/// Haar-ish random rotation: Gram-Schmidt of a Gaussian matrix, det +1.
MatrixD random_orthogonal(Rng& rng, int n);

/// Random word of the given length over `gen_count` generators.
GroupWord random_word(Rng& rng, int gen_count, int length);

/// The free generators (1,2;0,1), (1,0;2,1) of a rank-2 free subgroup.
GeneratorSet<MatrixQ> sanov_generator_set(FieldDescriptor field = FieldDescriptor::real());

} // namespace cartanlab
