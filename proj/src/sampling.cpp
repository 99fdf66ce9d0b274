#include "cartanlab/sampling.hpp"

#include <cmath>

namespace cartanlab {

namespace {

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

long long uniform_ll(Rng& rng, long long lo, long long hi) {
    return std::uniform_int_distribution<long long>(lo, hi)(rng);
}

template <class S>
SquareMatrix<S> transvection(int n, int i, int j, const S& c, const S& like) {
    SquareMatrix<S> e = SquareMatrix<S>::identity(n, like);
    e.at(i, j) = c;
    return e;
}

} // namespace

Rational random_rational(Rng& rng, int max_num, int max_den) {
    int num = 0;
    while (num == 0) num = uniform(rng, -max_num, max_num);
    return Rational(num, uniform(rng, 1, max_den));
}

LaurentPoly random_laurent(Rng& rng, std::uint64_t p, long long min_exp, long long max_exp, int max_terms) {
    LaurentPoly x(p);
    const int terms = uniform(rng, 1, max_terms);
    for (int t = 0; t < terms; ++t) {
        const std::uint64_t c = static_cast<std::uint64_t>(uniform(rng, 1, static_cast<int>(p) - 1));
        x = x + LaurentPoly::monomial(p, c, uniform_ll(rng, min_exp, max_exp));
    }
    if (x.is_zero()) x = LaurentPoly::constant(p, 1);
    return x;
}

MatrixQ random_sl_rational(Rng& rng, int n, int factors, int max_num, int max_den) {
    const Rational like = Rational::zero();
    MatrixQ g = MatrixQ::identity(n, like);
    for (int f = 0; f < factors; ++f) {
        const int i = uniform(rng, 0, n - 1);
        int j = uniform(rng, 0, n - 2);
        if (j >= i) ++j;
        g = g * transvection(n, i, j, random_rational(rng, max_num, max_den), like);
    }
    return g;
}

MatrixQ random_sl_padic_integral(Rng& rng, int n, std::uint64_t p, int factors) {
    const Rational like = Rational::zero();
    MatrixQ g = MatrixQ::identity(n, like);
    auto unit = [&]() {
        // v_p = 0: numerator and denominator both prime to p
        int num = 0;
        while (num == 0 || num % static_cast<int>(p) == 0) num = uniform(rng, -9, 9);
        int den = 0;
        while (den == 0 || den % static_cast<int>(p) == 0) den = uniform(rng, 1, 9);
        return Rational(num, den);
    };
    for (int f = 0; f < factors; ++f) {
        if (n > 1 && uniform(rng, 0, 3) == 0) {
            // diag(u, ..., 1/u, ...) with unit u keeps entries and inverse integral
            MatrixQ d = MatrixQ::identity(n, like);
            const Rational u = unit();
            const int i = uniform(rng, 0, n - 1);
            int j = uniform(rng, 0, n - 2);
            if (j >= i) ++j;
            d.at(i, i) = u;
            d.at(j, j) = Rational(1) / u;
            g = g * d;
        } else {
            const int i = uniform(rng, 0, n - 1);
            int j = uniform(rng, 0, n - 2);
            if (j >= i) ++j;
            // c with v_p >= 0: integer numerator, denominator prime to p
            int den = 0;
            while (den == 0 || den % static_cast<int>(p) == 0) den = uniform(rng, 1, 9);
            const Rational c(uniform(rng, -9, 9), den);
            g = g * transvection(n, i, j, c, like);
        }
    }
    return g;
}

MatrixL random_sl2_laurent(Rng& rng, std::uint64_t p, int factors, long long max_exp) {
    const LaurentPoly like(p);
    MatrixL g = MatrixL::identity(2, like);
    for (int f = 0; f < factors; ++f) {
        const int pick = uniform(rng, 0, 2);
        if (pick == 2) {
            MatrixL d(2, like);
            const std::uint64_t c = static_cast<std::uint64_t>(uniform(rng, 1, static_cast<int>(p) - 1));
            const long long k = uniform_ll(rng, -max_exp, max_exp);
            d.at(0, 0) = LaurentPoly::monomial(p, c, k);
            d.at(1, 1) = LaurentPoly::constant(p, 1) / d.at(0, 0);
            g = g * d;
        } else {
            const LaurentPoly c = random_laurent(rng, p, -max_exp, max_exp, 2);
            g = g * transvection(2, pick, 1 - pick, c, like);
        }
    }
    return g;
}

MatrixL random_sl2_laurent_integral(Rng& rng, std::uint64_t p, int factors) {
    const LaurentPoly like(p);
    MatrixL g = MatrixL::identity(2, like);
    for (int f = 0; f < factors; ++f) {
        const int pick = uniform(rng, 0, 2);
        if (pick == 2) {
            MatrixL d(2, like);
            const std::uint64_t c = static_cast<std::uint64_t>(uniform(rng, 1, static_cast<int>(p) - 1));
            d.at(0, 0) = LaurentPoly::constant(p, c);
            d.at(1, 1) = LaurentPoly::constant(p, 1) / d.at(0, 0);
            g = g * d;
        } else {
            const LaurentPoly c = random_laurent(rng, p, 0, 2, 2);
            g = g * transvection(2, pick, 1 - pick, c, like);
        }
    }
    return g;
}

MatrixL random_sl2_laurent_split(Rng& rng, std::uint64_t p, long long max_a, int k_factors) {
    const LaurentPoly like(p);
    const long long a = uniform_ll(rng, 1, max_a);
    const std::uint64_t c = static_cast<std::uint64_t>(uniform(rng, 1, static_cast<int>(p) - 1));
    MatrixL d(2, like);
    d.at(0, 0) = LaurentPoly::monomial(p, c, -a);
    d.at(1, 1) = LaurentPoly::constant(p, 1) / d.at(0, 0);
    const MatrixL k = random_sl2_laurent_integral(rng, p, k_factors);
    return k * d * k.inverse();
}

MatrixD random_orthogonal(Rng& rng, int n) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    MatrixD a(n, 0.0);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) a.at(i, j) = gauss(rng);
    }
    // Gram-Schmidt on columns
    for (int j = 0; j < n; ++j) {
        for (int k = 0; k < j; ++k) {
            double dot = 0.0;
            for (int i = 0; i < n; ++i) dot += a.at(i, j) * a.at(i, k);
            for (int i = 0; i < n; ++i) a.at(i, j) -= dot * a.at(i, k);
        }
        double norm = 0.0;
        for (int i = 0; i < n; ++i) norm += a.at(i, j) * a.at(i, j);
        norm = std::sqrt(norm);
        if (norm < 1e-12) return random_orthogonal(rng, n); // retry on near-degenerate draw
        for (int i = 0; i < n; ++i) a.at(i, j) /= norm;
    }
    // fix determinant to +1
    if (!det_near_one(a, 1e-6)) {
        for (int i = 0; i < n; ++i) a.at(i, 0) = -a.at(i, 0);
    }
    return a;
}

GroupWord random_word(Rng& rng, int gen_count, int length) {
    GroupWord w;
    for (int i = 0; i < length; ++i) {
        w.letters.push_back({uniform(rng, 0, gen_count - 1), uniform(rng, 0, 1) == 0 ? 1 : -1});
    }
    return w;
}

GeneratorSet<MatrixQ> sanov_generator_set(FieldDescriptor field) {
    const Rational like = Rational::zero();
    MatrixQ a = MatrixQ::identity(2, like);
    a.at(0, 1) = Rational(2);
    MatrixQ b = MatrixQ::identity(2, like);
    b.at(1, 0) = Rational(2);
    return GeneratorSet<MatrixQ>{field, 2, {a, b}, {"a", "b"}};
}

} // namespace cartanlab
