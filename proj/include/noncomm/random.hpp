#pragma once

#include "noncomm/matrix.hpp"
#include "noncomm/rational.hpp"

#include <cstddef>
#include <random>

namespace noncomm {

// Seeded generators shared by the verification suites and the benchmark.

/// num/den with num in [-max_num, max_num] and den in [1, max_den].
template <class Rng>
Rational random_rational(Rng& rng, long max_num = 5, long max_den = 4) {
    std::uniform_int_distribution<long> num(-max_num, max_num);
    std::uniform_int_distribution<long> den(1, max_den);
    Rational r(num(rng), den(rng));
    r.canonicalize();
    return r;
}

template <class Rng>
Rational random_nonzero_rational(Rng& rng, long max_num = 5, long max_den = 4) {
    Rational r;
    do {
        r = random_rational(rng, max_num, max_den);
    } while (r == 0);
    return r;
}

template <class Rng>
RationalMatrix random_rational_matrix(Rng& rng, std::size_t dim, long max_num = 5, long max_den = 4) {
    RationalMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) m(i, j) = random_rational(rng, max_num, max_den);
    return m;
}

template <class Rng>
RationalVector random_rational_vector(Rng& rng, std::size_t dim, long max_num = 5, long max_den = 4) {
    RationalVector y(dim);
    for (std::size_t i = 0; i < dim; ++i) y[i] = random_rational(rng, max_num, max_den);
    return y;
}

template <class Rng>
FloatMatrix random_float_matrix(Rng& rng, std::size_t dim) {
    std::uniform_real_distribution<double> entry(-1.0, 1.0);
    FloatMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) m(i, j) = entry(rng);
    return m;
}

template <class Rng>
FloatVector random_float_vector(Rng& rng, std::size_t dim) {
    std::uniform_real_distribution<double> entry(-1.0, 1.0);
    FloatVector y(dim);
    for (std::size_t i = 0; i < dim; ++i) y[i] = entry(rng);
    return y;
}

}  // namespace noncomm
