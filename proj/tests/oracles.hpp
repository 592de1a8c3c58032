#pragma once

// Reference computations used only by the tests. Each one takes a different
// route from the library code it checks.

#include <cstddef>
#include <vector>

#include "wigner/linalg.hpp"

namespace wigner::test {

//! Plain truncated Taylor series of exp(A), no scaling.
template <int N>
CMatrix<N> exp_series(const CMatrix<N>& a, int terms = 30)
{
    CMatrix<N> sum = CMatrix<N>::Identity();
    CMatrix<N> term = CMatrix<N>::Identity();
    for (int k = 1; k < terms; ++k) {
        term = (term * a / static_cast<double>(k)).eval();
        sum += term;
    }
    return sum;
}

//! H_n from the explicit sum n! sum_m (-1)^m (2x)^{n-2m} / (m! (n-2m)!).
inline double hermite_explicit(int n, double x)
{
    auto fact = [](int k) {
        double f = 1;
        for (int i = 2; i <= k; ++i) {
            f *= i;
        }
        return f;
    };
    double sum = 0;
    for (int m = 0; 2 * m <= n; ++m) {
        const double sign = (m % 2 == 0) ? 1.0 : -1.0;
        double power = 1;
        for (int i = 0; i < n - 2 * m; ++i) {
            power *= 2 * x;
        }
        sum += sign * power / (fact(m) * fact(n - 2 * m));
    }
    return fact(n) * sum;
}

//! Number of non-negative triples summing to total, by enumeration.
inline long long count_triples(int total)
{
    long long count = 0;
    for (int a = 0; a <= total; ++a) {
        for (int b = 0; b <= total; ++b) {
            for (int c = 0; c <= total; ++c) {
                count += (a + b + c == total) ? 1 : 0;
            }
        }
    }
    return count;
}

}  // namespace wigner::test
