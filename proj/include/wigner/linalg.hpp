#pragma once

#include <cmath>
#include <complex>
#include <cstddef>

#include <Eigen/Dense>

namespace wigner {

using complex = std::complex<double>;

template <int N>
using CMatrix = Eigen::Matrix<complex, N, N>;
template <int N>
using RMatrix = Eigen::Matrix<double, N, N>;

using CMatrix4 = CMatrix<4>;
using RMatrix4 = RMatrix<4>;
using CMatrix3 = CMatrix<3>;
using RMatrix3 = RMatrix<3>;

inline constexpr complex kI{0.0, 1.0};

// [a, b] = ab - ba
template <typename Derived1, typename Derived2>
auto commutator(const Eigen::MatrixBase<Derived1>& a, const Eigen::MatrixBase<Derived2>& b)
{
    using Result = typename Derived1::PlainObject;
    Result ab = a * b;
    Result ba = b * a;
    return Result(ab - ba);
}

// Largest entry modulus; used for all entrywise residual comparisons.
template <typename Derived>
double max_abs(const Eigen::MatrixBase<Derived>& m)
{
    return m.cwiseAbs().maxCoeff();
}

/// Matrix exponential by scaling and squaring.
///
/// The argument is scaled by 2^-s until its 1-norm drops below 1/2, a Taylor
/// series is summed until the next term no longer changes the partial sum,
/// and the result is squared s times. For the 4x4 generators used here this
/// is accurate to ~1e-15 relative per entry for arguments up to |theta| ~ 20.
template <typename Derived>
typename Derived::PlainObject expm(const Eigen::MatrixBase<Derived>& a)
{
    using Matrix = typename Derived::PlainObject;
    static_assert(Derived::RowsAtCompileTime == Derived::ColsAtCompileTime);

    const double norm1 = a.cwiseAbs().colwise().sum().maxCoeff();
    int squarings = 0;
    if (norm1 > 0.5) {
        squarings = static_cast<int>(std::ceil(std::log2(norm1 / 0.5)));
    }
    const Matrix scaled = a / std::ldexp(1.0, squarings);

    Matrix sum = Matrix::Identity(a.rows(), a.cols());
    Matrix term = Matrix::Identity(a.rows(), a.cols());
    constexpr int kMaxTerms = 40;
    for (int k = 1; k <= kMaxTerms; ++k) {
        term = (term * scaled) / static_cast<double>(k);
        const double term_size = max_abs(term);
        sum += term;
        if (term_size <= 1e-18 * max_abs(sum)) {
            break;
        }
    }
    for (int i = 0; i < squarings; ++i) {
        sum = (sum * sum).eval();
    }
    return sum;
}

}  // namespace wigner
