#pragma once

#include <algorithm>
#include <cmath>

#include <Eigen/Dense>

namespace wigner {

/*!
 * Space-time or momentum-energy four-vector in natural units (c = 1).
 *
 * The metric is spacelike-positive: interval() = x^2 + y^2 + z^2 - t^2.
 */
struct FourVector {
    double x{0};
    double y{0};
    double z{0};
    double t{0};

    double interval() const { return x * x + y * y + z * z - t * t; }

    Eigen::Vector4d to_eigen() const { return {x, y, z, t}; }
    static FourVector from_eigen(const Eigen::Vector4d& v) { return {v[0], v[1], v[2], v[3]}; }

    friend FourVector operator+(const FourVector& a, const FourVector& b)
    {
        return {a.x + b.x, a.y + b.y, a.z + b.z, a.t + b.t};
    }
    friend FourVector operator-(const FourVector& a, const FourVector& b)
    {
        return {a.x - b.x, a.y - b.y, a.z - b.z, a.t - b.t};
    }
    friend FourVector operator*(double s, const FourVector& a)
    {
        return {s * a.x, s * a.y, s * a.z, s * a.t};
    }
    friend FourVector operator/(const FourVector& a, double s)
    {
        return {a.x / s, a.y / s, a.z / s, a.t / s};
    }
    friend bool operator==(const FourVector&, const FourVector&) = default;
};

inline double max_abs_component(const FourVector& p)
{
    return std::max({std::abs(p.x), std::abs(p.y), std::abs(p.z), std::abs(p.t)});
}

}  // namespace wigner
