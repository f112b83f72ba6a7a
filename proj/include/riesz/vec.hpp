#pragma once

#include <array>
#include <cmath>
#include <cstddef>

namespace riesz {

using Vec3 = std::array<double, 3>;

inline Vec3 operator+(const Vec3& a, const Vec3& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }
inline Vec3 operator-(const Vec3& a, const Vec3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
inline Vec3 operator-(const Vec3& a) { return {-a[0], -a[1], -a[2]}; }
inline Vec3 operator*(double s, const Vec3& a) { return {s * a[0], s * a[1], s * a[2]}; }
inline Vec3 operator*(const Vec3& a, double s) { return s * a; }
inline Vec3& operator+=(Vec3& a, const Vec3& b) {
    a[0] += b[0]; a[1] += b[1]; a[2] += b[2];
    return a;
}
inline Vec3& operator-=(Vec3& a, const Vec3& b) {
    a[0] -= b[0]; a[1] -= b[1]; a[2] -= b[2];
    return a;
}

inline double dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }
inline double norm2(const Vec3& a) { return dot(a, a); }
inline double norm(const Vec3& a) { return std::sqrt(norm2(a)); }

/// Japanese bracket (1 + |x|^2)^{1/2}.
inline double bracket(const Vec3& x) { return std::sqrt(1.0 + norm2(x)); }

/// Dense row-major 3x3 matrix.
struct Mat3 {
    std::array<double, 9> a{};

    double& operator()(std::size_t i, std::size_t j) { return a[3 * i + j]; }
    double operator()(std::size_t i, std::size_t j) const { return a[3 * i + j]; }

    static Mat3 diag(double d0, double d1, double d2) {
        Mat3 m;
        m(0, 0) = d0; m(1, 1) = d1; m(2, 2) = d2;
        return m;
    }
    Mat3 transpose() const {
        Mat3 t;
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) t(i, j) = (*this)(j, i);
        return t;
    }
    double trace() const { return a[0] + a[4] + a[8]; }
    bool operator==(const Mat3&) const = default;
};

inline Vec3 operator*(const Mat3& m, const Vec3& v) {
    return {m(0, 0) * v[0] + m(0, 1) * v[1] + m(0, 2) * v[2],
            m(1, 0) * v[0] + m(1, 1) * v[1] + m(1, 2) * v[2],
            m(2, 0) * v[0] + m(2, 1) * v[1] + m(2, 2) * v[2]};
}
inline Mat3 operator*(double s, const Mat3& m) {
    Mat3 r;
    for (std::size_t k = 0; k < 9; ++k) r.a[k] = s * m.a[k];
    return r;
}
inline Mat3 operator+(const Mat3& x, const Mat3& y) {
    Mat3 r;
    for (std::size_t k = 0; k < 9; ++k) r.a[k] = x.a[k] + y.a[k];
    return r;
}
inline Mat3 operator-(const Mat3& x, const Mat3& y) {
    Mat3 r;
    for (std::size_t k = 0; k < 9; ++k) r.a[k] = x.a[k] - y.a[k];
    return r;
}

/// Frobenius norm.
inline double frobenius(const Mat3& m) {
    double s = 0.0;
    for (double v : m.a) s += v * v;
    return std::sqrt(s);
}

/// Spectral norm (largest singular value) via the eigenvalues of m^T m.
double operator_norm(const Mat3& m);

/// Rank-3 tensor T(i,j,k); for field Hessians the first slot is the field component.
struct Tensor3 {
    std::array<double, 27> a{};

    double& operator()(std::size_t i, std::size_t j, std::size_t k) { return a[9 * i + 3 * j + k]; }
    double operator()(std::size_t i, std::size_t j, std::size_t k) const { return a[9 * i + 3 * j + k]; }

    double max_abs() const {
        double m = 0.0;
        for (double v : a) m = std::fmax(m, std::fabs(v));
        return m;
    }
    bool operator==(const Tensor3&) const = default;
};

}  // namespace riesz
