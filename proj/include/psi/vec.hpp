// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <span>

namespace psi {

inline constexpr int kMaxDim = 8;

/// Fixed-capacity Euclidean vector with runtime dimension (2..kMaxDim).
/// Value type; all arithmetic is componentwise over the active dimension.
class Vec {
  public:
    Vec() = default;
    explicit Vec(int dim) : dim_(dim) { v_.fill(0.0); }
    Vec(std::initializer_list<double> xs) : dim_(static_cast<int>(xs.size())) {
        v_.fill(0.0);
        std::copy(xs.begin(), xs.end(), v_.begin());
    }
    static Vec from(std::span<const double> xs) {
        Vec r(static_cast<int>(xs.size()));
        std::copy(xs.begin(), xs.end(), r.v_.begin());
        return r;
    }
    static Vec unit(int dim, int axis) {
        Vec r(dim);
        r[axis] = 1.0;
        return r;
    }

    int dim() const { return dim_; }
    double operator[](int i) const { return v_[static_cast<std::size_t>(i)]; }
    double& operator[](int i) { return v_[static_cast<std::size_t>(i)]; }
    const double* data() const { return v_.data(); }
    double* data() { return v_.data(); }

    Vec& operator+=(const Vec& o) {
        for (int i = 0; i < dim_; ++i) v_[static_cast<std::size_t>(i)] += o[i];
        return *this;
    }
    Vec& operator-=(const Vec& o) {
        for (int i = 0; i < dim_; ++i) v_[static_cast<std::size_t>(i)] -= o[i];
        return *this;
    }
    Vec& operator*=(double s) {
        for (int i = 0; i < dim_; ++i) v_[static_cast<std::size_t>(i)] *= s;
        return *this;
    }

    friend Vec operator+(Vec a, const Vec& b) { return a += b; }
    friend Vec operator-(Vec a, const Vec& b) { return a -= b; }
    friend Vec operator*(double s, Vec a) { return a *= s; }
    friend Vec operator*(Vec a, double s) { return a *= s; }
    friend Vec operator-(Vec a) { return a *= -1.0; }

  private:
    std::array<double, kMaxDim> v_{};
    int dim_ = 0;
};

inline double dot(const Vec& a, const Vec& b) {
    double s = 0.0;
    for (int i = 0; i < a.dim(); ++i) s += a[i] * b[i];
    return s;
}

inline double norm2(const Vec& a) { return dot(a, a); }
inline double norm(const Vec& a) { return std::sqrt(norm2(a)); }

inline double distance(const Vec& a, const Vec& b) { return norm(a - b); }

inline Vec normalized(const Vec& a) {
    Vec r = a;
    const double n = norm(a);
    if (n > 0.0) r *= 1.0 / n;
    return r;
}

/// Direction on the unit sphere; normalized on construction.
class UnitDirection {
  public:
    explicit UnitDirection(const Vec& v) : v_(normalized(v)) {}
    /// Wrap a vector already known to be unit length (no renormalization).
    static UnitDirection assume_normalized(const Vec& v) { return UnitDirection(v, 0); }

    const Vec& vec() const { return v_; }
    int dim() const { return v_.dim(); }
    double operator[](int i) const { return v_[i]; }

  private:
    UnitDirection(const Vec& v, int) : v_(v) {}
    Vec v_;
};

/// Dense symmetric-capable square matrix of runtime dimension (n <= kMaxDim).
class Mat {
  public:
    Mat() = default;
    explicit Mat(int dim) : dim_(dim) { a_.fill(0.0); }
    static Mat identity(int dim) {
        Mat m(dim);
        for (int i = 0; i < dim; ++i) m(i, i) = 1.0;
        return m;
    }

    int dim() const { return dim_; }
    double operator()(int i, int j) const {
        return a_[static_cast<std::size_t>(i * kMaxDim + j)];
    }
    double& operator()(int i, int j) { return a_[static_cast<std::size_t>(i * kMaxDim + j)]; }

    Mat& operator+=(const Mat& o) {
        for (int i = 0; i < dim_; ++i)
            for (int j = 0; j < dim_; ++j) (*this)(i, j) += o(i, j);
        return *this;
    }
    Mat& operator*=(double s) {
        for (int i = 0; i < dim_; ++i)
            for (int j = 0; j < dim_; ++j) (*this)(i, j) *= s;
        return *this;
    }
    friend Mat operator+(Mat a, const Mat& b) { return a += b; }
    friend Mat operator*(double s, Mat a) { return a *= s; }

    friend Vec operator*(const Mat& m, const Vec& x) {
        Vec r(x.dim());
        for (int i = 0; i < m.dim(); ++i) {
            double s = 0.0;
            for (int j = 0; j < m.dim(); ++j) s += m(i, j) * x[j];
            r[i] = s;
        }
        return r;
    }

  private:
    std::array<double, kMaxDim * kMaxDim> a_{};
    int dim_ = 0;
};

inline Mat outer(const Vec& a, const Vec& b) {
    Mat m(a.dim());
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < b.dim(); ++j) m(i, j) = a[i] * b[j];
    return m;
}

inline Mat transpose(const Mat& m) {
    Mat t(m.dim());
    for (int i = 0; i < m.dim(); ++i)
        for (int j = 0; j < m.dim(); ++j) t(i, j) = m(j, i);
    return t;
}

inline Mat matmul(const Mat& a, const Mat& b) {
    Mat c(a.dim());
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j) {
            double s = 0.0;
            for (int k = 0; k < a.dim(); ++k) s += a(i, k) * b(k, j);
            c(i, j) = s;
        }
    return c;
}

/// Solve A x = b by Gaussian elimination with partial pivoting.
/// Returns false when the matrix is numerically singular.
bool solve_linear(const Mat& a, const Vec& b, Vec& x);

/// Eigenvalues of a symmetric matrix (ascending), cyclic Jacobi sweeps.
Vec symmetric_eigenvalues(const Mat& a);

}  // namespace psi
