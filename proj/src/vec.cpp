// SPDX-License-Identifier: Apache-2.0

#include "psi/vec.hpp"

namespace psi {

bool solve_linear(const Mat& a, const Vec& b, Vec& x) {
    const int n = a.dim();
    double m[kMaxDim][kMaxDim + 1];
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) m[i][j] = a(i, j);
        m[i][n] = b[i];
    }
    for (int col = 0; col < n; ++col) {
        int piv = col;
        for (int r = col + 1; r < n; ++r)
            if (std::abs(m[r][col]) > std::abs(m[piv][col])) piv = r;
        if (std::abs(m[piv][col]) < 1e-300) return false;
        if (piv != col)
            for (int j = col; j <= n; ++j) std::swap(m[piv][j], m[col][j]);
        for (int r = col + 1; r < n; ++r) {
            const double f = m[r][col] / m[col][col];
            for (int j = col; j <= n; ++j) m[r][j] -= f * m[col][j];
        }
    }
    x = Vec(n);
    for (int i = n - 1; i >= 0; --i) {
        double s = m[i][n];
        for (int j = i + 1; j < n; ++j) s -= m[i][j] * x[j];
        x[i] = s / m[i][i];
    }
    return true;
}

Vec symmetric_eigenvalues(const Mat& a) {
    const int n = a.dim();
    Mat w = a;
    for (int sweep = 0; sweep < 64; ++sweep) {
        double off = 0.0;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) off += w(p, q) * w(p, q);
        if (off < 1e-30) break;
        for (int p = 0; p < n; ++p) {
            for (int q = p + 1; q < n; ++q) {
                if (w(p, q) == 0.0) continue;
                const double theta = (w(q, q) - w(p, p)) / (2.0 * w(p, q));
                const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (int k = 0; k < n; ++k) {
                    const double wkp = w(k, p), wkq = w(k, q);
                    w(k, p) = c * wkp - s * wkq;
                    w(k, q) = s * wkp + c * wkq;
                }
                for (int k = 0; k < n; ++k) {
                    const double wpk = w(p, k), wqk = w(q, k);
                    w(p, k) = c * wpk - s * wqk;
                    w(q, k) = s * wpk + c * wqk;
                }
            }
        }
    }
    Vec ev(n);
    for (int i = 0; i < n; ++i) ev[i] = w(i, i);
    for (int i = 1; i < n; ++i) {
        const double key = ev[i];
        int j = i - 1;
        while (j >= 0 && ev[j] > key) {
            ev[j + 1] = ev[j];
            --j;
        }
        ev[j + 1] = key;
    }
    return ev;
}

}  // namespace psi
