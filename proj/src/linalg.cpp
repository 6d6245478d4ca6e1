#include "drg/linalg.hpp"

#include "drg/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>

namespace drg::linalg {

std::vector<double> tridiag_eigenvalues(std::vector<double> d, std::vector<double> off) {
    const size_t n = d.size();
    if (n == 0) return {};
    if (off.size() + 1 != n) throw NumericalError("tridiag size mismatch");

    // QL with implicit shifts. e is padded so e[n-1] exists as scratch.
    std::vector<double> e = off;
    e.push_back(0.0);

    for (size_t l = 0; l < n; ++l) {
        int iter = 0;
        size_t m;
        do {
            for (m = l; m + 1 < n; ++m) {
                double dd = std::abs(d[m]) + std::abs(d[m + 1]);
                if (std::abs(e[m]) <= 1e-15 * dd) break;
            }
            if (m != l) {
                if (iter++ == 60) throw NumericalError("tridiagonal eigensolve did not converge");
                double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
                double r = std::hypot(g, 1.0);
                g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
                double s = 1.0, c = 1.0, p = 0.0;
                bool underflow = false;
                for (size_t ii = m; ii-- > l;) {
                    double f = s * e[ii];
                    double b = c * e[ii];
                    r = std::hypot(f, g);
                    e[ii + 1] = r;
                    if (r == 0.0) {
                        d[ii + 1] -= p;
                        e[m] = 0.0;
                        underflow = true;
                        break;
                    }
                    s = f / r;
                    c = g / r;
                    g = d[ii + 1] - p;
                    r = (d[ii] - g) * s + 2.0 * c * b;
                    p = s * r;
                    d[ii + 1] = g + p;
                    g = c * r - b;
                }
                if (underflow) continue;
                d[l] -= p;
                e[l] = g;
                e[m] = 0.0;
            }
        } while (m != l);
    }
    std::sort(d.begin(), d.end());
    return d;
}

std::vector<double> symmetric_eigenvalues(std::vector<std::vector<double>> a) {
    const size_t n = a.size();
    if (n == 0) return {};
    for (auto& row : a)
        if (row.size() != n) throw NumericalError("symmetric_eigenvalues: matrix not square");

    // Householder reduction to tridiagonal form (values only).
    std::vector<double> d(n, 0.0), e(n, 0.0);
    for (size_t i = n - 1; i > 0; --i) {
        size_t l = i - 1;
        double h = 0.0;
        if (l > 0) {
            double scale = 0.0;
            for (size_t k = 0; k <= l; ++k) scale += std::abs(a[i][k]);
            if (scale == 0.0) {
                e[i] = a[i][l];
            } else {
                for (size_t k = 0; k <= l; ++k) {
                    a[i][k] /= scale;
                    h += a[i][k] * a[i][k];
                }
                double f = a[i][l];
                double g = (f >= 0.0) ? -std::sqrt(h) : std::sqrt(h);
                e[i] = scale * g;
                h -= f * g;
                a[i][l] = f - g;
                f = 0.0;
                for (size_t j = 0; j <= l; ++j) {
                    g = 0.0;
                    for (size_t k = 0; k <= j; ++k) g += a[j][k] * a[i][k];
                    for (size_t k = j + 1; k <= l; ++k) g += a[k][j] * a[i][k];
                    e[j] = g / h;
                    f += e[j] * a[i][j];
                }
                double hh = f / (h + h);
                for (size_t j = 0; j <= l; ++j) {
                    f = a[i][j];
                    e[j] = g = e[j] - hh * f;
                    for (size_t k = 0; k <= j; ++k) a[j][k] -= f * e[k] + g * a[i][k];
                }
            }
        } else {
            e[i] = a[i][l];
        }
        d[i] = h;
    }
    for (size_t i = 0; i < n; ++i) d[i] = a[i][i];

    std::vector<double> diag(d.begin(), d.end());
    std::vector<double> off(n > 1 ? n - 1 : 0);
    for (size_t i = 1; i < n; ++i) off[i - 1] = e[i];
    return tridiag_eigenvalues(std::move(diag), std::move(off));
}

std::vector<std::vector<BigRational>> solve_rational(std::vector<std::vector<BigRational>> a,
                                                     std::vector<std::vector<BigRational>> rhs) {
    const size_t n = a.size();
    for (auto& row : a)
        if (row.size() != n) throw NumericalError("solve_rational: matrix not square");
    for (auto& col : rhs)
        if (col.size() != n) throw NumericalError("solve_rational: rhs size mismatch");

    std::vector<size_t> perm(n);
    for (size_t i = 0; i < n; ++i) perm[i] = i;

    for (size_t col = 0; col < n; ++col) {
        size_t pivot = col;
        while (pivot < n && a[perm[pivot]][col] == 0) ++pivot;
        if (pivot == n) throw NumericalError("solve_rational: singular matrix");
        std::swap(perm[col], perm[pivot]);
        const size_t pr = perm[col];
        const BigRational inv_p = BigRational(1) / a[pr][col];
        for (size_t r = col + 1; r < n; ++r) {
            const size_t rr = perm[r];
            if (a[rr][col] == 0) continue;
            BigRational f = a[rr][col] * inv_p;
            a[rr][col] = 0;
            for (size_t c = col + 1; c < n; ++c)
                if (a[pr][c] != 0) a[rr][c] -= f * a[pr][c];
            for (auto& b : rhs) b[rr] -= f * b[pr];
        }
    }

    std::vector<std::vector<BigRational>> x(rhs.size(), std::vector<BigRational>(n));
    for (size_t k = 0; k < rhs.size(); ++k) {
        for (size_t i = n; i-- > 0;) {
            BigRational s = rhs[k][perm[i]];
            for (size_t c = i + 1; c < n; ++c) s -= a[perm[i]][c] * x[k][c];
            x[k][i] = s / a[perm[i]][i];
        }
    }
    return x;
}

std::vector<double> solve_double(std::vector<std::vector<double>> a, std::vector<double> rhs) {
    const size_t n = a.size();
    for (auto& row : a)
        if (row.size() != n) throw NumericalError("solve_double: matrix not square");
    if (rhs.size() != n) throw NumericalError("solve_double: rhs size mismatch");

    for (size_t col = 0; col < n; ++col) {
        size_t pivot = col;
        for (size_t r = col + 1; r < n; ++r)
            if (std::abs(a[r][col]) > std::abs(a[pivot][col])) pivot = r;
        if (a[pivot][col] == 0.0) throw NumericalError("solve_double: singular matrix");
        std::swap(a[col], a[pivot]);
        std::swap(rhs[col], rhs[pivot]);
        for (size_t r = col + 1; r < n; ++r) {
            double f = a[r][col] / a[col][col];
            if (f == 0.0) continue;
            for (size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
            rhs[r] -= f * rhs[col];
        }
    }
    std::vector<double> x(n);
    for (size_t i = n; i-- > 0;) {
        double s = rhs[i];
        for (size_t c = i + 1; c < n; ++c) s -= a[i][c] * x[c];
        x[i] = s / a[i][i];
    }
    return x;
}

} // namespace drg::linalg
