#include "wce/linalg.hpp"

#include <algorithm>
#include <cmath>

namespace wce {

Mat::Mat(std::initializer_list<std::initializer_list<double>> rows) {
    rows_ = static_cast<int>(rows.size());
    cols_ = rows_ > 0 ? static_cast<int>(rows.begin()->size()) : 0;
    a_.reserve(static_cast<size_t>(rows_) * cols_);
    for (const auto& r : rows) {
        if (static_cast<int>(r.size()) != cols_) {
            fail(ErrorKind::DimensionMismatch, "ragged initializer for Mat");
        }
        a_.insert(a_.end(), r.begin(), r.end());
    }
}

Mat Mat::identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

Vec Mat::col(int j) const {
    Vec v(rows_);
    for (int i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
}

void Mat::set_col(int j, const Vec& v) {
    for (int i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
}

Mat transpose(const Mat& m) {
    Mat t(m.cols(), m.rows());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) t(j, i) = m(i, j);
    return t;
}

Mat operator*(const Mat& a, const Mat& b) {
    if (a.cols() != b.rows()) fail(ErrorKind::DimensionMismatch, "matrix product shape mismatch");
    Mat c(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            const double aik = a(i, k);
            for (int j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
        }
    return c;
}

Mat operator-(const Mat& a, const Mat& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        fail(ErrorKind::DimensionMismatch, "matrix difference shape mismatch");
    Mat c(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) - b(i, j);
    return c;
}

Mat operator+(const Mat& a, const Mat& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        fail(ErrorKind::DimensionMismatch, "matrix sum shape mismatch");
    Mat c(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) + b(i, j);
    return c;
}

Vec mat_vec(const Mat& m, const Vec& v) {
    if (m.cols() != static_cast<int>(v.size()))
        fail(ErrorKind::DimensionMismatch, "matrix-vector shape mismatch");
    Vec r(m.rows(), 0.0);
    for (int i = 0; i < m.rows(); ++i) {
        double s = 0.0;
        for (int j = 0; j < m.cols(); ++j) s += m(i, j) * v[j];
        r[i] = s;
    }
    return r;
}

double dot(const Vec& a, const Vec& b) {
    double s = 0.0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

double norm2(const Vec& v) { return std::sqrt(dot(v, v)); }

double norm_inf(const Vec& v) {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::abs(x));
    return m;
}

double max_abs(const Mat& m) {
    double r = 0.0;
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) r = std::max(r, std::abs(m(i, j)));
    return r;
}

Vec scaled(const Vec& v, double s) {
    Vec r(v);
    for (double& x : r) x *= s;
    return r;
}

Vec add(const Vec& a, const Vec& b) {
    Vec r(a);
    for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

Vec sub(const Vec& a, const Vec& b) {
    Vec r(a);
    for (size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

void axpy(double s, const Vec& a, Vec& b) {
    for (size_t i = 0; i < a.size(); ++i) b[i] += s * a[i];
}

Mat outer(const Vec& a, const Vec& b) {
    Mat m(static_cast<int>(a.size()), static_cast<int>(b.size()));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) m(i, j) = a[i] * b[j];
    return m;
}

std::optional<Vec> solve_linear(Mat a, Vec rhs, double pivot_tol) {
    if (!is_square(a) || a.rows() != static_cast<int>(rhs.size()))
        fail(ErrorKind::DimensionMismatch, "solve_linear shape mismatch");
    const int n = a.rows();
    const double scale = std::max(max_abs(a), 1e-300);
    for (int c = 0; c < n; ++c) {
        int p = c;
        for (int r = c + 1; r < n; ++r)
            if (std::abs(a(r, c)) > std::abs(a(p, c))) p = r;
        if (std::abs(a(p, c)) < pivot_tol * scale) return std::nullopt;
        if (p != c) {
            for (int j = 0; j < n; ++j) std::swap(a(p, j), a(c, j));
            std::swap(rhs[p], rhs[c]);
        }
        for (int r = c + 1; r < n; ++r) {
            const double f = a(r, c) / a(c, c);
            if (f == 0.0) continue;
            for (int j = c; j < n; ++j) a(r, j) -= f * a(c, j);
            rhs[r] -= f * rhs[c];
        }
    }
    Vec x(n, 0.0);
    for (int r = n - 1; r >= 0; --r) {
        double s = rhs[r];
        for (int j = r + 1; j < n; ++j) s -= a(r, j) * x[j];
        x[r] = s / a(r, r);
    }
    return x;
}

}  // namespace wce
