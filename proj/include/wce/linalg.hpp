#pragma once

#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <vector>

#include "wce/errors.hpp"

// Small dense linear algebra. Every matrix in this project is at most 12x12,
// so the containers are plain row-major vectors and the algorithms are the
// classic O(n^3) ones.

namespace wce {

using Vec = std::vector<double>;

class Mat {
public:
    Mat() = default;
    Mat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, 0.0) {}
    Mat(std::initializer_list<std::initializer_list<double>> rows);

    static Mat identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    double& operator()(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    double operator()(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    Vec col(int j) const;
    void set_col(int j, const Vec& v);

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<double> a_;
};

Mat transpose(const Mat& m);
Mat operator*(const Mat& a, const Mat& b);
Mat operator-(const Mat& a, const Mat& b);
Mat operator+(const Mat& a, const Mat& b);
Vec mat_vec(const Mat& m, const Vec& v);

double dot(const Vec& a, const Vec& b);
double norm2(const Vec& v);
double norm_inf(const Vec& v);
double max_abs(const Mat& m);

Vec scaled(const Vec& v, double s);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);

// b <- b + s*a
void axpy(double s, const Vec& a, Vec& b);

Mat outer(const Vec& a, const Vec& b);

// Gaussian elimination with partial pivoting. Returns nullopt when a pivot
// falls below pivot_tol * max_abs(A).
std::optional<Vec> solve_linear(Mat a, Vec rhs, double pivot_tol = 1e-14);

inline bool is_square(const Mat& m) { return m.rows() == m.cols(); }

}  // namespace wce
