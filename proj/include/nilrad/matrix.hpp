#pragma once

#include <optional>
#include <vector>

#include "nilrad/rational.hpp"

namespace nilrad {

// Dense rational matrix, row-major. Dimensions here never exceed a few
// hundred, so no attempt at sparsity is made.
struct Mat {
    int rows = 0;
    int cols = 0;
    std::vector<Rat> a;

    Mat() = default;
    Mat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}

    Rat& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
    const Rat& at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }

    static Mat zero(int r, int c) { return Mat(r, c); }
    static Mat identity(int n);
    static Mat from_rows(const std::vector<Vec>& rows);

    Vec row(int r) const;
    Vec col(int c) const;
    void set_row(int r, const Vec& v);

    bool operator==(const Mat& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
};

Mat mat_mul(const Mat& x, const Mat& y);
Vec mat_apply(const Mat& m, const Vec& v);
Mat mat_add(const Mat& x, const Mat& y);
Mat mat_sub(const Mat& x, const Mat& y);
Mat mat_scale(const Rat& c, const Mat& m);
Mat transpose(const Mat& m);
bool mat_is_zero(const Mat& m);
Rat mat_trace(const Mat& m);
Mat mat_pow(const Mat& m, int e);

// True iff m^n = 0 for n = m.rows (exact test; m must be square).
bool mat_is_nilpotent(const Mat& m);

// In-place reduced row echelon form. Returns the rank; pivot columns (in
// increasing order) are appended to *pivots when given.
int rref_in_place(Mat& m, std::vector<int>* pivots = nullptr);

// Nullspace basis in the deterministic RREF order: one vector per free
// column, free columns visited in increasing index order.
std::vector<Vec> nullspace(const Mat& m);

std::optional<Mat> inverse(const Mat& m);

} // namespace nilrad
