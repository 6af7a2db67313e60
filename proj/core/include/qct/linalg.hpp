#pragma once

#include "qct/quadnum.hpp"

#include <optional>
#include <vector>

namespace qct {

using QVec = std::vector<QuadNum>;

struct Mat {
    int rows = 0;
    int cols = 0;
    std::vector<QuadNum> data;

    Mat() = default;
    Mat(int r, int c) : rows(r), cols(c), data(static_cast<size_t>(r) * c) {}

    QuadNum& at(int r, int c) { return data[static_cast<size_t>(r) * cols + c]; }
    const QuadNum& at(int r, int c) const { return data[static_cast<size_t>(r) * cols + c]; }

    static Mat identity(int n);

    bool operator==(const Mat& rhs) const {
        return rows == rhs.rows && cols == rhs.cols && data == rhs.data;
    }
};

Mat operator*(const Mat& a, const Mat& b);
QVec operator*(const Mat& a, const QVec& v);
Mat operator+(const Mat& a, const Mat& b);
Mat operator-(const Mat& a, const Mat& b);
Mat scale(const QuadNum& s, const Mat& a);
Mat transpose(const Mat& a);
Mat pow_mat(Mat a, unsigned k);
Mat conjugate(const Mat& a);

QVec add(const QVec& u, const QVec& v);
QVec sub(const QVec& u, const QVec& v);
QVec scale(const QuadNum& s, const QVec& v);
QuadNum dot(const QVec& u, const QVec& v);
QVec conjugate(const QVec& v);
bool is_zero(const QVec& v);

int rank(Mat a);
QuadNum det(Mat a);
Mat inverse(const Mat& a);
std::vector<QVec> kernel_basis(const Mat& a);

// Unique solution of A x = b, or nullopt when the system is inconsistent or
// underdetermined.
std::optional<QVec> solve_unique(const Mat& a, const QVec& b);

// Solves A x = b insisting on a *rational* x while A, b may carry sqrt(d)
// parts: each equation splits into two rational ones.  Unique solutions only.
std::optional<QVec> solve_unique_rational(const Mat& a, const QVec& b);

struct IMat {
    int rows = 0;
    int cols = 0;
    std::vector<Int> data;

    IMat() = default;
    IMat(int r, int c) : rows(r), cols(c), data(static_cast<size_t>(r) * c) {}

    Int& at(int r, int c) { return data[static_cast<size_t>(r) * cols + c]; }
    const Int& at(int r, int c) const { return data[static_cast<size_t>(r) * cols + c]; }

    static IMat identity(int n);

    bool operator==(const IMat& rhs) const {
        return rows == rhs.rows && cols == rhs.cols && data == rhs.data;
    }
};

IMat operator*(const IMat& a, const IMat& b);
bool is_zero(const IMat& a);
Mat to_rational(const IMat& a);
// Entries must all be integers.
std::optional<IMat> to_integer(const Mat& a);

// U * A * V = D with U, V unimodular, D diagonal, d_i | d_{i+1}, d_i >= 0.
struct SmithResult {
    IMat U, Uinv, D, V, Vinv;
};
SmithResult smith_normal_form(const IMat& a);

}  // namespace qct
