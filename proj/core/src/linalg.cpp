#include "qct/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace qct {

Mat Mat::identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = QuadNum(1);
    return m;
}

Mat operator*(const Mat& a, const Mat& b) {
    if (a.cols != b.rows) throw std::invalid_argument("matrix product shape mismatch");
    Mat r(a.rows, b.cols);
    for (int i = 0; i < a.rows; ++i) {
        for (int k = 0; k < a.cols; ++k) {
            const QuadNum& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (int j = 0; j < b.cols; ++j) {
                r.at(i, j) += aik * b.at(k, j);
            }
        }
    }
    return r;
}

QVec operator*(const Mat& a, const QVec& v) {
    if (a.cols != static_cast<int>(v.size())) throw std::invalid_argument("matrix-vector shape mismatch");
    QVec r(a.rows);
    for (int i = 0; i < a.rows; ++i) {
        for (int j = 0; j < a.cols; ++j) {
            if (!a.at(i, j).is_zero()) r[i] += a.at(i, j) * v[j];
        }
    }
    return r;
}

Mat operator+(const Mat& a, const Mat& b) {
    if (a.rows != b.rows || a.cols != b.cols) throw std::invalid_argument("matrix sum shape mismatch");
    Mat r = a;
    for (size_t i = 0; i < r.data.size(); ++i) r.data[i] += b.data[i];
    return r;
}

Mat operator-(const Mat& a, const Mat& b) {
    if (a.rows != b.rows || a.cols != b.cols) throw std::invalid_argument("matrix diff shape mismatch");
    Mat r = a;
    for (size_t i = 0; i < r.data.size(); ++i) r.data[i] -= b.data[i];
    return r;
}

Mat scale(const QuadNum& s, const Mat& a) {
    Mat r = a;
    for (auto& x : r.data) x *= s;
    return r;
}

Mat transpose(const Mat& a) {
    Mat r(a.cols, a.rows);
    for (int i = 0; i < a.rows; ++i)
        for (int j = 0; j < a.cols; ++j) r.at(j, i) = a.at(i, j);
    return r;
}

Mat pow_mat(Mat a, unsigned k) {
    if (a.rows != a.cols) throw std::invalid_argument("matrix power needs a square matrix");
    Mat r = Mat::identity(a.rows);
    while (k > 0) {
        if (k & 1u) r = r * a;
        k >>= 1u;
        if (k > 0) a = a * a;
    }
    return r;
}

Mat conjugate(const Mat& a) {
    Mat r = a;
    for (auto& x : r.data) x = x.conjugate();
    return r;
}

QVec add(const QVec& u, const QVec& v) {
    if (u.size() != v.size()) throw std::invalid_argument("vector sum size mismatch");
    QVec r = u;
    for (size_t i = 0; i < r.size(); ++i) r[i] += v[i];
    return r;
}

QVec sub(const QVec& u, const QVec& v) {
    if (u.size() != v.size()) throw std::invalid_argument("vector diff size mismatch");
    QVec r = u;
    for (size_t i = 0; i < r.size(); ++i) r[i] -= v[i];
    return r;
}

QVec scale(const QuadNum& s, const QVec& v) {
    QVec r = v;
    for (auto& x : r) x *= s;
    return r;
}

QuadNum dot(const QVec& u, const QVec& v) {
    if (u.size() != v.size()) throw std::invalid_argument("dot size mismatch");
    QuadNum r;
    for (size_t i = 0; i < u.size(); ++i) r += u[i] * v[i];
    return r;
}

QVec conjugate(const QVec& v) {
    QVec r = v;
    for (auto& x : r) x = x.conjugate();
    return r;
}

bool is_zero(const QVec& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

namespace {

// In-place forward elimination into reduced row echelon form.
// Returns the pivot column of each pivot row.
std::vector<int> rref(Mat& m) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols && row < m.rows; ++col) {
        int sel = -1;
        for (int i = row; i < m.rows; ++i) {
            if (!m.at(i, col).is_zero()) {
                sel = i;
                break;
            }
        }
        if (sel < 0) continue;
        if (sel != row) {
            for (int j = 0; j < m.cols; ++j) std::swap(m.at(sel, j), m.at(row, j));
        }
        QuadNum inv = m.at(row, col).inverse();
        for (int j = col; j < m.cols; ++j) m.at(row, j) *= inv;
        for (int i = 0; i < m.rows; ++i) {
            if (i == row || m.at(i, col).is_zero()) continue;
            QuadNum f = m.at(i, col);
            for (int j = col; j < m.cols; ++j) m.at(i, j) -= f * m.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

int rank(Mat a) {
    return static_cast<int>(rref(a).size());
}

QuadNum det(Mat a) {
    if (a.rows != a.cols) throw std::invalid_argument("determinant needs a square matrix");
    QuadNum d(1);
    for (int col = 0; col < a.cols; ++col) {
        int sel = -1;
        for (int i = col; i < a.rows; ++i) {
            if (!a.at(i, col).is_zero()) {
                sel = i;
                break;
            }
        }
        if (sel < 0) return QuadNum(0);
        if (sel != col) {
            for (int j = 0; j < a.cols; ++j) std::swap(a.at(sel, j), a.at(col, j));
            d = -d;
        }
        d *= a.at(col, col);
        QuadNum inv = a.at(col, col).inverse();
        for (int i = col + 1; i < a.rows; ++i) {
            if (a.at(i, col).is_zero()) continue;
            QuadNum f = a.at(i, col) * inv;
            for (int j = col; j < a.cols; ++j) a.at(i, j) -= f * a.at(col, j);
        }
    }
    return d;
}

Mat inverse(const Mat& a) {
    if (a.rows != a.cols) throw std::invalid_argument("inverse needs a square matrix");
    Mat aug(a.rows, 2 * a.cols);
    for (int i = 0; i < a.rows; ++i) {
        for (int j = 0; j < a.cols; ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, a.cols + i) = QuadNum(1);
    }
    auto pivots = rref(aug);
    int left_pivots = 0;
    for (int c : pivots)
        if (c < a.cols) ++left_pivots;
    if (left_pivots != a.cols) throw std::domain_error("singular matrix");
    Mat r(a.rows, a.cols);
    for (int i = 0; i < a.rows; ++i)
        for (int j = 0; j < a.cols; ++j) r.at(i, j) = aug.at(i, a.cols + j);
    return r;
}

std::vector<QVec> kernel_basis(const Mat& a) {
    Mat m = a;
    auto pivots = rref(m);
    std::vector<bool> is_pivot(a.cols, false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<QVec> basis;
    for (int free_col = 0; free_col < a.cols; ++free_col) {
        if (is_pivot[free_col]) continue;
        QVec v(a.cols);
        v[free_col] = QuadNum(1);
        for (size_t r = 0; r < pivots.size(); ++r) {
            v[pivots[r]] = -m.at(static_cast<int>(r), free_col);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<QVec> solve_unique(const Mat& a, const QVec& b) {
    if (a.rows != static_cast<int>(b.size())) throw std::invalid_argument("solve shape mismatch");
    Mat aug(a.rows, a.cols + 1);
    for (int i = 0; i < a.rows; ++i) {
        for (int j = 0; j < a.cols; ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, a.cols) = b[i];
    }
    auto pivots = rref(aug);
    // Inconsistent if a pivot landed in the last column.
    if (!pivots.empty() && pivots.back() == a.cols) return std::nullopt;
    if (static_cast<int>(pivots.size()) != a.cols) return std::nullopt;
    QVec x(a.cols);
    for (int r = 0; r < a.cols; ++r) x[pivots[r]] = aug.at(r, a.cols);
    return x;
}

std::optional<QVec> solve_unique_rational(const Mat& a, const QVec& b) {
    int d = 1;
    for (const auto& x : a.data)
        if (!x.is_rational()) d = x.d();
    for (const auto& x : b)
        if (!x.is_rational()) d = x.d();
    Mat ra(2 * a.rows, a.cols);
    QVec rb(2 * a.rows);
    for (int i = 0; i < a.rows; ++i) {
        for (int j = 0; j < a.cols; ++j) {
            ra.at(2 * i, j) = QuadNum(a.at(i, j).a());
            ra.at(2 * i + 1, j) = QuadNum(a.at(i, j).b());
        }
        rb[2 * i] = QuadNum(b[i].a());
        rb[2 * i + 1] = QuadNum(b[i].b());
    }
    (void)d;
    return solve_unique(ra, rb);
}

IMat IMat::identity(int n) {
    IMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IMat operator*(const IMat& a, const IMat& b) {
    if (a.cols != b.rows) throw std::invalid_argument("integer matrix product shape mismatch");
    IMat r(a.rows, b.cols);
    for (int i = 0; i < a.rows; ++i)
        for (int k = 0; k < a.cols; ++k) {
            if (sgn(a.at(i, k)) == 0) continue;
            for (int j = 0; j < b.cols; ++j) r.at(i, j) += a.at(i, k) * b.at(k, j);
        }
    return r;
}

bool is_zero(const IMat& a) {
    for (const auto& x : a.data)
        if (sgn(x) != 0) return false;
    return true;
}

Mat to_rational(const IMat& a) {
    Mat r(a.rows, a.cols);
    for (int i = 0; i < a.rows; ++i)
        for (int j = 0; j < a.cols; ++j) r.at(i, j) = QuadNum(Rational(a.at(i, j)));
    return r;
}

std::optional<IMat> to_integer(const Mat& a) {
    IMat r(a.rows, a.cols);
    for (int i = 0; i < a.rows; ++i)
        for (int j = 0; j < a.cols; ++j) {
            const QuadNum& x = a.at(i, j);
            if (!x.is_rational() || !rat_is_integer(x.a())) return std::nullopt;
            r.at(i, j) = x.a().get_num();
        }
    return r;
}

namespace {

struct SnfWork {
    IMat d, u, uinv, v, vinv;

    void row_swap(int i, int k) {
        if (i == k) return;
        for (int j = 0; j < d.cols; ++j) std::swap(d.at(i, j), d.at(k, j));
        for (int j = 0; j < u.cols; ++j) std::swap(u.at(i, j), u.at(k, j));
        for (int r = 0; r < uinv.rows; ++r) std::swap(uinv.at(r, i), uinv.at(r, k));
    }
    // row_i -= q * row_k
    void row_axpy(int i, int k, const Int& q) {
        if (sgn(q) == 0) return;
        for (int j = 0; j < d.cols; ++j) d.at(i, j) -= q * d.at(k, j);
        for (int j = 0; j < u.cols; ++j) u.at(i, j) -= q * u.at(k, j);
        for (int r = 0; r < uinv.rows; ++r) uinv.at(r, k) += q * uinv.at(r, i);
    }
    void row_negate(int i) {
        for (int j = 0; j < d.cols; ++j) d.at(i, j) = -d.at(i, j);
        for (int j = 0; j < u.cols; ++j) u.at(i, j) = -u.at(i, j);
        for (int r = 0; r < uinv.rows; ++r) uinv.at(r, i) = -uinv.at(r, i);
    }
    void col_swap(int j, int k) {
        if (j == k) return;
        for (int i = 0; i < d.rows; ++i) std::swap(d.at(i, j), d.at(i, k));
        for (int i = 0; i < v.rows; ++i) std::swap(v.at(i, j), v.at(i, k));
        for (int c = 0; c < vinv.cols; ++c) std::swap(vinv.at(j, c), vinv.at(k, c));
    }
    // col_j -= q * col_k
    void col_axpy(int j, int k, const Int& q) {
        if (sgn(q) == 0) return;
        for (int i = 0; i < d.rows; ++i) d.at(i, j) -= q * d.at(i, k);
        for (int i = 0; i < v.rows; ++i) v.at(i, j) -= q * v.at(i, k);
        for (int c = 0; c < vinv.cols; ++c) vinv.at(k, c) += q * vinv.at(j, c);
    }
};

}  // namespace

SmithResult smith_normal_form(const IMat& a) {
    SnfWork w;
    w.d = a;
    w.u = IMat::identity(a.rows);
    w.uinv = IMat::identity(a.rows);
    w.v = IMat::identity(a.cols);
    w.vinv = IMat::identity(a.cols);

    const int n = std::min(a.rows, a.cols);
    for (int t = 0; t < n; ++t) {
        for (;;) {
            int pi = -1, pj = -1;
            Int best;
            for (int i = t; i < a.rows; ++i)
                for (int j = t; j < a.cols; ++j) {
                    const Int& x = w.d.at(i, j);
                    if (sgn(x) == 0) continue;
                    Int ax = abs(x);
                    if (pi < 0 || ax < best) {
                        best = ax;
                        pi = i;
                        pj = j;
                    }
                }
            if (pi < 0) { pi = -2; break; }
            w.row_swap(t, pi);
            w.col_swap(t, pj);

            bool clean = true;
            for (int i = t + 1; i < a.rows; ++i) {
                if (sgn(w.d.at(i, t)) == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), w.d.at(i, t).get_mpz_t(), w.d.at(t, t).get_mpz_t());
                w.row_axpy(i, t, q);
                if (sgn(w.d.at(i, t)) != 0) clean = false;
            }
            for (int j = t + 1; j < a.cols; ++j) {
                if (sgn(w.d.at(t, j)) == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), w.d.at(t, j).get_mpz_t(), w.d.at(t, t).get_mpz_t());
                w.col_axpy(j, t, q);
                if (sgn(w.d.at(t, j)) != 0) clean = false;
            }
            if (!clean) continue;

            // Enforce pivot | remaining block.
            bool divisible = true;
            for (int i = t + 1; i < a.rows && divisible; ++i)
                for (int j = t + 1; j < a.cols && divisible; ++j) {
                    if (!mpz_divisible_p(w.d.at(i, j).get_mpz_t(), w.d.at(t, t).get_mpz_t())) {
                        w.row_axpy(t, i, Int(-1));  // row_t += row_i
                        divisible = false;
                    }
                }
            if (divisible) break;
        }
        if (sgn(w.d.at(t, t)) == 0) break;
        if (sgn(w.d.at(t, t)) < 0) w.row_negate(t);
    }
    return SmithResult{std::move(w.u), std::move(w.uinv), std::move(w.d),
                       std::move(w.v), std::move(w.vinv)};
}

}  // namespace qct
