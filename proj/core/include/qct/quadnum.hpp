#pragma once

#include "qct/rational.hpp"

#include <iosfwd>
#include <string>

namespace qct {

enum class Ordering { LT, EQ, GT };

// Exact element a + b*sqrt(d) of a real quadratic field.  Rational numbers
// are stored canonically with d = 1 (b = 0) and combine with any field;
// arithmetic across two distinct irrational fields throws field_error.
class QuadNum {
public:
    QuadNum() : a_(0), b_(0), d_(1) {}
    QuadNum(const Rational& a) : a_(a), b_(0), d_(1) { a_.canonicalize(); }
    QuadNum(const Int& a) : a_(a), b_(0), d_(1) {}
    QuadNum(long a) : a_(a), b_(0), d_(1) {}
    QuadNum(int a) : a_(a), b_(0), d_(1) {}
    QuadNum(Rational a, Rational b, int d);

    static QuadNum sqrt_of(int d) { return QuadNum(0, 1, d); }

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    int d() const { return d_; }

    bool is_rational() const { return d_ == 1; }
    bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }

    QuadNum operator-() const { return QuadNum(-a_, -b_, d_); }
    QuadNum& operator+=(const QuadNum& rhs);
    QuadNum& operator-=(const QuadNum& rhs);
    QuadNum& operator*=(const QuadNum& rhs);
    QuadNum& operator/=(const QuadNum& rhs);

    friend QuadNum operator+(QuadNum lhs, const QuadNum& rhs) { return lhs += rhs; }
    friend QuadNum operator-(QuadNum lhs, const QuadNum& rhs) { return lhs -= rhs; }
    friend QuadNum operator*(QuadNum lhs, const QuadNum& rhs) { return lhs *= rhs; }
    friend QuadNum operator/(QuadNum lhs, const QuadNum& rhs) { return lhs /= rhs; }

    QuadNum conjugate() const { return QuadNum(a_, -b_, d_); }
    QuadNum inverse() const;

    // Exact sign, decided by rational arithmetic only.
    int sign() const;
    Ordering compare(const QuadNum& rhs) const;

    // Greatest integer <= value, exact.
    Int floor() const;

    // Nearest double; rendering only, never used in predicates.
    double to_float() const;

    bool operator==(const QuadNum& rhs) const {
        return d_ == rhs.d_ && a_ == rhs.a_ && b_ == rhs.b_;
    }
    bool operator!=(const QuadNum& rhs) const { return !(*this == rhs); }
    // Order of the real embeddings; usable as a map key because the
    // representation is unique.
    bool operator<(const QuadNum& rhs) const { return compare(rhs) == Ordering::LT; }
    bool operator<=(const QuadNum& rhs) const { return compare(rhs) != Ordering::GT; }
    bool operator>(const QuadNum& rhs) const { return compare(rhs) == Ordering::GT; }
    bool operator>=(const QuadNum& rhs) const { return compare(rhs) != Ordering::LT; }

    std::string str() const;

private:
    void normalize();
    static int unify(const QuadNum& x, const QuadNum& y);

    Rational a_;
    Rational b_;
    int d_;
};

std::ostream& operator<<(std::ostream& os, const QuadNum& q);

inline QuadNum conjugate(const QuadNum& q) { return q.conjugate(); }

enum class ArithOp { Add, Sub, Mul, Div };
QuadNum arith(const QuadNum& x, const QuadNum& y, ArithOp op);

inline Ordering compare(const QuadNum& x, const QuadNum& y) { return x.compare(y); }
inline Int floor_exact(const QuadNum& x) { return x.floor(); }
inline double to_float(const QuadNum& x) { return x.to_float(); }

// Compares c against sqrt(a2) + sqrt(b2) (all exact, a2 >= 0, b2 >= 0) by
// repeated squaring; lets window tests stay exact even when the two summands
// live in different surd extensions.
Ordering compare_with_sqrt_sum(const QuadNum& c, const QuadNum& a2, const QuadNum& b2);

}  // namespace qct
