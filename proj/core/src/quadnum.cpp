#include "qct/quadnum.hpp"

#include <cmath>
#include <ostream>
#include <sstream>

namespace qct {

double rat_to_double(const Rational& q) {
    if (sgn(q) == 0) return 0.0;
    const bool neg = sgn(q) < 0;
    Int n = abs(q.get_num());
    Int d = q.get_den();

    const long bits_n = static_cast<long>(mpz_sizeinbase(n.get_mpz_t(), 2));
    const long bits_d = static_cast<long>(mpz_sizeinbase(d.get_mpz_t(), 2));
    long k = 52 - (bits_n - bits_d);

    const Int two52 = Int(1) << 52;
    const Int two53 = Int(1) << 53;
    Int t, r, den;
    auto shifted_div = [&](long kk) {
        Int num = n;
        den = d;
        if (kk >= 0) {
            mpz_mul_2exp(num.get_mpz_t(), num.get_mpz_t(), static_cast<mp_bitcnt_t>(kk));
        } else {
            mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), static_cast<mp_bitcnt_t>(-kk));
        }
        mpz_fdiv_qr(t.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    };
    shifted_div(k);
    while (t >= two53) shifted_div(--k);
    while (t < two52) shifted_div(++k);

    const Int twice_r = r * 2;
    const int c = cmp(twice_r, den);
    if (c > 0 || (c == 0 && mpz_odd_p(t.get_mpz_t()))) {
        t += 1;
        if (t == two53) {
            t = two52;
            --k;
        }
    }
    const double mant = t.get_d();
    const double value = std::ldexp(mant, static_cast<int>(-k));
    return neg ? -value : value;
}

Rational parse_rational(const std::string& text) {
    Rational q;
    if (q.set_str(text, 10) != 0) {
        throw std::invalid_argument("not a rational: '" + text + "'");
    }
    if (sgn(q.get_den()) == 0) {
        throw std::invalid_argument("zero denominator: '" + text + "'");
    }
    q.canonicalize();
    return q;
}

std::string format_rational(const Rational& q) {
    Rational c = q;
    c.canonicalize();
    if (c.get_den() == 1) return c.get_num().get_str();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

namespace {

bool squarefree(int d) {
    if (d < 1) return false;
    for (int p = 2; p * p <= d; ++p) {
        if (d % (p * p) == 0) return false;
    }
    return true;
}

}  // namespace

QuadNum::QuadNum(Rational a, Rational b, int d) : a_(std::move(a)), b_(std::move(b)), d_(d) {
    a_.canonicalize();
    b_.canonicalize();
    if (!squarefree(d_)) {
        throw field_error("field index must be a square-free positive integer");
    }
    if (d_ == 1) {
        a_ += b_;
        b_ = 0;
    }
    normalize();
}

void QuadNum::normalize() {
    if (sgn(b_) == 0) d_ = 1;
}

int QuadNum::unify(const QuadNum& x, const QuadNum& y) {
    if (x.d_ == y.d_) return x.d_;
    if (x.d_ == 1) return y.d_;
    if (y.d_ == 1) return x.d_;
    throw field_error("mixed quadratic fields: sqrt(" + std::to_string(x.d_) + ") vs sqrt(" +
                      std::to_string(y.d_) + ")");
}

QuadNum& QuadNum::operator+=(const QuadNum& rhs) {
    d_ = unify(*this, rhs);
    a_ += rhs.a_;
    b_ += rhs.b_;
    normalize();
    return *this;
}

QuadNum& QuadNum::operator-=(const QuadNum& rhs) {
    d_ = unify(*this, rhs);
    a_ -= rhs.a_;
    b_ -= rhs.b_;
    normalize();
    return *this;
}

QuadNum& QuadNum::operator*=(const QuadNum& rhs) {
    d_ = unify(*this, rhs);
    Rational na = a_ * rhs.a_ + b_ * rhs.b_ * d_;
    Rational nb = a_ * rhs.b_ + b_ * rhs.a_;
    a_ = std::move(na);
    b_ = std::move(nb);
    normalize();
    return *this;
}

QuadNum QuadNum::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero");
    Rational nrm = a_ * a_ - b_ * b_ * d_;
    return QuadNum(a_ / nrm, -b_ / nrm, d_);
}

QuadNum& QuadNum::operator/=(const QuadNum& rhs) {
    return *this *= rhs.inverse();
}

int QuadNum::sign() const {
    const int sa = sgn(a_);
    const int sb = sgn(b_);
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    Rational t = a_ * a_ - b_ * b_ * d_;
    return sgn(t) * sa;
}

Ordering QuadNum::compare(const QuadNum& rhs) const {
    const int s = (*this - rhs).sign();
    if (s < 0) return Ordering::LT;
    if (s > 0) return Ordering::GT;
    return Ordering::EQ;
}

Int QuadNum::floor() const {
    if (sgn(b_) == 0) return rat_floor(a_);
    // Bound |b| sqrt(d) from below within 1/4, then fix up exactly.
    Rational s = b_ * b_ * d_;
    Int z = s.get_num() * s.get_den() * 16;
    Int root;
    mpz_sqrt(root.get_mpz_t(), z.get_mpz_t());
    Rational approx = make_rational(root, 4 * s.get_den());
    Rational est = a_;
    if (sgn(b_) > 0) {
        est += approx;
    } else {
        est -= approx;
    }

    Int f = rat_floor(est);
    auto cmp_value_vs_int = [&](const Int& k) { return (*this - QuadNum(k)).sign(); };
    while (cmp_value_vs_int(f + 1) >= 0) ++f;
    while (cmp_value_vs_int(f) < 0) --f;
    return f;
}

double QuadNum::to_float() const {
    if (sgn(b_) == 0) return rat_to_double(a_);
    constexpr unsigned kFractionBits = 128;
    Int z = Int(d_) << (2 * kFractionBits);
    Int root;
    mpz_sqrt(root.get_mpz_t(), z.get_mpz_t());
    Rational sr = make_rational(root, Int(1) << kFractionBits);
    return rat_to_double(a_ + b_ * sr);
}

std::string QuadNum::str() const {
    std::ostringstream os;
    os << *this;
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const QuadNum& q) {
    if (q.is_rational()) return os << format_rational(q.a());
    if (sgn(q.a()) != 0) os << format_rational(q.a());
    const Rational& b = q.b();
    if (sgn(q.a()) != 0 || sgn(b) < 0) os << (sgn(b) < 0 ? "-" : "+");
    Rational babs = abs(b);
    if (babs != 1) os << format_rational(babs) << "*";
    os << "sqrt(" << q.d() << ")";
    return os;
}

QuadNum arith(const QuadNum& x, const QuadNum& y, ArithOp op) {
    switch (op) {
        case ArithOp::Add: return x + y;
        case ArithOp::Sub: return x - y;
        case ArithOp::Mul: return x * y;
        case ArithOp::Div: return x / y;
    }
    throw std::logic_error("unreachable");
}

Ordering compare_with_sqrt_sum(const QuadNum& c, const QuadNum& a2, const QuadNum& b2) {
    if (a2.sign() < 0 || b2.sign() < 0) {
        throw std::domain_error("compare_with_sqrt_sum: negative radicand");
    }
    const bool rhs_zero = a2.is_zero() && b2.is_zero();
    if (c.sign() < 0) return rhs_zero ? Ordering::LT : Ordering::LT;
    if (rhs_zero) return c.is_zero() ? Ordering::EQ : Ordering::GT;
    // c >= 0, rhs > 0: compare c^2 against a2 + b2 + 2 sqrt(a2 b2).
    QuadNum t = c * c - a2 - b2;
    if (t.sign() < 0) return Ordering::LT;
    QuadNum lhs = t * t;
    QuadNum rhs = QuadNum(4) * a2 * b2;
    return lhs.compare(rhs);
}

}  // namespace qct
