#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace qct {

using Int = mpz_class;
using Rational = mpq_class;

struct field_error : std::domain_error {
    using std::domain_error::domain_error;
};

inline Int rat_floor(const Rational& q) {
    Int f;
    mpz_fdiv_q(f.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return f;
}

inline Int rat_ceil(const Rational& q) {
    Int c;
    mpz_cdiv_q(c.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return c;
}

inline bool rat_is_integer(const Rational& q) { return q.get_den() == 1; }

inline Rational make_rational(const Int& num, const Int& den) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// Nearest double with ties to even, computed by integer shifts only, so the
// result is identical on every platform regardless of libm or x87 quirks.
double rat_to_double(const Rational& q);

// Accepts "p", "-p", "p/q" in base 10.
Rational parse_rational(const std::string& text);

// Reduced "p" or "p/q" with a positive denominator.
std::string format_rational(const Rational& q);

}  // namespace qct
