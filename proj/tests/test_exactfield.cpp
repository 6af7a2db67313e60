#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qct/quadnum.hpp"

#include <cmath>
#include <random>

using namespace qct;

namespace {

QuadNum tau() { return QuadNum(Rational(1, 2), Rational(1, 2), 5); }
QuadNum sigma() { return tau().conjugate(); }

QuadNum random_quad(std::mt19937_64& rng, int d) {
    auto small = [&](bool nonzero_den) {
        long num = static_cast<long>(rng() % 19) - 9;
        long den = static_cast<long>(rng() % 9) + 1;
        (void)nonzero_den;
        return Rational(num, den);
    };
    Rational a = small(false), b = small(false);
    a.canonicalize();
    b.canonicalize();
    return QuadNum(a, b, d);
}

}  // namespace

TEST_CASE("rational floor and parsing") {
    CHECK(rat_floor(Rational(7, 2)) == 3);
    CHECK(rat_floor(Rational(-7, 2)) == -4);
    CHECK(rat_floor(Rational(4)) == 4);
    CHECK(rat_ceil(Rational(7, 2)) == 4);
    CHECK(parse_rational("22/7") == Rational(22, 7));
    CHECK(parse_rational("-3") == Rational(-3));
    CHECK(format_rational(Rational(22, 7)) == "22/7");
    CHECK(format_rational(Rational(-4, 2)) == "-2");
    CHECK_THROWS(parse_rational("x"));
    CHECK_THROWS(parse_rational("1/0"));
}

TEST_CASE("rational to double is correctly rounded with ties to even") {
    CHECK(rat_to_double(Rational(0)) == 0.0);
    CHECK(rat_to_double(Rational(1, 2)) == 0.5);
    CHECK(rat_to_double(Rational(-3, 4)) == -0.75);
    CHECK(rat_to_double(Rational(1, 3)) == 1.0 / 3.0);
    CHECK(rat_to_double(Rational(10, 3)) == 10.0 / 3.0);

    // Exact ties at integer scale: halfway cases must round to even mantissa.
    Int two52 = Int(1) << 52;
    Rational tie_down = Rational(two52 * 2 + 1, 2);  // 2^52 + 1/2 -> 2^52
    Rational tie_up = Rational(two52 * 2 + 3, 2);    // 2^52 + 3/2 -> 2^52 + 2
    CHECK(rat_to_double(tie_down) == std::ldexp(1.0, 52));
    CHECK(rat_to_double(tie_up) == std::ldexp(1.0, 52) + 2.0);
}

TEST_CASE("golden ratio identities") {
    CHECK(tau() * sigma() == QuadNum(-1));
    CHECK(tau() + sigma() == QuadNum(1));
    QuadNum r2 = QuadNum::sqrt_of(2);
    CHECK((QuadNum(3) + QuadNum(2) * r2) * (QuadNum(3) - QuadNum(2) * r2) == QuadNum(1));
}

TEST_CASE("conjugation") {
    CHECK(tau().conjugate() == sigma());
    CHECK(QuadNum(Rational(7, 3)).conjugate() == QuadNum(Rational(7, 3)));
    QuadNum x(1, 1, 2);
    CHECK(x.conjugate() == QuadNum(1, -1, 2));
    CHECK(x.conjugate().conjugate() == x);
}

TEST_CASE("exact comparison") {
    CHECK(compare(tau(), QuadNum(Rational(8, 5))) == Ordering::GT);
    CHECK(compare(sigma(), QuadNum(0)) == Ordering::LT);
    CHECK(compare(tau(), tau()) == Ordering::EQ);
    // 1 + sqrt(2) vs 5/2: 2.414... < 2.5
    CHECK(compare(QuadNum(1, 1, 2), QuadNum(Rational(5, 2))) == Ordering::LT);
}

TEST_CASE("exact floor") {
    CHECK(floor_exact(tau()) == 1);
    CHECK(floor_exact(QuadNum(3, 2, 2)) == 5);
    CHECK(floor_exact(-tau()) == -2);
    CHECK(floor_exact(QuadNum(0)) == 0);
    CHECK(floor_exact(QuadNum(Rational(-1, 2))) == -1);
    // Integer-valued elements.
    CHECK(floor_exact(QuadNum(4)) == 4);
    CHECK(floor_exact(QuadNum(-4)) == -4);
}

TEST_CASE("floor bracketing on random values") {
    std::mt19937_64 rng(7);
    for (int d : {2, 3, 5}) {
        for (int i = 0; i < 200; ++i) {
            QuadNum x = random_quad(rng, d);
            Int f = floor_exact(x);
            CHECK(QuadNum(f) <= x);
            CHECK(x < QuadNum(Int(f + 1)));
        }
    }
}

TEST_CASE("to_float sanity") {
    CHECK(to_float(QuadNum(0)) == 0.0);
    CHECK(to_float(tau()) == doctest::Approx(1.6180339887498949).epsilon(1e-15));
    CHECK(to_float(QuadNum(1, 1, 2)) == doctest::Approx(2.4142135623730951).epsilon(1e-15));
    // Determinism: repeated evaluation yields identical bits.
    double v1 = to_float(tau());
    double v2 = to_float(tau());
    CHECK(std::memcmp(&v1, &v2, sizeof v1) == 0);
}

TEST_CASE("compare agrees with to_float at coarse separations") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 300; ++i) {
        QuadNum x = random_quad(rng, 5);
        QuadNum y = random_quad(rng, 5);
        double fx = to_float(x), fy = to_float(y);
        if (std::fabs(fx - fy) <= 1e-9) continue;
        Ordering ord = compare(x, y);
        CHECK(ord == (fx < fy ? Ordering::LT : Ordering::GT));
    }
}

TEST_CASE("field axioms on random values") {
    std::mt19937_64 rng(13);
    for (int d : {2, 3, 5}) {
        for (int i = 0; i < 100; ++i) {
            QuadNum x = random_quad(rng, d);
            QuadNum y = random_quad(rng, d);
            QuadNum z = random_quad(rng, d);
            CHECK((x + y) + z == x + (y + z));
            CHECK((x * y) * z == x * (y * z));
            CHECK(x * (y + z) == x * y + x * z);
            CHECK(x + y == y + x);
            CHECK(x * y == y * x);
            if (!x.is_zero()) {
                CHECK(x * x.inverse() == QuadNum(1));
                CHECK((y / x) * x == y);
            }
            CHECK(conjugate(x * y) == conjugate(x) * conjugate(y));
            CHECK(conjugate(x + y) == conjugate(x) + conjugate(y));
        }
    }
}

TEST_CASE("arith dispatch and errors") {
    CHECK(arith(tau(), sigma(), ArithOp::Mul) == QuadNum(-1));
    CHECK(arith(QuadNum(1), QuadNum(2), ArithOp::Sub) == QuadNum(-1));
    CHECK_THROWS_AS(arith(QuadNum(1), QuadNum(0), ArithOp::Div), std::domain_error);
    CHECK_THROWS_AS(QuadNum::sqrt_of(2) + QuadNum::sqrt_of(5), field_error);
    CHECK_THROWS_AS(QuadNum(1, 1, 12), field_error);
    // Rationals embed in any field.
    CHECK(QuadNum(2) * QuadNum::sqrt_of(5) == QuadNum(0, 2, 5));
}

TEST_CASE("canonical form collapses vanished surds") {
    QuadNum x = QuadNum::sqrt_of(5) - QuadNum::sqrt_of(5);
    CHECK(x.is_rational());
    CHECK(x == QuadNum(0));
    // (sqrt 2)^2 = 2 is rational and compatible with sqrt(5) afterwards.
    QuadNum two = QuadNum::sqrt_of(2) * QuadNum::sqrt_of(2);
    CHECK(two == QuadNum(2));
    CHECK(two + QuadNum::sqrt_of(5) == QuadNum(2, 1, 5));
}

TEST_CASE("compare against a sum of square roots") {
    using O = Ordering;
    CHECK(compare_with_sqrt_sum(QuadNum(3), QuadNum(4), QuadNum(1)) == O::EQ);
    CHECK(compare_with_sqrt_sum(QuadNum(3), QuadNum(2), QuadNum(2)) == O::GT);
    CHECK(compare_with_sqrt_sum(QuadNum(2), QuadNum(2), QuadNum(2)) == O::LT);
    CHECK(compare_with_sqrt_sum(QuadNum(-1), QuadNum(1), QuadNum(0)) == O::LT);
    CHECK(compare_with_sqrt_sum(QuadNum(0), QuadNum(0), QuadNum(0)) == O::EQ);
    // Radicands in Q(sqrt 5): tau = sqrt(tau^2), so compare tau+1 vs sqrt(tau^2)+sqrt(1).
    QuadNum t2 = tau() * tau();
    CHECK(compare_with_sqrt_sum(tau() + QuadNum(1), t2, QuadNum(1)) == O::EQ);
    CHECK(compare_with_sqrt_sum(tau() + QuadNum(2), t2, QuadNum(1)) == O::GT);
}

TEST_CASE("ordering operators give a usable strict weak order") {
    QuadNum a = sigma();           // -0.618
    QuadNum b = QuadNum(0);
    QuadNum c = QuadNum(Rational(8, 5));
    QuadNum d = tau();             // 1.618
    CHECK(a < b);
    CHECK(b < c);
    CHECK(c < d);
    CHECK(a < d);
    CHECK(d >= c);
    CHECK(!(d < d));
}
