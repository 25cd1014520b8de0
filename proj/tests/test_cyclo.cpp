#include "catch_amalgamated.hpp"

#include <cmath>

#include "alcove/cyclo.hpp"

using namespace alcove;

static bool approxEq(std::complex<double> a, std::complex<double> b, double tol = 1e-10) {
    return std::abs(a - b) < tol;
}

TEST_CASE("roots of unity basics") {
    CHECK(Cyclotomic::zeta(4, 2) == Cyclotomic::fromRational(4, -1));
    CHECK(Cyclotomic::zeta(12, 2) * Cyclotomic::zeta(12, 10) == Cyclotomic::fromRational(12, 1));

    Cyclotomic sum = Cyclotomic::zero(5);
    for (Int k = 1; k <= 4; ++k) sum = sum + Cyclotomic::zeta(5, k);
    CHECK(sum == Cyclotomic::fromRational(5, -1));

    for (Int n : {3, 8, 12, 20}) {
        Cyclotomic z = Cyclotomic::zeta(n, 1);
        Cyclotomic p = Cyclotomic::fromRational(n, 1);
        for (Int k = 0; k < n; ++k) p = p * z;
        CHECK(p == Cyclotomic::fromRational(n, 1));
        CHECK(approxEq(z.approx(), std::polar(1.0, 2 * M_PI / n)));
    }
}

TEST_CASE("canonical form and equality") {
    // the same value assembled in different ways is identical
    Cyclotomic a = Cyclotomic::zeta(12, 7) + Cyclotomic::zeta(12, 1);
    Cyclotomic b = Cyclotomic::zeta(12, 1) + Cyclotomic::zeta(12, 7);
    CHECK(a == b);
    CHECK(a.isZero());  // zeta^7 = -zeta

    // mixed orders promote to the lcm
    CHECK(Cyclotomic::zeta(4, 1) * Cyclotomic::zeta(3, 1) == Cyclotomic::zeta(12, 7));
    CHECK(Cyclotomic::zeta(6, 3) == Cyclotomic::fromRational(2, -1));
    CHECK(Cyclotomic::zeta(10, 5) + Cyclotomic::fromRational(1, 1) == Cyclotomic::zero(10));
}

TEST_CASE("field operations") {
    Cyclotomic x = Cyclotomic::zeta(7, 3) + Cyclotomic::fromRational(7, Rational(1, 2));
    Cyclotomic y = Cyclotomic::zeta(7, 5) - Cyclotomic::fromRational(7, 3);
    CHECK((x + y) - y == x);
    CHECK(x * y == y * x);
    CHECK((x * y) * x == x * (y * x));
    CHECK(x * (y + y) == x * y + x * y);
    CHECK((x * x.inverse()) == Cyclotomic::fromRational(7, 1));
    CHECK((x / y) * y == x);
    CHECK_THROWS_AS(Cyclotomic::zero(7).inverse(), parameter_error);
}

TEST_CASE("conjugation and Galois maps") {
    Cyclotomic z = Cyclotomic::zeta(5, 1);
    CHECK(z.conjugate() == Cyclotomic::zeta(5, 4));
    CHECK(z.conjugate() * z == Cyclotomic::fromRational(5, 1));

    Cyclotomic x = Cyclotomic::zeta(10, 1) + Cyclotomic::fromRational(10, 2);
    CHECK(x.galoisApply(1) == x);
    CHECK(Cyclotomic::fromRational(10, Rational(7, 3)).galoisApply(3) ==
          Cyclotomic::fromRational(10, Rational(7, 3)));
    CHECK(x.galoisApply(3).galoisApply(3) == x.galoisApply(9));
    CHECK_THROWS_AS(x.galoisApply(5), parameter_error);
    // homomorphism
    Cyclotomic y = Cyclotomic::zeta(10, 3) - Cyclotomic::fromRational(10, 1);
    CHECK((x * y).galoisApply(7) == x.galoisApply(7) * y.galoisApply(7));
    CHECK((x + y).galoisApply(7) == x.galoisApply(7) + y.galoisApply(7));
}

TEST_CASE("quantum integers") {
    Cyclotomic q20 = Cyclotomic::zeta(20, 1);  // q = exp(pi i / 10)
    CHECK(quantumInteger(q20, 1) == Cyclotomic::fromRational(20, 1));
    CHECK(quantumInteger(q20, 0).isZero());
    CHECK(quantumInteger(q20, -3) == -quantumInteger(q20, 3));
    CHECK(approxEq(quantumInteger(q20, 2).approx(), {1.9021130325903071, 0.0}, 1e-9));
    CHECK(quantumInteger(q20, 10).isZero());

    Cyclotomic q9 = Cyclotomic::zeta(9, 1);  // q = exp(2 pi i / 9)
    CHECK(approxEq(quantumInteger(q9, 5).approx(),
                   {std::sin(5 * 2 * M_PI / 9) / std::sin(2 * M_PI / 9), 0.0}, 1e-9));
    CHECK(std::abs(quantumInteger(q9, 5).approx().real() - (-0.532)) < 1e-3);
    CHECK(std::abs(quantumInteger(q9, 6).approx().real() - (-1.347)) < 1e-3);
}

TEST_CASE("quantum integer symmetries") {
    // q = exp(pi i / ell): [ell - n] = [n], and [n + 2 ell] = [n]
    for (Int ell : {5, 7, 10}) {
        Cyclotomic q = Cyclotomic::zeta(2 * ell, 1);
        for (Int n = 0; n <= ell; ++n) {
            CHECK(quantumInteger(q, ell - n) == quantumInteger(q, n));
            CHECK(quantumInteger(q, n + 2 * ell) == quantumInteger(q, n));
        }
    }
    // sin ratio across a range
    for (Int n = 1; n < 12; ++n) {
        double theta = M_PI / 10;
        CHECK(approxEq(quantumInteger(Cyclotomic::zeta(20, 1), n).approx(),
                       {std::sin(n * theta) / std::sin(theta), 0.0}));
    }
}

TEST_CASE("promotion") {
    Cyclotomic z = Cyclotomic::zeta(6, 1);
    CHECK(z.promoted(12) == Cyclotomic::zeta(12, 2));
    CHECK(z.promoted(6) == z);
    CHECK_THROWS_AS(z.promoted(8), parameter_error);
    CHECK(z.promoted(12).promoted(24) == z.promoted(24));
}
