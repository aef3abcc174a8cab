#include <cmath>
#include <complex>
#include <random>

#include "doctest.h"
#include "gsym/exactnum.hpp"

using namespace gsym;

namespace {

Cyclotomic random_cyclotomic(int order, std::mt19937& rng)
{
    std::uniform_int_distribution<int> num(-6, 6);
    std::uniform_int_distribution<int> den(1, 4);
    std::vector<Rational> coeffs;
    for (int i = 0; i < euler_phi(order); ++i) coeffs.emplace_back(BigInt(num(rng)), BigInt(den(rng)));
    return Cyclotomic::from_coeffs(order, coeffs);
}

bool close(std::complex<double> a, std::complex<double> b) { return std::abs(a - b) < 1e-9; }

}  // namespace

TEST_SUITE("exactnum") {

TEST_CASE("rational arithmetic is exact and canonical")
{
    CHECK(Rational(BigInt(1), BigInt(2)) + Rational(BigInt(1), BigInt(2)) == Rational(1));
    CHECK(Rational(BigInt(-1), BigInt(2)) * Rational(-1) == Rational(BigInt(1), BigInt(2)));
    CHECK(Rational(BigInt(2), BigInt(-4)).str() == "-1/2");
    CHECK(Rational(BigInt(6), BigInt(3)).str() == "2");
    CHECK(Rational(BigInt(6), BigInt(4)).denominator() == 2);
    CHECK(Rational(BigInt(-3), BigInt(9)).numerator() == -1);
    CHECK(Rational(0).str() == "0");
    CHECK(Rational(BigInt(7), BigInt(3)).is_integer() == false);
    CHECK(Rational(-5).sign() == -1);
}

TEST_CASE("rational division by zero is an error")
{
    CHECK_THROWS_AS(Rational(BigInt(1), BigInt(3)) / Rational(0), std::domain_error);
    CHECK_THROWS_AS(Rational(BigInt(1), BigInt(0)), std::domain_error);
}

TEST_CASE("rational parse inverts str")
{
    for (const char* s : {"0", "5", "-7", "1/2", "-1/2", "123456789012345678901234567891/2"})
        CHECK(Rational::parse(s).str() == s);
    CHECK(Rational::parse("4/6").str() == "2/3");
    CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("x"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
}

TEST_CASE("roots of unity")
{
    CHECK(Cyclotomic::root_of_unity(2, 1) == Cyclotomic(-1));
    CHECK(Cyclotomic::root_of_unity(1, 5) == Cyclotomic(1));
    CHECK(Cyclotomic::root_of_unity(3, 1) + Cyclotomic::root_of_unity(3, 2) == Cyclotomic(-1));
    CHECK(Cyclotomic::root_of_unity(4, 2) == Cyclotomic(-1));
    CHECK(Cyclotomic::root_of_unity(6, 3) == Cyclotomic(-1));
    CHECK(Cyclotomic::root_of_unity(5, -1) == Cyclotomic::root_of_unity(5, 4));
    CHECK_THROWS_AS(Cyclotomic::root_of_unity(0, 1), std::invalid_argument);
    for (int order = 1; order <= 12; ++order)
        for (int p = 0; p < order; ++p) {
            const double angle = 2 * M_PI * p / order;
            CHECK(close(Cyclotomic::root_of_unity(order, p).to_complex(), {std::cos(angle), std::sin(angle)}));
        }
}

TEST_CASE("cyclotomic polynomials and totient")
{
    CHECK(cyclotomic_polynomial(1) == std::vector<long long>{-1, 1});
    CHECK(cyclotomic_polynomial(3) == std::vector<long long>{1, 1, 1});
    CHECK(cyclotomic_polynomial(4) == std::vector<long long>{1, 0, 1});
    CHECK(cyclotomic_polynomial(6) == std::vector<long long>{1, -1, 1});
    CHECK(euler_phi(1) == 1);
    CHECK(euler_phi(12) == 4);
    CHECK(euler_phi(7) == 6);
}

TEST_CASE("conjugation")
{
    const auto z = Cyclotomic::root_of_unity(3, 1);
    CHECK(z.conjugate() == Cyclotomic(-1) - z);
    CHECK(z.conjugate().str() == "-1 - z");
    CHECK(Cyclotomic(Rational(BigInt(1), BigInt(2))).conjugate() == Cyclotomic(Rational(BigInt(1), BigInt(2))));
    std::mt19937 rng(7);
    for (int order : {1, 2, 3, 4, 5, 6, 8, 12}) {
        for (int t = 0; t < 20; ++t) {
            const auto a = random_cyclotomic(order, rng);
            CHECK(a.conjugate().conjugate() == a);
            const auto norm = (a * a.conjugate()).to_complex();
            CHECK(std::abs(norm.imag()) < 1e-9);
            CHECK(norm.real() > -1e-9);
            CHECK(close(a.conjugate().to_complex(), std::conj(a.to_complex())));
        }
    }
}

TEST_CASE("field axioms and numeric agreement")
{
    std::mt19937 rng(11);
    for (int order : {1, 2, 3, 4, 5, 6, 7, 9, 12}) {
        for (int t = 0; t < 15; ++t) {
            const auto a = random_cyclotomic(order, rng);
            const auto b = random_cyclotomic(order, rng);
            const auto c = random_cyclotomic(order, rng);
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a - a == Cyclotomic::zero(order));
            CHECK(close((a * b).to_complex(), a.to_complex() * b.to_complex()));
            if (!b.is_zero()) {
                CHECK((a / b) * b == a);
                CHECK(close((a / b).to_complex(), a.to_complex() / b.to_complex()));
            }
        }
    }
}

TEST_CASE("mixed orders are lifted to the lcm")
{
    const auto i = Cyclotomic::root_of_unity(4, 1);
    const auto w = Cyclotomic::root_of_unity(3, 1);
    const auto p = i * w;
    CHECK(p.order() == 12);
    CHECK(p == Cyclotomic::root_of_unity(12, 7));
    CHECK(w.lifted(6) == w);
    CHECK(Cyclotomic::root_of_unity(6, 2) == w);
    CHECK(close((i + w).to_complex(), i.to_complex() + w.to_complex()));
}

TEST_CASE("inverse and division by zero")
{
    const auto z = Cyclotomic::root_of_unity(5, 1);
    CHECK(z.inverse() == Cyclotomic::root_of_unity(5, 4));
    const auto a = Cyclotomic(2) + z;
    CHECK(a * a.inverse() == Cyclotomic(1));
    CHECK_THROWS_AS(Cyclotomic::zero(5).inverse(), std::domain_error);
    CHECK_THROWS_AS(a / Cyclotomic::zero(5), std::domain_error);
}

TEST_CASE("rational queries")
{
    CHECK(Cyclotomic(Rational(BigInt(3), BigInt(4))).is_rational());
    CHECK(Cyclotomic(Rational(BigInt(3), BigInt(4))).to_rational() == Rational(BigInt(3), BigInt(4)));
    CHECK_FALSE(Cyclotomic::root_of_unity(3, 1).is_rational());
    CHECK_THROWS_AS(Cyclotomic::root_of_unity(3, 1).to_rational(), std::domain_error);
}

TEST_CASE("rendering and parsing")
{
    CHECK(Cyclotomic::zero(3).str() == "0");
    CHECK(Cyclotomic::root_of_unity(3, 1).str() == "z");
    CHECK(Cyclotomic(Rational(BigInt(-1), BigInt(2))).str() == "-1/2");
    const auto v = Cyclotomic::from_coeffs(5, {Rational(1), Rational(0), Rational(BigInt(-1), BigInt(2)), Rational(3)});
    CHECK(v.str() == "1 - 1/2*z^2 + 3*z^3");
    std::mt19937 rng(3);
    for (int order : {1, 2, 3, 4, 5, 8}) {
        for (int t = 0; t < 10; ++t) {
            const auto a = random_cyclotomic(order, rng);
            CHECK(Cyclotomic::parse(a.str(), order) == a);
        }
    }
    CHECK_THROWS_AS(Cyclotomic::parse("1 + q", 3), std::invalid_argument);
}

}  // TEST_SUITE
