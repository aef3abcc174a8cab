#pragma once

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace gsym {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number kept in lowest terms with a positive denominator.
class Rational {
public:
    Rational() = default;
    Rational(long long n) : value_(n) {}  // NOLINT(google-explicit-constructor)
    Rational(const BigInt& n) : value_(n) {}  // NOLINT(google-explicit-constructor)
    Rational(const BigInt& num, const BigInt& den);

    BigInt numerator() const;
    BigInt denominator() const;

    bool is_zero() const { return value_ == 0; }
    bool is_integer() const { return denominator() == 1; }
    int sign() const;
    double to_double() const;

    Rational operator-() const;
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    /// Throws std::domain_error when o is zero.
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.value_ < b.value_; }

    /// "n" for integers, "p/q" otherwise.
    std::string str() const;
    /// Inverse of str(); throws std::invalid_argument on malformed text.
    static Rational parse(std::string_view text);

private:
    using Rep = boost::multiprecision::cpp_rational;
    explicit Rational(Rep v) : value_(std::move(v)) {}
    Rep value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Element of the cyclotomic field Q(z), z = exp(2*pi*i/order).
///
/// Stored as coefficients on the power basis 1, z, ..., z^(phi(order)-1),
/// i.e. reduced modulo the order-th cyclotomic polynomial, so that equal
/// values of the same order have identical coefficient vectors. Values of
/// different orders are combined by lifting both to the lcm of the orders.
class Cyclotomic {
public:
    /// Zero in Q (order 1).
    Cyclotomic() : Cyclotomic(Rational{}) {}
    Cyclotomic(const Rational& r);  // NOLINT(google-explicit-constructor)
    Cyclotomic(long long n) : Cyclotomic(Rational{n}) {}  // NOLINT(google-explicit-constructor)

    /// z_order^power. Throws std::invalid_argument if order < 1.
    static Cyclotomic root_of_unity(int order, long long power);
    /// Zero of the given order.
    static Cyclotomic zero(int order);
    /// Builds from power-basis coefficients (length phi(order)).
    static Cyclotomic from_coeffs(int order, std::vector<Rational> coeffs);

    int order() const { return order_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool is_rational() const;
    /// Rational value; throws std::domain_error if not rational.
    Rational to_rational() const;

    /// Same value expressed in Q(z_target); target must be a multiple of order().
    Cyclotomic lifted(int target) const;
    /// Complex conjugate (z -> z^-1).
    Cyclotomic conjugate() const;
    /// Galois automorphism z -> z^power, power coprime to order().
    Cyclotomic galois(long long power) const;
    /// Multiplicative inverse; throws std::domain_error on zero.
    Cyclotomic inverse() const;

    std::complex<double> to_complex() const;

    Cyclotomic operator-() const;
    Cyclotomic& operator+=(const Cyclotomic& o);
    Cyclotomic& operator-=(const Cyclotomic& o);
    Cyclotomic& operator*=(const Cyclotomic& o);
    Cyclotomic& operator/=(const Cyclotomic& o);

    friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
    friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
    friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
    friend Cyclotomic operator/(Cyclotomic a, const Cyclotomic& b) { return a /= b; }

    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);

    /// "c0 + c1*z + c2*z^2 ..." with zero terms omitted; rationals render as Rational::str().
    std::string str() const;
    /// Parses str() output for a value of the given order.
    static Cyclotomic parse(std::string_view text, int order);

private:
    Cyclotomic(int order, std::vector<Rational> coeffs)
        : order_(order), coeffs_(std::move(coeffs)) {}

    int order_ = 1;
    std::vector<Rational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const Cyclotomic& c);

/// Euler's totient.
int euler_phi(int n);

/// Integer coefficients (lowest degree first) of the n-th cyclotomic polynomial.
const std::vector<long long>& cyclotomic_polynomial(int n);

}  // namespace gsym
