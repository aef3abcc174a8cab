#include "gsym/exactnum.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace gsym {

// ---------------------------------------------------------------- Rational

Rational::Rational(const BigInt& num, const BigInt& den)
{
    if (den == 0) throw std::domain_error("rational with zero denominator");
    value_ = den < 0 ? Rep(-num, -den) : Rep(num, den);
}

BigInt Rational::numerator() const { return boost::multiprecision::numerator(value_); }
BigInt Rational::denominator() const { return boost::multiprecision::denominator(value_); }

int Rational::sign() const { return value_.sign(); }

double Rational::to_double() const { return value_.convert_to<double>(); }

Rational Rational::operator-() const { return Rational(Rep(-value_)); }

Rational& Rational::operator+=(const Rational& o)
{
    value_ += o.value_;
    return *this;
}

Rational& Rational::operator-=(const Rational& o)
{
    value_ -= o.value_;
    return *this;
}

Rational& Rational::operator*=(const Rational& o)
{
    value_ *= o.value_;
    return *this;
}

Rational& Rational::operator/=(const Rational& o)
{
    if (o.is_zero()) throw std::domain_error("division by zero");
    value_ /= o.value_;
    return *this;
}

std::string Rational::str() const
{
    if (is_integer()) return numerator().str();
    return numerator().str() + "/" + denominator().str();
}

namespace {

BigInt parse_integer(std::string_view s)
{
    std::size_t i = 0;
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) i = 1;
    if (i == s.size()) throw std::invalid_argument("malformed integer '" + std::string(s) + "'");
    for (std::size_t j = i; j < s.size(); ++j) {
        if (s[j] < '0' || s[j] > '9')
            throw std::invalid_argument("malformed integer '" + std::string(s) + "'");
    }
    BigInt v(std::string(s.substr(i)));
    return s[0] == '-' ? BigInt(-v) : v;
}

}  // namespace

Rational Rational::parse(std::string_view text)
{
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(text));
    auto den = parse_integer(text.substr(slash + 1));
    if (den <= 0) throw std::invalid_argument("rational denominator must be positive");
    return Rational(parse_integer(text.substr(0, slash)), den);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

// ------------------------------------------------------- cyclotomic fields

int euler_phi(int n)
{
    if (n < 1) throw std::invalid_argument("euler_phi needs n >= 1");
    int result = n;
    int m = n;
    for (int p = 2; p * p <= m; ++p) {
        if (m % p != 0) continue;
        while (m % p == 0) m /= p;
        result -= result / p;
    }
    if (m > 1) result -= result / m;
    return result;
}

namespace {

using IntPoly = std::vector<long long>;

// Exact division of integer polynomials by a monic divisor.
IntPoly divide_monic(IntPoly num, const IntPoly& den)
{
    const std::size_t dd = den.size() - 1;
    IntPoly quot(num.size() - dd, 0);
    for (std::size_t i = num.size(); i-- > dd;) {
        long long c = num[i];
        quot[i - dd] = c;
        for (std::size_t j = 0; j <= dd; ++j) num[i - dd + j] -= c * den[j];
    }
    return quot;
}

struct FieldData {
    int order = 1;
    int phi = 1;
    IntPoly minimal;                    // cyclotomic polynomial, monic
    std::vector<IntPoly> power_basis;   // z^m reduced, m in [0, order)
};

const FieldData& field_data(int order);

FieldData build_field(int order)
{
    FieldData f;
    f.order = order;
    f.phi = euler_phi(order);

    IntPoly poly(order + 1, 0);
    poly[0] = -1;
    poly[order] = 1;
    for (int d = 1; d < order; ++d) {
        if (order % d == 0) poly = divide_monic(poly, field_data(d).minimal);
    }
    f.minimal = poly;

    f.power_basis.assign(order, IntPoly(f.phi, 0));
    IntPoly cur(f.phi, 0);
    cur[0] = 1;
    for (int m = 0; m < order; ++m) {
        f.power_basis[m] = cur;
        // multiply by z and reduce with the monic minimal polynomial
        long long top = cur[f.phi - 1];
        for (int i = f.phi - 1; i > 0; --i) cur[i] = cur[i - 1];
        cur[0] = 0;
        for (int i = 0; i < f.phi; ++i) cur[i] -= top * f.minimal[i];
    }
    return f;
}

const FieldData& field_data(int order)
{
    static std::recursive_mutex mutex;
    static std::map<int, std::unique_ptr<FieldData>> cache;
    std::lock_guard lock(mutex);
    auto it = cache.find(order);
    if (it != cache.end()) return *it->second;
    auto data = std::make_unique<FieldData>(build_field(order));
    return *cache.emplace(order, std::move(data)).first->second;
}

long long mod(long long a, long long m)
{
    long long r = a % m;
    return r < 0 ? r + m : r;
}

void add_power(std::vector<Rational>& acc, const FieldData& f, long long power, const Rational& c)
{
    if (c.is_zero()) return;
    const auto& basis = f.power_basis[mod(power, f.order)];
    for (int i = 0; i < f.phi; ++i) {
        if (basis[i] != 0) acc[i] += c * Rational(basis[i]);
    }
}

}  // namespace

const std::vector<long long>& cyclotomic_polynomial(int n)
{
    if (n < 1) throw std::invalid_argument("cyclotomic polynomial needs n >= 1");
    return field_data(n).minimal;
}

Cyclotomic::Cyclotomic(const Rational& r) : order_(1), coeffs_{r} {}

Cyclotomic Cyclotomic::zero(int order)
{
    if (order < 1) throw std::invalid_argument("cyclotomic order must be >= 1");
    return Cyclotomic(order, std::vector<Rational>(field_data(order).phi));
}

Cyclotomic Cyclotomic::root_of_unity(int order, long long power)
{
    if (order < 1) throw std::invalid_argument("cyclotomic order must be >= 1");
    const auto& f = field_data(order);
    std::vector<Rational> c(f.phi);
    add_power(c, f, power, Rational(1));
    return Cyclotomic(order, std::move(c));
}

Cyclotomic Cyclotomic::from_coeffs(int order, std::vector<Rational> coeffs)
{
    if (order < 1) throw std::invalid_argument("cyclotomic order must be >= 1");
    if (static_cast<int>(coeffs.size()) != field_data(order).phi)
        throw std::invalid_argument("coefficient vector length must equal phi(order)");
    return Cyclotomic(order, std::move(coeffs));
}

bool Cyclotomic::is_zero() const
{
    for (const auto& c : coeffs_)
        if (!c.is_zero()) return false;
    return true;
}

bool Cyclotomic::is_rational() const
{
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        if (!coeffs_[i].is_zero()) return false;
    return true;
}

Rational Cyclotomic::to_rational() const
{
    if (!is_rational()) throw std::domain_error("cyclotomic value " + str() + " is not rational");
    return coeffs_[0];
}

Cyclotomic Cyclotomic::lifted(int target) const
{
    if (target == order_) return *this;
    if (target < 1 || target % order_ != 0)
        throw std::invalid_argument("lift target must be a multiple of the order");
    const auto& f = field_data(target);
    const long long step = target / order_;
    std::vector<Rational> c(f.phi);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) add_power(c, f, static_cast<long long>(i) * step, coeffs_[i]);
    return Cyclotomic(target, std::move(c));
}

Cyclotomic Cyclotomic::galois(long long power) const
{
    if (std::gcd(mod(power, order_), static_cast<long long>(order_)) != 1 && order_ > 1)
        throw std::invalid_argument("galois power must be coprime to the order");
    const auto& f = field_data(order_);
    std::vector<Rational> c(f.phi);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) add_power(c, f, static_cast<long long>(i) * power, coeffs_[i]);
    return Cyclotomic(order_, std::move(c));
}

Cyclotomic Cyclotomic::conjugate() const { return galois(order_ - 1); }

Cyclotomic Cyclotomic::inverse() const
{
    if (is_zero()) throw std::domain_error("inverse of zero");
    // a * prod_{sigma != id} sigma(a) = N(a) is rational.
    Cyclotomic others(Rational(1));
    for (int j = 2; j < order_; ++j) {
        if (std::gcd(j, order_) == 1) others *= galois(j);
    }
    Rational norm = (*this * others).to_rational();
    Cyclotomic inv = others;
    for (auto& c : inv.coeffs_) c /= norm;
    return inv.order_ == order_ ? inv : inv.lifted(order_);
}

std::complex<double> Cyclotomic::to_complex() const
{
    std::complex<double> acc{0.0, 0.0};
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        double angle = 2.0 * std::numbers::pi * static_cast<double>(i) / order_;
        acc += coeffs_[i].to_double() * std::polar(1.0, angle);
    }
    return acc;
}

Cyclotomic Cyclotomic::operator-() const
{
    Cyclotomic r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

namespace {

int common_order(int a, int b) { return std::lcm(a, b); }

}  // namespace

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o)
{
    const int L = common_order(order_, o.order_);
    if (L != order_) *this = lifted(L);
    const Cyclotomic& rhs = o.order_ == L ? o : o.lifted(L);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) { return *this += -o; }

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o)
{
    const int L = common_order(order_, o.order_);
    Cyclotomic a = lifted(L);
    Cyclotomic b = o.lifted(L);
    const auto& f = field_data(L);
    std::vector<Rational> c(f.phi);
    for (int i = 0; i < f.phi; ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (int j = 0; j < f.phi; ++j) {
            if (b.coeffs_[j].is_zero()) continue;
            add_power(c, f, i + j, a.coeffs_[i] * b.coeffs_[j]);
        }
    }
    order_ = L;
    coeffs_ = std::move(c);
    return *this;
}

Cyclotomic& Cyclotomic::operator/=(const Cyclotomic& o)
{
    if (o.is_rational()) {
        Rational d = o.coeffs_[0];
        if (d.is_zero()) throw std::domain_error("division by zero");
        for (auto& c : coeffs_) c /= d;
        return *this;
    }
    return *this *= o.inverse();
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b)
{
    if (a.order_ == b.order_) return a.coeffs_ == b.coeffs_;
    const int L = common_order(a.order_, b.order_);
    return a.lifted(L).coeffs_ == b.lifted(L).coeffs_;
}

std::string Cyclotomic::str() const
{
    std::string out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const Rational& c = coeffs_[i];
        if (c.is_zero()) continue;
        Rational mag = c.sign() < 0 ? -c : c;
        if (out.empty()) {
            if (c.sign() < 0) out += "-";
        } else {
            out += c.sign() < 0 ? " - " : " + ";
        }
        if (i == 0) {
            out += mag.str();
            continue;
        }
        if (!(mag == Rational(1))) out += mag.str() + "*";
        out += "z";
        if (i > 1) out += "^" + std::to_string(i);
    }
    return out.empty() ? "0" : out;
}

Cyclotomic Cyclotomic::parse(std::string_view text, int order)
{
    std::string s;
    for (char ch : text)
        if (ch != ' ' && ch != '\t') s += ch;
    if (s.empty()) throw std::invalid_argument("empty cyclotomic literal");

    const auto& f = field_data(order);
    std::vector<Rational> c(f.phi);
    std::size_t pos = 0;
    while (pos < s.size()) {
        std::size_t end = pos + 1;
        while (end < s.size() && !((s[end] == '+' || s[end] == '-') && s[end - 1] != '^' && s[end - 1] != '/'))
            ++end;
        std::string term = s.substr(pos, end - pos);
        pos = end;

        bool negative = false;
        if (term[0] == '+' || term[0] == '-') {
            negative = term[0] == '-';
            term.erase(0, 1);
        }
        Rational coef(1);
        long long power = 0;
        auto zpos = term.find('z');
        if (zpos == std::string::npos) {
            coef = Rational::parse(term);
        } else {
            std::string head = term.substr(0, zpos);
            std::string tail = term.substr(zpos + 1);
            if (!head.empty()) {
                if (head.back() != '*') throw std::invalid_argument("malformed term '" + term + "'");
                head.pop_back();
                coef = Rational::parse(head);
            }
            power = 1;
            if (!tail.empty()) {
                if (tail[0] != '^') throw std::invalid_argument("malformed term '" + term + "'");
                power = parse_integer(tail.substr(1)).convert_to<long long>();
            }
        }
        if (negative) coef = -coef;
        add_power(c, f, power, coef);
    }
    return Cyclotomic(order, std::move(c));
}

std::ostream& operator<<(std::ostream& os, const Cyclotomic& c) { return os << c.str(); }

}  // namespace gsym
