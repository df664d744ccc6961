#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace wg {

using BigInt = mpz_class;

BigInt factorial(long n);
BigInt double_factorial(long n);  // n!! with (-1)!! = 0!! = 1
BigInt catalan(long k);           // (2k)! / ((k+1)! k!)

// Exact rational number. Canonical at all times: denominator > 0,
// gcd(|numerator|, denominator) == 1, zero is 0/1.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(int value) : q_(static_cast<long>(value)) {}
    Rational(long value) : q_(value) {}
    Rational(const BigInt& value) : q_(value) {}
    Rational(const BigInt& num, const BigInt& den);

    // "p" or "p/q"
    static Rational parse(const std::string& text);

    BigInt num() const { return BigInt(q_.get_num()); }
    BigInt den() const { return BigInt(q_.get_den()); }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }
    Rational abs() const;

    double to_double() const { return q_.get_d(); }
    std::string str() const;

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    Rational operator-() const;

    friend bool operator==(const Rational& a, const Rational& b) { return mpq_equal(a.q_.get_mpq_t(), b.q_.get_mpq_t()) != 0; }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) < 0; }
    friend bool operator<=(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) <= 0; }
    friend bool operator>(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) > 0; }
    friend bool operator>=(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) >= 0; }

private:
    mpq_class q_;
};

}  // namespace wg
