#pragma once

#include "wg/rational.hpp"

#include <string>
#include <vector>

namespace wg {

// Dense univariate polynomial over Rational in the dimension variable d.
// Coefficients stored ascending by degree; the zero polynomial has an empty
// coefficient vector and degree() == -1.
class PolyQ {
public:
    PolyQ() = default;
    explicit PolyQ(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

    static PolyQ constant(const Rational& c);
    static PolyQ variable();                              // d
    static PolyQ linear(const Rational& c0, const Rational& c1);  // c1*d + c0
    static PolyQ monomial(const Rational& c, int k);      // c*d^k

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const;
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational coeff(int k) const;
    const Rational& leading() const;

    Rational eval(const Rational& x) const;

    PolyQ& operator+=(const PolyQ& o);
    PolyQ& operator-=(const PolyQ& o);
    friend PolyQ operator+(PolyQ a, const PolyQ& b) { return a += b; }
    friend PolyQ operator-(PolyQ a, const PolyQ& b) { return a -= b; }
    friend PolyQ operator*(const PolyQ& a, const PolyQ& b);
    PolyQ operator-() const;
    PolyQ scaled(const Rational& s) const;
    friend bool operator==(const PolyQ& a, const PolyQ& b) { return a.c_ == b.c_; }

    struct DivRem;
    DivRem divrem(const PolyQ& divisor) const;  // throws on zero divisor

    // descending-power rendering, e.g. "5d+6", "-d^3-6d^2-3d+6"
    std::string str() const;

private:
    std::vector<Rational> c_;
    void trim();
};

struct PolyQ::DivRem {
    PolyQ quot;
    PolyQ rem;
};

PolyQ gcd(const PolyQ& a, const PolyQ& b);  // monic (or zero)
PolyQ lcm(const PolyQ& a, const PolyQ& b);
PolyQ pow(const PolyQ& a, int k);

// p == scale * primitive with primitive integer-coefficient, content 1,
// positive leading coefficient.  Pre: p != 0.
struct PrimitivePart {
    Rational scale;
    PolyQ primitive;
};
PrimitivePart integer_primitive(const PolyQ& p);

struct IntegerRoot {
    long root = 0;
    int multiplicity = 0;
};
struct RootFactorization {
    Rational scale;                   // p = scale * prod (d-root)^mult * residual
    std::vector<IntegerRoot> roots;   // sorted: 0 first, then negative by |r|, then positive
    PolyQ residual;                   // integer primitive, positive leading, no integer roots
};
RootFactorization factor_integer_roots(const PolyQ& p);  // pre: p != 0

// Rational function num/den in normal form: gcd(num, den) == 1 and den has
// integer coefficients with content 1 and positive leading coefficient.
class RatFuncQ {
public:
    RatFuncQ() : num_(), den_(PolyQ::constant(1)) {}
    RatFuncQ(const Rational& c) : num_(PolyQ::constant(c)), den_(PolyQ::constant(1)) {}
    RatFuncQ(const PolyQ& p) : num_(p), den_(PolyQ::constant(1)) {}
    RatFuncQ(PolyQ num, PolyQ den);  // normalizes; throws if den == 0

    const PolyQ& num() const { return num_; }
    const PolyQ& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0; }

    Rational eval(const Rational& x) const;  // throws where den vanishes

    friend RatFuncQ operator+(const RatFuncQ& a, const RatFuncQ& b);
    friend RatFuncQ operator-(const RatFuncQ& a, const RatFuncQ& b);
    friend RatFuncQ operator*(const RatFuncQ& a, const RatFuncQ& b);
    friend RatFuncQ operator/(const RatFuncQ& a, const RatFuncQ& b);
    RatFuncQ operator-() const;
    friend bool operator==(const RatFuncQ& a, const RatFuncQ& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

private:
    PolyQ num_;
    PolyQ den_;
};

inline RatFuncQ ratfunc_normalize(const PolyQ& num, const PolyQ& den) {
    return RatFuncQ(num, den);
}

// Factored rendering, e.g. "(5d+6)/(d(d+1)(d+2)(d+4)(d+6)(d-1)(d-2)(d-3))".
std::string pretty(const RatFuncQ& f);

// Parses the pretty format plus any expression built from d, integers,
// '+', '-', implicit products, '^', '/', and parentheses.
RatFuncQ parse_ratfunc(const std::string& text);
PolyQ parse_poly(const std::string& text);  // throws if the expression is not polynomial

}  // namespace wg
