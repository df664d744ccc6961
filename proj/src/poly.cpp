#include "wg/poly.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace wg {

void PolyQ::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

PolyQ PolyQ::constant(const Rational& c) {
    return PolyQ(std::vector<Rational>{c});
}

PolyQ PolyQ::variable() {
    return PolyQ(std::vector<Rational>{Rational(0), Rational(1)});
}

PolyQ PolyQ::linear(const Rational& c0, const Rational& c1) {
    return PolyQ(std::vector<Rational>{c0, c1});
}

PolyQ PolyQ::monomial(const Rational& c, int k) {
    if (k < 0) throw std::domain_error("monomial with negative exponent");
    std::vector<Rational> v(static_cast<size_t>(k) + 1, Rational(0));
    v.back() = c;
    return PolyQ(std::move(v));
}

bool PolyQ::is_one() const {
    return c_.size() == 1 && c_[0] == Rational(1);
}

Rational PolyQ::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return Rational(0);
    return c_[static_cast<size_t>(k)];
}

const Rational& PolyQ::leading() const {
    if (c_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
    return c_.back();
}

Rational PolyQ::eval(const Rational& x) const {
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc = acc * x + *it;
    }
    return acc;
}

PolyQ& PolyQ::operator+=(const PolyQ& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

PolyQ& PolyQ::operator-=(const PolyQ& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

PolyQ operator*(const PolyQ& a, const PolyQ& b) {
    if (a.is_zero() || b.is_zero()) return PolyQ();
    std::vector<Rational> out(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) {
            out[i + j] += a.c_[i] * b.c_[j];
        }
    }
    return PolyQ(std::move(out));
}

PolyQ PolyQ::operator-() const {
    PolyQ r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

PolyQ PolyQ::scaled(const Rational& s) const {
    if (s.is_zero()) return PolyQ();
    PolyQ r = *this;
    for (auto& c : r.c_) c *= s;
    return r;
}

PolyQ::DivRem PolyQ::divrem(const PolyQ& divisor) const {
    if (divisor.is_zero()) throw std::domain_error("polynomial division by zero");
    PolyQ rem = *this;
    if (rem.degree() < divisor.degree()) return {PolyQ(), rem};
    std::vector<Rational> quot(static_cast<size_t>(rem.degree() - divisor.degree()) + 1, Rational(0));
    const Rational& lead = divisor.leading();
    while (!rem.is_zero() && rem.degree() >= divisor.degree()) {
        int shift = rem.degree() - divisor.degree();
        Rational q = rem.leading() / lead;
        quot[static_cast<size_t>(shift)] = q;
        rem -= (divisor * PolyQ::monomial(q, shift));
    }
    return {PolyQ(std::move(quot)), rem};
}

PolyQ gcd(const PolyQ& a, const PolyQ& b) {
    PolyQ r0 = a, r1 = b;
    while (!r1.is_zero()) {
        PolyQ r2 = r0.divrem(r1).rem;
        r0 = std::move(r1);
        r1 = std::move(r2);
    }
    if (r0.is_zero()) return r0;
    return r0.scaled(Rational(1) / r0.leading());  // monic
}

PolyQ lcm(const PolyQ& a, const PolyQ& b) {
    if (a.is_zero() || b.is_zero()) return PolyQ();
    PolyQ g = gcd(a, b);
    PolyQ l = (a * b).divrem(g).quot;
    return l.scaled(Rational(1) / l.leading());
}

PolyQ pow(const PolyQ& a, int k) {
    if (k < 0) throw std::domain_error("negative polynomial power");
    PolyQ r = PolyQ::constant(Rational(1));
    PolyQ base = a;
    while (k > 0) {
        if (k & 1) r = r * base;
        base = base * base;
        k >>= 1;
    }
    return r;
}

PrimitivePart integer_primitive(const PolyQ& p) {
    if (p.is_zero()) throw std::domain_error("primitive part of zero polynomial");
    BigInt den_lcm = 1;
    for (const auto& c : p.coeffs()) {
        BigInt d = c.den();
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
    }
    BigInt num_gcd = 0;
    for (const auto& c : p.coeffs()) {
        BigInt scaled_num = c.num() * (den_lcm / c.den());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled_num.get_mpz_t());
    }
    Rational scale(num_gcd, den_lcm);
    if (p.leading().sign() < 0) scale = -scale;
    return {scale, p.scaled(Rational(1) / scale)};
}

RootFactorization factor_integer_roots(const PolyQ& p) {
    if (p.is_zero()) throw std::domain_error("factoring zero polynomial");
    auto prim = integer_primitive(p);
    RootFactorization out;
    out.scale = prim.scale;
    PolyQ rest = prim.primitive;

    int zero_mult = 0;
    while (rest.coeff(0).is_zero() && rest.degree() > 0) {
        rest = rest.divrem(PolyQ::variable()).quot;
        ++zero_mult;
    }
    if (zero_mult > 0) out.roots.push_back({0, zero_mult});

    if (rest.degree() > 0) {
        // Cauchy bound: any root r satisfies |r| <= 1 + max |c_i| / |lead|
        Rational lead = rest.leading().abs();
        Rational maxc(0);
        for (const auto& c : rest.coeffs()) {
            Rational a = c.abs();
            if (a > maxc) maxc = a;
        }
        BigInt bound = (maxc / lead).num() / (maxc / lead).den() + 2;
        // candidates are divisors of the constant term, found in pairs
        BigInt constant = rest.coeff(0).num();
        BigInt c_abs = abs(constant);
        std::vector<BigInt> divisors;
        for (BigInt k = 1; k * k <= c_abs; ++k) {
            if (!mpz_divisible_p(c_abs.get_mpz_t(), k.get_mpz_t())) continue;
            divisors.push_back(k);
            divisors.push_back(c_abs / k);
        }
        std::sort(divisors.begin(), divisors.end());
        divisors.erase(std::unique(divisors.begin(), divisors.end()), divisors.end());
        std::vector<long> found;
        for (const BigInt& k : divisors) {
            if (k > bound) break;
            for (int s : {1, -1}) {
                long r = s * k.get_si();
                if (rest.eval(Rational(r)).is_zero()) found.push_back(r);
            }
        }
        for (long r : found) {
            PolyQ factor = PolyQ::linear(Rational(-r), Rational(1));
            int mult = 0;
            while (true) {
                auto dr = rest.divrem(factor);
                if (!dr.rem.is_zero()) break;
                rest = dr.quot;
                ++mult;
            }
            if (mult > 0) out.roots.push_back({r, mult});
        }
    }

    std::sort(out.roots.begin(), out.roots.end(), [](const IntegerRoot& a, const IntegerRoot& b) {
        auto key = [](long r) {
            if (r == 0) return std::pair<int, long>{0, 0};
            if (r < 0) return std::pair<int, long>{1, -r};
            return std::pair<int, long>{2, r};
        };
        return key(a.root) < key(b.root);
    });

    // residual stays integer primitive with positive leading coefficient
    out.residual = rest;
    return out;
}

RatFuncQ::RatFuncQ(PolyQ num, PolyQ den) {
    if (den.is_zero()) throw std::domain_error("rational function with zero denominator");
    if (num.is_zero()) {
        num_ = PolyQ();
        den_ = PolyQ::constant(Rational(1));
        return;
    }
    PolyQ g = gcd(num, den);
    if (g.degree() > 0) {
        num = num.divrem(g).quot;
        den = den.divrem(g).quot;
    }
    auto prim = integer_primitive(den);
    num_ = num.scaled(Rational(1) / prim.scale);
    den_ = prim.primitive;
}

Rational RatFuncQ::eval(const Rational& x) const {
    Rational dv = den_.eval(x);
    if (dv.is_zero()) throw std::domain_error("rational function evaluated at a pole");
    return num_.eval(x) / dv;
}

RatFuncQ operator+(const RatFuncQ& a, const RatFuncQ& b) {
    return RatFuncQ(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFuncQ operator-(const RatFuncQ& a, const RatFuncQ& b) {
    return RatFuncQ(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFuncQ operator*(const RatFuncQ& a, const RatFuncQ& b) {
    return RatFuncQ(a.num_ * b.num_, a.den_ * b.den_);
}

RatFuncQ operator/(const RatFuncQ& a, const RatFuncQ& b) {
    if (b.is_zero()) throw std::domain_error("rational function division by zero");
    return RatFuncQ(a.num_ * b.den_, a.den_ * b.num_);
}

RatFuncQ RatFuncQ::operator-() const {
    RatFuncQ r = *this;
    r.num_ = -r.num_;
    return r;
}

// ---------------------------------------------------------------------------
// rendering

namespace {

std::string coeff_str(const Rational& c) {
    return c.str();
}

}  // namespace

std::string PolyQ::str() const {
    if (is_zero()) return "0";
    std::string out;
    for (int k = degree(); k >= 0; --k) {
        Rational c = coeff(k);
        if (c.is_zero()) continue;
        bool first = out.empty();
        if (c.sign() > 0 && !first) out += "+";
        Rational a = c.abs();
        std::string mag;
        if (k == 0) {
            mag = coeff_str(a);
        } else {
            if (!(a == Rational(1))) mag = coeff_str(a);
            mag += "d";
            if (k > 1) mag += "^" + std::to_string(k);
        }
        if (c.sign() < 0) out += "-";
        out += mag;
    }
    return out;
}

namespace {

// one side of the fraction as a factored product
std::string factored_product(const PolyQ& p) {
    auto fac = factor_integer_roots(p);
    std::string out;
    Rational scale = fac.scale;
    bool have_factors = !fac.roots.empty() || fac.residual.degree() > 0;
    if (scale == Rational(-1) && have_factors) {
        out += "-";
    } else if (!(scale == Rational(1)) || !have_factors) {
        out += scale.str();
    }
    for (const auto& r : fac.roots) {
        std::string base;
        if (r.root == 0) {
            base = "d";
        } else if (r.root < 0) {
            base = "(d+" + std::to_string(-r.root) + ")";
        } else {
            base = "(d-" + std::to_string(r.root) + ")";
        }
        out += base;
        if (r.multiplicity > 1) out += "^" + std::to_string(r.multiplicity);
    }
    if (fac.residual.degree() > 0) {
        out += "(" + fac.residual.str() + ")";
    }
    return out;
}

}  // namespace

std::string pretty(const RatFuncQ& f) {
    if (f.is_zero()) return "0";
    // fold the numerator's rational scale into integer num/den parts
    auto nf = factor_integer_roots(f.num());
    BigInt nscale_num = nf.scale.num();
    BigInt nscale_den = nf.scale.den();

    std::string numpart;
    {
        bool have_factors = !nf.roots.empty() || nf.residual.degree() > 0;
        std::string head;
        if (nscale_num == -1 && have_factors) {
            head = "-";
        } else if (nscale_num != 1 || !have_factors) {
            head = nscale_num.get_str();
        }
        numpart += head;
        for (const auto& r : nf.roots) {
            std::string base;
            if (r.root == 0) base = "d";
            else if (r.root < 0) base = "(d+" + std::to_string(-r.root) + ")";
            else base = "(d-" + std::to_string(r.root) + ")";
            numpart += base;
            if (r.multiplicity > 1) numpart += "^" + std::to_string(r.multiplicity);
        }
        if (nf.residual.degree() > 0) numpart += "(" + nf.residual.str() + ")";
        if (numpart.empty() || numpart == "-") numpart += "1";
        // constants print parenthesized so "(-1)/(...)" reads unambiguously
        if (nf.roots.empty() && nf.residual.degree() == 0) numpart = "(" + numpart + ")";
    }

    if (f.is_polynomial() && nscale_den == 1) return numpart;

    std::string denpart;
    if (nscale_den != 1) denpart += nscale_den.get_str();
    if (!f.is_polynomial()) denpart += factored_product(f.den());
    return numpart + "/(" + denpart + ")";
}

// ---------------------------------------------------------------------------
// expression parser: sums of implicit products of factors, '/' binds to the
// single next factor, '^' takes a nonnegative integer exponent.

namespace {

class ExprParser {
public:
    explicit ExprParser(const std::string& text) : s_(text) {}

    RatFuncQ parse() {
        RatFuncQ v = expr();
        skip_ws();
        if (pos_ != s_.size()) throw std::invalid_argument("trailing characters in expression");
        return v;
    }

private:
    const std::string& s_;
    size_t pos_ = 0;

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool peek(char c) {
        skip_ws();
        return pos_ < s_.size() && s_[pos_] == c;
    }
    bool eat(char c) {
        if (peek(c)) {
            ++pos_;
            return true;
        }
        return false;
    }

    RatFuncQ expr() {
        skip_ws();
        bool neg = false;
        if (eat('-')) {
            neg = true;
        } else {
            eat('+');
        }
        RatFuncQ acc = term();
        if (neg) acc = -acc;
        while (true) {
            skip_ws();
            if (eat('+')) {
                acc = acc + term();
            } else if (eat('-')) {
                acc = acc - term();
            } else {
                break;
            }
        }
        return acc;
    }

    RatFuncQ term() {
        RatFuncQ acc = factor();
        while (true) {
            skip_ws();
            if (pos_ >= s_.size()) break;
            char c = s_[pos_];
            if (c == '*') {
                ++pos_;
                acc = acc * factor();
            } else if (c == '/') {
                ++pos_;
                acc = acc / factor();
            } else if (c == '(' || c == 'd' || std::isdigit(static_cast<unsigned char>(c))) {
                acc = acc * factor();
            } else {
                break;
            }
        }
        return acc;
    }

    RatFuncQ factor() {
        RatFuncQ base = atom();
        skip_ws();
        if (eat('^')) {
            skip_ws();
            size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (start == pos_) throw std::invalid_argument("missing exponent");
            int e = std::stoi(s_.substr(start, pos_ - start));
            RatFuncQ acc(Rational(1));
            for (int i = 0; i < e; ++i) acc = acc * base;
            return acc;
        }
        return base;
    }

    RatFuncQ atom() {
        skip_ws();
        if (pos_ >= s_.size()) throw std::invalid_argument("unexpected end of expression");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            RatFuncQ v = expr();
            if (!eat(')')) throw std::invalid_argument("missing ')'");
            return v;
        }
        if (c == 'd') {
            ++pos_;
            return RatFuncQ(PolyQ::variable());
        }
        if (c == '-') {
            ++pos_;
            return -factor();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            return RatFuncQ(Rational(BigInt(s_.substr(start, pos_ - start))));
        }
        throw std::invalid_argument(std::string("unexpected character '") + c + "' in expression");
    }
};

}  // namespace

RatFuncQ parse_ratfunc(const std::string& text) {
    return ExprParser(text).parse();
}

PolyQ parse_poly(const std::string& text) {
    RatFuncQ f = parse_ratfunc(text);
    if (!f.is_polynomial()) throw std::invalid_argument("expression is not a polynomial");
    auto dr = f.num().divrem(f.den());
    return dr.quot;
}

}  // namespace wg
