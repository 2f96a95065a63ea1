#include "ospq/laurent.hpp"

#include <sstream>
#include <stdexcept>

namespace ospq {

namespace {

// Split a positive integer n = square * kernel with kernel square-free.
// Trial division up to a bound, then a perfect-square check on the cofactor;
// a residual cofactor that is neither 1 nor a perfect square is treated as
// square-free (all integers arising here are products of small-degree
// polynomial contents, far below the bound in practice).
void squarefree_split_int(Integer n, Integer& square, Integer& kernel) {
    square = 1;
    kernel = 1;
    if (n <= 0) throw std::domain_error("squarefree_split_int: nonpositive input");
    for (Integer p = 2; p * p <= n && p < 100000; ++p) {
        if (n % p != 0) continue;
        int e = 0;
        while (n % p == 0) { n /= p; ++e; }
        for (int i = 0; i < e / 2; ++i) square *= p;
        if (e % 2) kernel *= p;
    }
    if (n > 1) {
        Integer r = boost::multiprecision::sqrt(n);
        if (r * r == n) square *= r;
        else kernel *= n;
    }
}

} // namespace

LaurentRational::LaurentRational(Rational c)
    : num_(SPoly(std::move(c))), den_(SPoly(Rational(1))) {}

LaurentRational::LaurentRational(SPoly num, SPoly den, int exp)
    : exp_(exp), num_(std::move(num)), den_(std::move(den)) {
    canonicalize();
}

LaurentRational LaurentRational::s_power(int k) {
    LaurentRational r(Rational(1));
    r.exp_ = k;
    return r;
}

void LaurentRational::canonicalize() {
    if (den_.is_zero()) throw std::domain_error("LaurentRational: zero denominator");
    if (num_.is_zero()) {
        exp_ = 0;
        den_ = SPoly(Rational(1));
        return;
    }
    // Pull trailing powers of s out of both parts into the exponent.
    int ln = num_.low_degree(), ld = den_.low_degree();
    if (ln > 0) { num_ = num_.shifted(-ln); exp_ += ln; }
    if (ld > 0) { den_ = den_.shifted(-ld); exp_ -= ld; }
    SPoly g = SPoly::gcd(num_, den_);
    if (!g.is_one()) {
        num_ = num_.divided_by(g);
        den_ = den_.divided_by(g);
    }
    Rational lead = den_.leading();
    if (lead != 1) {
        Rational inv = Rational(1) / lead;
        num_ = num_ * inv;
        den_ = den_ * inv;
    }
}

bool LaurentRational::is_constant() const {
    return is_zero() || (exp_ == 0 && num_.degree() == 0 && den_.is_one());
}

Rational LaurentRational::as_rational() const {
    if (is_zero()) return 0;
    if (!is_constant()) throw std::domain_error("LaurentRational: not a constant");
    return num_.coeff(0);
}

LaurentRational LaurentRational::operator-() const {
    LaurentRational r = *this;
    r.num_ = -r.num_;
    return r;
}

LaurentRational LaurentRational::operator+(const LaurentRational& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    int e = std::min(exp_, o.exp_);
    SPoly n = num_.shifted(exp_ - e) * o.den_ + o.num_.shifted(o.exp_ - e) * den_;
    return LaurentRational(std::move(n), den_ * o.den_, e);
}

LaurentRational LaurentRational::operator-(const LaurentRational& o) const {
    return *this + (-o);
}

LaurentRational LaurentRational::operator*(const LaurentRational& o) const {
    if (is_zero() || o.is_zero()) return {};
    return LaurentRational(num_ * o.num_, den_ * o.den_, exp_ + o.exp_);
}

LaurentRational LaurentRational::operator/(const LaurentRational& o) const {
    return *this * o.inverse();
}

LaurentRational LaurentRational::inverse() const {
    if (is_zero()) throw std::domain_error("LaurentRational: inverse of zero");
    return LaurentRational(den_, num_, -exp_);
}

Real LaurentRational::eval(const Real& s_value) const {
    if (is_zero()) return Real(0);
    Real d = den_.eval(s_value);
    if (d == 0) throw std::domain_error("LaurentRational: pole at evaluation point");
    return pow(s_value, exp_) * num_.eval(s_value) / d;
}

Rational LaurentRational::eval(const Rational& s_value) const {
    if (is_zero()) return 0;
    Rational d = den_.eval(s_value);
    if (d == 0) throw std::domain_error("LaurentRational: pole at evaluation point");
    if (s_value == 0) throw std::domain_error("LaurentRational: s = 0 not allowed");
    Rational sp = 1;
    for (int i = 0; i < std::abs(exp_); ++i) sp *= s_value;
    if (exp_ < 0) sp = Rational(1) / sp;
    return sp * num_.eval(s_value) / d;
}

std::string LaurentRational::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool need_mul = false;
    if (exp_ != 0) {
        out << "s^" << (exp_ < 0 ? "(" : "") << exp_ << (exp_ < 0 ? ")" : "");
        need_mul = true;
    }
    if (!(num_.is_one() && den_.is_one()) || !need_mul) {
        if (need_mul) out << "*";
        out << "(" << num_.to_string() << ")";
        if (!den_.is_one()) out << "/(" << den_.to_string() << ")";
    }
    return out.str();
}

void LaurentRational::sqrt_split(LaurentRational& outside, LaurentRational& kernel) const {
    if (is_zero()) throw std::domain_error("LaurentRational: sqrt of zero");
    int eps = ((exp_ % 2) + 2) % 2;
    int half = (exp_ - eps) / 2;

    // sqrt(s^e n/d) = s^half * sqrt(s^eps * n * d) / d.
    SPoly m = num_ * den_;
    Rational lc(1);
    SPoly u(Rational(1));    // extracted square part of m
    SPoly w(Rational(1));    // square-free monic part
    {
        SPoly mm = m.monic();
        lc = m.leading();
        auto parts = mm.squarefree_decomposition();
        for (size_t i = 0; i < parts.size(); ++i) {
            int mult = static_cast<int>(i) + 1;
            for (int j = 0; j < mult / 2; ++j) u = u * parts[i];
            if (mult % 2) w = w * parts[i];
        }
    }
    // Normalize w to a primitive integer polynomial; fold the rational factor
    // into the content to be square-split.
    Rational cw = w.content();
    SPoly wp = w.primitive();
    Rational gamma = lc * cw;
    bool negative = gamma < 0;
    if (negative) gamma = -gamma;
    Integer p = numerator(gamma), q = denominator(gamma);
    Integer ps, pk, qs, qk;
    squarefree_split_int(p, ps, pk);
    squarefree_split_int(q, qs, qk);

    outside = LaurentRational(u * Rational(ps, qs * qk), den_, half);
    Rational kc(pk * qk);
    if (negative) kc = -kc;
    kernel = LaurentRational(wp * kc, SPoly(Rational(1)), eps);

    // Principal-root convention on (0,1): flip the extracted factor positive
    // there so that outside * sqrt(kernel) is the principal square root.
    for (const Rational& s : {Rational(9, 20), Rational(7, 10), Rational(17, 20)}) {
        Rational v = outside.eval(s);
        if (v == 0) continue;
        if (v < 0) outside = -outside;
        break;
    }
}

} // namespace ospq
