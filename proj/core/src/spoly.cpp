#include "ospq/spoly.hpp"

#include <sstream>
#include <stdexcept>

namespace ospq {

namespace {
const Rational kZero = 0;
}

SPoly::SPoly(Rational constant) {
    if (constant != 0) coeffs_.push_back(std::move(constant));
}

SPoly SPoly::monomial(const Rational& coeff, int degree) {
    SPoly p;
    if (coeff != 0) {
        p.coeffs_.assign(degree + 1, Rational(0));
        p.coeffs_[degree] = coeff;
    }
    return p;
}

SPoly SPoly::s() { return monomial(1, 1); }

int SPoly::low_degree() const {
    for (size_t i = 0; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return static_cast<int>(i);
    return -1;
}

const Rational& SPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return kZero;
    return coeffs_[i];
}

const Rational& SPoly::leading() const {
    if (is_zero()) return kZero;
    return coeffs_.back();
}

bool SPoly::is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }

void SPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

SPoly SPoly::operator-() const {
    SPoly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

SPoly SPoly::operator+(const SPoly& o) const {
    SPoly r;
    r.coeffs_.resize(std::max(coeffs_.size(), o.coeffs_.size()), Rational(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] = coeffs_[i];
    for (size_t i = 0; i < o.coeffs_.size(); ++i) r.coeffs_[i] += o.coeffs_[i];
    r.trim();
    return r;
}

SPoly SPoly::operator-(const SPoly& o) const { return *this + (-o); }

SPoly SPoly::operator*(const SPoly& o) const {
    if (is_zero() || o.is_zero()) return {};
    SPoly r;
    r.coeffs_.assign(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (size_t j = 0; j < o.coeffs_.size(); ++j)
            if (o.coeffs_[j] != 0) r.coeffs_[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    r.trim();
    return r;
}

SPoly SPoly::operator*(const Rational& c) const {
    if (c == 0) return {};
    SPoly r = *this;
    for (auto& x : r.coeffs_) x *= c;
    return r;
}

std::strong_ordering SPoly::operator<=>(const SPoly& o) const {
    if (auto c = coeffs_.size() <=> o.coeffs_.size(); c != 0) return c;
    for (size_t i = coeffs_.size(); i-- > 0;) {
        if (coeffs_[i] < o.coeffs_[i]) return std::strong_ordering::less;
        if (coeffs_[i] > o.coeffs_[i]) return std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

void SPoly::divmod(const SPoly& num, const SPoly& den, SPoly& quot, SPoly& rem) {
    if (den.is_zero()) throw std::domain_error("SPoly: division by zero");
    quot = SPoly{};
    rem = num;
    const int dd = den.degree();
    const Rational& lead = den.leading();
    while (!rem.is_zero() && rem.degree() >= dd) {
        Rational c = rem.leading() / lead;
        int k = rem.degree() - dd;
        SPoly t = SPoly::monomial(c, k);
        quot = quot + t;
        rem = rem - den * t;
    }
}

SPoly SPoly::divided_by(const SPoly& den) const {
    SPoly q, r;
    divmod(*this, den, q, r);
    if (!r.is_zero()) throw std::domain_error("SPoly: inexact division");
    return q;
}

SPoly SPoly::derivative() const {
    SPoly r;
    if (coeffs_.size() <= 1) return r;
    r.coeffs_.resize(coeffs_.size() - 1);
    for (size_t i = 1; i < coeffs_.size(); ++i) r.coeffs_[i - 1] = coeffs_[i] * Rational(i);
    r.trim();
    return r;
}

SPoly SPoly::gcd(SPoly a, SPoly b) {
    if (a.is_zero()) return b.is_zero() ? b : b.monic();
    if (b.is_zero()) return a.monic();
    // Primitive pseudo-remainder sequence: work on integer primitive parts and
    // strip the content after every step, avoiding the coefficient blowup of
    // the plain rational Euclid.
    a = a.primitive();
    b = b.primitive();
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero() && b.degree() > 0) {
        SPoly r = a;
        Rational lcb = b.leading();
        while (!r.is_zero() && r.degree() >= b.degree()) {
            SPoly t = b.shifted(r.degree() - b.degree()) * r.leading();
            r = r * lcb - t;
        }
        a = std::move(b);
        b = r.is_zero() ? r : r.primitive();
    }
    if (!b.is_zero()) return SPoly(Rational(1));   // constant remainder: coprime
    return a.monic();
}

SPoly SPoly::monic() const {
    if (is_zero()) return {};
    return *this * (Rational(1) / leading());
}

Rational SPoly::content() const {
    if (is_zero()) return 0;
    // gcd of numerators over lcm of denominators, signed by the leading coeff.
    Integer num_gcd = 0, den_lcm = 1;
    for (const auto& c : coeffs_) {
        if (c == 0) continue;
        num_gcd = boost::multiprecision::gcd(num_gcd, boost::multiprecision::abs(numerator(c)));
        den_lcm = boost::multiprecision::lcm(den_lcm, denominator(c));
    }
    Rational r(num_gcd, den_lcm);
    if (leading() < 0) r = -r;
    return r;
}

SPoly SPoly::primitive() const {
    if (is_zero()) return {};
    return *this * (Rational(1) / content());
}

SPoly SPoly::shifted(int k) const {
    if (is_zero()) return {};
    if (k >= 0) {
        SPoly r;
        r.coeffs_.assign(coeffs_.size() + k, Rational(0));
        for (size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i + k] = coeffs_[i];
        return r;
    }
    if (low_degree() < -k) throw std::domain_error("SPoly: negative shift below s^0");
    SPoly r;
    r.coeffs_.assign(coeffs_.begin() - k, coeffs_.end());
    return r;
}

std::vector<SPoly> SPoly::squarefree_decomposition() const {
    if (is_zero()) throw std::domain_error("SPoly: square-free decomposition of zero");
    std::vector<SPoly> parts;
    SPoly f = monic();
    if (f.degree() == 0) return parts;
    // Yun's algorithm (characteristic zero).
    SPoly fp = f.derivative();
    SPoly a = gcd(f, fp);
    SPoly b = f.divided_by(a);
    SPoly c = fp.divided_by(a);
    SPoly d = c - b.derivative();
    while (b.degree() > 0) {
        SPoly g = gcd(b, d);
        parts.push_back(g);
        b = b.divided_by(g);
        c = d.divided_by(g);
        d = c - b.derivative();
    }
    return parts;
}

Real SPoly::eval(const Real& s_value) const {
    Real acc = 0;
    for (size_t i = coeffs_.size(); i-- > 0;) {
        acc *= s_value;
        acc += Real(coeffs_[i]);
    }
    return acc;
}

Rational SPoly::eval(const Rational& s_value) const {
    Rational acc = 0;
    for (size_t i = coeffs_.size(); i-- > 0;) {
        acc *= s_value;
        acc += coeffs_[i];
    }
    return acc;
}

std::string SPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (size_t i = coeffs_.size(); i-- > 0;) {
        const Rational& c = coeffs_[i];
        if (c == 0) continue;
        Rational abs_c = c < 0 ? -c : c;
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        if (i == 0) {
            out << abs_c;
        } else {
            if (abs_c != 1) out << abs_c << "*";
            out << "s";
            if (i > 1) out << "^" << i;
        }
    }
    return out.str();
}

} // namespace ospq
