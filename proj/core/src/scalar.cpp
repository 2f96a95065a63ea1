#include "ospq/scalar.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace ospq {

// ---------------------------------------------------------------------------
// Symbols

namespace {

struct SymbolInfo {
    std::string name;
    int parity;
    int square_of;
};

struct SymbolRegistry {
    std::vector<SymbolInfo> infos;
    std::map<std::string, int> by_name;
    std::mutex mutex;
};

SymbolRegistry& registry() {
    static SymbolRegistry reg;
    return reg;
}

} // namespace

int Symbols::declare(const std::string& name, int parity, int square_of) {
    auto& reg = registry();
    std::lock_guard lock(reg.mutex);
    auto it = reg.by_name.find(name);
    if (it != reg.by_name.end()) return it->second;
    int id = static_cast<int>(reg.infos.size());
    reg.infos.push_back({name, parity, square_of});
    reg.by_name[name] = id;
    return id;
}

namespace {
// Force the predeclared symbols into the registry before any by-name lookup,
// so a string-based lookup of e.g. "xi_odd" cannot register it first with
// the default (even) parity.
void predeclare_known() {
    static const bool done = [] {
        sym::r();
        sym::xi();
        sym::xi_odd();
        sym::g1();
        sym::g2();
        sym::g3();
        sym::sqrt_g1();
        sym::sqrt_g3();
        return true;
    }();
    (void)done;
}
} // namespace

int Symbols::id(const std::string& name) {
    predeclare_known();
    return declare(name, 0);
}

const std::string& Symbols::name(int id) { return registry().infos.at(id).name; }
int Symbols::parity(int id) { return registry().infos.at(id).parity; }
int Symbols::square_of(int id) { return registry().infos.at(id).square_of; }

bool Symbols::known(const std::string& name) {
    predeclare_known();
    auto& reg = registry();
    std::lock_guard lock(reg.mutex);
    return reg.by_name.count(name) > 0;
}

namespace sym {
int r()       { static int v = Symbols::declare("r", 0); return v; }
int xi()      { static int v = Symbols::declare("xi", 0); return v; }
int xi_odd()  { static int v = Symbols::declare("xi_odd", 1); return v; }
int g1()      { static int v = Symbols::declare("g1", 0); return v; }
int g2()      { static int v = Symbols::declare("g2", 0); return v; }
int g3()      { static int v = Symbols::declare("g3", 0); return v; }
int sqrt_g1() { static int v = Symbols::declare("sqrt_g1", 0, g1()); return v; }
int sqrt_g3() { static int v = Symbols::declare("sqrt_g3", 0, g3()); return v; }
} // namespace sym

// ---------------------------------------------------------------------------
// ParameterMonomial

ParameterMonomial ParameterMonomial::symbol(int id) {
    ParameterMonomial m;
    if (Symbols::parity(id) == 1) m.odd_.push_back(id);
    else m.even_[id] = 1;
    return m;
}

ParameterMonomial ParameterMonomial::build(std::map<int, long> even, std::vector<int> odd) {
    ParameterMonomial m;
    for (auto& [id, e] : even)
        if (e != 0) m.even_[id] = e;
    m.odd_ = std::move(odd);
    m.fold_squares();
    return m;
}

void ParameterMonomial::fold_squares() {
    bool changed = true;
    while (changed) {
        changed = false;
        for (auto it = even_.begin(); it != even_.end(); ++it) {
            int target = Symbols::square_of(it->first);
            long e = it->second;
            if (target < 0 || e == 1) continue;
            // keep residual exponent in {0, 1}
            long pairs = (e - (((e % 2) + 2) % 2)) / 2;
            long resid = e - 2 * pairs;
            if (resid == 0) even_.erase(it);
            else it->second = resid;
            even_[target] += pairs;
            if (even_[target] == 0) even_.erase(target);
            changed = true;
            break;
        }
    }
}

int ParameterMonomial::multiply(const ParameterMonomial& a, const ParameterMonomial& b,
                                ParameterMonomial& out) {
    out = ParameterMonomial();
    out.even_ = a.even_;
    for (auto& [id, e] : b.even_) {
        out.even_[id] += e;
        if (out.even_[id] == 0) out.even_.erase(id);
    }
    // Merge odd lists, tracking the Koszul sign of the interleave.
    int sign = 1;
    size_t i = 0, j = 0;
    while (i < a.odd_.size() && j < b.odd_.size()) {
        if (a.odd_[i] == b.odd_[j]) return 0;
        if (a.odd_[i] < b.odd_[j]) {
            out.odd_.push_back(a.odd_[i++]);
        } else {
            // b's symbol moves past the remaining odd symbols of a
            if ((a.odd_.size() - i) % 2) sign = -sign;
            out.odd_.push_back(b.odd_[j++]);
        }
    }
    while (i < a.odd_.size()) out.odd_.push_back(a.odd_[i++]);
    while (j < b.odd_.size()) out.odd_.push_back(b.odd_[j++]);
    out.fold_squares();
    return sign;
}

ParameterMonomial ParameterMonomial::even_inverse() const {
    if (!odd_.empty()) throw std::domain_error("ParameterMonomial: odd symbols are not invertible");
    ParameterMonomial m;
    for (auto& [id, e] : even_) m.even_[id] = -e;
    return m;
}

// ---------------------------------------------------------------------------
// RadicalMonomial

LaurentRational RadicalMonomial::multiply(const RadicalMonomial& a, const RadicalMonomial& b,
                                          RadicalMonomial& out) {
    if (a.is_trivial()) { out = b; return LaurentRational(Rational(1)); }
    if (b.is_trivial()) { out = a; return LaurentRational(Rational(1)); }
    LaurentRational prod = a.kernel_ * b.kernel_;
    LaurentRational outside, kernel;
    prod.sqrt_split(outside, kernel);
    out = RadicalMonomial(kernel.is_one() ? LaurentRational(Rational(1)) : kernel);
    if (out.is_trivial()) out = RadicalMonomial();
    return outside;
}

// ---------------------------------------------------------------------------
// Scalar

Scalar::Scalar(Rational c) {
    if (c != 0) terms_.push_back({LaurentRational(std::move(c)), {}, {}});
}

Scalar::Scalar(LaurentRational c) {
    if (!c.is_zero()) terms_.push_back({std::move(c), {}, {}});
}

Scalar Scalar::s_power(int k) { return Scalar(LaurentRational::s_power(k)); }

Scalar Scalar::parameter(int symbol_id) {
    Scalar r;
    r.terms_.push_back({LaurentRational(Rational(1)), {}, ParameterMonomial::symbol(symbol_id)});
    return r;
}

Scalar Scalar::parameter(const std::string& name) { return parameter(Symbols::id(name)); }

Scalar Scalar::term(LaurentRational coef, RadicalMonomial rad, ParameterMonomial par) {
    Scalar r;
    if (!coef.is_zero())
        r.terms_.push_back({std::move(coef), std::move(rad), std::move(par)});
    return r;
}

bool Scalar::is_one() const {
    return terms_.size() == 1 && terms_[0].coef.is_one() && terms_[0].rad.is_trivial() &&
           terms_[0].par.is_trivial();
}

int Scalar::parity() const {
    if (terms_.empty()) return 0;
    int p = terms_[0].par.parity();
    for (const auto& t : terms_)
        if (t.par.parity() != p) throw std::domain_error("Scalar: mixed parity");
    return p;
}

bool Scalar::is_homogeneous() const {
    if (terms_.empty()) return true;
    int p = terms_[0].par.parity();
    for (const auto& t : terms_)
        if (t.par.parity() != p) return false;
    return true;
}

bool Scalar::has_parameters() const {
    for (const auto& t : terms_)
        if (!t.par.is_trivial()) return true;
    return false;
}

void Scalar::insert_term(Term t) {
    if (t.coef.is_zero()) return;
    auto key_less = [](const Term& a, const Term& b) {
        if (auto c = a.rad <=> b.rad; c != 0) return c < 0;
        return a.par < b.par;
    };
    auto it = std::lower_bound(terms_.begin(), terms_.end(), t, key_less);
    if (it != terms_.end() && it->rad == t.rad && it->par == t.par) {
        it->coef = it->coef + t.coef;
        if (it->coef.is_zero()) terms_.erase(it);
    } else {
        terms_.insert(it, std::move(t));
    }
}

Scalar Scalar::operator-() const {
    Scalar r = *this;
    for (auto& t : r.terms_) t.coef = -t.coef;
    return r;
}

Scalar Scalar::operator+(const Scalar& o) const {
    Scalar r = *this;
    for (const auto& t : o.terms_) r.insert_term(t);
    return r;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
    Scalar r;
    for (const auto& ta : terms_) {
        for (const auto& tb : o.terms_) {
            ParameterMonomial par;
            int sign = ParameterMonomial::multiply(ta.par, tb.par, par);
            if (sign == 0) continue;
            RadicalMonomial rad;
            LaurentRational extra = RadicalMonomial::multiply(ta.rad, tb.rad, rad);
            LaurentRational coef = ta.coef * tb.coef * extra;
            if (sign < 0) coef = -coef;
            r.insert_term({std::move(coef), std::move(rad), std::move(par)});
        }
    }
    return r;
}

Scalar Scalar::inverse() const {
    if (terms_.empty()) throw std::domain_error("Scalar: inverse of zero");
    // Factor out a common parameter monomial if all terms share one.
    const ParameterMonomial& par0 = terms_[0].par;
    for (const auto& t : terms_)
        if (!(t.par == par0))
            throw std::domain_error("Scalar: inverse of parameter-mixed sum unsupported");
    Scalar par_inv = Scalar::term(LaurentRational(Rational(1)), {}, par0.even_inverse());

    // Now invert the radical/Laurent part.
    if (terms_.size() == 1) {
        const Term& t = terms_[0];
        if (t.rad.is_trivial())
            return Scalar(t.coef.inverse()) * par_inv;
        // 1/(c*sqrt(k)) = sqrt(k)/(c*k)
        LaurentRational denom = t.coef * t.rad.kernel();
        return Scalar::term(denom.inverse(), t.rad, {}) * par_inv;
    }
    if (terms_.size() == 2) {
        // a + b*sqrt(k): conjugate.  One of the radical parts must be trivial
        // and the other not (otherwise the two terms would have merged).
        const Term* plain = nullptr;
        const Term* radical = nullptr;
        for (const auto& t : terms_) (t.rad.is_trivial() ? plain : radical) = &t;
        if (plain && radical) {
            LaurentRational a = plain->coef, b = radical->coef;
            LaurentRational norm = a * a - b * b * radical->rad.kernel();
            if (norm.is_zero()) throw std::domain_error("Scalar: inverse of zero divisor");
            LaurentRational ninv = norm.inverse();
            Scalar conj = Scalar::term(a * ninv, {}, {}) +
                          Scalar::term(-(b * ninv), radical->rad, {});
            return conj * par_inv;
        }
    }
    throw std::domain_error("Scalar: inverse of this radical combination unsupported");
}

Scalar Scalar::substitute(int symbol_id, const Scalar& value) const {
    const bool odd = Symbols::parity(symbol_id) == 1;
    Scalar result;
    for (const auto& t : terms_) {
        if (odd) {
            auto it = std::find(t.par.odd().begin(), t.par.odd().end(), symbol_id);
            if (it == t.par.odd().end()) {
                result.insert_term(t);
                continue;
            }
            if (value.is_zero()) continue;
            if (!value.is_homogeneous() || value.parity() != 1)
                throw std::domain_error("Scalar: odd symbol must be replaced by an odd value");
            // Move the symbol to the front of the odd product (Koszul sign),
            // strip it, and multiply the replacement back in from the left.
            int idx = static_cast<int>(it - t.par.odd().begin());
            std::vector<int> rest_odd(t.par.odd());
            rest_odd.erase(rest_odd.begin() + idx);
            ParameterMonomial rest = ParameterMonomial::build(t.par.even(), std::move(rest_odd));
            LaurentRational coef = t.coef;
            if (idx % 2) coef = -coef;
            result += value * Scalar::term(std::move(coef), t.rad, std::move(rest));
        } else {
            auto it = t.par.even().find(symbol_id);
            if (it == t.par.even().end()) {
                result.insert_term(t);
                continue;
            }
            long e = it->second;
            std::map<int, long> even = t.par.even();
            even.erase(symbol_id);
            ParameterMonomial rest = ParameterMonomial::build(std::move(even),
                                                              std::vector<int>(t.par.odd()));
            Scalar base = Scalar::term(t.coef, t.rad, std::move(rest));
            Scalar pw(Rational(1));
            Scalar v = e > 0 ? value : value.inverse();
            for (long i = 0; i < std::abs(e); ++i) pw = pw * v;
            result += base * pw;
        }
    }
    return result;
}

std::string Scalar::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& t : terms_) {
        if (!first) out << " + ";
        first = false;
        out << t.coef.to_string();
        if (!t.rad.is_trivial()) out << "*sqrt(" << t.rad.kernel().to_string() << ")";
        for (auto& [id, e] : t.par.even()) {
            out << "*" << Symbols::name(id);
            if (e != 1) out << "^" << (e < 0 ? "(" : "") << e << (e < 0 ? ")" : "");
        }
        for (int id : t.par.odd()) out << "*" << Symbols::name(id);
    }
    return out.str();
}

// ---------------------------------------------------------------------------
// Numerics

const std::vector<Rational>& probe_qs() {
    static const std::vector<Rational> qs = {Rational(1, 5), Rational(1, 2), Rational(3, 4)};
    return qs;
}

Real Scalar::eval_numeric(const Rational& q, const std::map<std::string, Real>& bindings,
                          int precision) const {
    if (precision > kMaxEvalDigits)
        throw std::domain_error("Scalar: requested precision exceeds the numeric backend");
    if (!(q > 0 && q < 1)) throw std::domain_error("Scalar: q must lie in (0,1)");
    Real s = sqrt(Real(q));
    Real total = 0;
    for (const auto& t : terms_) {
        bool dead = false;
        Real factor = 1;
        for (int id : t.par.odd()) {
            auto it = bindings.find(Symbols::name(id));
            if (it == bindings.end())
                throw std::domain_error("Scalar: missing binding for " + Symbols::name(id));
            if (it->second != 0)
                throw std::domain_error("Scalar: odd parameter bound to nonzero value");
            dead = true;
        }
        if (dead) continue;
        for (auto& [id, e] : t.par.even()) {
            auto it = bindings.find(Symbols::name(id));
            if (it == bindings.end())
                throw std::domain_error("Scalar: missing binding for " + Symbols::name(id));
            factor *= pow(it->second, static_cast<int>(e));
        }
        Real v = t.coef.eval(s);
        if (!t.rad.is_trivial()) {
            Real k = t.rad.kernel().eval(s);
            if (k < 0) throw std::domain_error("Scalar: negative radicand at evaluation point");
            v *= sqrt(k);
        }
        total += v * factor;
    }
    return total;
}

bool Scalar::numerically_zero() const {
    // Group terms by parameter monomial and require each group's radical/
    // Laurent part to vanish numerically at all probe points.
    std::map<ParameterMonomial, Scalar> groups;
    for (const auto& t : terms_)
        groups[t.par].insert_term({t.coef, t.rad, {}});
    const Real threshold = pow(Real(10), -30);
    for (auto& [par, part] : groups) {
        for (const auto& q : probe_qs()) {
            Real v = part.eval_numeric(q, {});
            if (abs(v) >= threshold) return false;
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// sqrt and the Kulish family

Scalar sqrt_scalar(const Scalar& x) {
    if (x.terms().size() != 1)
        throw std::domain_error("sqrt_scalar: input must be a single term");
    const Scalar::Term& t = x.terms()[0];
    if (!t.rad.is_trivial())
        throw std::domain_error("sqrt_scalar: input already carries a radical");
    if (t.par.parity() != 0)
        throw std::domain_error("sqrt_scalar: odd input");
    // Halve the parameter exponents; odd exponents require a declared square
    // root symbol (g1 -> sqrt_g1, g3 -> sqrt_g3).
    std::map<int, long> half_even;
    for (auto& [id, e] : t.par.even()) {
        if (e % 2 == 0) {
            half_even[id] += e / 2;
        } else {
            int root = -1;
            for (int cand : {sym::sqrt_g1(), sym::sqrt_g3()})
                if (Symbols::square_of(cand) == id) root = cand;
            if (root < 0)
                throw std::domain_error("sqrt_scalar: no square root declared for " +
                                        Symbols::name(id));
            half_even[root] += e;   // root^e with root^2 = id gives id^(e/2)
        }
    }
    ParameterMonomial half_par = ParameterMonomial::build(std::move(half_even), {});

    LaurentRational outside, kernel;
    t.coef.sqrt_split(outside, kernel);
    // positivity probe on the kernel (and overall positivity of the coefficient)
    for (const auto& q : probe_qs()) {
        Real s = sqrt(Real(q));
        if (t.coef.eval(s) <= 0)
            throw std::domain_error("sqrt_scalar: radicand not positive at probe point");
    }
    RadicalMonomial rad = kernel.is_one() ? RadicalMonomial() : RadicalMonomial(kernel);
    return Scalar::term(outside, rad, half_par);
}

Scalar kulish(int n) {
    bool flip = false;
    if (n < 0) {
        flip = (std::abs(n) % 2) == 0;   // [-n] = (-1)^(n+1) [n]
        n = -n;
    }
    LaurentRational num = LaurentRational::s_power(-n) -
                          (n % 2 ? LaurentRational(Rational(-1)) : LaurentRational(Rational(1))) *
                              LaurentRational::s_power(n);
    LaurentRational den = LaurentRational::s_power(-1) + LaurentRational::s_power(1);
    LaurentRational v = num / den;
    if (flip) v = -v;
    return Scalar(v);
}

Scalar kulish_factorial(int n) {
    if (n < 0) throw std::domain_error("kulish_factorial: negative argument");
    Scalar r(Rational(1));
    for (int i = 2; i <= n; ++i) r = r * kulish(i);
    return r;
}

Scalar kulish_binomial(long y, long x) {
    if (x < 0) throw std::domain_error("kulish_binomial: negative lower index");
    if (y >= 0) {
        if (y < x) return Scalar(Rational(0));
        Scalar num(Rational(1));
        for (long i = 0; i < x; ++i) num = num * kulish(static_cast<int>(y - i));
        return num * kulish_factorial(static_cast<int>(x)).inverse();
    }
    // y < 0: (-1)^(xy + x(x+1)/2) * bn(x-y-1, x)
    long sign_exp = x * y + x * (x + 1) / 2;
    Scalar r = kulish_binomial(x - y - 1, x);
    if (((sign_exp % 2) + 2) % 2) r = -r;
    return r;
}

Scalar varrho() {
    LaurentRational num = LaurentRational::s_power(-1) + LaurentRational::s_power(1);
    LaurentRational den = LaurentRational::s_power(-8) - LaurentRational::s_power(8);
    return Scalar(num / den);
}

Scalar varpi() { return Scalar::s_power(1) + Scalar::s_power(-1); }
Scalar omega_const() { return Scalar::q_power(1) - Scalar::q_power(-1); }
Scalar lambda_R() { return -Scalar::s_power(-1) * omega_const(); }
Scalar rho_R() { return (Scalar(1) + Scalar::q_power(-1)) * omega_const(); }

bool verify_kulish_binomial_identity(int n, int r, int k) {
    // bn(n+r, k) = sum_a bn(n, k-a) bn(r, a) (-1)^((k-a)(r-a)) q^((r-a)(n+r)/2 - r(n-k+r)/2)
    Scalar lhs = kulish_binomial(n + r, k);
    Scalar rhs;
    for (int a = 0; a <= k; ++a) {
        long e2 = static_cast<long>(r - a) * (n + r) - static_cast<long>(r) * (n - k + r);
        Scalar term = kulish_binomial(n, k - a) * kulish_binomial(r, a) * Scalar::s_power(e2);
        long sgn = static_cast<long>(k - a) * (r - a);
        if (((sgn % 2) + 2) % 2) term = -term;
        rhs += term;
    }
    return lhs == rhs;
}

bool verify_kulish_summation(int n, int r, int k) {
    if (n >= 0 || r >= 0 || k < 0) throw std::domain_error("verify_kulish_summation: domain");
    Scalar lhs;
    for (int a = 0; a <= k; ++a) {
        Scalar term = kulish_factorial(k - a - n - 1) * kulish_factorial(a - r - 1) *
                      (kulish_factorial(k - a) * kulish_factorial(a)).inverse() *
                      Scalar::s_power(-a * (n + r));
        long sgn = static_cast<long>(a) * n;
        if (((sgn % 2) + 2) % 2) term = -term;
        lhs += term;
    }
    Scalar rhs = Scalar::s_power(-r * k) * kulish_factorial(k - n - r - 1) *
                 kulish_factorial(-n - 1) * kulish_factorial(-r - 1) *
                 (kulish_factorial(k) * kulish_factorial(-n - r - 1)).inverse();
    return lhs == rhs && verify_kulish_binomial_identity(n, r, k);
}

} // namespace ospq
