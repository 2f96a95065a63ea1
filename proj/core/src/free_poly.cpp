#include "ospq/free_poly.hpp"

#include "ospq/expr.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace ospq {

namespace {

// Parity of a Scalar coefficient for Koszul bookkeeping: plain ring elements
// are even; parameter-carrying coefficients must be homogeneous.
int scalar_parity(const Scalar& c) {
    if (c.is_zero() || !c.has_parameters()) return 0;
    return c.parity();
}

} // namespace

int GeneratorSet::index(const std::string& name) const {
    for (size_t i = 0; i < names.size(); ++i)
        if (names[i] == name) return static_cast<int>(i);
    return -1;
}

FreeGradedPoly FreeGradedPoly::constant(std::shared_ptr<const GeneratorSet> gens, Scalar c) {
    FreeGradedPoly p(std::move(gens));
    p.add_term({}, c);
    return p;
}

FreeGradedPoly FreeGradedPoly::word(std::shared_ptr<const GeneratorSet> gens,
                                    std::vector<int> w, Scalar c) {
    FreeGradedPoly p(std::move(gens));
    p.add_term(w, c);
    return p;
}

int FreeGradedPoly::word_parity(const std::vector<int>& w) const {
    int p = 0;
    for (int g : w) p += gens_->parity(g);
    return p % 2;
}

void FreeGradedPoly::add_term(const std::vector<int>& w, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        terms_.emplace(w, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

FreeGradedPoly FreeGradedPoly::operator-() const {
    FreeGradedPoly r(gens_);
    for (const auto& [w, c] : terms_) r.terms_.emplace(w, -c);
    return r;
}

FreeGradedPoly FreeGradedPoly::operator+(const FreeGradedPoly& o) const {
    FreeGradedPoly r = *this;
    if (!r.gens_) r.gens_ = o.gens_;
    for (const auto& [w, c] : o.terms_) r.add_term(w, c);
    return r;
}

FreeGradedPoly FreeGradedPoly::operator-(const FreeGradedPoly& o) const { return *this + (-o); }

FreeGradedPoly FreeGradedPoly::operator*(const FreeGradedPoly& o) const {
    FreeGradedPoly r(gens_ ? gens_ : o.gens_);
    for (const auto& [w1, c1] : terms_) {
        int p1 = word_parity(w1);
        for (const auto& [w2, c2] : o.terms_) {
            Scalar c = c1 * c2;
            if ((scalar_parity(c2) & 1) && (p1 & 1)) c = -c;
            std::vector<int> w = w1;
            w.insert(w.end(), w2.begin(), w2.end());
            r.add_term(w, c);
        }
    }
    return r;
}

FreeGradedPoly FreeGradedPoly::operator*(const Scalar& c) const {
    FreeGradedPoly r(gens_);
    int pc = scalar_parity(c);
    for (const auto& [w, c1] : terms_) {
        Scalar v = c1 * c;
        if ((pc & 1) && (word_parity(w) & 1)) v = -v;
        r.add_term(w, v);
    }
    return r;
}

FreeGradedPoly FreeGradedPoly::scalar_left(const Scalar& c) const {
    FreeGradedPoly r(gens_);
    for (const auto& [w, c1] : terms_) r.add_term(w, c * c1);
    return r;
}

bool FreeGradedPoly::operator==(const FreeGradedPoly& o) const { return terms_ == o.terms_; }

std::string FreeGradedPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        if (!first) out << " + ";
        first = false;
        out << "(" << c.to_string() << ")";
        for (int g : w) out << "*" << gens_->names[g];
    }
    return out.str();
}

namespace {

struct NCParser {
    const std::string& text;
    std::shared_ptr<const GeneratorSet> gens;
    size_t pos = 0;

    NCParser(const std::string& t, std::shared_ptr<const GeneratorSet> g)
        : text(t), gens(std::move(g)) {}

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    bool consume(char c) {
        if (peek() == c) { ++pos; return true; }
        return false;
    }
    void expect(char c) {
        if (!consume(c))
            throw ParseError(std::string("expected '") + c + "'", static_cast<int>(pos));
    }

    long parse_integer() {
        skip_ws();
        int at = static_cast<int>(pos);
        bool neg = consume('-');
        skip_ws();
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
            throw ParseError("expected integer", at);
        long v = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            v = v * 10 + (text[pos++] - '0');
        return neg ? -v : v;
    }

    FreeGradedPoly constant(Scalar c) { return FreeGradedPoly::constant(gens, std::move(c)); }

    Scalar as_scalar(const FreeGradedPoly& p, int at) {
        Scalar c;
        for (const auto& [w, v] : p.terms()) {
            if (!w.empty()) throw ParseError("expected a scalar expression", at);
            c += v;
        }
        return c;
    }

    FreeGradedPoly parse_atom() {
        skip_ws();
        int at = static_cast<int>(pos);
        char ch = peek();
        if (ch == '(') {
            ++pos;
            FreeGradedPoly e = parse_sum();
            expect(')');
            return e;
        }
        if (ch == '-') {
            ++pos;
            return -parse_factor();
        }
        if (ch == '[') {
            ++pos;
            long n = parse_integer();
            expect(']');
            bool fact = (pos < text.size() && text[pos] == '!');
            if (fact) ++pos;
            return constant(fact ? kulish_factorial(static_cast<int>(n))
                                 : kulish(static_cast<int>(n)));
        }
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            return constant(Scalar(Rational(parse_integer())));
        }
        if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
            std::string name;
            while (pos < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
                name += text[pos++];
            if (name == "sqrt") {
                expect('(');
                FreeGradedPoly arg = parse_sum();
                expect(')');
                return constant(sqrt_scalar(as_scalar(arg, at)));
            }
            // Longest-match generator names first (e.g. "delta" before "d").
            if (int gi = gens->index(name); gi >= 0)
                return FreeGradedPoly::word(gens, {gi});
            if (name == "s") return constant(Scalar::s_power(1));
            if (name == "q") return constant(Scalar::q_power(1));
            if (name == "rho") return constant(varrho());
            if (name == "varpi") return constant(varpi());
            if (name == "omega") return constant(omega_const());
            if (Symbols::known(name)) return constant(Scalar::parameter(name));
            throw ParseError("unknown identifier '" + name + "'", at);
        }
        throw ParseError("unexpected character", at);
    }

    FreeGradedPoly parse_factor() {
        int at = static_cast<int>(pos);
        FreeGradedPoly base = parse_atom();
        if (peek() == '^') {
            ++pos;
            bool paren = consume('(');
            long num = parse_integer();
            long den = 1;
            if (paren && consume('/')) den = parse_integer();
            if (paren) expect(')');
            if (den != 1 || num < 0) {
                Scalar c = as_scalar(base, at);
                if (den == 2) { c = sqrt_scalar(c); den = 1; }
                if (den != 1) throw ParseError("unsupported fractional exponent", at);
                Scalar b = num >= 0 ? c : c.inverse();
                Scalar acc(1);
                for (long i = 0; i < (num >= 0 ? num : -num); ++i) acc *= b;
                return constant(acc);
            }
            FreeGradedPoly acc = constant(Scalar(1));
            for (long i = 0; i < num; ++i) acc = acc * base;
            return acc;
        }
        return base;
    }

    bool at_factor_start() {
        char ch = peek();
        return ch == '(' || ch == '[' || std::isalnum(static_cast<unsigned char>(ch)) ||
               ch == '_';
    }

    FreeGradedPoly parse_product() {
        FreeGradedPoly lhs = parse_factor();
        for (;;) {
            char ch = peek();
            if (ch == '*') {
                ++pos;
                lhs = lhs * parse_factor();
            } else if (ch == '/') {
                ++pos;
                int at = static_cast<int>(pos);
                lhs = lhs * as_scalar(parse_factor(), at).inverse();
            } else if (at_factor_start()) {
                lhs = lhs * parse_factor();   // juxtaposition
            } else {
                return lhs;
            }
        }
    }

    FreeGradedPoly parse_sum() {
        FreeGradedPoly lhs = parse_product();
        for (;;) {
            char ch = peek();
            if (ch == '+') {
                ++pos;
                lhs = lhs + parse_product();
            } else if (ch == '-') {
                ++pos;
                lhs = lhs - parse_product();
            } else {
                return lhs;
            }
        }
    }
};

} // namespace

FreeGradedPoly parse_free_poly(const std::string& text,
                               std::shared_ptr<const GeneratorSet> gens) {
    NCParser p(text, gens);
    FreeGradedPoly e = p.parse_sum();
    p.skip_ws();
    if (p.pos != text.size())
        throw ParseError("trailing input", static_cast<int>(p.pos));
    return e;
}

} // namespace ospq
