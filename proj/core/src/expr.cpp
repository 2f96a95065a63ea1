#include "ospq/expr.hpp"

#include <cctype>
#include <sstream>

namespace ospq {

ParseError::ParseError(const std::string& msg, int position)
    : std::runtime_error(msg + " (at offset " + std::to_string(position) + ")"),
      position(position) {}

namespace {

struct Parser {
    const std::string& text;
    size_t pos = 0;

    explicit Parser(const std::string& t) : text(t) {}

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

    ExprPtr make(ExprNode::Kind k, int at) {
        auto n = std::make_unique<ExprNode>();
        n->kind = k;
        n->pos = at;
        return n;
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

    ExprPtr parse_primary() {
        skip_ws();
        int at = static_cast<int>(pos);
        char c = peek();
        if (c == '(') {
            ++pos;
            ExprPtr e = parse_sum();
            expect(')');
            return e;
        }
        if (c == '-') {
            ++pos;
            auto n = make(ExprNode::Kind::Neg, at);
            n->args.push_back(parse_power());
            return n;
        }
        if (c == '[') {
            ++pos;
            long v = parse_integer();
            expect(']');
            bool fact = consume('!');
            auto n = make(fact ? ExprNode::Kind::BracketFactorial : ExprNode::Kind::Bracket, at);
            n->bracket_arg = static_cast<int>(v);
            return n;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            auto n = make(ExprNode::Kind::Number, at);
            n->number = Rational(parse_integer());
            return n;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string name;
            while (pos < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
                name += text[pos++];
            // uword dialect allows v+ / v-
            if (name == "v" && pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
                name += text[pos++];
            }
            if (name == "sqrt") {
                expect('(');
                auto n = make(ExprNode::Kind::Sqrt, at);
                n->args.push_back(parse_sum());
                expect(')');
                return n;
            }
            auto n = make(ExprNode::Kind::Symbol, at);
            n->name = name;
            return n;
        }
        throw ParseError("unexpected character", at);
    }

    ExprPtr parse_power() {
        ExprPtr base = parse_primary();
        skip_ws();
        if (peek() == '^') {
            int at = static_cast<int>(pos);
            ++pos;
            bool paren = consume('(');
            long num = parse_integer();
            long den = 1;
            // a rational exponent must be parenthesized: x^2/y is (x^2)/y
            if (paren && consume('/')) den = parse_integer();
            if (paren) expect(')');
            auto n = make(ExprNode::Kind::Pow, at);
            n->args.push_back(std::move(base));
            auto exp = make(ExprNode::Kind::Number, at);
            exp->number = Rational(num, den);
            n->args.push_back(std::move(exp));
            return n;
        }
        return base;
    }

    ExprPtr parse_product() {
        ExprPtr lhs = parse_power();
        for (;;) {
            char c = peek();
            if (c == '*' || c == '/') {
                int at = static_cast<int>(pos);
                ++pos;
                auto n = make(c == '*' ? ExprNode::Kind::Mul : ExprNode::Kind::Div, at);
                n->args.push_back(std::move(lhs));
                n->args.push_back(parse_power());
                lhs = std::move(n);
            } else {
                return lhs;
            }
        }
    }

    ExprPtr parse_sum() {
        ExprPtr lhs = parse_product();
        for (;;) {
            char c = peek();
            if (c == '+' || c == '-') {
                int at = static_cast<int>(pos);
                ++pos;
                auto n = make(c == '+' ? ExprNode::Kind::Add : ExprNode::Kind::Sub, at);
                n->args.push_back(std::move(lhs));
                n->args.push_back(parse_product());
                lhs = std::move(n);
            } else {
                return lhs;
            }
        }
    }
};

} // namespace

std::string ExprNode::to_string() const {
    std::ostringstream out;
    switch (kind) {
        case Kind::Number: out << number; break;
        case Kind::Symbol: out << name; break;
        case Kind::Bracket: out << "[" << bracket_arg << "]"; break;
        case Kind::BracketFactorial: out << "[" << bracket_arg << "]!"; break;
        case Kind::Sqrt: out << "sqrt(" << args[0]->to_string() << ")"; break;
        case Kind::Neg: out << "-(" << args[0]->to_string() << ")"; break;
        case Kind::Add: out << "(" << args[0]->to_string() << " + " << args[1]->to_string() << ")"; break;
        case Kind::Sub: out << "(" << args[0]->to_string() << " - " << args[1]->to_string() << ")"; break;
        case Kind::Mul: out << args[0]->to_string() << "*" << args[1]->to_string(); break;
        case Kind::Div: out << args[0]->to_string() << "/" << args[1]->to_string(); break;
        case Kind::Pow: out << args[0]->to_string() << "^(" << args[1]->number << ")"; break;
    }
    return out.str();
}

ExprPtr parse_expr(const std::string& text) {
    Parser p(text);
    ExprPtr e = p.parse_sum();
    p.skip_ws();
    if (p.pos != text.size())
        throw ParseError("trailing input", static_cast<int>(p.pos));
    return e;
}

Scalar eval_scalar(const ExprNode& node, const std::map<std::string, Scalar>& consts) {
    switch (node.kind) {
        case ExprNode::Kind::Number: return Scalar(node.number);
        case ExprNode::Kind::Bracket: return kulish(node.bracket_arg);
        case ExprNode::Kind::BracketFactorial: return kulish_factorial(node.bracket_arg);
        case ExprNode::Kind::Sqrt: return sqrt_scalar(eval_scalar(*node.args[0], consts));
        case ExprNode::Kind::Neg: return -eval_scalar(*node.args[0], consts);
        case ExprNode::Kind::Add:
            return eval_scalar(*node.args[0], consts) + eval_scalar(*node.args[1], consts);
        case ExprNode::Kind::Sub:
            return eval_scalar(*node.args[0], consts) - eval_scalar(*node.args[1], consts);
        case ExprNode::Kind::Mul:
            return eval_scalar(*node.args[0], consts) * eval_scalar(*node.args[1], consts);
        case ExprNode::Kind::Div:
            return eval_scalar(*node.args[0], consts) / eval_scalar(*node.args[1], consts);
        case ExprNode::Kind::Pow: {
            Scalar base = eval_scalar(*node.args[0], consts);
            const Rational& re = node.args[1]->number;
            Integer den = denominator(re);
            if (den == 2) base = sqrt_scalar(base);
            else if (den != 1) throw ParseError("unsupported fractional exponent", node.pos);
            long e = static_cast<long>(numerator(re));
            Scalar b = e >= 0 ? base : base.inverse();
            Scalar acc(Rational(1));
            for (long i = 0; i < std::abs(e); ++i) acc = acc * b;
            return acc;
        }
        case ExprNode::Kind::Symbol: {
            if (auto it = consts.find(node.name); it != consts.end()) return it->second;
            if (node.name == "s") return Scalar::s_power(1);
            if (node.name == "q") return Scalar::q_power(1);
            if (node.name == "rho") return varrho();
            if (node.name == "varpi") return varpi();
            if (node.name == "omega") return omega_const();
            if (Symbols::known(node.name)) return Scalar::parameter(node.name);
            throw ParseError("unknown identifier '" + node.name + "'", node.pos);
        }
    }
    throw ParseError("malformed AST", node.pos);
}

Scalar parse_scalar(const std::string& text, const std::map<std::string, Scalar>& consts) {
    return eval_scalar(*parse_expr(text), consts);
}

} // namespace ospq
