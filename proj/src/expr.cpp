#include "monospec/expr.hpp"

#include <cctype>

namespace monospec {

namespace {

struct Parser {
    const std::string& s;
    size_t pos = 0;
    const PrecisionContext& ctx;

    Parser(const std::string& text, const PrecisionContext& c) : s(text), ctx(c) {}

    void skip() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char c) {
        skip();
        if (pos < s.size() && s[pos] == c) { ++pos; return true; }
        return false;
    }
    [[noreturn]] void fail(const std::string& what) {
        throw domain_error("expr: " + what + " at position " + std::to_string(pos) +
                           " in '" + s + "'");
    }

    BigReal expr() {
        BigReal v = term();
        for (;;) {
            if (eat('+')) v += term();
            else if (eat('-')) v -= term();
            else return v;
        }
    }
    BigReal term() {
        BigReal v = factor();
        for (;;) {
            if (eat('*')) v *= factor();
            else if (eat('/')) v /= factor();
            else return v;
        }
    }
    BigReal factor() {
        BigReal v = base();
        skip();
        if (eat('^')) {
            skip();
            bool paren = eat('(');
            bool neg = eat('-');
            long p = integer();
            long q = 1;
            if (paren) {
                if (eat('/')) q = integer();
                if (!eat(')')) fail("expected ')' in exponent");
            }
            if (q == 1) {
                v = pow_si(v, neg ? -p : p);
            } else {
                if (q < 1) fail("exponent denominator must be positive");
                BigReal r = rootn(v, static_cast<unsigned long>(q));
                v = pow_si(r, neg ? -p : p);
            }
        }
        return v;
    }
    BigReal base() {
        skip();
        if (eat('-')) return -base();
        if (eat('(')) {
            BigReal v = expr();
            if (!eat(')')) fail("expected ')'");
            return v;
        }
        if (alpha_ahead()) {
            std::string name = ident();
            if (name == "pi") return ctx.pi();
            if (name == "sqrt" || name == "cbrt") {
                if (!eat('(')) fail("expected '(' after " + name);
                BigReal v = expr();
                if (!eat(')')) fail("expected ')'");
                return name == "sqrt" ? sqrt(v) : rootn(v, 3);
            }
            fail("unknown name '" + name + "'");
        }
        return number();
    }
    bool alpha_ahead() {
        skip();
        return pos < s.size() && std::isalpha(static_cast<unsigned char>(s[pos]));
    }
    std::string ident() {
        skip();
        size_t start = pos;
        while (pos < s.size() && std::isalpha(static_cast<unsigned char>(s[pos]))) ++pos;
        return s.substr(start, pos - start);
    }
    long integer() {
        skip();
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) fail("expected integer");
        return std::stol(s.substr(start, pos - start));
    }
    BigReal number() {
        skip();
        size_t start = pos;
        while (pos < s.size() &&
               (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '.'))
            ++pos;
        // exponent suffix (e.g. 1e-3)
        if (pos < s.size() && (s[pos] == 'e' || s[pos] == 'E')) {
            size_t save = pos;
            ++pos;
            if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) ++pos;
            if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
                while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
                    ++pos;
            } else {
                pos = save;
            }
        }
        if (pos == start) fail("expected number");
        return ctx.real(s.substr(start, pos - start));
    }
};

} // namespace

BigReal eval_expr(const std::string& text, const PrecisionContext& ctx) {
    Parser p(text, ctx);
    BigReal v = p.expr();
    p.skip();
    if (p.pos != text.size())
        throw domain_error("expr: trailing input at position " + std::to_string(p.pos) +
                           " in '" + text + "'");
    return v;
}

} // namespace monospec
