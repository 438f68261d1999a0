#include "dmcyl/expr.hpp"

#include <cctype>

namespace dmcyl {

namespace {

struct Parser {
    const AlgebraPtr& alg;
    std::string_view text;
    std::size_t pos = 0;

    [[noreturn]] void fail(const std::string& msg) const {
        throw error("parse error at offset " + std::to_string(pos) + ": " + msg);
    }

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    }

    bool eat(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }

    mpz_class integer() {
        skip_ws();
        std::string digits;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            digits += text[pos++];
        if (digits.empty())
            fail("expected number");
        return mpz_class(digits, 10);  // base 0 would read a leading 0 as octal
    }

    Polynomial expr() {
        Polynomial p = eat('-') ? Polynomial(alg) - term() : term();
        for (;;) {
            if (eat('+'))
                p += term();
            else if (eat('-'))
                p -= term();
            else
                return p;
        }
    }

    Polynomial term() {
        Polynomial p = factor();
        while (eat('*'))
            p = p * factor();
        return p;
    }

    Polynomial factor() {
        Polynomial base = atom();
        if (eat('^')) {
            const mpz_class e = integer();
            if (e < 0 || e > 1000)
                fail("exponent out of range");
            base = base.pow(static_cast<int>(e.get_si()));
        }
        return base;
    }

    Polynomial atom() {
        const char c = peek();
        if (c == '(') {
            ++pos;
            Polynomial p = expr();
            if (!eat(')'))
                fail("expected ')'");
            return p;
        }
        if (c == '-') {
            ++pos;
            return Polynomial(alg) - atom();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const mpz_class num = integer();
            if (eat('/')) {
                const mpz_class den = integer();
                if (den == 0)
                    fail("zero denominator");
                Rational c(num, den);
                c.canonicalize();  // mpq does not reduce num/den on its own
                return Polynomial::one(alg) * c;
            }
            return Polynomial::one(alg) * Rational(num);
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::string name;
            while (pos < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
                name += text[pos++];
            const auto idx = alg->find(name);
            if (!idx)
                fail("unknown generator '" + name + "'");
            return Polynomial::generator(alg, *idx);
        }
        fail("unexpected character");
    }
};

}  // namespace

Polynomial parse_polynomial(const AlgebraPtr& alg, std::string_view text) {
    Parser p{alg, text};
    Polynomial out = p.expr();
    p.skip_ws();
    if (p.pos != text.size())
        p.fail("trailing input");
    return out;
}

}  // namespace dmcyl
