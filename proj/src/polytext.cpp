#include "rht/polytext.hpp"

#include <cctype>
#include <sstream>

namespace rht {

namespace {

struct Lexer {
    const std::string& text;
    std::size_t pos = 0;

    explicit Lexer(const std::string& t) : text(t) {}

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    bool accept(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& what) {
        throw validation_error("polynomial parse error at position " + std::to_string(pos) +
                               ": " + what + " in \"" + text + "\"");
    }

    Integer integer() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) fail("expected an integer");
        return Integer(text.substr(start, pos - start));
    }

    std::string name() {
        skip_ws();
        std::size_t start = pos;
        if (pos >= text.size() || !std::isalpha(static_cast<unsigned char>(text[pos])))
            fail("expected a generator name");
        ++pos;
        while (pos < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_' ||
                text[pos] == '\''))
            ++pos;
        return text.substr(start, pos - start);
    }
};

} // namespace

Element parse_element(const std::string& text, const GeneratorSetPtr& ambient) {
    Lexer lex(text);
    Element result = Element::zero(ambient);
    if (lex.done()) lex.fail("empty polynomial");

    bool first = true;
    while (!lex.done()) {
        int sign = 1;
        if (lex.accept('-')) sign = -1;
        else if (lex.accept('+')) {
            if (first) lex.fail("unexpected leading '+'");
        } else if (!first) {
            lex.fail("expected '+' or '-'");
        }
        first = false;

        Rational coeff(sign);
        Element mono = Element::constant(ambient, 1);
        bool any_factor = false;
        while (true) {
            char c = lex.peek();
            if (std::isdigit(static_cast<unsigned char>(c))) {
                Integer num = lex.integer();
                if (lex.accept('/')) {
                    Integer den = lex.integer();
                    if (den == 0) lex.fail("zero denominator");
                    coeff *= Rational(num, den);
                } else {
                    coeff *= Rational(num);
                }
                any_factor = true;
            } else if (std::isalpha(static_cast<unsigned char>(c))) {
                std::string n = lex.name();
                auto idx = ambient->index_of(n);
                if (!idx) lex.fail("unknown generator '" + n + "'");
                std::uint32_t exp = 1;
                if (lex.accept('^')) {
                    Integer e = lex.integer();
                    if (e < 1) lex.fail("exponent must be positive");
                    exp = static_cast<std::uint32_t>(e);
                }
                Element g = Element::generator(ambient, *idx);
                for (std::uint32_t k = 0; k < exp; ++k) mono = mono * g;
                any_factor = true;
            } else {
                break;
            }
            if (!lex.accept('*')) break;
        }
        if (!any_factor) lex.fail("expected a term");
        result += coeff * mono;
    }
    return result;
}

std::string format_element(const Element& e) {
    if (e.is_zero()) return "0";
    const auto& gens = *e.ambient();
    std::ostringstream out;
    bool first = true;
    for (const auto& [mono, coeff] : e.terms()) {
        Rational c = coeff;
        if (first) {
            if (c < 0) {
                out << "-";
                c = -c;
            }
        } else {
            out << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        first = false;

        bool need_coeff = (c != 1) || mono.is_one();
        if (need_coeff) out << to_string(c);
        bool need_star = need_coeff;
        for (const auto& [idx, exp] : mono.factors()) {
            if (need_star) out << "*";
            out << gens.name(idx);
            if (exp >= 2) out << "^" << exp;
            need_star = true;
        }
    }
    return out.str();
}

} // namespace rht
