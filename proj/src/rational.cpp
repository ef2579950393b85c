#include "rht/rational.hpp"

#include <boost/multiprecision/integer.hpp>

#include <cctype>

namespace rht {

Rational parse_rational(const std::string& text) {
    std::string s;
    s.reserve(text.size());
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw validation_error("empty rational literal");

    auto is_int = [](const std::string& t) {
        if (t.empty()) return false;
        std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
        return true;
    };

    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            if (!is_int(s)) throw validation_error("malformed rational literal: " + text);
            return Rational(Integer(s));
        }
        std::string num = s.substr(0, slash);
        std::string den = s.substr(slash + 1);
        if (!is_int(num) || !is_int(den))
            throw validation_error("malformed rational literal: " + text);
        Integer d(den);
        if (d == 0) throw validation_error("zero denominator: " + text);
        return Rational(Integer(num), d);
    } catch (const std::exception& e) {
        throw validation_error(std::string("malformed rational literal: ") + text);
    }
}

std::string to_string(const Rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

bool is_perfect_square(const Integer& n) {
    if (n < 0) return false;
    Integer root = boost::multiprecision::sqrt(n);
    return root * root == n;
}

std::optional<Rational> rational_sqrt(const Rational& r) {
    if (r < 0) return std::nullopt;
    Integer num = numerator(r), den = denominator(r);
    if (!is_perfect_square(num) || !is_perfect_square(den)) return std::nullopt;
    return Rational(boost::multiprecision::sqrt(num), boost::multiprecision::sqrt(den));
}

Integer binomial(long n, long k) {
    if (k < 0 || k > n || n < 0) return 0;
    if (k > n - k) k = n - k;
    Integer result = 1;
    for (long i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;
    }
    return result;
}

} // namespace rht
