#include <echcap/rational.hpp>

#include <echcap/errors.hpp>

#include <cctype>

namespace echcap {

namespace {

bool is_integer_token(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            if (!is_integer_token(text)) {
                throw ParseError("not a rational: '" + text + "'");
            }
            return Rational(Int(text));
        }
        const std::string num = text.substr(0, slash);
        const std::string den = text.substr(slash + 1);
        if (!is_integer_token(num) || !is_integer_token(den)) {
            throw ParseError("not a rational: '" + text + "'");
        }
        Int d(den);
        if (d == 0) {
            throw ParseError("zero denominator in '" + text + "'");
        }
        return Rational(Int(num), d);
    } catch (const Error&) {
        throw;
    } catch (const std::exception&) {
        throw ParseError("not a rational: '" + text + "'");
    }
}

std::string rational_to_string(const Rational& r) {
    if (denominator(r) == 1) {
        return numerator(r).str();
    }
    return numerator(r).str() + "/" + denominator(r).str();
}

double rational_to_double(const Rational& r) {
    return r.convert_to<double>();
}

}  // namespace echcap
