#include "entsub/rational.hpp"

#include <cctype>

#include "entsub/errors.hpp"

namespace entsub {

std::string rational_to_string(const Rational& r) {
    // Always emit an explicit denominator so the representation is canonical
    // (boost keeps rationals in lowest terms with positive denominator).
    return numerator(r).str() + "/" + denominator(r).str();
}

namespace {

bool is_integer_token(const std::string& s) {
    if (s.empty()) return false;
    std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (start == s.size()) return false;
    for (std::size_t i = start; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
}

} // namespace

Rational rational_from_string(const std::string& s) {
    const auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            if (!is_integer_token(s)) throw ParseError("rational_from_string: bad integer '" + s + "'");
            return Rational(BigInt(s));
        }
        const std::string num = s.substr(0, slash);
        const std::string den = s.substr(slash + 1);
        if (!is_integer_token(num) || !is_integer_token(den))
            throw ParseError("rational_from_string: bad fraction '" + s + "'");
        BigInt d(den);
        if (d == 0) throw ParseError("rational_from_string: zero denominator in '" + s + "'");
        return Rational(BigInt(num), d);
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception&) {
        throw ParseError("rational_from_string: cannot parse '" + s + "'");
    }
}

} // namespace entsub
