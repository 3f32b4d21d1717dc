#include "florist/rational.hpp"

#include <cctype>

namespace florist {

namespace {

bool is_integer_token(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

// Int's own parser rejects an explicit plus sign.
Int int_of_token(const std::string& s) { return Int(s[0] == '+' ? s.substr(1) : s); }

}  // namespace

std::string rat_to_string(const Rat& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

Rat rat_from_string(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) {
        if (!is_integer_token(s)) throw Error(Errc::Syntax, "not a rational: '" + s + "'");
        return Rat(int_of_token(s));
    }
    std::string num = s.substr(0, slash);
    std::string den = s.substr(slash + 1);
    if (!is_integer_token(num) || !is_integer_token(den))
        throw Error(Errc::Syntax, "not a rational: '" + s + "'");
    Int d = int_of_token(den);
    if (d == 0) throw Error(Errc::Syntax, "zero denominator in '" + s + "'");
    return Rat(int_of_token(num), d);
}

std::string int_to_string(const Int& n) { return n.str(); }

Int int_from_string(const std::string& s) {
    if (!is_integer_token(s)) throw Error(Errc::Syntax, "not an integer: '" + s + "'");
    return int_of_token(s);
}

bool reaches_power_of_two(const Int& count, const Int& num, const Int& den) {
    if (den <= 0) throw Error(Errc::Validation, "exponent denominator must be positive");
    if (count < 0) throw Error(Errc::Validation, "count must be non-negative");
    if (count == 0) return false;  // 2^x > 0 for every rational x
    if (num <= 0) return true;     // 2^x <= 1 <= count
    // count >= 2^(num/den)  <=>  count^den >= 2^num, all quantities exact integers
    Int lhs = 1;
    Int base = count;
    Int e = den;
    while (e > 0) {
        if ((e & 1) != 0) lhs *= base;
        e >>= 1;
        if (e > 0) base *= base;
    }
    Int rhs = Int(1) << num.convert_to<unsigned>();
    return lhs >= rhs;
}

}  // namespace florist
