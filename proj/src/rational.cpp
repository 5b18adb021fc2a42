#include "nsmac/rational.hpp"

namespace nsmac {

Rational rational_pow(const Rational& base, long long e) {
    if (e == 0) return Rational(1);
    if (base == 0 && e < 0)
        throw std::invalid_argument("rational_pow: zero base with negative exponent");
    Rational acc(1);
    Rational b = base;
    unsigned long long k = e < 0 ? static_cast<unsigned long long>(-e)
                                 : static_cast<unsigned long long>(e);
    while (k > 0) {
        if (k & 1ULL) acc *= b;
        b *= b;
        k >>= 1ULL;
    }
    if (e < 0) acc = Rational(1) / acc;
    return acc;
}

std::string rational_to_string(const Rational& r) {
    std::string num = numerator(r).str();
    if (denominator(r) == 1) return num;
    return num + "/" + denominator(r).str();
}

Rational parse_rational(const std::string& s) {
    auto bad = [&]() { throw std::invalid_argument("not a rational: '" + s + "'"); };
    if (s.empty()) bad();
    auto slash = s.find('/');
    auto check_int = [&](const std::string& part, bool allow_sign) {
        if (part.empty()) bad();
        std::size_t i = 0;
        if (allow_sign && (part[0] == '-' || part[0] == '+')) i = 1;
        if (i == part.size()) bad();
        for (; i < part.size(); ++i)
            if (part[i] < '0' || part[i] > '9') bad();
    };
    if (slash == std::string::npos) {
        check_int(s, true);
        return Rational(boost::multiprecision::mpz_int(s));
    }
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    check_int(num, true);
    check_int(den, false);
    boost::multiprecision::mpz_int d(den);
    if (d == 0) bad();
    return Rational(boost::multiprecision::mpz_int(num), d);
}

} // namespace nsmac
