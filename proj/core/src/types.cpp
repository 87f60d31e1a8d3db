#include "brt/types.hpp"

#include <cctype>
#include <cmath>

namespace brt {

double to_double(const BigInt& x)
{
    return x.convert_to<double>();
}

double to_double(const Rational& x)
{
    BigInt num = boost::multiprecision::numerator(x);
    BigInt den = boost::multiprecision::denominator(x);
    if (num == 0)
        return 0.0;
    double sign = num < 0 ? -1.0 : 1.0;
    if (num < 0)
        num = -num;
    // Shift both sides into double range before dividing.
    long long shift = static_cast<long long>(msb(num)) - static_cast<long long>(msb(den));
    if (std::llabs(shift) < 900 && msb(num) < 1000 && msb(den) < 1000)
        return sign * num.convert_to<double>() / den.convert_to<double>();
    unsigned drop_n = msb(num) > 120 ? msb(num) - 120 : 0;
    unsigned drop_d = msb(den) > 120 ? msb(den) - 120 : 0;
    double hi = (num >> drop_n).convert_to<double>() / (den >> drop_d).convert_to<double>();
    return sign * std::ldexp(hi, static_cast<int>(drop_n) - static_cast<int>(drop_d));
}

double log_big(const BigInt& x)
{
    if (x <= 0)
        throw InvalidInput("log_big: non-positive argument");
    unsigned top = msb(x);
    if (top < 1000)
        return std::log(x.convert_to<double>());
    unsigned drop = top - 100;
    return std::log((x >> drop).convert_to<double>()) + drop * std::log(2.0);
}

BigInt factorial(unsigned n)
{
    BigInt r = 1;
    for (unsigned i = 2; i <= n; ++i)
        r *= i;
    return r;
}

BigInt binomial(unsigned n, unsigned k)
{
    if (k > n)
        return 0;
    if (k > n - k)
        k = n - k;
    BigInt r = 1;
    for (unsigned i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

Rational parse_rational(const std::string& text)
{
    if (text.empty())
        throw InvalidInput("empty rational literal");
    auto digits_only = [](const std::string& s) {
        if (s.empty())
            return false;
        for (char c : s)
            if (!std::isdigit(static_cast<unsigned char>(c)))
                return false;
        return true;
    };
    std::string s = text;
    bool negative = false;
    if (s[0] == '-' || s[0] == '+') {
        negative = s[0] == '-';
        s = s.substr(1);
    }
    Rational value;
    auto slash = s.find('/');
    auto dot = s.find('.');
    if (slash != std::string::npos) {
        std::string p = s.substr(0, slash), q = s.substr(slash + 1);
        if (!digits_only(p) || !digits_only(q))
            throw InvalidInput("malformed rational: " + text);
        BigInt den(q);
        if (den == 0)
            throw InvalidInput("zero denominator: " + text);
        value = Rational(BigInt(p), den);
    } else if (dot != std::string::npos) {
        std::string ip = s.substr(0, dot), fp = s.substr(dot + 1);
        if (ip.empty())
            ip = "0";
        if (!digits_only(ip) || (!fp.empty() && !digits_only(fp)))
            throw InvalidInput("malformed decimal: " + text);
        BigInt scale = 1;
        for (std::size_t i = 0; i < fp.size(); ++i)
            scale *= 10;
        BigInt whole(ip + fp);
        value = Rational(whole, scale);
    } else {
        if (!digits_only(s))
            throw InvalidInput("malformed number: " + text);
        value = Rational(BigInt(s));
    }
    return negative ? Rational(-value) : value;
}

std::string to_string(const Rational& x)
{
    BigInt den = boost::multiprecision::denominator(x);
    if (den == 1)
        return boost::multiprecision::numerator(x).str();
    return boost::multiprecision::numerator(x).str() + "/" + den.str();
}

}  // namespace brt
