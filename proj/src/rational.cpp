#include "periods/rational.hpp"

#include <stdexcept>

#include "periods/errors.hpp"

namespace pe {

Rational parse_rational(const std::string& text) {
    if (text.empty()) throw SchemaError("empty rational literal");
    std::string s = text;
    for (char c : s) {
        if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+' || c == '/'))
            throw SchemaError("bad rational literal: " + text);
    }
    try {
        Rational q(s);
        return q;
    } catch (const std::exception&) {
        throw SchemaError("bad rational literal: " + text);
    }
}

std::string rational_str(const Rational& q) {
    return q.str();
}

bool is_integer(const Rational& q) {
    return denominator(q) == 1;
}

Integer to_integer(const Rational& q) {
    if (!is_integer(q)) throw MathError("expected an integer, got " + rational_str(q));
    return numerator(q);
}

long to_long(const Rational& q) {
    Integer n = to_integer(q);
    if (n > std::numeric_limits<long>::max() || n < std::numeric_limits<long>::min())
        throw MathError("integer out of range: " + n.str());
    return static_cast<long>(n);
}

Integer factorial(unsigned n) {
    Integer r = 1;
    for (unsigned i = 2; i <= n; ++i) r *= i;
    return r;
}

Integer binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    Integer r = 1;
    for (unsigned i = 0; i < k; ++i) {
        r *= (n - i);
        r /= (i + 1);
    }
    return r;
}

Rational pow_rational(const Rational& base, long e) {
    if (e == 0) return Rational(1);
    if (base == 0) {
        if (e < 0) throw MathError("0 raised to a negative power");
        return Rational(0);
    }
    Rational b = e > 0 ? base : Rational(1) / base;
    unsigned long n = static_cast<unsigned long>(e > 0 ? e : -e);
    Rational r(1);
    while (n) {
        if (n & 1) r *= b;
        b *= b;
        n >>= 1;
    }
    return r;
}

Integer floor_rational(const Rational& q) {
    Integer n = numerator(q), d = denominator(q);
    Integer quo = n / d;
    if (n < 0 && quo * d != n) quo -= 1;
    return quo;
}

}  // namespace pe
