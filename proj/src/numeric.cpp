#include "padj/numeric.hpp"

#include "padj/errors.hpp"

namespace padj {

BigInt factorial(unsigned n) {
    BigInt r = 1;
    for (unsigned i = 2; i <= n; ++i) r *= i;
    return r;
}

BigInt binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    // r stays integral: after step i it equals C(n - k + i, i).
    for (unsigned i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

BigInt floor(const Rational& q) {
    BigInt num = boost::multiprecision::numerator(q);
    BigInt den = boost::multiprecision::denominator(q);
    BigInt quot = num / den;  // truncates toward zero
    if (num < 0 && quot * den != num) quot -= 1;
    return quot;
}

BigInt ceil(const Rational& q) {
    BigInt f = floor(q);
    return Rational(f) == q ? f : f + 1;
}

double to_double(const Rational& q) { return q.convert_to<double>(); }

std::string format_fixed(const Rational& q, unsigned digits) {
    BigInt scale = 1;
    for (unsigned i = 0; i < digits; ++i) scale *= 10;
    Rational scaled = q * scale;
    bool negative = scaled < 0;
    if (negative) scaled = -scaled;

    BigInt whole = floor(scaled);
    Rational frac = scaled - Rational(whole);
    Rational half(1, 2);
    if (frac > half || (frac == half && whole % 2 == 1)) whole += 1;

    std::string digits_str = whole.str();
    if (digits > 0) {
        if (digits_str.size() <= digits) digits_str.insert(0, digits + 1 - digits_str.size(), '0');
        digits_str.insert(digits_str.size() - digits, ".");
    }
    if (negative && whole != 0) digits_str.insert(0, "-");
    return digits_str;
}

bool within(const Rational& a, const Rational& b, const Rational& tol) {
    Rational d = a - b;
    if (d < 0) d = -d;
    return d <= tol;
}

Rational parse_decimal(const std::string& text) {
    if (text.empty()) throw input_error("empty decimal literal");
    std::size_t pos = 0;
    bool negative = false;
    if (text[0] == '-') {
        negative = true;
        pos = 1;
    }
    BigInt num = 0;
    BigInt den = 1;
    bool seen_point = false;
    bool seen_digit = false;
    for (; pos < text.size(); ++pos) {
        char c = text[pos];
        if (c == '.' && !seen_point) {
            seen_point = true;
        } else if (c >= '0' && c <= '9') {
            num = num * 10 + (c - '0');
            if (seen_point) den *= 10;
            seen_digit = true;
        } else {
            throw input_error("bad decimal literal: " + text);
        }
    }
    if (!seen_digit) throw input_error("bad decimal literal: " + text);
    Rational r(num, den);
    return negative ? Rational(-r) : r;
}

}  // namespace padj
