#include "motives/numeric.hpp"

#include "motives/errors.hpp"

namespace motives {

std::string rational_to_string(const Rational& r) {
    return r.str();
}

Rational rational_from_string(const std::string& s) {
    // cpp_rational quietly reads "" as 0; reject it before handing over.
    if (s.empty()) throw ConfigError("bad rational literal: empty string");
    try {
        return Rational(s);
    } catch (const std::exception&) {
        throw ConfigError("bad rational literal: " + s);
    }
}

Rational rational_abs(const Rational& r) {
    return r < 0 ? Rational(-r) : r;
}

Rational rational_pow(const Rational& q, long e) {
    if (e < 0) {
        if (q == 0) throw DivisionByZero("0 cannot be raised to a negative power");
        return Rational(1) / rational_pow(q, -e);
    }
    Rational acc(1), base(q);
    unsigned long n = static_cast<unsigned long>(e);
    while (n) {
        if (n & 1) acc *= base;
        base *= base;
        n >>= 1;
    }
    return acc;
}

Integer binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Integer num(1), den(1);
    for (long i = 0; i < k; ++i) {
        num *= n - i;
        den *= i + 1;
    }
    return num / den;
}

}  // namespace motives
