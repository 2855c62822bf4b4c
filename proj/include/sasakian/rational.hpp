#pragma once
// Exact rational scalars. Backed by boost::multiprecision::cpp_rational, which
// keeps values canonical (reduced, denominator > 0) by construction. Only the
// literal grammar of the file format lives here: optional leading sign, decimal
// digits, optional "/denominator".

#include <boost/multiprecision/cpp_int.hpp>

#include <sstream>
#include <string>

#include "sasakian/errors.hpp"

namespace sasakian {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline bool is_canonical(const Rational& r) {
    using boost::multiprecision::denominator;
    using boost::multiprecision::numerator;
    return denominator(r) > 0 && gcd(abs(numerator(r)), denominator(r)) <= 1;
}

// "3" == "3/1"; "-5/2"; "+7". Rejects "1/0" with a zero-denominator diagnostic.
inline Rational parse_rational(const std::string& text) {
    std::size_t pos = 0;
    const auto fail = [&](const std::string& why) -> Rational {
        throw input_error("bad rational literal \"" + text + "\": " + why);
    };
    bool negative = false;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
        negative = text[pos] == '-';
        ++pos;
    }
    std::size_t num_begin = pos;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
    if (pos == num_begin) fail("missing numerator digits");
    BigInt num(text.substr(num_begin, pos - num_begin));
    BigInt den = 1;
    if (pos < text.size()) {
        if (text[pos] != '/') fail("unexpected character");
        ++pos;
        std::size_t den_begin = pos;
        while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
        if (pos == den_begin || pos != text.size()) fail("malformed denominator");
        den = BigInt(text.substr(den_begin, pos - den_begin));
        if (den == 0) fail("zero denominator");
    }
    if (negative) num = -num;
    return Rational(num, den);
}

inline std::string to_string(const Rational& r) {
    std::ostringstream out;
    out << r; // prints "p" or "p/q", canonical
    return out.str();
}

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

} // namespace sasakian
