#include "lattica/rational.hpp"

#include <charconv>
#include <cmath>
#include <limits>
#include <numeric>

#include "lattica/error.hpp"

namespace lattica {

namespace {

using u128 = uint128;

Rational from_wide(u128 num, u128 den) {
    if (den == 0) throw InputError("rational with zero denominator");
    // reduce in 128 bits first so representable values are not rejected
    u128 a = num, b = den;
    while (b) {
        u128 t = a % b;
        a = b;
        b = t;
    }
    if (a > 1) {
        num /= a;
        den /= a;
    }
    constexpr u128 max = std::numeric_limits<std::uint64_t>::max();
    if (num > max || den > max) throw InputError("rational overflow");
    return Rational(static_cast<std::uint64_t>(num), static_cast<std::uint64_t>(den));
}

u128 pow10(int e) {
    u128 r = 1;
    for (int i = 0; i < e; ++i) r *= 10;
    return r;
}

}  // namespace

Rational::Rational(std::uint64_t num, std::uint64_t den) {
    if (den == 0) throw InputError("rational with zero denominator");
    auto g = std::gcd(num, den);
    if (g == 0) g = 1;
    num_ = num / g;
    den_ = den / g;
}

std::string Rational::str() const { return std::to_string(num_) + "/" + std::to_string(den_); }

std::string Rational::decimal(int places) const {
    u128 scale = pow10(places);
    u128 scaled = static_cast<u128>(num_) * scale;
    u128 q = scaled / den_;
    u128 r = scaled % den_;
    u128 twice = 2 * r;
    if (twice > den_ || (twice == den_ && (q & 1))) ++q;
    u128 whole = q / scale;
    u128 frac = q % scale;
    std::string out = std::to_string(static_cast<std::uint64_t>(whole));
    if (places > 0) {
        std::string f = std::to_string(static_cast<std::uint64_t>(frac));
        out += '.';
        out += std::string(static_cast<std::size_t>(places) - f.size(), '0');
        out += f;
    }
    return out;
}

Rational Rational::parse(std::string_view text) {
    auto bad = [&]() { return InputError("not a non-negative rational: '" + std::string(text) + "'"); };
    if (text.empty()) throw bad();
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        std::uint64_t n = 0, d = 0;
        auto ns = text.substr(0, slash), ds = text.substr(slash + 1);
        auto r1 = std::from_chars(ns.data(), ns.data() + ns.size(), n);
        auto r2 = std::from_chars(ds.data(), ds.data() + ds.size(), d);
        if (r1.ec != std::errc{} || r1.ptr != ns.data() + ns.size() || r2.ec != std::errc{} ||
            r2.ptr != ds.data() + ds.size() || d == 0)
            throw bad();
        return Rational(n, d);
    }
    // decimal: digits [. digits] [(e|E) [+-] digits]
    std::size_t i = 0;
    u128 mantissa = 0;
    int frac_digits = 0;
    int digits = 0;
    bool seen_dot = false;
    if (text[0] == '+') ++i;
    for (; i < text.size(); ++i) {
        char c = text[i];
        if (c >= '0' && c <= '9') {
            if (mantissa > pow10(35)) throw bad();
            mantissa = mantissa * 10 + static_cast<unsigned>(c - '0');
            if (seen_dot) ++frac_digits;
            ++digits;
        } else if (c == '.' && !seen_dot) {
            seen_dot = true;
        } else {
            break;
        }
    }
    if (digits == 0) throw bad();
    int exponent = 0;
    if (i < text.size()) {
        if (text[i] != 'e' && text[i] != 'E') throw bad();
        ++i;
        auto es = text.substr(i);
        if (!es.empty() && es[0] == '+') es.remove_prefix(1);
        auto r = std::from_chars(es.data(), es.data() + es.size(), exponent);
        if (r.ec != std::errc{} || r.ptr != es.data() + es.size() || es.empty()) throw bad();
    }
    int e = exponent - frac_digits;
    if (e > 30 || e < -36) throw bad();
    if (e >= 0) {
        if (e > 19 || (mantissa != 0 && mantissa > std::numeric_limits<std::uint64_t>::max() / pow10(e)))
            throw InputError("rational overflow: '" + std::string(text) + "'");
        return from_wide(mantissa * pow10(e), 1);
    }
    return from_wide(mantissa, pow10(-e));
}

Rational Rational::from_double(double value) {
    if (!std::isfinite(value) || value < 0) throw InputError("not a non-negative finite number");
    char buf[64];
    auto r = std::to_chars(buf, buf + sizeof buf, value);
    return parse(std::string_view(buf, static_cast<std::size_t>(r.ptr - buf)));
}

Rational operator*(const Rational& a, const Rational& b) {
    return from_wide(static_cast<u128>(a.num_) * b.num_, static_cast<u128>(a.den_) * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw InputError("division by zero");
    return from_wide(static_cast<u128>(a.num_) * b.den_, static_cast<u128>(a.den_) * b.num_);
}

}  // namespace lattica
