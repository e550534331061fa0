#include "clinchsim/rational.hpp"

#include <algorithm>
#include <cctype>

namespace clinchsim {

Int128 checked_mul(Int128 a, Int128 b) {
    Int128 out;
    if (__builtin_mul_overflow(a, b, &out)) throw OverflowError("rational arithmetic overflow");
    return out;
}

Int128 checked_add(Int128 a, Int128 b) {
    Int128 out;
    if (__builtin_add_overflow(a, b, &out)) throw OverflowError("rational arithmetic overflow");
    return out;
}

Int128 gcd128(Int128 a, Int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        Int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

std::string int128_to_string(Int128 v) {
    if (v == 0) return "0";
    const bool neg = v < 0;
    std::string out;
    while (v != 0) {
        int digit = static_cast<int>(v % 10);
        out.push_back(static_cast<char>('0' + (digit < 0 ? -digit : digit)));
        v /= 10;
    }
    if (neg) out.push_back('-');
    std::reverse(out.begin(), out.end());
    return out;
}

Rational::Rational(Int128 num, Int128 den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const Int128 g = gcd128(num, den);
    num_ = g > 1 ? num / g : num;
    den_ = g > 1 ? den / g : den;
}

Rational Rational::parse(std::string_view text) {
    auto bad = [&] { return std::invalid_argument("not a number: '" + std::string(text) + "'"); };
    auto trim = [](std::string_view s) {
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
        return s;
    };
    std::string_view s = trim(text);
    if (s.empty()) throw bad();

    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        Rational n = parse(s.substr(0, slash));
        Rational d = parse(s.substr(slash + 1));
        if (d == Rational(0)) throw bad();
        return n / d;
    }

    bool neg = false;
    if (s.front() == '+' || s.front() == '-') {
        neg = s.front() == '-';
        s.remove_prefix(1);
    }
    Int128 num = 0;
    Int128 den = 1;
    bool seen_dot = false;
    bool seen_digit = false;
    for (char c : s) {
        if (c == '.') {
            if (seen_dot) throw bad();
            seen_dot = true;
            continue;
        }
        if (!std::isdigit(static_cast<unsigned char>(c))) throw bad();
        seen_digit = true;
        num = checked_add(checked_mul(num, 10), c - '0');
        if (seen_dot) den = checked_mul(den, 10);
    }
    if (!seen_digit) throw bad();
    return {neg ? -num : num, den};
}

double Rational::to_double() const {
    // Split to keep precision when num_ exceeds 2^64.
    const Int128 whole = num_ / den_;
    const Int128 rem = num_ % den_;
    return static_cast<double>(whole) + static_cast<double>(rem) / static_cast<double>(den_);
}

std::string Rational::to_string() const {
    if (den_ == 1) return int128_to_string(num_);
    return int128_to_string(num_) + "/" + int128_to_string(den_);
}

Rational operator+(const Rational& a, const Rational& b) {
    const Int128 g = gcd128(a.den_, b.den_);
    const Int128 da = a.den_ / g;
    return {checked_add(checked_mul(a.num_, b.den_ / g), checked_mul(b.num_, da)), checked_mul(a.den_, b.den_ / g)};
}

Rational Rational::operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
    const Int128 g1 = gcd128(a.num_, b.den_);
    const Int128 g2 = gcd128(b.num_, a.den_);
    const Int128 n1 = g1 ? a.num_ / g1 : a.num_;
    const Int128 d2 = g1 ? b.den_ / g1 : b.den_;
    const Int128 n2 = g2 ? b.num_ / g2 : b.num_;
    const Int128 d1 = g2 ? a.den_ / g2 : a.den_;
    return {checked_mul(n1, n2), checked_mul(d1, d2)};
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::domain_error("division by zero");
    return a * Rational(b.den_, b.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    if (a.den_ == b.den_) return a.num_ <=> b.num_;
    const Int128 g = gcd128(a.den_, b.den_);
    return checked_mul(a.num_, b.den_ / g) <=> checked_mul(b.num_, a.den_ / g);
}

}  // namespace clinchsim
