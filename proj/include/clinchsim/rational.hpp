#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace clinchsim {

__extension__ typedef __int128 Int128;

/// Thrown when exact arithmetic would leave the 128-bit range.
class OverflowError : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

/// Exact rational number with a positive denominator, always in lowest terms.
///
/// Scores and standings are compared exactly, so ties between drivers are
/// detected without floating-point noise. Every operation checks for
/// overflow and throws OverflowError instead of wrapping.
class Rational {
public:
    constexpr Rational() = default;
    Rational(Int128 num, Int128 den = 1);
    Rational(std::int64_t value) : Rational(static_cast<Int128>(value)) {}
    Rational(int value) : Rational(static_cast<Int128>(value)) {}

    /// Parses "3", "-2", "1.05", "21/20".
    static Rational parse(std::string_view text);

    [[nodiscard]] Int128 num() const { return num_; }
    [[nodiscard]] Int128 den() const { return den_; }
    [[nodiscard]] bool is_integer() const { return den_ == 1; }
    [[nodiscard]] double to_double() const;
    /// "n" for integers, "n/d" otherwise.
    [[nodiscard]] std::string to_string() const;

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);
    Rational operator-() const;
    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }

    friend bool operator==(const Rational& a, const Rational& b) = default;
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

private:
    Int128 num_ = 0;
    Int128 den_ = 1;
};

Int128 checked_mul(Int128 a, Int128 b);
Int128 checked_add(Int128 a, Int128 b);
Int128 gcd128(Int128 a, Int128 b);
std::string int128_to_string(Int128 v);

}  // namespace clinchsim
