/**
 * @file rational.hpp
 * @brief Exact rationals in lowest terms with positive denominator.
 */
#pragma once

#include "dgcalc/bigint.hpp"

#include <string>
#include <string_view>

namespace dgcalc {

class Rational {
public:
    Rational() = default;
    Rational(int64_t v) : num_(v) {}  // NOLINT(google-explicit-constructor)
    Rational(Int v) : num_(std::move(v)) {}  // NOLINT(google-explicit-constructor)
    Rational(Int num, Int den);
    Rational(int64_t num, int64_t den) : Rational(Int(num), Int(den)) {}

    /// Parses "p", "-p" or "p/q".
    static Rational parse(std::string_view text);

    [[nodiscard]] const Int& num() const noexcept { return num_; }
    [[nodiscard]] const Int& den() const noexcept { return den_; }
    [[nodiscard]] int sign() const noexcept { return num_.sign(); }
    [[nodiscard]] bool is_zero() const noexcept { return num_.is_zero(); }
    [[nodiscard]] bool is_one() const noexcept { return num_.is_one() && den_.is_one(); }
    [[nodiscard]] bool is_integer() const noexcept { return den_.is_one(); }

    [[nodiscard]] Rational inverse() const;
    [[nodiscard]] std::string str() const;

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a);
    Rational& operator+=(const Rational& b) { return *this = *this + b; }
    Rational& operator-=(const Rational& b) { return *this = *this - b; }
    Rational& operator*=(const Rational& b) { return *this = *this * b; }
    Rational& operator/=(const Rational& b) { return *this = *this / b; }

    friend bool operator==(const Rational& a, const Rational& b) noexcept
    {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) noexcept { return !(a == b); }
    friend int cmp(const Rational& a, const Rational& b);
    friend bool operator<(const Rational& a, const Rational& b) { return cmp(a, b) < 0; }
    friend bool operator>(const Rational& a, const Rational& b) { return cmp(a, b) > 0; }

private:
    Int num_{0};
    Int den_{1};
};

std::ostream& operator<<(std::ostream& os, const Rational& q);

}  // namespace dgcalc
