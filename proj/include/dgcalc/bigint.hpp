/**
 * @file bigint.hpp
 * @brief Arbitrary-precision integer with an inline 64-bit fast path.
 *
 * Values that fit in int64_t are stored inline; anything larger is promoted
 * to a heap-allocated GMP integer and demoted again as soon as it fits.
 * Almost every coefficient met by the module engine stays small, so the
 * common path is a handful of overflow-checked machine instructions.
 */
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace dgcalc {

class Int {
public:
    Int() noexcept = default;
    Int(int64_t v) noexcept : small_(v) {}  // NOLINT(google-explicit-constructor)
    explicit Int(const mpz_class& v);
    explicit Int(std::string_view decimal);

    Int(const Int& other);
    Int(Int&& other) noexcept : small_(other.small_), big_(other.big_) { other.big_ = nullptr; }
    Int& operator=(const Int& other);
    Int& operator=(Int&& other) noexcept;
    ~Int() { delete big_; }

    [[nodiscard]] bool is_small() const noexcept { return big_ == nullptr; }
    [[nodiscard]] int64_t small() const noexcept { return small_; }
    [[nodiscard]] mpz_class to_mpz() const;

    [[nodiscard]] int sign() const noexcept
    {
        if (big_ == nullptr) return (small_ > 0) - (small_ < 0);
        return mpz_sgn(big_->get_mpz_t());
    }
    [[nodiscard]] bool is_zero() const noexcept { return big_ == nullptr && small_ == 0; }
    [[nodiscard]] bool is_one() const noexcept { return big_ == nullptr && small_ == 1; }
    [[nodiscard]] bool is_minus_one() const noexcept { return big_ == nullptr && small_ == -1; }

    [[nodiscard]] std::string str() const;
    [[nodiscard]] size_t hash() const noexcept;

    friend Int operator+(const Int& a, const Int& b);
    friend Int operator-(const Int& a, const Int& b);
    friend Int operator*(const Int& a, const Int& b);
    friend Int operator-(const Int& a);
    Int& operator+=(const Int& b) { return *this = *this + b; }
    Int& operator-=(const Int& b) { return *this = *this - b; }
    Int& operator*=(const Int& b) { return *this = *this * b; }

    /// Exact quotient; the caller guarantees b divides a.
    friend Int divexact(const Int& a, const Int& b);
    /// Truncated quotient and remainder.
    friend void divmod(const Int& a, const Int& b, Int& q, Int& r);
    /// Non-negative gcd; gcd(0, 0) = 0.
    friend Int gcd(const Int& a, const Int& b);
    friend Int abs(const Int& a);

    friend int cmp(const Int& a, const Int& b) noexcept;
    friend bool operator==(const Int& a, const Int& b) noexcept { return cmp(a, b) == 0; }
    friend bool operator!=(const Int& a, const Int& b) noexcept { return cmp(a, b) != 0; }
    friend bool operator<(const Int& a, const Int& b) noexcept { return cmp(a, b) < 0; }
    friend bool operator>(const Int& a, const Int& b) noexcept { return cmp(a, b) > 0; }
    friend bool operator<=(const Int& a, const Int& b) noexcept { return cmp(a, b) <= 0; }
    friend bool operator>=(const Int& a, const Int& b) noexcept { return cmp(a, b) >= 0; }

    friend std::ostream& operator<<(std::ostream& os, const Int& v);

private:
    static Int from_mpz(mpz_class&& v);

    int64_t small_ = 0;
    mpz_class* big_ = nullptr;
};

}  // namespace dgcalc
