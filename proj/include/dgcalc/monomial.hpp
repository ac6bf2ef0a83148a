/**
 * @file monomial.hpp
 * @brief Packed monomials in up to seven derivation symbols.
 *
 * Layout of the 64-bit word: byte i (i < 7) holds the exponent of d_{i+1},
 * the top byte holds the total degree. Every byte stays below 128 so that
 * multiplication is a plain addition and divisibility a borrow-free SWAR
 * subtraction. Within one total degree, a smaller word is a larger monomial
 * in degree-reverse-lexicographic order, because d_n sits in the most
 * significant exponent byte.
 */
#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace dgcalc {

class Monomial {
public:
    static constexpr int kMaxVars = 7;
    static constexpr int kMaxExponent = 127;

    constexpr Monomial() noexcept = default;

    static Monomial from_exponents(std::span<const int> exps);
    /// d_{index+1}, i.e. zero-based variable index.
    static Monomial variable(int index);
    /// Rebuilds a monomial from word(); the caller guarantees a valid layout.
    static constexpr Monomial from_word(uint64_t w) noexcept { return Monomial(w); }

    [[nodiscard]] constexpr uint64_t word() const noexcept { return word_; }
    [[nodiscard]] constexpr int degree() const noexcept { return static_cast<int>(word_ >> 56); }
    [[nodiscard]] constexpr int exponent(int index) const noexcept
    {
        return static_cast<int>((word_ >> (8 * index)) & 0xffU);
    }
    [[nodiscard]] std::vector<int> exponents(int nvars) const;
    [[nodiscard]] constexpr bool is_one() const noexcept { return word_ == 0; }

    /// True when this monomial divides `other`.
    [[nodiscard]] constexpr bool divides(Monomial other) const noexcept
    {
        return (((other.word_ | kGuard) - word_) & kGuard) == kGuard;
    }

    friend Monomial operator*(Monomial a, Monomial b)
    {
        const uint64_t w = a.word_ + b.word_;
        if ((w & kGuard) != 0) throw std::overflow_error("monomial exponent or degree exceeds 127");
        return Monomial(w);
    }
    /// Exact quotient; requires b | a.
    friend constexpr Monomial operator/(Monomial a, Monomial b) noexcept { return Monomial(a.word_ - b.word_); }

    static Monomial lcm(Monomial a, Monomial b) noexcept;
    static bool coprime(Monomial a, Monomial b) noexcept;

    /// Degree-reverse-lexicographic comparison: -1, 0 or 1.
    static constexpr int compare(Monomial a, Monomial b) noexcept
    {
        const uint64_t da = a.word_ >> 56;
        const uint64_t db = b.word_ >> 56;
        if (da != db) return da > db ? 1 : -1;
        if (a.word_ == b.word_) return 0;
        return a.word_ < b.word_ ? 1 : -1;
    }

    friend constexpr bool operator==(Monomial a, Monomial b) noexcept { return a.word_ == b.word_; }
    friend constexpr bool operator!=(Monomial a, Monomial b) noexcept { return a.word_ != b.word_; }

private:
    static constexpr uint64_t kGuard = 0x8080808080808080ULL;
    constexpr explicit Monomial(uint64_t w) noexcept : word_(w) {}

    uint64_t word_ = 0;
};

/// Strict "greater in degrevlex" predicate, handy for descending sorts.
struct MonomialGreater {
    constexpr bool operator()(Monomial a, Monomial b) const noexcept { return Monomial::compare(a, b) > 0; }
};

}  // namespace dgcalc
