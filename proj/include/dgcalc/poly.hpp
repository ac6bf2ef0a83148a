/**
 * @file poly.hpp
 * @brief Polynomials in the commuting derivation symbols d1..dn over the rationals.
 *
 * A Poly is an element of D = Q[d1..dn], the ring of constant-coefficient
 * differential operators. Terms are kept sorted in descending degrevlex
 * order with no zero coefficients, so equality is structural and the
 * serialization is canonical:
 *
 *     d1^2 - 2*d1*d2 + 3/2*d3 - 1
 */
#pragma once

#include "dgcalc/monomial.hpp"
#include "dgcalc/rational.hpp"

#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace dgcalc {

/// Thrown by parse_poly; `position` is the zero-based offset of the offending character.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, size_t position)
        : std::runtime_error(what + " at position " + std::to_string(position)), position_(position)
    {
    }
    [[nodiscard]] size_t position() const noexcept { return position_; }

private:
    size_t position_;
};

/// Operands living in rings with different variable counts.
class RingMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class Poly {
public:
    using Term = std::pair<Monomial, Rational>;

    Poly() = default;
    explicit Poly(int nvars);
    Poly(int nvars, const Rational& constant);
    /// Takes arbitrary terms; sorts, merges duplicates and drops zeros.
    Poly(int nvars, std::vector<Term> terms);

    static Poly variable(int nvars, int index);
    static Poly monomial(int nvars, Monomial m, const Rational& c = Rational(1));

    [[nodiscard]] int nvars() const noexcept { return nvars_; }
    [[nodiscard]] const std::vector<Term>& terms() const noexcept { return terms_; }
    [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }
    [[nodiscard]] size_t size() const noexcept { return terms_.size(); }
    /// Total degree; -1 for the zero polynomial.
    [[nodiscard]] int degree() const noexcept;
    [[nodiscard]] int min_degree() const noexcept;
    [[nodiscard]] bool is_homogeneous() const noexcept;
    [[nodiscard]] bool is_constant() const noexcept;
    [[nodiscard]] const Term& leading() const { return terms_.front(); }
    [[nodiscard]] Rational coefficient(Monomial m) const;
    /// Sum of the terms of exactly the given total degree.
    [[nodiscard]] Poly homogeneous_part(int degree) const;

    [[nodiscard]] std::string str() const;

    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(const Rational& c, const Poly& a);
    friend Poly operator-(const Poly& a);
    Poly& operator+=(const Poly& b) { return *this = *this + b; }
    Poly& operator-=(const Poly& b) { return *this = *this - b; }
    Poly& operator*=(const Poly& b) { return *this = *this * b; }

    friend bool operator==(const Poly& a, const Poly& b)
    {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    /// Substitutes d_i := point[i].
    [[nodiscard]] Rational evaluate(std::span<const Rational> point) const;
    /// d_i -> -d_i for every i; each term picks up (-1)^degree.
    [[nodiscard]] Poly negate_vars() const;

private:
    int nvars_ = 1;
    std::vector<Term> terms_;
};

enum class ArithKind { Add, Sub, Mul, Scale };

/// Ring operation with explicit kind; `factor` is used by Scale only (b is ignored then).
Poly poly_arith(const Poly& a, const Poly& b, ArithKind kind, const Rational& factor = Rational(1));

/// Parses the grammar: integers, rationals p/q, d1..d<nvars>, + - * / ^ and parentheses.
Poly parse_poly(std::string_view text, int nvars);

/// Exact division a / b in D; throws std::domain_error if b does not divide a.
Poly exact_divide(const Poly& a, const Poly& b);

std::ostream& operator<<(std::ostream& os, const Poly& p);

}  // namespace dgcalc
