#include "dgcalc/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace dgcalc {

Rational::Rational(Int num, Int den) : num_(std::move(num)), den_(std::move(den))
{
    if (den_.is_zero()) throw std::domain_error("zero denominator");
    if (den_.sign() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    if (den_.is_one()) return;
    const Int g = gcd(num_, den_);
    if (!g.is_one()) {
        num_ = divexact(num_, g);
        den_ = divexact(den_, g);
    }
    if (num_.is_zero()) den_ = Int(1);
}

Rational Rational::parse(std::string_view text)
{
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return {Int(text)};
    return {Int(text.substr(0, slash)), Int(text.substr(slash + 1))};
}

Rational Rational::inverse() const
{
    if (num_.is_zero()) throw std::domain_error("inverse of zero");
    return {den_, num_};
}

std::string Rational::str() const
{
    if (den_.is_one()) return num_.str();
    return num_.str() + "/" + den_.str();
}

Rational operator+(const Rational& a, const Rational& b)
{
    if (a.den_.is_one() && b.den_.is_one()) return {a.num_ + b.num_};
    return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
}

Rational operator-(const Rational& a, const Rational& b)
{
    if (a.den_.is_one() && b.den_.is_one()) return {a.num_ - b.num_};
    return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
}

Rational operator*(const Rational& a, const Rational& b)
{
    if (a.den_.is_one() && b.den_.is_one()) return {a.num_ * b.num_};
    return {a.num_ * b.num_, a.den_ * b.den_};
}

Rational operator/(const Rational& a, const Rational& b)
{
    if (b.num_.is_zero()) throw std::domain_error("division by zero");
    return {a.num_ * b.den_, a.den_ * b.num_};
}

Rational operator-(const Rational& a)
{
    Rational r;
    r.num_ = -a.num_;
    r.den_ = a.den_;
    return r;
}

int cmp(const Rational& a, const Rational& b) { return cmp(a.num_ * b.den_, b.num_ * a.den_); }

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

}  // namespace dgcalc
