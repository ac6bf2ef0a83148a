#include "dgcalc/bigint.hpp"

#include <limits>
#include <ostream>
#include <stdexcept>

namespace dgcalc {

namespace {

mpz_class mpz_of(int64_t v)
{
    mpz_class r;
    mpz_set_si(r.get_mpz_t(), static_cast<long>(v));
    return r;
}

}  // namespace

Int::Int(const mpz_class& v)
{
    if (mpz_fits_slong_p(v.get_mpz_t()) != 0) {
        small_ = mpz_get_si(v.get_mpz_t());
    } else {
        big_ = new mpz_class(v);
    }
}

Int::Int(std::string_view decimal)
{
    std::string s(decimal);
    mpz_class v;
    if (s.empty() || v.set_str(s, 10) != 0) throw std::invalid_argument("invalid integer literal: " + s);
    *this = Int(v);
}

Int::Int(const Int& other) : small_(other.small_)
{
    if (other.big_ != nullptr) big_ = new mpz_class(*other.big_);
}

Int& Int::operator=(const Int& other)
{
    if (this == &other) return *this;
    if (other.big_ == nullptr) {
        delete big_;
        big_ = nullptr;
        small_ = other.small_;
    } else if (big_ != nullptr) {
        *big_ = *other.big_;
    } else {
        big_ = new mpz_class(*other.big_);
    }
    return *this;
}

Int& Int::operator=(Int&& other) noexcept
{
    if (this == &other) return *this;
    delete big_;
    small_ = other.small_;
    big_ = other.big_;
    other.big_ = nullptr;
    return *this;
}

mpz_class Int::to_mpz() const
{
    if (big_ != nullptr) return *big_;
    return mpz_of(small_);
}

Int Int::from_mpz(mpz_class&& v)
{
    Int r;
    if (mpz_fits_slong_p(v.get_mpz_t()) != 0) {
        r.small_ = mpz_get_si(v.get_mpz_t());
    } else {
        r.big_ = new mpz_class(std::move(v));
    }
    return r;
}

std::string Int::str() const
{
    if (big_ == nullptr) return std::to_string(small_);
    return big_->get_str(10);
}

size_t Int::hash() const noexcept
{
    if (big_ == nullptr) return std::hash<int64_t>{}(small_);
    size_t h = 0x9e3779b97f4a7c15ULL;
    const auto* z = big_->get_mpz_t();
    const int n = std::abs(z->_mp_size);
    for (int i = 0; i < n; ++i) h = (h ^ z->_mp_d[i]) * 0x100000001b3ULL;
    return h ^ static_cast<size_t>(z->_mp_size < 0);
}

Int operator+(const Int& a, const Int& b)
{
    if (a.big_ == nullptr && b.big_ == nullptr) {
        int64_t r;
        if (!__builtin_add_overflow(a.small_, b.small_, &r)) return Int(r);
    }
    return Int::from_mpz(a.to_mpz() + b.to_mpz());
}

Int operator-(const Int& a, const Int& b)
{
    if (a.big_ == nullptr && b.big_ == nullptr) {
        int64_t r;
        if (!__builtin_sub_overflow(a.small_, b.small_, &r)) return Int(r);
    }
    return Int::from_mpz(a.to_mpz() - b.to_mpz());
}

Int operator*(const Int& a, const Int& b)
{
    if (a.big_ == nullptr && b.big_ == nullptr) {
        int64_t r;
        if (!__builtin_mul_overflow(a.small_, b.small_, &r)) return Int(r);
    }
    return Int::from_mpz(a.to_mpz() * b.to_mpz());
}

Int operator-(const Int& a)
{
    if (a.big_ == nullptr && a.small_ != std::numeric_limits<int64_t>::min()) return Int(-a.small_);
    return Int::from_mpz(-a.to_mpz());
}

Int divexact(const Int& a, const Int& b)
{
    if (b.is_zero()) throw std::domain_error("division by zero");
    if (a.big_ == nullptr && b.big_ == nullptr) {
        if (!(a.small_ == std::numeric_limits<int64_t>::min() && b.small_ == -1)) return Int(a.small_ / b.small_);
    }
    mpz_class r;
    mpz_class az = a.to_mpz();
    mpz_class bz = b.to_mpz();
    mpz_divexact(r.get_mpz_t(), az.get_mpz_t(), bz.get_mpz_t());
    return Int::from_mpz(std::move(r));
}

void divmod(const Int& a, const Int& b, Int& q, Int& r)
{
    if (b.is_zero()) throw std::domain_error("division by zero");
    if (a.big_ == nullptr && b.big_ == nullptr &&
        !(a.small_ == std::numeric_limits<int64_t>::min() && b.small_ == -1)) {
        q = Int(a.small_ / b.small_);
        r = Int(a.small_ % b.small_);
        return;
    }
    mpz_class qz;
    mpz_class rz;
    mpz_class az = a.to_mpz();
    mpz_class bz = b.to_mpz();
    mpz_tdiv_qr(qz.get_mpz_t(), rz.get_mpz_t(), az.get_mpz_t(), bz.get_mpz_t());
    q = Int::from_mpz(std::move(qz));
    r = Int::from_mpz(std::move(rz));
}

Int gcd(const Int& a, const Int& b)
{
    if (a.big_ == nullptr && b.big_ == nullptr && a.small_ != std::numeric_limits<int64_t>::min() &&
        b.small_ != std::numeric_limits<int64_t>::min()) {
        uint64_t x = static_cast<uint64_t>(a.small_ < 0 ? -a.small_ : a.small_);
        uint64_t y = static_cast<uint64_t>(b.small_ < 0 ? -b.small_ : b.small_);
        while (y != 0) {
            const uint64_t t = x % y;
            x = y;
            y = t;
        }
        return Int(static_cast<int64_t>(x));
    }
    mpz_class r;
    mpz_class az = a.to_mpz();
    mpz_class bz = b.to_mpz();
    mpz_gcd(r.get_mpz_t(), az.get_mpz_t(), bz.get_mpz_t());
    return Int::from_mpz(std::move(r));
}

Int abs(const Int& a) { return a.sign() < 0 ? -a : a; }

int cmp(const Int& a, const Int& b) noexcept
{
    if (a.big_ == nullptr && b.big_ == nullptr) return (a.small_ > b.small_) - (a.small_ < b.small_);
    if (a.big_ != nullptr && b.big_ != nullptr) {
        const int c = mpz_cmp(a.big_->get_mpz_t(), b.big_->get_mpz_t());
        return (c > 0) - (c < 0);
    }
    // a big value never fits in int64, so its sign decides
    if (a.big_ != nullptr) return mpz_sgn(a.big_->get_mpz_t());
    return -mpz_sgn(b.big_->get_mpz_t());
}

std::ostream& operator<<(std::ostream& os, const Int& v) { return os << v.str(); }

}  // namespace dgcalc
