#include "dgcalc/poly.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <sstream>
#include <unordered_map>

namespace dgcalc {

namespace {

void check_ring(int nvars)
{
    if (nvars < 1 || nvars > Monomial::kMaxVars) {
        throw std::invalid_argument("variable count must be in 1..7, got " + std::to_string(nvars));
    }
}

void same_ring(const Poly& a, const Poly& b)
{
    if (a.nvars() != b.nvars()) {
        throw RingMismatch("ring mismatch: " + std::to_string(a.nvars()) + " vs " + std::to_string(b.nvars()) +
                           " variables");
    }
}

std::string monomial_str(Monomial m, int nvars)
{
    std::string out;
    for (int i = 0; i < nvars; ++i) {
        const int e = m.exponent(i);
        if (e == 0) continue;
        if (!out.empty()) out += '*';
        out += 'd';
        out += std::to_string(i + 1);
        if (e > 1) {
            out += '^';
            out += std::to_string(e);
        }
    }
    return out;
}

}  // namespace

Poly::Poly(int nvars) : nvars_(nvars) { check_ring(nvars); }

Poly::Poly(int nvars, const Rational& constant) : nvars_(nvars)
{
    check_ring(nvars);
    if (!constant.is_zero()) terms_.emplace_back(Monomial(), constant);
}

Poly::Poly(int nvars, std::vector<Term> terms) : nvars_(nvars)
{
    check_ring(nvars);
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return Monomial::compare(a.first, b.first) > 0; });
    for (auto& t : terms) {
        if (!terms_.empty() && terms_.back().first == t.first) {
            terms_.back().second += t.second;
            if (terms_.back().second.is_zero()) terms_.pop_back();
        } else if (!t.second.is_zero()) {
            terms_.push_back(std::move(t));
        }
    }
}

Poly Poly::variable(int nvars, int index)
{
    if (index < 0 || index >= nvars) throw std::invalid_argument("variable index out of range");
    return monomial(nvars, Monomial::variable(index));
}

Poly Poly::monomial(int nvars, Monomial m, const Rational& c)
{
    Poly p(nvars);
    if (!c.is_zero()) p.terms_.emplace_back(m, c);
    return p;
}

int Poly::degree() const noexcept
{
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, t.first.degree());
    return d;
}

int Poly::min_degree() const noexcept
{
    if (terms_.empty()) return -1;
    return terms_.back().first.degree();
}

bool Poly::is_homogeneous() const noexcept
{
    return terms_.empty() || terms_.front().first.degree() == terms_.back().first.degree();
}

bool Poly::is_constant() const noexcept { return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_one()); }

Rational Poly::coefficient(Monomial m) const
{
    for (const auto& t : terms_) {
        if (t.first == m) return t.second;
    }
    return Rational(0);
}

Poly Poly::homogeneous_part(int degree) const
{
    Poly p(nvars_);
    for (const auto& t : terms_) {
        if (t.first.degree() == degree) p.terms_.push_back(t);
    }
    return p;
}

std::string Poly::str() const
{
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        const bool negative = c.sign() < 0;
        if (first) {
            if (negative) out += '-';
        } else {
            out += negative ? " - " : " + ";
        }
        first = false;
        const Rational mag = negative ? -c : c;
        if (m.is_one()) {
            out += mag.str();
            continue;
        }
        if (!mag.is_one()) {
            out += mag.str();
            out += '*';
        }
        out += monomial_str(m, nvars_);
    }
    return out;
}

Poly operator+(const Poly& a, const Poly& b)
{
    same_ring(a, b);
    Poly r(a.nvars_);
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    size_t i = 0;
    size_t j = 0;
    while (i < a.terms_.size() || j < b.terms_.size()) {
        int c;
        if (i == a.terms_.size()) {
            c = -1;
        } else if (j == b.terms_.size()) {
            c = 1;
        } else {
            c = Monomial::compare(a.terms_[i].first, b.terms_[j].first);
        }
        if (c > 0) {
            r.terms_.push_back(a.terms_[i++]);
        } else if (c < 0) {
            r.terms_.push_back(b.terms_[j++]);
        } else {
            Rational s = a.terms_[i].second + b.terms_[j].second;
            if (!s.is_zero()) r.terms_.emplace_back(a.terms_[i].first, std::move(s));
            ++i;
            ++j;
        }
    }
    return r;
}

Poly operator-(const Poly& a)
{
    Poly r(a.nvars_);
    r.terms_.reserve(a.terms_.size());
    for (const auto& [m, c] : a.terms_) r.terms_.emplace_back(m, -c);
    return r;
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Rational& c, const Poly& a)
{
    Poly r(a.nvars_);
    if (c.is_zero()) return r;
    r.terms_.reserve(a.terms_.size());
    for (const auto& [m, x] : a.terms_) r.terms_.emplace_back(m, c * x);
    return r;
}

Poly operator*(const Poly& a, const Poly& b)
{
    same_ring(a, b);
    if (a.is_zero() || b.is_zero()) return Poly(a.nvars_);
    if (a.terms_.size() == 1 && a.terms_[0].first.is_one()) return a.terms_[0].second * b;
    if (b.terms_.size() == 1 && b.terms_[0].first.is_one()) return b.terms_[0].second * a;
    std::unordered_map<uint64_t, Rational> acc;
    acc.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            auto [it, inserted] = acc.try_emplace((ma * mb).word());
            it->second += ca * cb;
        }
    }
    std::vector<Poly::Term> terms;
    terms.reserve(acc.size());
    for (auto& [w, c] : acc) {
        if (c.is_zero()) continue;
        terms.emplace_back(Monomial::from_word(w), std::move(c));
    }
    return Poly(a.nvars_, std::move(terms));
}

Rational Poly::evaluate(std::span<const Rational> point) const
{
    if (point.size() != static_cast<size_t>(nvars_)) {
        throw std::invalid_argument("evaluation point has " + std::to_string(point.size()) + " coordinates, ring has " +
                                    std::to_string(nvars_));
    }
    Rational sum;
    for (const auto& [m, c] : terms_) {
        Rational v = c;
        for (int i = 0; i < nvars_ && !v.is_zero(); ++i) {
            for (int e = m.exponent(i); e > 0; --e) v *= point[static_cast<size_t>(i)];
        }
        sum += v;
    }
    return sum;
}

Poly Poly::negate_vars() const
{
    Poly r(nvars_);
    r.terms_.reserve(terms_.size());
    for (const auto& [m, c] : terms_) r.terms_.emplace_back(m, (m.degree() % 2 == 1) ? -c : c);
    return r;
}

Poly poly_arith(const Poly& a, const Poly& b, ArithKind kind, const Rational& factor)
{
    switch (kind) {
    case ArithKind::Add:
        return a + b;
    case ArithKind::Sub:
        return a - b;
    case ArithKind::Mul:
        return a * b;
    case ArithKind::Scale:
        return factor * a;
    }
    throw std::logic_error("unknown arithmetic kind");
}

Poly exact_divide(const Poly& a, const Poly& b)
{
    same_ring(a, b);
    if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
    const auto& [lb, cb] = b.leading();
    const Rational inv = cb.inverse();
    Poly r = a;
    std::vector<Poly::Term> q;
    while (!r.is_zero()) {
        const auto& [lr, cr] = r.leading();
        if (!lb.divides(lr)) throw std::domain_error("polynomial division is not exact");
        const Monomial t = lr / lb;
        const Rational c = cr * inv;
        q.emplace_back(t, c);
        r = r - Poly::monomial(a.nvars(), t, c) * b;
    }
    return Poly(a.nvars(), std::move(q));
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.str(); }

// ---------------------------------------------------------------------------
// Parser

namespace {

class Parser {
public:
    Parser(std::string_view text, int nvars) : text_(text), nvars_(nvars) {}

    Poly run()
    {
        skip_ws();
        if (pos_ == text_.size()) throw ParseError("empty expression", pos_);
        Poly p = expr();
        skip_ws();
        if (pos_ != text_.size()) throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
        return p;
    }

private:
    void skip_ws()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])) != 0) ++pos_;
    }

    bool accept(char c)
    {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Poly expr()
    {
        Poly acc = term();
        for (;;) {
            if (accept('+')) {
                acc = acc + term();
            } else if (accept('-')) {
                acc = acc - term();
            } else {
                return acc;
            }
        }
    }

    Poly term()
    {
        Poly acc = unary();
        for (;;) {
            if (accept('*')) {
                acc = acc * unary();
            } else if (accept('/')) {
                const size_t at = pos_;
                Poly d = unary();
                if (!d.is_constant() || d.is_zero()) throw ParseError("division by a non-constant or zero", at);
                acc = d.leading().second.inverse() * acc;
            } else {
                return acc;
            }
        }
    }

    Poly unary()
    {
        if (accept('-')) return -unary();
        if (accept('+')) return unary();
        return power();
    }

    Poly power()
    {
        Poly base = atom();
        if (!accept('^')) return base;
        skip_ws();
        const size_t at = pos_;
        const std::string digits = read_digits();
        if (digits.empty()) throw ParseError("expected exponent", at);
        if (digits.size() > 3) throw ParseError("exponent too large", at);
        const int e = std::stoi(digits);
        Poly r(nvars_, Rational(1));
        for (int i = 0; i < e; ++i) r = r * base;
        return r;
    }

    Poly atom()
    {
        skip_ws();
        if (pos_ == text_.size()) throw ParseError("unexpected end of input", pos_);
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            Poly p = expr();
            if (!accept(')')) throw ParseError("expected ')'", pos_);
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) != 0) {
            return Poly(nvars_, Rational(Int(read_digits())));
        }
        if (c == 'd') {
            const size_t at = pos_;
            ++pos_;
            const std::string digits = read_digits();
            if (digits.empty()) throw ParseError("expected variable index after 'd'", at);
            if (digits.size() > 3) throw ParseError("variable index out of range", at);
            const int idx = std::stoi(digits);
            if (idx < 1 || idx > nvars_) {
                throw ParseError("variable d" + digits + " exceeds ring with " + std::to_string(nvars_) +
                                     " variables",
                                 at);
            }
            return Poly::variable(nvars_, idx - 1);
        }
        throw ParseError(std::string("unexpected '") + c + "'", pos_);
    }

    std::string read_digits()
    {
        const size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])) != 0) ++pos_;
        return std::string(text_.substr(start, pos_ - start));
    }

    std::string_view text_;
    int nvars_;
    size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(std::string_view text, int nvars)
{
    check_ring(nvars);
    return Parser(text, nvars).run();
}

}  // namespace dgcalc
