#include "dgcalc/monomial.hpp"

#include <algorithm>

namespace dgcalc {

Monomial Monomial::from_exponents(std::span<const int> exps)
{
    if (exps.size() > static_cast<size_t>(kMaxVars)) throw std::invalid_argument("at most 7 variables supported");
    uint64_t w = 0;
    int deg = 0;
    for (size_t i = 0; i < exps.size(); ++i) {
        if (exps[i] < 0 || exps[i] > kMaxExponent) throw std::overflow_error("monomial exponent out of range");
        w |= static_cast<uint64_t>(exps[i]) << (8 * i);
        deg += exps[i];
    }
    if (deg > kMaxExponent) throw std::overflow_error("monomial degree exceeds 127");
    return Monomial(w | (static_cast<uint64_t>(deg) << 56));
}

Monomial Monomial::variable(int index)
{
    if (index < 0 || index >= kMaxVars) throw std::invalid_argument("variable index out of range");
    return Monomial((uint64_t{1} << (8 * index)) | (uint64_t{1} << 56));
}

std::vector<int> Monomial::exponents(int nvars) const
{
    std::vector<int> e(static_cast<size_t>(nvars));
    for (int i = 0; i < nvars; ++i) e[static_cast<size_t>(i)] = exponent(i);
    return e;
}

Monomial Monomial::lcm(Monomial a, Monomial b) noexcept
{
    uint64_t w = 0;
    uint64_t deg = 0;
    for (int i = 0; i < kMaxVars; ++i) {
        const uint64_t ea = (a.word_ >> (8 * i)) & 0xffU;
        const uint64_t eb = (b.word_ >> (8 * i)) & 0xffU;
        const uint64_t e = std::max(ea, eb);
        w |= e << (8 * i);
        deg += e;
    }
    return Monomial(w | (deg << 56));
}

bool Monomial::coprime(Monomial a, Monomial b) noexcept
{
    for (int i = 0; i < kMaxVars; ++i) {
        if (((a.word_ >> (8 * i)) & 0xffU) != 0 && ((b.word_ >> (8 * i)) & 0xffU) != 0) return false;
    }
    return true;
}

}  // namespace dgcalc
