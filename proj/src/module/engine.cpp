#include "engine.hpp"

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace dgcalc::detail {

namespace {

const TermOrder& plain_order()
{
    static const TermOrder ord;
    return ord;
}

constexpr int kNormalizeEvery = 8;

}  // namespace

IVec axpy(const Int& beta, const IVec& h, const Int& alpha, Monomial mult, const IVec& g, const TermOrder& ord)
{
    IVec out;
    out.reserve(h.size() + g.size());
    const bool beta_one = beta.is_one();
    size_t i = 0;
    size_t j = 0;
    while (i < h.size() || j < g.size()) {
        int c;
        Monomial gm;
        if (j < g.size()) gm = g[j].m * mult;
        if (i == h.size()) {
            c = -1;
        } else if (j == g.size()) {
            c = 1;
        } else {
            c = ord.compare(h[i].m, h[i].pos, gm, g[j].pos);
        }
        if (c > 0) {
            out.push_back(Term{h[i].m, h[i].pos, beta_one ? h[i].c : beta * h[i].c});
            ++i;
        } else if (c < 0) {
            out.push_back(Term{gm, g[j].pos, -(alpha * g[j].c)});
            ++j;
        } else {
            Int v = (beta_one ? h[i].c : beta * h[i].c) - alpha * g[j].c;
            if (!v.is_zero()) out.push_back(Term{h[i].m, h[i].pos, std::move(v)});
            ++i;
            ++j;
        }
    }
    return out;
}

Int content(const IVec& v)
{
    Int g(0);
    for (const auto& t : v) {
        g = gcd(g, t.c);
        if (g.is_one()) break;
    }
    return g;
}

void divide_exact(IVec& v, const Int& c)
{
    for (auto& t : v) t.c = divexact(t.c, c);
}

IVec scale(const IVec& v, const Int& c)
{
    IVec out;
    if (c.is_zero()) return out;
    out.reserve(v.size());
    for (const auto& t : v) out.push_back(Term{t.m, t.pos, t.c * c});
    return out;
}

IVec shifted(const IVec& v, Monomial mult)
{
    IVec out;
    out.reserve(v.size());
    for (const auto& t : v) out.push_back(Term{t.m * mult, t.pos, t.c});
    return out;
}

void sort_terms(IVec& v, const TermOrder& ord)
{
    std::sort(v.begin(), v.end(),
              [&](const Term& a, const Term& b) { return ord.key(a.m, a.pos) > ord.key(b.m, b.pos); });
}

int max_wdeg(const IVec& v, const TermOrder& ord)
{
    int d = -1;
    for (const auto& t : v) d = std::max(d, ord.wdeg(t.m, t.pos));
    return d;
}

IVec to_ivec(const FreeElem& e, const TermOrder& ord, Int* num, Int* den)
{
    // Common denominator L and content g of L*e give v = (L/g) * e.
    mpz_class l = 1;
    for (const auto& p : e.entries()) {
        for (const auto& [m, c] : p.terms()) {
            if (!c.den().is_one()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.den().to_mpz().get_mpz_t());
        }
    }
    const Int lcm_den(l);
    IVec v;
    for (size_t pos = 0; pos < e.entries().size(); ++pos) {
        for (const auto& [m, c] : e.entries()[pos].terms()) {
            v.push_back(Term{m, static_cast<uint32_t>(pos), c.num() * divexact(lcm_den, c.den())});
        }
    }
    Int g = content(v);
    if (g.is_zero()) g = Int(1);
    divide_exact(v, g);
    sort_terms(v, ord);
    if (num != nullptr) *num = lcm_den;
    if (den != nullptr) *den = g;
    return v;
}

FreeElem to_free(const IVec& v, int nvars, int width, const Rational& scale)
{
    std::vector<std::vector<Poly::Term>> cols(static_cast<size_t>(width));
    for (const auto& t : v) cols[t.pos].emplace_back(t.m, scale * Rational(t.c));
    std::vector<Poly> entries;
    entries.reserve(static_cast<size_t>(width));
    for (auto& c : cols) entries.emplace_back(nvars, std::move(c));
    if (width == 0) return FreeElem(nvars, 0);
    return FreeElem(std::move(entries));
}

// ---------------------------------------------------------------------------

Engine::Engine(int nvars, int width, TermOrder order, const EngineOptions& opts, bool track)
    : nvars_(nvars),
      width_(width),
      ord_(std::move(order)),
      opts_(opts),
      max_degree_(effective_max_degree(opts)),
      track_(track),
      by_pos_(static_cast<size_t>(width))
{
}

int Engine::find_reducer(Monomial m, uint32_t pos, size_t limit) const
{
    int best = -1;
    size_t best_len = 0;
    for (const int idx : by_pos_[pos]) {
        if (static_cast<size_t>(idx) >= limit) continue;
        const Elem& g = elems_[static_cast<size_t>(idx)];
        if (!g.v[0].m.divides(m)) continue;
        if (best < 0 || g.v.size() < best_len) {
            best = idx;
            best_len = g.v.size();
        }
    }
    return best;
}

void Engine::normalize(Elem& e) const
{
    if (e.v.empty()) return;
    const Int c = content(e.v);
    if (!c.is_one()) {
        divide_exact(e.v, c);
        if (track_) e.den *= c;
    }
    if (e.v[0].c.sign() < 0) {
        for (auto& t : e.v) t.c = -t.c;
        for (auto& t : e.t) t.c = -t.c;
    }
    if (track_ && !e.den.is_one()) {
        const Int g = gcd(content(e.t), e.den);
        if (!g.is_one() && !g.is_zero()) {
            divide_exact(e.t, g);
            e.den = divexact(e.den, g);
        }
    }
}

void Engine::reduce(Elem& e, size_t limit, bool tail, bool skip_lead) const
{
    size_t i = skip_lead ? 1 : 0;
    int steps = 0;
    while (i < e.v.size()) {
        if (!tail && i > 0) break;
        const int r = find_reducer(e.v[i].m, e.v[i].pos, limit);
        if (r < 0) {
            ++i;
            continue;
        }
        const Elem& g = elems_[static_cast<size_t>(r)];
        Int a = e.v[i].c;
        Int b = g.v[0].c;
        const Int gg = gcd(a, b);
        a = divexact(a, gg);
        b = divexact(b, gg);
        if (b.sign() < 0) {
            a = -a;
            b = -b;
        }
        const Monomial mult = e.v[i].m / g.v[0].m;
        e.v = axpy(b, e.v, a, mult, g.v, ord_);
        if (track_) {
            const Int l = divexact(e.den * g.den, gcd(e.den, g.den));
            const Int fh = divexact(l, e.den);
            const Int fg = divexact(l, g.den);
            e.t = axpy(b * fh, e.t, a * fg, mult, g.t, plain_order());
            e.den = l;
        }
        e.sugar = std::max(e.sugar, g.sugar + mult.degree());
        if (++steps % kNormalizeEvery == 0) normalize(e);
    }
    normalize(e);
}

Elem Engine::make_spair(const Pair& p) const
{
    Elem e;
    if (p.i < 0) {
        const auto k = static_cast<size_t>(p.j);
        e.v = inputs_[k];
        if (track_) e.t.push_back(Term{Monomial(), static_cast<uint32_t>(k), Int(1)});
        e.sugar = p.sugar;
        return e;
    }
    const Elem& gi = elems_[static_cast<size_t>(p.i)];
    const Elem& gj = elems_[static_cast<size_t>(p.j)];
    const Monomial mi = p.lcm / gi.v[0].m;
    const Monomial mj = p.lcm / gj.v[0].m;
    const Int gg = gcd(gi.v[0].c, gj.v[0].c);
    const Int bi = divexact(gj.v[0].c, gg);
    const Int aj = divexact(gi.v[0].c, gg);
    e.v = axpy(bi, shifted(gi.v, mi), aj, mj, gj.v, ord_);
    if (track_) {
        const Int l = divexact(gi.den * gj.den, gcd(gi.den, gj.den));
        e.t = axpy(bi * divexact(l, gi.den), shifted(gi.t, mi), aj * divexact(l, gj.den), mj, gj.t, plain_order());
        e.den = l;
    }
    e.sugar = p.sugar;
    return e;
}

void Engine::record_zero(Elem& e)
{
    ++stats_.zero_reductions;
    if (!track_ || e.t.empty()) return;
    const Int c = content(e.t);
    divide_exact(e.t, c);
    if (e.t[0].c.sign() < 0) {
        for (auto& t : e.t) t.c = -t.c;
    }
    zero_rel_.push_back(std::move(e.t));
}

void Engine::insert(Elem e)
{
    const auto r = static_cast<int>(elems_.size());
    const uint32_t pos = e.v[0].pos;
    const Monomial lr = e.v[0].m;

    // Gebauer-Moeller: prune old pairs whose syzygy factors through the new element.
    std::erase_if(pairs_, [&](const Pair& p) {
        if (p.i < 0 || p.pos != pos || !lr.divides(p.lcm)) return false;
        const Monomial li = Monomial::lcm(elems_[static_cast<size_t>(p.i)].v[0].m, lr);
        const Monomial lj = Monomial::lcm(elems_[static_cast<size_t>(p.j)].v[0].m, lr);
        return li != p.lcm && lj != p.lcm;
    });

    std::vector<Pair> fresh;
    for (const int i : by_pos_[pos]) {
        const Elem& g = elems_[static_cast<size_t>(i)];
        Pair p;
        p.i = i;
        p.j = r;
        p.lcm = Monomial::lcm(g.v[0].m, lr);
        p.pos = pos;
        p.sugar = std::max(g.sugar + (p.lcm / g.v[0].m).degree(), e.sugar + (p.lcm / lr).degree());
        fresh.push_back(p);
    }
    // Criterion M: a strictly smaller lcm with the new element covers a pair.
    std::vector<bool> keep(fresh.size(), true);
    for (size_t a = 0; a < fresh.size(); ++a) {
        for (size_t b = 0; b < fresh.size(); ++b) {
            if (a == b) continue;
            if (fresh[b].lcm != fresh[a].lcm && fresh[b].lcm.divides(fresh[a].lcm)) {
                keep[a] = false;
                break;
            }
        }
    }
    // Criterion F: one representative per lcm, the oldest partner.
    for (size_t a = 0; a < fresh.size(); ++a) {
        if (!keep[a]) continue;
        for (size_t b = a + 1; b < fresh.size(); ++b) {
            if (keep[b] && fresh[b].lcm == fresh[a].lcm) keep[b] = false;
        }
    }
    for (size_t a = 0; a < fresh.size(); ++a) {
        if (keep[a]) pairs_.push_back(fresh[a]);
    }

    auto& bucket = by_pos_[pos];
    std::erase_if(bucket, [&](int i) {
        Elem& g = elems_[static_cast<size_t>(i)];
        if (lr.divides(g.v[0].m)) {
            g.redundant = true;
            return true;
        }
        return false;
    });
    bucket.push_back(r);
    elems_.push_back(std::move(e));
}

void Engine::run(std::vector<IVec> inputs)
{
    inputs_ = std::move(inputs);
    for (size_t k = 0; k < inputs_.size(); ++k) {
        Pair p;
        p.j = static_cast<int>(k);
        if (inputs_[k].empty()) {
            p.sugar = 0;
        } else {
            p.lcm = inputs_[k][0].m;
            p.pos = inputs_[k][0].pos;
            p.sugar = max_wdeg(inputs_[k], ord_);
        }
        pairs_.push_back(p);
    }

    while (!pairs_.empty()) {
        int s = pairs_[0].sugar;
        for (const auto& p : pairs_) s = std::min(s, p.sugar);
        std::vector<Pair> batch;
        std::erase_if(pairs_, [&](const Pair& p) {
            if (p.sugar != s) return false;
            batch.push_back(p);
            return true;
        });
        std::sort(batch.begin(), batch.end(), [&](const Pair& a, const Pair& b) {
            const auto ka = ord_.key(a.lcm, a.pos);
            const auto kb = ord_.key(b.lcm, b.pos);
            if (ka != kb) return ka < kb;
            if (a.i != b.i) return a.i < b.i;
            return a.j < b.j;
        });
        for (const auto& p : batch) {
            if (p.i >= 0 && p.lcm.degree() > max_degree_) {
                throw BudgetExceeded("S-pair of degree " + std::to_string(p.lcm.degree()) +
                                     " exceeds the degree budget " + std::to_string(max_degree_));
            }
        }
        ++stats_.batches;
        stats_.pairs_reduced += batch.size();

        const size_t snapshot = elems_.size();
        std::vector<Elem> results(batch.size());
        const auto nb = static_cast<int64_t>(batch.size());
        if (opts_.serial || nb < 2) {
            for (int64_t k = 0; k < nb; ++k) {
                results[static_cast<size_t>(k)] = make_spair(batch[static_cast<size_t>(k)]);
                reduce(results[static_cast<size_t>(k)], snapshot, true);
            }
        } else {
            std::exception_ptr failure;
#ifdef _OPENMP
            const int nthreads = opts_.threads > 0 ? opts_.threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 1) num_threads(nthreads)
#endif
            for (int64_t k = 0; k < nb; ++k) {
                try {
                    results[static_cast<size_t>(k)] = make_spair(batch[static_cast<size_t>(k)]);
                    reduce(results[static_cast<size_t>(k)], snapshot, true);
                } catch (...) {
#ifdef _OPENMP
#pragma omp critical(dgcalc_engine_failure)
#endif
                    if (!failure) failure = std::current_exception();
                }
            }
            if (failure) std::rethrow_exception(failure);
        }

        for (auto& e : results) {
            if (!e.v.empty() && elems_.size() > snapshot) reduce(e, elems_.size(), true);
            if (e.v.empty()) {
                record_zero(e);
            } else {
                insert(std::move(e));
            }
        }
    }
}

std::vector<int> Engine::minimal_basis() const
{
    std::vector<int> out;
    for (size_t i = 0; i < elems_.size(); ++i) {
        if (!elems_[i].redundant) out.push_back(static_cast<int>(i));
    }
    std::sort(out.begin(), out.end(), [&](int a, int b) {
        const auto& ea = elems_[static_cast<size_t>(a)].v[0];
        const auto& eb = elems_[static_cast<size_t>(b)].v[0];
        return ord_.key(ea.m, ea.pos) < ord_.key(eb.m, eb.pos);
    });
    return out;
}

std::vector<int> Engine::reduce_basis()
{
    const std::vector<int> basis = minimal_basis();
    for (const int idx : basis) {
        Elem e = elems_[static_cast<size_t>(idx)];
        reduce(e, elems_.size(), true, true);
        elems_[static_cast<size_t>(idx)] = std::move(e);
    }
    return basis;
}

// ---------------------------------------------------------------------------

Division divide(const IVec& v, const GbData& gb, bool want_quotients)
{
    // Invariant: big_s * v = sigma * r + sum q_k b_k.
    Division out;
    IVec r = v;
    Int big_s(1);
    Int sigma(1);
    IVec q;
    size_t i = 0;
    int steps = 0;
    while (i < r.size()) {
        int best = -1;
        size_t best_len = 0;
        for (const int k : gb.by_pos[r[i].pos]) {
            const IVec& b = gb.basis[static_cast<size_t>(k)];
            if (b[0].m.divides(r[i].m) && (best < 0 || b.size() < best_len)) {
                best = k;
                best_len = b.size();
            }
        }
        if (best < 0) {
            ++i;
            continue;
        }
        const IVec& b = gb.basis[static_cast<size_t>(best)];
        Int a = r[i].c;
        Int c = b[0].c;
        const Int gg = gcd(a, c);
        a = divexact(a, gg);
        c = divexact(c, gg);
        if (c.sign() < 0) {
            a = -a;
            c = -c;
        }
        const Monomial mult = r[i].m / b[0].m;
        // r <- c*r - a*mult*b, so big_s*c*v = sigma*(c*r_old) + c*q = sigma*r_new + sigma*a*mult*b + c*q.
        r = axpy(c, r, a, mult, b, gb.order);
        big_s *= c;
        if (want_quotients) {
            IVec unit{Term{Monomial(), static_cast<uint32_t>(best), Int(1)}};
            q = axpy(c, q, -(sigma * a), mult, unit, plain_order());
        }
        if (++steps % kNormalizeEvery == 0 && !r.empty()) {
            const Int g = content(r);
            if (!g.is_one()) {
                divide_exact(r, g);
                sigma *= g;
            }
        }
    }
    out.remainder = std::move(r);
    out.rem_scale = Rational(sigma, big_s);
    out.quotients = std::move(q);
    out.quot_den = big_s;
    return out;
}

}  // namespace dgcalc::detail
