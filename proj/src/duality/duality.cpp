#include "dgcalc/duality.hpp"

#include "module/linalg.hpp"

#include <map>

namespace dgcalc {

namespace {

bool all_zero(const std::vector<FreeElem>& rows)
{
    for (const auto& r : rows) {
        if (!r.is_zero()) return false;
    }
    return true;
}

bool equal_modules(const std::vector<FreeElem>& a, const std::vector<FreeElem>& b, const EngineOptions& opts)
{
    if (all_zero(a) || all_zero(b)) return all_zero(a) && all_zero(b);
    return module_equal(a, b, opts);
}

/// Rows of the transposed matrix; `width` is the column count of `rows`.
std::vector<FreeElem> transpose(const std::vector<FreeElem>& rows, int nvars, int width)
{
    const auto k = static_cast<int>(rows.size());
    std::vector<FreeElem> out;
    for (int j = 0; j < width; ++j) {
        std::vector<Poly> e;
        for (int i = 0; i < k; ++i) e.push_back(rows[static_cast<size_t>(i)][static_cast<size_t>(j)]);
        out.push_back(k == 0 ? FreeElem(nvars, 0) : FreeElem(std::move(e)));
    }
    return out;
}

std::vector<FreeElem> units(int nvars, int width)
{
    std::vector<FreeElem> out;
    for (int i = 0; i < width; ++i) out.push_back(FreeElem::unit(nvars, width, i));
    return out;
}

std::vector<FreeElem> duplicated(const std::vector<FreeElem>& rows)
{
    std::vector<FreeElem> out;
    for (const auto& r : rows) {
        out.push_back(r);
        out.push_back(r);
    }
    return out;
}

std::vector<TorsionGenerator> residues_with_witnesses(const std::vector<FreeElem>& base,
                                                      const std::vector<FreeElem>& extended,
                                                      const DualityOptions& opts)
{
    std::vector<TorsionGenerator> out;
    if (extended.empty()) return out;
    std::vector<FreeElem> extra = base.empty() ? minimize_generators(extended, opts.engine)
                                               : minimize_relative(base, extended, opts.engine);
    for (auto& r : extra) {
        TorsionGenerator t;
        t.order = r.degree();
        t.annihilator = torsion_witness(base, r, opts.witness_degree, opts.engine);
        t.residue = std::move(r);
        out.push_back(std::move(t));
    }
    return out;
}

}  // namespace

Poly torsion_witness(const std::vector<FreeElem>& rows, const FreeElem& residue, int max_degree,
                     const EngineOptions& opts)
{
    const int n = residue.nvars();
    const int width = residue.width();
    if (all_zero(rows)) throw WitnessNotFound("a free module has no torsion");
    const GroebnerBasis gb = reduced_groebner(rows, width, {}, opts);
    const detail::TermOrder plain;

    // Incremental elimination over the normal forms NF(m * residue), tracking combinations.
    struct Pivot {
        std::map<detail::Key, Rational, std::greater<>> vec;
        std::map<int, Rational> combo;
    };
    std::map<detail::Key, Pivot, std::greater<>> pivots;
    std::vector<Monomial> monos;
    for (int deg = 0; deg <= max_degree; ++deg) {
        for (const Monomial& m : detail::monomials_of_degree(n, deg)) {
            const int id = static_cast<int>(monos.size());
            monos.push_back(m);
            const Poly mp(n, std::vector<Poly::Term>{{m, Rational(1)}});
            const FreeElem nf = normal_form(mp * residue, gb);
            Pivot cur;
            for (const auto& [k, v] : detail::to_sparse(nf, plain)) cur.vec.emplace(k, v);
            cur.combo.emplace(id, Rational(1));
            while (!cur.vec.empty()) {
                const auto lead = cur.vec.begin();
                const auto it = pivots.find(lead->first);
                if (it == pivots.end()) break;
                const Rational f = lead->second;
                for (const auto& [k, v] : it->second.vec) {
                    Rational& slot = cur.vec[k];
                    slot -= f * v;
                    if (slot.is_zero()) cur.vec.erase(k);
                }
                for (const auto& [k, v] : it->second.combo) {
                    Rational& slot = cur.combo[k];
                    slot -= f * v;
                    if (slot.is_zero()) cur.combo.erase(k);
                }
            }
            if (cur.vec.empty()) {
                std::vector<Poly::Term> terms;
                for (const auto& [k, v] : cur.combo) terms.emplace_back(monos[static_cast<size_t>(k)], v);
                Poly a(n, std::move(terms));
                // Clear denominators and make the leading coefficient positive.
                FreeElem prim = FreeElem(std::vector<Poly>{a}).primitive();
                return prim[0];
            }
            const Rational inv = cur.vec.begin()->second.inverse();
            for (auto& [k, v] : cur.vec) v *= inv;
            for (auto& [k, v] : cur.combo) v *= inv;
            const detail::Key key = cur.vec.begin()->first;
            pivots.emplace(key, std::move(cur));
        }
    }
    throw WitnessNotFound("no annihilator of degree <= " + std::to_string(max_degree) + " for " + residue.str());
}

ParamReport param_test(const LinDiffOp& d1, const DualityOptions& opts)
{
    ParamReport r;
    r.input = d1;
    const LinDiffOp ad1 = adjoint(d1);
    r.adjoint_cc = cc(ad1, opts.engine);
    r.parametrization = adjoint(r.adjoint_cc).renamed("parametrization(" + d1.name() + ")");
    r.recomputed_cc = cc(r.parametrization, opts.engine);
    if (r.parametrization.ncols() == 0) {
        // No potentials: every row of the source is a compatibility condition.
        r.recomputed_cc = LinDiffOp(r.recomputed_cc.name(), d1.nvars(), d1.source(),
                                    Bundle::numbered("cc", "z", d1.ncols()), units(d1.nvars(), d1.ncols()));
    }
    r.parametrizable = equal_modules(d1.rows(), r.recomputed_cc.rows(), opts.engine);
    if (!r.parametrizable) r.torsion = residues_with_witnesses(d1.rows(), r.recomputed_cc.rows(), opts);
    r.ext1_zero = ext_module(d1, 1, opts).is_zero;
    r.ext2_zero = ext_module(d1, 2, opts).is_zero;
    return r;
}

std::vector<TorsionGenerator> torsion_generators(const LinDiffOp& d1, const DualityOptions& opts)
{
    const LinDiffOp adcc = cc(adjoint(d1), opts.engine);
    const LinDiffOp p = adjoint(adcc);
    std::vector<FreeElem> d1p = p.ncols() == 0 ? units(d1.nvars(), d1.ncols()) : cc(p, opts.engine).rows();
    if (equal_modules(d1.rows(), d1p, opts.engine)) return {};
    return residues_with_witnesses(d1.rows(), d1p, opts);
}

ExtReport ext_module(const LinDiffOp& a, int i, const DualityOptions& opts, bool redundant)
{
    if (i < 0) throw std::invalid_argument("ext index must be non-negative");
    if (i > a.nvars()) throw std::invalid_argument("ext index exceeds the number of variables");
    const int n = a.nvars();
    const LinDiffOp ad = adjoint(a);

    // maps[k-1] = d_k : F_k -> F_{k-1}, as rows of width dims[k-1].
    std::vector<int> dims{ad.ncols()};
    std::vector<std::vector<FreeElem>> maps;
    std::vector<FreeElem> cur = ad.rows();
    for (int k = 1; k <= i + 1; ++k) {
        if (redundant) cur = duplicated(cur);
        dims.push_back(static_cast<int>(cur.size()));
        maps.push_back(cur);
        if (k == i + 1) break;
        if (!cur.empty()) cur = syzygies(cur, opts.engine);
    }

    ExtReport r;
    r.index = i;
    const int wi = dims[static_cast<size_t>(i)];
    if (wi == 0) {
        r.is_zero = true;
        return r;
    }
    const auto& next = maps[static_cast<size_t>(i)];  // d_{i+1}
    std::vector<FreeElem> ker;
    if (next.empty()) {
        ker = units(n, wi);
    } else {
        ker = syzygies(transpose(next, n, wi), opts.engine);
    }
    std::vector<FreeElem> im;
    if (i >= 1) {
        const auto& prev = maps[static_cast<size_t>(i - 1)];  // d_i
        for (auto& row : transpose(prev, n, dims[static_cast<size_t>(i - 1)])) {
            if (!row.is_zero()) im.push_back(std::move(row));
        }
    }
    if (ker.empty()) {
        r.is_zero = true;
        return r;
    }
    if (im.empty()) {
        r.is_zero = false;
    } else {
        r.is_zero = true;
        const GroebnerBasis gb = reduced_groebner(im, wi, {}, opts.engine);
        for (const auto& k : ker) {
            if (!normal_form(k, gb).is_zero()) {
                r.is_zero = false;
                break;
            }
        }
    }
    r.rank = fraction_rank_gb(ker, wi, opts.engine) - (im.empty() ? 0 : fraction_rank_gb(im, wi, opts.engine));
    if (i >= 1 && !r.is_zero) {
        const auto nk = static_cast<int>(ker.size());
        std::vector<FreeElem> stacked = ker;
        stacked.insert(stacked.end(), im.begin(), im.end());
        std::vector<FreeElem> pres;
        for (const auto& s : syzygies(stacked, opts.engine)) {
            std::vector<Poly> head(s.entries().begin(), s.entries().begin() + nk);
            FreeElem h(std::move(head));
            if (!h.is_zero()) pres.push_back(std::move(h));
        }
        r.presentation = pres.empty() ? pres : minimize_generators(pres, opts.engine);
        r.presentation_width = nk;
    }
    return r;
}

int module_rank(const LinDiffOp& d1)
{
    if (d1.nrows() == 0) return d1.ncols();
    return d1.ncols() - fraction_rank(d1.rows(), d1.ncols());
}

LinDiffOp minimal_parametrization(const LinDiffOp& d1, const DualityOptions& opts)
{
    const ParamReport rep = param_test(d1, opts);
    if (!rep.parametrizable) throw NotParametrizable(d1.name() + " has torsion; no parametrization exists");
    const LinDiffOp& p = rep.parametrization;
    const int k = p.ncols();
    const int rk = module_rank(d1);
    if (rk > k) throw NoMinimalSubsetFound("parametrization has fewer potentials than the module rank");
    long long count = 1;
    for (int j = 1; j <= rk; ++j) {
        count = count * (k - rk + j) / j;
        if (count > opts.subset_cap) {
            throw NoMinimalSubsetFound("more than " + std::to_string(opts.subset_cap) + " column subsets to try");
        }
    }
    std::vector<int> s(static_cast<size_t>(rk));
    for (int j = 0; j < rk; ++j) s[static_cast<size_t>(j)] = j;
    while (true) {
        const LinDiffOp q = p.columns(s);
        if (equal_modules(cc(q, opts.engine).rows(), d1.rows(), opts.engine)) {
            return q.renamed("minimal_parametrization(" + d1.name() + ")");
        }
        // Next subset in lexicographic order.
        int j = rk - 1;
        while (j >= 0 && s[static_cast<size_t>(j)] == k - rk + j) --j;
        if (j < 0) break;
        ++s[static_cast<size_t>(j)];
        for (int t = j + 1; t < rk; ++t) s[static_cast<size_t>(t)] = s[static_cast<size_t>(t - 1)] + 1;
    }
    throw NoMinimalSubsetFound("no column subset of size " + std::to_string(rk) + " parametrizes " + d1.name());
}

}  // namespace dgcalc
