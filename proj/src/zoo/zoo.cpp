#include "dgcalc/zoo.hpp"

#include "module/linalg.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace dgcalc::zoo {

namespace {

Poly d(int n, int i) { return Poly::variable(n, i); }

Poly c(int n, const Rational& v) { return Poly(n, v); }

/// Mutable matrix used while assembling generators.
struct Mat {
    int n;
    std::vector<std::vector<Poly>> a;
    Mat(int nvars, int rows, int cols)
        : n(nvars), a(static_cast<size_t>(rows), std::vector<Poly>(static_cast<size_t>(cols), Poly(nvars)))
    {
    }
    Poly& operator()(int i, int j) { return a[static_cast<size_t>(i)][static_cast<size_t>(j)]; }
    std::vector<FreeElem> rows() const
    {
        std::vector<FreeElem> out;
        for (const auto& r : a) out.emplace_back(r);
        return out;
    }
};

std::string sym_label(const std::string& prefix, int i, int j)
{
    return prefix + std::to_string(i + 1) + std::to_string(j + 1);
}

void require_n(int n, int lo, const std::string& what)
{
    if (n < lo) throw std::invalid_argument(what + " needs n >= " + std::to_string(lo));
    if (n > Monomial::kMaxVars) throw std::invalid_argument(what + " supports at most 7 variables");
}

/// Linearized curvature R_{kl,ij} up to the factor -2, as a row on the symmetric components.
FreeElem curvature(const Metric& w, int k, int l, int i, int j)
{
    const int n = w.n();
    std::vector<Poly> e(static_cast<size_t>(sym_pairs(n).size()), Poly(n));
    auto put = [&](int a, int b, const Poly& p) { e[static_cast<size_t>(sym_index(n, a, b))] += p; };
    put(l, j, d(n, k) * d(n, i));
    put(k, i, d(n, l) * d(n, j));
    put(k, j, -(d(n, l) * d(n, i)));
    put(l, i, -(d(n, k) * d(n, j)));
    return FreeElem(std::move(e));
}

std::string describe_rational_matrix(const std::vector<std::vector<Rational>>& g)
{
    std::ostringstream os;
    bool diag = true;
    for (size_t i = 0; i < g.size(); ++i) {
        for (size_t j = 0; j < g.size(); ++j) {
            if (i != j && !g[i][j].is_zero()) diag = false;
        }
    }
    if (diag) {
        os << "diag(";
        for (size_t i = 0; i < g.size(); ++i) os << (i ? "," : "") << g[i][i];
        os << ")";
        return os.str();
    }
    os << "[";
    for (size_t i = 0; i < g.size(); ++i) {
        os << (i ? ";" : "");
        for (size_t j = 0; j < g.size(); ++j) os << (j ? "," : "") << g[i][j];
    }
    os << "]";
    return os.str();
}

}  // namespace

// ---------------------------------------------------------------------------
// Metrics and bases

Metric::Metric(std::vector<std::vector<Rational>> entries) : g_(std::move(entries))
{
    const size_t n = g_.size();
    if (n < 1) throw std::invalid_argument("empty metric");
    for (size_t i = 0; i < n; ++i) {
        if (g_[i].size() != n) throw std::invalid_argument("metric must be square");
        for (size_t j = 0; j < n; ++j) {
            if (g_[i][j] != g_[j][i]) throw std::invalid_argument("metric must be symmetric");
        }
    }
    // Gauss-Jordan on [g | I].
    std::vector<std::vector<Rational>> a = g_;
    inv_.assign(n, std::vector<Rational>(n));
    for (size_t i = 0; i < n; ++i) inv_[i][i] = Rational(1);
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && a[piv][col].is_zero()) ++piv;
        if (piv == n) throw std::invalid_argument("metric is degenerate (det = 0)");
        std::swap(a[piv], a[col]);
        std::swap(inv_[piv], inv_[col]);
        const Rational f = a[col][col].inverse();
        for (size_t j = 0; j < n; ++j) {
            a[col][j] *= f;
            inv_[col][j] *= f;
        }
        for (size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col].is_zero()) continue;
            const Rational g = a[r][col];
            for (size_t j = 0; j < n; ++j) {
                a[r][j] -= g * a[col][j];
                inv_[r][j] -= g * inv_[col][j];
            }
        }
    }
}

Metric Metric::diagonal(const std::vector<Rational>& diag)
{
    std::vector<std::vector<Rational>> g(diag.size(), std::vector<Rational>(diag.size()));
    for (size_t i = 0; i < diag.size(); ++i) g[i][i] = diag[i];
    return Metric(std::move(g));
}

std::string Metric::describe() const { return describe_rational_matrix(g_); }

Metric metric(MetricKind kind, int n)
{
    if (n < 2) throw std::invalid_argument("metric needs n >= 2");
    require_n(n, 2, "metric");
    std::vector<Rational> diag(static_cast<size_t>(n), Rational(1));
    if (kind == MetricKind::Minkowski) diag.back() = Rational(-1);
    return Metric::diagonal(diag);
}

MetricKind parse_metric_kind(const std::string& s)
{
    if (s == "euclidean" || s == "euclid" || s == "e") return MetricKind::Euclidean;
    if (s == "minkowski" || s == "mink" || s == "m") return MetricKind::Minkowski;
    throw std::invalid_argument("unknown metric kind '" + s + "'");
}

std::vector<std::pair<int, int>> sym_pairs(int n)
{
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) out.emplace_back(i, j);
    }
    return out;
}

int sym_index(int n, int i, int j)
{
    if (i > j) std::swap(i, j);
    // Rows 0..i-1 contribute n, n-1, ..., n-i+1 entries.
    return i * n - i * (i - 1) / 2 + (j - i);
}

Bundle sym_bundle(const std::string& name, const std::string& prefix, int n)
{
    std::vector<Component> comps;
    for (const auto& [i, j] : sym_pairs(n)) comps.push_back({sym_label(prefix, i, j), Rational(i == j ? 1 : 2)});
    return {name, std::move(comps)};
}

Bundle tangent_bundle(const std::string& name, const std::string& prefix, int n)
{
    return Bundle::numbered(name, prefix, n);
}

std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>> riemann_components(int n)
{
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    }
    std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>> out;
    for (size_t p = 0; p < pairs.size(); ++p) {
        for (size_t q = p; q < pairs.size(); ++q) {
            const auto [a, b] = pairs[p];
            const auto [c2, d2] = pairs[q];
            // The cyclic identity ties (ab,cd), (ac,bd), (ad,bc) for a < b < c < d; drop (ad,bc).
            if (a < c2 && c2 < d2 && d2 < b) continue;
            out.emplace_back(pairs[p], pairs[q]);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Killing family

LinDiffOp killing(const Metric& w)
{
    const int n = w.n();
    require_n(n, 2, "killing");
    const auto pairs = sym_pairs(n);
    Mat m(n, static_cast<int>(pairs.size()), n);
    for (size_t row = 0; row < pairs.size(); ++row) {
        const auto [i, j] = pairs[row];
        for (int r = 0; r < n; ++r) {
            m(static_cast<int>(row), r) = w.lower(r, j) * d(n, i) + w.lower(i, r) * d(n, j);
        }
    }
    return {"killing", n, tangent_bundle("T", "xi", n), sym_bundle("S2T*", "Omega", n), m.rows()};
}

namespace {

/// Index of the symmetric component removed from the trace-free system.
int conformal_drop(const Metric& w)
{
    const int n = w.n();
    const auto pairs = sym_pairs(n);
    for (int k = static_cast<int>(pairs.size()) - 1; k >= 0; --k) {
        const auto [i, j] = pairs[static_cast<size_t>(k)];
        if (!w.upper(i, j).is_zero()) return k;
    }
    throw std::logic_error("trace relation is empty");
}

}  // namespace

LinDiffOp conformal_killing(const Metric& w)
{
    const int n = w.n();
    require_n(n, 2, "conformal_killing");
    const LinDiffOp k = killing(w);
    const auto pairs = sym_pairs(n);
    const int drop = conformal_drop(w);
    std::vector<FreeElem> rows;
    std::vector<Component> comps;
    const Rational two_over_n(2, n);
    for (size_t row = 0; row < pairs.size(); ++row) {
        if (static_cast<int>(row) == drop) continue;
        const auto [i, j] = pairs[row];
        std::vector<Poly> e = k.rows()[row].entries();
        for (int r = 0; r < n; ++r) e[static_cast<size_t>(r)] -= (two_over_n * w.lower(i, j)) * d(n, r);
        rows.emplace_back(std::move(e));
        comps.push_back(k.target().components()[row]);
    }
    return {"conformal_killing", n, k.source(), Bundle("S2T*0", std::move(comps)), std::move(rows)};
}

LinDiffOp weyl_killing(const Metric& w)
{
    const int n = w.n();
    const LinDiffOp ck = conformal_killing(w);
    std::vector<FreeElem> rows = ck.rows();
    std::vector<Component> comps = ck.target().components();
    for (int i = 0; i < n; ++i) {
        std::vector<Poly> e;
        for (int r = 0; r < n; ++r) e.push_back(c(n, 2) * d(n, i) * d(n, r));
        rows.emplace_back(std::move(e));
        comps.push_back({"dA" + std::to_string(i + 1), Rational(1)});
    }
    return {"weyl_killing", n, ck.source(), Bundle("S2T*0+T*", std::move(comps)), std::move(rows)};
}

// ---------------------------------------------------------------------------
// Curvature

LinDiffOp riemann_lin(const Metric& w)
{
    const int n = w.n();
    require_n(n, 2, "riemann_lin");
    std::vector<FreeElem> rows;
    std::vector<Component> comps;
    for (const auto& [p, q] : riemann_components(n)) {
        rows.push_back(curvature(w, p.first, p.second, q.first, q.second));
        comps.push_back({"R" + std::to_string(p.first + 1) + std::to_string(p.second + 1) +
                             std::to_string(q.first + 1) + std::to_string(q.second + 1),
                         Rational(1)});
    }
    return {"riemann", n, sym_bundle("S2T*", "Omega", n), Bundle("F1", std::move(comps)), std::move(rows)};
}

LinDiffOp ricci_lin(const Metric& w)
{
    const int n = w.n();
    require_n(n, 2, "ricci_lin");
    const auto pairs = sym_pairs(n);
    const auto sz = static_cast<int>(pairs.size());
    Mat m(n, sz, sz);
    const Rational half(1, 2);
    for (int row = 0; row < sz; ++row) {
        const auto [i, j] = pairs[static_cast<size_t>(row)];
        auto put = [&](int a, int b, const Poly& p) { m(row, sym_index(n, a, b)) += half * p; };
        for (int r = 0; r < n; ++r) {
            for (int s = 0; s < n; ++s) {
                const Rational& wrs = w.upper(r, s);
                if (wrs.is_zero()) continue;
                put(i, j, wrs * (d(n, r) * d(n, s)));
                put(r, s, wrs * (d(n, i) * d(n, j)));
                put(s, j, -(wrs * (d(n, r) * d(n, i))));
                put(s, i, -(wrs * (d(n, r) * d(n, j))));
            }
        }
    }
    return {"ricci", n, sym_bundle("S2T*", "Omega", n), sym_bundle("S2T*", "R", n), m.rows()};
}

namespace {

/// Rows of the map sending symmetric components to their index-raised (or lowered) versions.
std::vector<FreeElem> sym_transfer(const Metric& w, bool raise)
{
    const int n = w.n();
    const auto pairs = sym_pairs(n);
    auto g = [&](int a, int b) -> const Rational& { return raise ? w.upper(a, b) : w.lower(a, b); };
    std::vector<FreeElem> out;
    for (const auto& [i, j] : pairs) {
        std::vector<Poly> e;
        for (const auto& [r, s] : pairs) {
            Rational v = g(i, r) * g(j, s);
            if (r != s) v += g(i, s) * g(j, r);
            e.push_back(c(n, v));
        }
        out.emplace_back(std::move(e));
    }
    return out;
}

/// Matrix product a * b; `width` is the column count of b.
std::vector<FreeElem> product(const std::vector<FreeElem>& a, const std::vector<FreeElem>& b, int width)
{
    std::vector<FreeElem> out;
    for (const auto& row : a) out.push_back(combine_rows(row.entries(), b, width));
    return out;
}

/// Left-multiplies rows by the index-raising map.
std::vector<FreeElem> raised(const Metric& w, const std::vector<FreeElem>& rows)
{
    return product(sym_transfer(w, true), rows, rows.front().width());
}

}  // namespace

LinDiffOp einstein_lin(const Metric& w)
{
    const int n = w.n();
    require_n(n, 2, "einstein_lin");
    const auto pairs = sym_pairs(n);
    const auto sz = static_cast<int>(pairs.size());
    Mat m(n, sz, sz);
    const Rational half(1, 2);
    for (int row = 0; row < sz; ++row) {
        const auto [i, j] = pairs[static_cast<size_t>(row)];
        auto put = [&](int a, int b, const Poly& p) { m(row, sym_index(n, a, b)) += half * p; };
        for (int r = 0; r < n; ++r) {
            for (int s = 0; s < n; ++s) {
                const Rational& wrs = w.upper(r, s);
                if (!wrs.is_zero()) {
                    put(i, j, wrs * (d(n, r) * d(n, s)));
                    put(r, s, wrs * (d(n, i) * d(n, j)));
                    put(s, j, -(wrs * (d(n, r) * d(n, i))));
                    put(s, i, -(wrs * (d(n, r) * d(n, j))));
                    if (!w.lower(i, j).is_zero()) {
                        // -w_ij w^rs d_rs (w^uv Omega_uv)
                        for (int u = 0; u < n; ++u) {
                            for (int v = 0; v < n; ++v) {
                                if (w.upper(u, v).is_zero()) continue;
                                put(u, v, -(w.lower(i, j) * wrs * w.upper(u, v)) * (d(n, r) * d(n, s)));
                            }
                        }
                    }
                }
                // +w_ij w^ru w^sv d_rs Omega_uv
                if (w.lower(i, j).is_zero()) continue;
                for (int u = 0; u < n; ++u) {
                    if (w.upper(r, u).is_zero()) continue;
                    for (int v = 0; v < n; ++v) {
                        if (w.upper(s, v).is_zero()) continue;
                        put(u, v, (w.lower(i, j) * w.upper(r, u) * w.upper(s, v)) * (d(n, r) * d(n, s)));
                    }
                }
            }
        }
    }
    return {"einstein", n, sym_bundle("S2T*", "Omega", n), sym_bundle("S2T", "E", n), raised(w, m.rows())};
}

LinDiffOp c_map(const Metric& w)
{
    const int n = w.n();
    require_n(n, 2, "c_map");
    const auto pairs = sym_pairs(n);
    const auto sz = static_cast<int>(pairs.size());
    Mat m(n, sz, sz);
    for (int row = 0; row < sz; ++row) {
        const auto [i, j] = pairs[static_cast<size_t>(row)];
        m(row, row) += c(n, 1);
        for (int r = 0; r < n; ++r) {
            for (int s = 0; s < n; ++s) {
                m(row, sym_index(n, r, s)) -= c(n, Rational(1, 2) * w.lower(i, j) * w.upper(r, s));
            }
        }
    }
    return {"C", n, sym_bundle("S2T*", "R", n), sym_bundle("S2T", "E", n), raised(w, m.rows())};
}

LinDiffOp c_map_inverse(const Metric& w)
{
    const int n = w.n();
    if (n == 2) throw std::invalid_argument("the trace-reversal map is not invertible for n = 2");
    const auto pairs = sym_pairs(n);
    const auto sz = static_cast<int>(pairs.size());
    Mat m(n, sz, sz);
    const Rational f(-1, n - 2);
    for (int row = 0; row < sz; ++row) {
        const auto [i, j] = pairs[static_cast<size_t>(row)];
        m(row, row) += c(n, 1);
        for (int r = 0; r < n; ++r) {
            for (int s = 0; s < n; ++s) m(row, sym_index(n, r, s)) += c(n, f * w.lower(i, j) * w.upper(r, s));
        }
    }
    const auto lower = sym_transfer(w, false);
    return {"C^-1", n, sym_bundle("S2T", "E", n), sym_bundle("S2T*", "R", n), product(m.rows(), lower, sz)};
}

LinDiffOp weyl_components(const Metric& w)
{
    const int n = w.n();
    require_n(n, 3, "weyl_components");
    const int sz = static_cast<int>(sym_pairs(n).size());
    // Full tensor T[k][l][i][j] and its contraction rho_lj = w^ki T_klij.
    auto idx = [n](int a, int b, int e, int f) { return ((a * n + b) * n + e) * n + f; };
    std::vector<FreeElem> t(static_cast<size_t>(n * n * n * n), FreeElem(n, sz));
    for (int k = 0; k < n; ++k) {
        for (int l = 0; l < n; ++l) {
            for (int i = 0; i < n; ++i) {
                for (int j = 0; j < n; ++j) t[static_cast<size_t>(idx(k, l, i, j))] = curvature(w, k, l, i, j);
            }
        }
    }
    std::vector<FreeElem> rho(static_cast<size_t>(n * n), FreeElem(n, sz));
    for (int l = 0; l < n; ++l) {
        for (int j = 0; j < n; ++j) {
            FreeElem acc(n, sz);
            for (int k = 0; k < n; ++k) {
                for (int i = 0; i < n; ++i) {
                    if (w.upper(k, i).is_zero()) continue;
                    acc = acc + c(n, w.upper(k, i)) * t[static_cast<size_t>(idx(k, l, i, j))];
                }
            }
            rho[static_cast<size_t>(l * n + j)] = acc;
        }
    }
    FreeElem scal(n, sz);
    for (int l = 0; l < n; ++l) {
        for (int j = 0; j < n; ++j) {
            if (!w.upper(l, j).is_zero()) scal = scal + c(n, w.upper(l, j)) * rho[static_cast<size_t>(l * n + j)];
        }
    }
    const Rational a(1, n - 2);
    const Rational b(1, (n - 1) * (n - 2));
    auto R = [&](int x, int y) -> const FreeElem& { return rho[static_cast<size_t>(x * n + y)]; };
    std::vector<FreeElem> rows;
    std::vector<Component> comps;
    for (const auto& [p, q] : riemann_components(n)) {
        const int k = p.first;
        const int l = p.second;
        const int i = q.first;
        const int j = q.second;
        FreeElem e = t[static_cast<size_t>(idx(k, l, i, j))];
        e = e - c(n, a * w.lower(k, i)) * R(l, j);
        e = e + c(n, a * w.lower(k, j)) * R(l, i);
        e = e + c(n, a * w.lower(l, i)) * R(k, j);
        e = e - c(n, a * w.lower(l, j)) * R(k, i);
        e = e + c(n, b * (w.lower(k, i) * w.lower(l, j) - w.lower(k, j) * w.lower(l, i))) * scal;
        rows.push_back(std::move(e));
        comps.push_back({"C" + std::to_string(k + 1) + std::to_string(l + 1) + std::to_string(i + 1) +
                             std::to_string(j + 1),
                         Rational(1)});
    }
    return {"weyl_all", n, sym_bundle("S2T*", "Omega", n), Bundle("Weyl", std::move(comps)), std::move(rows)};
}

LinDiffOp weyl_lin(const Metric& w)
{
    const int n = w.n();
    if (n < 4) throw std::invalid_argument("weyl_lin needs n >= 4");
    const LinDiffOp all = weyl_components(w);
    const auto want = static_cast<size_t>(n * (n + 1) * (n + 2) * (n - 3) / 12);
    detail::Echelon ech;
    const detail::TermOrder plain;
    std::vector<int> keep;
    for (int i = 0; i < all.nrows() && keep.size() < want; ++i) {
        if (ech.insert(detail::to_sparse(all.rows()[static_cast<size_t>(i)], plain))) keep.push_back(i);
    }
    if (keep.size() != want) throw std::logic_error("Weyl rows have unexpected rank");
    return all.select_rows(keep).renamed("weyl");
}

// ---------------------------------------------------------------------------
// Elasticity and friends

LinDiffOp cauchy(const Metric& w)
{
    const int n = w.n();
    const LinDiffOp ad = adjoint(killing(w)).scaled(Rational(-1, 2));
    return LinDiffOp("cauchy", n, sym_bundle("S2T", "sigma", n), tangent_bundle("T*", "f", n), ad.rows());
}

LinDiffOp grad3()
{
    const int n = 3;
    Mat m(n, 3, 1);
    for (int i = 0; i < 3; ++i) m(i, 0) = d(n, i);
    return {"grad", n, Bundle("R", {{"f", Rational(1)}}), Bundle::numbered("T*", "g", 3), m.rows()};
}

LinDiffOp curl3()
{
    const int n = 3;
    Mat m(n, 3, 3);
    m(0, 1) = -d(n, 2);
    m(0, 2) = d(n, 1);
    m(1, 0) = d(n, 2);
    m(1, 2) = -d(n, 0);
    m(2, 0) = -d(n, 1);
    m(2, 1) = d(n, 0);
    return {"curl", n, Bundle::numbered("T", "u", 3), Bundle::numbered("T", "v", 3), m.rows()};
}

LinDiffOp div3()
{
    const int n = 3;
    Mat m(n, 1, 3);
    for (int i = 0; i < 3; ++i) m(0, i) = d(n, i);
    return {"div", n, Bundle::numbered("T", "eta", 3), Bundle("R", {{"zeta", Rational(1)}}), m.rows()};
}

namespace {

std::vector<std::vector<int>> subsets(int n, int r)
{
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int start) -> void {
        if (static_cast<int>(cur.size()) == r) {
            out.push_back(cur);
            return;
        }
        for (int i = start; i < n; ++i) {
            cur.push_back(i);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

Bundle forms_bundle(int n, int r)
{
    std::vector<Component> comps;
    for (const auto& s : subsets(n, r)) {
        std::string label = "w";
        for (const int i : s) label += std::to_string(i + 1);
        if (r == 0) label = "f";
        comps.push_back({label, Rational(1)});
    }
    return {"L" + std::to_string(r) + "T*", std::move(comps)};
}

}  // namespace

LinDiffOp exterior_derivative(int n, int r)
{
    require_n(n, 1, "exterior_derivative");
    if (r < 0 || r >= n) {
        throw std::invalid_argument("exterior derivative needs 0 <= r < n, got r = " + std::to_string(r) +
                                    ", n = " + std::to_string(n));
    }
    const auto src = subsets(n, r);
    const auto tgt = subsets(n, r + 1);
    std::map<std::vector<int>, int> src_index;
    for (size_t i = 0; i < src.size(); ++i) src_index[src[i]] = static_cast<int>(i);
    Mat m(n, static_cast<int>(tgt.size()), static_cast<int>(src.size()));
    for (size_t row = 0; row < tgt.size(); ++row) {
        const auto& I = tgt[row];
        for (size_t k = 0; k < I.size(); ++k) {
            std::vector<int> rest = I;
            rest.erase(rest.begin() + static_cast<long>(k));
            const Poly term = (k % 2 == 0) ? d(n, I[k]) : -d(n, I[k]);
            m(static_cast<int>(row), src_index.at(rest)) += term;
        }
    }
    return {"d" + std::to_string(r), n, forms_bundle(n, r), forms_bundle(n, r + 1), m.rows()};
}

LinDiffOp lame(const Rational& lambda, const Rational& mu, int n)
{
    require_n(n, 1, "lame");
    Mat m(n, n, n);
    Poly lap(n);
    for (int k = 0; k < n; ++k) lap += d(n, k) * d(n, k);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            m(i, j) = (lambda + mu) * (d(n, i) * d(n, j));
            if (i == j) m(i, j) += mu * lap;
        }
    }
    return {"lame", n, tangent_bundle("T", "xi", n), tangent_bundle("T*", "f", n), m.rows()};
}

LinDiffOp dalembertian(const Metric& w, const Bundle& b)
{
    const int n = w.n();
    Poly box(n);
    for (int r = 0; r < n; ++r) {
        for (int s = 0; s < n; ++s) {
            if (!w.upper(r, s).is_zero()) box += w.upper(r, s) * (d(n, r) * d(n, s));
        }
    }
    Mat m(n, b.dim(), b.dim());
    for (int i = 0; i < b.dim(); ++i) m(i, i) = box;
    return {"box", n, b, b, m.rows()};
}

LinDiffOp hooke2d(const Rational& lambda, const Rational& mu)
{
    if (mu.is_zero() || (lambda + mu).is_zero()) throw std::invalid_argument("degenerate Lame constants");
    const int n = 2;
    const Rational half_l = lambda * Rational(1, 2);
    Mat m(n, 3, 3);
    m(0, 0) = c(n, half_l + mu);
    m(0, 2) = c(n, half_l);
    m(1, 1) = c(n, mu);
    m(2, 0) = c(n, half_l);
    m(2, 2) = c(n, half_l + mu);
    return {"hooke", n, sym_bundle("S2T*", "Omega", n), sym_bundle("S2T", "sigma", n), m.rows()};
}

LinDiffOp hooke2d_inverse(const Rational& lambda, const Rational& mu)
{
    if (mu.is_zero() || (lambda + mu).is_zero()) throw std::invalid_argument("degenerate Lame constants");
    const int n = 2;
    const Rational k = lambda / (Rational(2) * (lambda + mu));
    const Rational inv_mu = mu.inverse();
    Mat m(n, 3, 3);
    m(0, 0) = c(n, inv_mu * (Rational(1) - k));
    m(0, 2) = c(n, -(inv_mu * k));
    m(1, 1) = c(n, inv_mu);
    m(2, 0) = c(n, -(inv_mu * k));
    m(2, 2) = c(n, inv_mu * (Rational(1) - k));
    return {"hooke^-1", n, sym_bundle("S2T", "sigma", n), sym_bundle("S2T*", "Omega", n), m.rows()};
}

Cosserat cosserat2d()
{
    const int n = 2;
    const Poly d1 = d(n, 0);
    const Poly d2 = d(n, 1);
    const Poly one = c(n, 1);
    const Bundle xi("R2", {{"xi1", Rational(1)}, {"xi2", Rational(1)}, {"xi12", Rational(1)}});
    const Bundle stress("T*xR2", {{"sigma11", Rational(1)},
                                  {"sigma12", Rational(1)},
                                  {"sigma21", Rational(1)},
                                  {"sigma22", Rational(1)},
                                  {"mu12_1", Rational(1)},
                                  {"mu12_2", Rational(1)}});
    Mat s(n, 6, 3);
    s(0, 0) = d1;
    s(1, 0) = d2;
    s(1, 2) = -one;
    s(2, 1) = d1;
    s(2, 2) = one;
    s(3, 1) = d2;
    s(4, 2) = d1;
    s(5, 2) = d2;
    LinDiffOp spencer("spencer_D1", n, xi, stress, s.rows());

    Cosserat out;
    out.spencer_d1 = spencer;
    out.equilibrium_scale = Rational(-1);
    out.equilibrium = adjoint(spencer).scaled(out.equilibrium_scale).renamed("cosserat_equilibrium");

    const Bundle phi("phi", {{"phi1", Rational(1)}, {"phi2", Rational(1)}, {"phi3", Rational(1)}});
    Mat p(n, 6, 3);
    p(0, 0) = d2;
    p(1, 0) = -d1;
    p(2, 1) = -d2;
    p(3, 1) = d1;
    p(4, 0) = one;
    p(4, 2) = d2;
    p(5, 1) = -one;
    p(5, 2) = -d1;
    out.parametrization = LinDiffOp("cosserat_parametrization", n, phi, stress, p.rows());
    return out;
}

// ---------------------------------------------------------------------------
// Dimensions

long long binomial(int n, int k)
{
    if (k < 0 || n < 0 || k > n) return 0;
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

long long jet_dim(int n, int m, int q) { return static_cast<long long>(m) * binomial(n + q, n); }

Dims dims(int n)
{
    if (n < 2) throw std::invalid_argument("dims needs n >= 2");
    Dims out;
    out.n = n;
    const long long nn = n;
    out.f1 = nn * nn * (nn * nn - 1) / 12;
    out.f1hat = nn * (nn + 1) * (nn + 2) * (nn - 3) / 12;
    out.isometry = nn * (nn + 1) / 2;
    out.weyl_group = out.isometry + 1;
    out.conformal = (nn + 1) * (nn + 2) / 2;
    auto sym_t = [&](int q) { return nn * binomial(n + q - 1, q); };
    for (int q = 0; q <= 4; ++q) {
        out.jet_tangent.push_back(jet_dim(n, n, q));
        out.sym_tangent.push_back(sym_t(q));
    }
    const int q = 3;
    const long long jq = jet_dim(n, n, q);
    for (int r = 0; r <= n; ++r) {
        long long img = 0;
        for (int j = 0; j <= r - 1; ++j) {
            const long long term = binomial(n, j) * sym_t(q + r - j);
            img += ((r - 1 - j) % 2 == 0) ? term : -term;
        }
        out.full.push_back(binomial(n, r) * jq - img);
    }
    for (const long long g : {out.isometry, out.weyl_group, out.conformal}) {
        std::vector<long long> sp;
        std::vector<long long> ja;
        for (int r = 0; r <= n; ++r) {
            sp.push_back(binomial(n, r) * g);
            ja.push_back(out.full[static_cast<size_t>(r)] - sp.back());
        }
        out.spencer.push_back(std::move(sp));
        out.janet.push_back(std::move(ja));
    }
    return out;
}

Diagram1 diagram1_table()
{
    Diagram1 t;
    t.spencer = {{3, 6, 3}, {4, 8, 4}, {6, 12, 6}};
    t.full = {20, 30, 12};
    t.janet = {{17, 24, 9}, {16, 22, 8}, {14, 18, 6}};
    return t;
}

// ---------------------------------------------------------------------------
// Lookup by name

std::vector<std::string> generator_names()
{
    return {"killing",    "conformal_killing", "weyl_killing", "riemann_lin",  "ricci_lin",
            "einstein_lin", "c_map",   "c_map_inverse", "weyl_lin",     "cauchy",       "grad",
            "curl",       "div",               "exterior_derivative", "lame",  "dalembertian",
            "hooke2d",    "hooke2d_inverse",   "cosserat_spencer_d1", "cosserat_equilibrium",
            "cosserat_parametrization"};
}

LinDiffOp make(const std::string& name, int n, MetricKind kind, const Rational& lambda, const Rational& mu, int r)
{
    auto w = [&] { return metric(kind, n); };
    if (name == "killing") return killing(w());
    if (name == "conformal_killing") return conformal_killing(w());
    if (name == "weyl_killing") return weyl_killing(w());
    if (name == "riemann_lin") return riemann_lin(w());
    if (name == "ricci_lin") return ricci_lin(w());
    if (name == "einstein_lin") return einstein_lin(w());
    if (name == "c_map") return c_map(w());
    if (name == "c_map_inverse") return c_map_inverse(w());
    if (name == "weyl_lin") return weyl_lin(w());
    if (name == "cauchy") return cauchy(w());
    if (name == "grad") return grad3();
    if (name == "curl") return curl3();
    if (name == "div") return div3();
    if (name == "exterior_derivative") return exterior_derivative(n, r);
    if (name == "lame") return lame(lambda, mu, n);
    if (name == "dalembertian") return dalembertian(w(), tangent_bundle("T", "xi", n));
    if (name == "hooke2d") return hooke2d(lambda, mu);
    if (name == "hooke2d_inverse") return hooke2d_inverse(lambda, mu);
    if (name == "cosserat_spencer_d1") return cosserat2d().spencer_d1;
    if (name == "cosserat_equilibrium") return cosserat2d().equilibrium;
    if (name == "cosserat_parametrization") return cosserat2d().parametrization;
    throw std::invalid_argument("unknown generator '" + name + "'");
}

}  // namespace dgcalc::zoo
