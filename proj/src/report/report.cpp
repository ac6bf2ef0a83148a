#include "dgcalc/report.hpp"

#include "dgcalc/random.hpp"
#include "dgcalc/reference.hpp"
#include "dgcalc/zoo.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <iomanip>
#include <map>
#include <sstream>

namespace dgcalc::report {

namespace {

using zoo::MetricKind;

struct Outcome {
    std::string computed;
    bool pass = false;
};

std::string lower(std::string s)
{
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

std::string list_str(const std::vector<int>& v)
{
    std::string s = "[";
    for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + "]";
}

/// One entry per step: the common order, or the sorted multiset when orders differ.
std::string orders_str(const Resolution& r)
{
    std::string s = "[";
    for (size_t k = 0; k < r.orders.size(); ++k) {
        const auto& o = r.orders[k];
        s += k ? "," : "";
        if (!o.empty() && o.front() == o.back()) {
            s += std::to_string(o.front());
        } else {
            std::string inner = "{";
            for (size_t i = 0; i < o.size(); ++i) inner += (i ? "," : "") + std::to_string(o[i]);
            s += inner + "}";
        }
    }
    return s + "]";
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

std::vector<FreeElem> parse_rows(const std::vector<std::vector<std::string>>& text, int nvars)
{
    std::vector<FreeElem> out;
    for (const auto& row : text) {
        std::vector<Poly> e;
        for (const auto& s : row) e.push_back(parse_poly(s, nvars));
        out.emplace_back(std::move(e));
    }
    return out;
}

/// Equality of the images of two operators on the same target (column modules).
bool same_image(const LinDiffOp& a, const LinDiffOp& b, const EngineOptions& o)
{
    return module_equal(a.column_rows(), b.column_rows(), o);
}

class Runner {
public:
    explicit Runner(const ReportOptions& opts) : opts_(opts)
    {
        for (const auto& c : criteria()) titles_[c.id] = c.title;
    }

    void row(int criterion, const std::string& id, const std::string& anchor, const std::string& expected,
             double limit, const std::function<Outcome()>& f)
    {
        if (!selected(criterion, id, anchor)) return;
        ReportRow r;
        r.criterion = criterion;
        r.id = id;
        r.anchor = anchor;
        r.expected = expected;
        r.limit = limit;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            const Outcome out = f();
            r.computed = out.computed;
            r.pass = out.pass;
        } catch (const std::exception& e) {
            r.computed = std::string("error: ") + e.what();
            r.pass = false;
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (limit > 0 && r.seconds > limit) r.pass = false;
        rows_.push_back(std::move(r));
    }

    [[nodiscard]] std::vector<ReportRow> take() { return std::move(rows_); }

private:
    [[nodiscard]] bool selected(int criterion, const std::string& id, const std::string& anchor) const
    {
        if (opts_.only.empty()) return true;
        const std::string needle = lower(opts_.only);
        for (const std::string& hay : {id, anchor, titles_.at(criterion)}) {
            if (lower(hay).find(needle) != std::string::npos) return true;
        }
        return false;
    }

    ReportOptions opts_;
    std::map<int, std::string> titles_;
    std::vector<ReportRow> rows_;
};

Outcome resolution_check(const LinDiffOp& op, const std::vector<int>& dims, const std::vector<int>& orders,
                         const EngineOptions& eo)
{
    const int n = op.nvars();
    const Resolution r = resolve_module(op.rows(), op.ncols(), n + 1, eo);
    std::string got = "dims " + list_str(r.dims) + " orders " + orders_str(r);
    bool pass = r.complete && r.dims == dims;
    if (!orders.empty()) pass = pass && orders_str(r) == list_str(orders);
    return {got, pass};
}

/// Generators small enough for the property sweeps.
std::vector<LinDiffOp> zoo_sample()
{
    using namespace zoo;
    const auto e2 = metric(MetricKind::Euclidean, 2);
    const auto e3 = metric(MetricKind::Euclidean, 3);
    const auto m3 = metric(MetricKind::Minkowski, 3);
    const auto m4 = metric(MetricKind::Minkowski, 4);
    const Cosserat cs = cosserat2d();
    return {killing(e2),
            killing(e3),
            killing(m3),
            killing(m4),
            conformal_killing(e3),
            conformal_killing(m4),
            weyl_killing(e3),
            riemann_lin(e2),
            riemann_lin(e3),
            ricci_lin(e3),
            einstein_lin(e3),
            einstein_lin(m4),
            c_map(e3),
            weyl_lin(m4),
            cauchy(e2),
            cauchy(e3),
            grad3(),
            curl3(),
            div3(),
            exterior_derivative(3, 0),
            exterior_derivative(4, 1),
            exterior_derivative(4, 2),
            lame(Rational(2), Rational(1), 3),
            dalembertian(m4, tangent_bundle("T", "xi", 4)),
            hooke2d(Rational(1), Rational(1)),
            hooke2d_inverse(Rational(1), Rational(1)),
            cs.spencer_d1,
            cs.equilibrium,
            cs.parametrization};
}

void conformal_rows(Runner& run, const ReportOptions& opts, const EngineOptions& eo)
{
    using namespace zoo;
    run.row(1, "conformal.n3", "conformal Killing resolution, Euclidean n=3", "dims [5,5,3] orders [1,3,1]", 30,
            [&] { return resolution_check(conformal_killing(metric(MetricKind::Euclidean, 3)), {5, 5, 3}, {1, 3, 1}, eo); });
    run.row(1, "conformal.n4", "conformal Killing resolution, Minkowski n=4", "dims [9,10,9,4] orders [1,2,2,1]", 300,
            [&] {
                return resolution_check(conformal_killing(metric(MetricKind::Minkowski, 4)), {9, 10, 9, 4},
                                        {1, 2, 2, 1}, eo);
            });
    if (!opts.quick) {
        run.row(1, "conformal.n5", "conformal Killing resolution, Euclidean n=5",
                "dims [14,35,35,14,5] orders [1,2,1,2,1]", 1800, [&] {
                    return resolution_check(conformal_killing(metric(MetricKind::Euclidean, 5)), {14, 35, 35, 14, 5},
                                            {1, 2, 1, 2, 1}, eo);
                });
    }
}

void killing_rows(Runner& run, const EngineOptions& eo)
{
    using namespace zoo;
    auto check = [&](const LinDiffOp& op, const std::vector<int>& dims) {
        const Resolution r = resolve_module(op.rows(), op.ncols(), op.nvars() + 1, eo);
        const int chi = euler_characteristic(r);
        return Outcome{"dims " + list_str(r.dims) + " chi " + std::to_string(chi),
                       r.complete && r.dims == dims && chi == 0};
    };
    run.row(2, "killing.m4", "Killing resolution, Minkowski n=4", "dims [10,20,20,6] chi 0", 0,
            [&] { return check(killing(metric(MetricKind::Minkowski, 4)), {10, 20, 20, 6}); });
    run.row(2, "killing.e3", "Killing resolution, Euclidean n=3", "dims [6,6,3] chi 0", 0,
            [&] { return check(killing(metric(MetricKind::Euclidean, 3)), {6, 6, 3}); });
}

void einstein_rows(Runner& run, const EngineOptions& eo)
{
    using namespace zoo;
    run.row(3, "einstein.selfadjoint.e3", "Einstein operator is self-adjoint, Euclidean n=3", "ad(E) == E", 0, [] {
        const auto e = einstein_lin(metric(MetricKind::Euclidean, 3));
        const bool ok = adjoint(e).same_matrix(e);
        return Outcome{ok ? "ad(E) == E" : "ad(E) != E", ok};
    });
    run.row(3, "einstein.selfadjoint.m4", "Einstein operator is self-adjoint, Minkowski n=4", "ad(E) == E", 0, [] {
        const auto e = einstein_lin(metric(MetricKind::Minkowski, 4));
        const bool ok = adjoint(e).same_matrix(e);
        return Outcome{ok ? "ad(E) == E" : "ad(E) != E", ok};
    });
    run.row(3, "einstein.boxed", "weighted Einstein matrix for n=3 equals the boxed symmetric display",
            "2 W E == boxed matrix", 0, [] {
                const auto e = einstein_lin(metric(MetricKind::Euclidean, 3));
                std::vector<Rational> twice_w;
                for (const auto& c : e.target().components()) twice_w.push_back(Rational(2) * c.weight);
                const auto weighted = e.rows_scaled(twice_w);
                const auto boxed = parse_rows({{"0", "0", "0", "-d3^2", "2*d2*d3", "-d2^2"},
                                               {"0", "2*d3^2", "-2*d2*d3", "0", "-2*d1*d3", "2*d1*d2"},
                                               {"0", "-2*d2*d3", "2*d2^2", "2*d1*d3", "-2*d1*d2", "0"},
                                               {"-d3^2", "0", "2*d1*d3", "0", "0", "-d1^2"},
                                               {"2*d2*d3", "-2*d1*d3", "-2*d1*d2", "0", "2*d1^2", "0"},
                                               {"-d2^2", "2*d1*d2", "0", "-d1^2", "0", "0"}},
                                              3);
                const bool ok = weighted.rows() == boxed;
                return Outcome{ok ? "2 W E == boxed matrix" : "mismatch", ok};
            });
    run.row(3, "ricci.not_selfadjoint", "Ricci operator is not self-adjoint, Minkowski n=4", "ad(Ric) != Ric", 0, [] {
        const auto r = ricci_lin(metric(MetricKind::Minkowski, 4));
        const bool differ = !adjoint(r).same_matrix(r);
        return Outcome{differ ? "ad(Ric) != Ric" : "ad(Ric) == Ric", differ};
    });
    (void)eo;
}

void nonparam_rows(Runner& run, const DualityOptions& dopts)
{
    using namespace zoo;
    run.row(4, "einstein.nonparametrizable", "vacuum Einstein equations cannot be parametrized, n=4",
            "parametrizable=false ext1_zero=false potentials=4 killing-type=true cc_rows=20 riemann-equal=true "
            "torsion=10",
            600, [&] {
                const auto m4 = metric(MetricKind::Minkowski, 4);
                const ParamReport r = param_test(einstein_lin(m4), dopts);
                const bool killing_type = same_image(r.parametrization, killing(m4), dopts.engine);
                const bool riemann = module_equal(r.recomputed_cc.rows(), riemann_lin(m4).rows(), dopts.engine);
                const auto ntors = static_cast<int>(r.torsion.size());
                std::ostringstream os;
                os << "parametrizable=" << yes_no(r.parametrizable) << " ext1_zero=" << yes_no(r.ext1_zero)
                   << " potentials=" << r.parametrization.ncols() << " killing-type=" << yes_no(killing_type)
                   << " cc_rows=" << r.recomputed_cc.nrows() << " riemann-equal=" << yes_no(riemann)
                   << " torsion=" << ntors;
                const bool ok = !r.parametrizable && !r.ext1_zero && r.parametrization.ncols() == 4 && killing_type &&
                                r.recomputed_cc.nrows() == 20 && riemann && ntors == 10;
                return Outcome{os.str(), ok};
            });
}

void div_rows(Runner& run, const DualityOptions& dopts)
{
    using namespace zoo;
    run.row(5, "div.parametrization", "div is parametrized by curl", "parametrizable=true image==curl", 0, [&] {
        const ParamReport r = param_test(div3(), dopts);
        const bool curl = same_image(r.parametrization, curl3(), dopts.engine);
        const bool ok = r.parametrizable && curl && r.torsion.empty();
        return Outcome{"parametrizable=" + yes_no(r.parametrizable) + " image==curl=" + yes_no(curl), ok};
    });
    run.row(5, "div.ext", "ext modules of div vanish", "ext1_zero=true ext2_zero=true", 0, [&] {
        const bool e1 = ext_module(div3(), 1, dopts).is_zero;
        const bool e2 = ext_module(div3(), 2, dopts).is_zero;
        return Outcome{"ext1_zero=" + yes_no(e1) + " ext2_zero=" + yes_no(e2), e1 && e2};
    });
    run.row(5, "div.minimal", "minimal parametrization of div with two potentials", "potentials=2 image==display",
            0, [&] {
                const LinDiffOp m = minimal_parametrization(div3(), dopts);
                const LinDiffOp shown("shown", 3, Bundle::numbered("xi", "xi", 2), Bundle::numbered("eta", "eta", 3),
                                      parse_rows({{"-d3", "0"}, {"0", "d3"}, {"d1", "-d2"}}, 3));
                const bool same = same_image(m, shown, dopts.engine);
                return Outcome{"potentials=" + std::to_string(m.ncols()) + " image==display=" + yes_no(same),
                               m.ncols() == 2 && same};
            });
}

void elasticity_rows(Runner& run, const DualityOptions& dopts)
{
    using namespace zoo;
    const auto e2 = metric(MetricKind::Euclidean, 2);
    run.row(6, "airy.cc", "compatibility condition of plane strain", "[d2^2, -2*d1*d2, d1^2]", 0, [&] {
        const LinDiffOp c = cc(killing(e2), dopts.engine);
        const auto want = parse_rows({{"d2^2", "-2*d1*d2", "d1^2"}}, 2);
        std::string got;
        for (const auto& r : c.rows()) got += r.str();
        return Outcome{got, c.rows() == want};
    });
    run.row(6, "airy.adjoint", "adjoint of the compatibility condition is the Airy parametrization",
            "[[d2^2], [-d1*d2], [d1^2]]", 0, [&] {
                const LinDiffOp a = adjoint(riemann_lin(e2));
                const auto want = parse_rows({{"d2^2"}, {"-d1*d2"}, {"d1^2"}}, 2);
                std::string got = "[";
                for (size_t i = 0; i < a.rows().size(); ++i) got += (i ? ", " : "") + a.rows()[i].str();
                return Outcome{got + "]", a.rows() == want};
            });
    run.row(6, "airy.dam", "Airy function of a dam satisfies a biharmonic equation", "3/4*(d1^2 + d2^2)^2", 0, [&] {
        const LinDiffOp r = riemann_lin(e2);
        const LinDiffOp op = compose(compose(r, hooke2d_inverse(Rational(1), Rational(1))), adjoint(r));
        const Poly lap = parse_poly("d1^2 + d2^2", 2);
        const Poly want = Rational(3, 4) * (lap * lap);
        const bool ok = op.nrows() == 1 && op.ncols() == 1 && op.at(0, 0) == want;
        return Outcome{op.nrows() == 1 && op.ncols() == 1 ? op.at(0, 0).str() : "shape mismatch", ok};
    });
    run.row(6, "beltrami", "Cauchy stress equations are parametrized by ad(Riemann), n=3",
            "parametrizable=true image==ad(riemann)", 30, [&] {
                const auto e3 = metric(MetricKind::Euclidean, 3);
                const ParamReport r = param_test(cauchy(e3), dopts);
                const bool same = same_image(r.parametrization, adjoint(riemann_lin(e3)), dopts.engine);
                return Outcome{"parametrizable=" + yes_no(r.parametrizable) + " image==ad(riemann)=" + yes_no(same),
                               r.parametrizable && same};
            });
}

void cosserat_rows(Runner& run, const DualityOptions& dopts)
{
    using namespace zoo;
    run.row(7, "cosserat.equilibrium", "Cosserat couple-stress equations from the adjoint of the Spencer operator",
            "-ad(D1) rows [d1, d2, 0, 0, 0, 0] [0, 0, d1, d2, 0, 0] [0, 1, -1, 0, d1, d2]", 0, [] {
                const Cosserat c = cosserat2d();
                const auto want = parse_rows({{"d1", "d2", "0", "0", "0", "0"},
                                              {"0", "0", "d1", "d2", "0", "0"},
                                              {"0", "1", "-1", "0", "d1", "d2"}},
                                             2);
                const LinDiffOp a = adjoint(c.spencer_d1).scaled(c.equilibrium_scale);
                std::string got = "-ad(D1) rows";
                for (const auto& r : a.rows()) got += " " + r.str();
                return Outcome{got, a.rows() == want && c.equilibrium.same_matrix(a)};
            });
    run.row(7, "cosserat.compose", "displayed stress-function parametrization solves the equilibrium",
            "equilibrium o parametrization == 0", 0, [] {
                const Cosserat c = cosserat2d();
                const bool zero = compose(c.equilibrium, c.parametrization).is_zero();
                return Outcome{zero ? "equilibrium o parametrization == 0" : "nonzero", zero};
            });
    run.row(7, "cosserat.paramtest", "displayed parametrization passes the double-duality test",
            "parametrizable=true cc(displayed)==equilibrium", 0, [&] {
                const Cosserat c = cosserat2d();
                const ParamReport r = param_test(c.equilibrium, dopts);
                const bool shown = module_equal(cc(c.parametrization, dopts.engine).rows(), c.equilibrium.rows(),
                                                dopts.engine);
                return Outcome{"parametrizable=" + yes_no(r.parametrizable) + " cc(displayed)==equilibrium=" +
                                   yes_no(shown),
                               r.parametrizable && shown};
            });
}

void lichnerowicz_rows(Runner& run, const DualityOptions& dopts)
{
    using namespace zoo;
    run.row(8, "lichnerowicz", "wave operator on Weyl factors through Ricci, n=4", "Q found, order 2, exact", 600,
            [&] {
                const auto m4 = metric(MetricKind::Minkowski, 4);
                const LinDiffOp w = weyl_lin(m4);
                const LinDiffOp a = compose(dalembertian(m4, w.target()), w);
                const LinDiffOp q = factor_through(a, ricci_lin(m4), dopts.engine);
                const bool exact = compose(q, ricci_lin(m4)).same_matrix(a);
                return Outcome{"Q found, order " + std::to_string(q.order()) + (exact ? ", exact" : ", NOT exact"),
                               exact && q.order() == 2};
            });
}

void factorization_rows(Runner& run)
{
    using namespace zoo;
    for (const MetricKind kind : {MetricKind::Minkowski, MetricKind::Euclidean}) {
        const std::string tag = kind == MetricKind::Minkowski ? "m4" : "e4";
        run.row(9, "einstein.c_ricci." + tag, "Einstein = C o Ricci, n=4", "bit-exact", 0, [kind] {
            const auto w = metric(kind, 4);
            const bool ok = compose(c_map(w), ricci_lin(w)).same_matrix(einstein_lin(w));
            return Outcome{ok ? "bit-exact" : "differs", ok};
        });
        run.row(9, "einstein.adricci_c." + tag, "Einstein = ad(Ricci) o C, n=4", "bit-exact", 0, [kind] {
            const auto w = metric(kind, 4);
            const bool ok = compose(adjoint(ricci_lin(w)), c_map(w)).same_matrix(einstein_lin(w));
            return Outcome{ok ? "bit-exact" : "differs", ok};
        });
    }
}

void dimension_rows(Runner& run)
{
    using namespace zoo;
    run.row(10, "dims.f1", "curvature has n^2(n^2-1)/12 components, n=2..6", "riemann rows == f1 for n=2..6", 0, [] {
        std::string got;
        bool ok = true;
        for (int n = 2; n <= 6; ++n) {
            const int rows = riemann_lin(metric(MetricKind::Euclidean, n)).nrows();
            const long long f1 = dims(n).f1;
            got += (n > 2 ? " " : "") + std::to_string(rows) + "/" + std::to_string(f1);
            ok = ok && rows == f1 && f1 == static_cast<long long>(n) * n * (n * n - 1) / 12;
        }
        return Outcome{got, ok};
    });
    run.row(10, "dims.f1hat", "Weyl tensor has n(n+1)(n+2)(n-3)/12 components, n=3..6",
            "independent Weyl rows == f1hat for n=3..6", 0, [] {
                std::string got;
                bool ok = true;
                for (int n = 3; n <= 6; ++n) {
                    const auto w = metric(MetricKind::Euclidean, n);
                    const int rows = n >= 4 ? weyl_lin(w).nrows() : fraction_rank(weyl_components(w).rows(), 6);
                    const long long f = dims(n).f1hat;
                    got += (n > 3 ? " " : "") + std::to_string(rows) + "/" + std::to_string(f);
                    ok = ok && rows == f;
                }
                return Outcome{got, ok};
            });
    run.row(10, "dims.seesaw", "Spencer and Janet dimensions add up to the jet dimensions (n=2 table)",
            "3+17=4+16=6+14=20, 6+24=8+22=12+18=30, 3+9=4+8=6+6=12", 0, [] {
                const Diagram1 t = diagram1_table();
                std::string got;
                bool ok = true;
                for (size_t r = 0; r < 3; ++r) {
                    for (size_t g = 0; g < 3; ++g) {
                        const long long sum = t.spencer[g][r] + t.janet[g][r];
                        got += std::to_string(t.spencer[g][r]) + "+" + std::to_string(t.janet[g][r]) +
                               (g < 2 ? "=" : "=" + std::to_string(sum));
                        ok = ok && sum == t.full[r];
                    }
                    got += r < 2 ? ", " : "";
                }
                return Outcome{got, ok};
            });
    run.row(10, "dims.table", "stored n=2 table agrees with the closed-form dimension formulas",
            "groups (3,4,6), J3(T)=20, formulas == table", 0, [] {
                const Dims d = dims(2);
                const Diagram1 t = diagram1_table();
                const bool ok = d.isometry == 3 && d.weyl_group == 4 && d.conformal == 6 && d.jet_tangent[3] == 20 &&
                                d.spencer == t.spencer && d.full == t.full && d.janet == t.janet;
                return Outcome{"groups (" + std::to_string(d.isometry) + "," + std::to_string(d.weyl_group) + "," +
                                   std::to_string(d.conformal) + "), J3(T)=" + std::to_string(d.jet_tangent[3]) +
                                   (ok ? ", formulas == table" : ", formulas != table"),
                               ok};
            });
}

void property_rows(Runner& run, const DualityOptions& dopts)
{
    const EngineOptions& eo = dopts.engine;
    run.row(11, "prop.ad_involution", "ad o ad is the identity", "all operators", 0, [] {
        random::Generator g(11);
        int count = 0;
        int bad = 0;
        for (const auto& op : zoo_sample()) {
            ++count;
            bad += adjoint(adjoint(op)).same_matrix(op) ? 0 : 1;
        }
        for (int k = 0; k < 40; ++k) {
            const LinDiffOp op = g.op(g.uniform(1, 3), g.uniform(1, 3), g.uniform(1, 3), 3, 3);
            ++count;
            bad += adjoint(adjoint(op)).same_matrix(op) ? 0 : 1;
        }
        return Outcome{std::to_string(count - bad) + "/" + std::to_string(count) + " operators", bad == 0};
    });
    run.row(11, "prop.ad_contravariant", "ad(A o B) = ad(B) o ad(A)", "all pairs", 0, [] {
        random::Generator g(12);
        int bad = 0;
        const int count = 40;
        for (int k = 0; k < count; ++k) {
            const int n = g.uniform(1, 3);
            const LinDiffOp a = g.op(n, g.uniform(1, 3), g.uniform(1, 3), 2, 3, "y", "z");
            const LinDiffOp braw = g.op(n, a.ncols(), g.uniform(1, 3), 2, 3, "x", "y");
            const LinDiffOp b = braw.with_bundles(braw.source(), a.source());
            bad += adjoint(compose(a, b)).same_matrix(compose(adjoint(b), adjoint(a))) ? 0 : 1;
        }
        return Outcome{std::to_string(count - bad) + "/" + std::to_string(count) + " pairs", bad == 0};
    });
    run.row(11, "prop.cc_annihilates", "cc(A) o A = 0", "all operators", 0, [&] {
        random::Generator g(13);
        int count = 0;
        int bad = 0;
        for (const auto& op : zoo_sample()) {
            ++count;
            bad += compose(cc(op, eo), op).is_zero() ? 0 : 1;
        }
        for (int k = 0; k < 20; ++k) {
            const LinDiffOp op = g.op(g.uniform(2, 3), g.uniform(1, 3), g.uniform(1, 3), 2, 2);
            ++count;
            bad += compose(cc(op, eo), op).is_zero() ? 0 : 1;
        }
        return Outcome{std::to_string(count - bad) + "/" + std::to_string(count) + " operators", bad == 0};
    });
    run.row(11, "prop.gb_determinism", "reduced basis independent of generator order and thread count",
            "identical bases", 0, [&] {
                random::Generator g(14);
                std::vector<std::vector<FreeElem>> cases;
                for (const auto& op : zoo_sample()) {
                    if (op.nvars() <= 3 && op.nrows() > 0) cases.push_back(op.rows());
                }
                cases.push_back(zoo::killing(zoo::metric(MetricKind::Minkowski, 4)).rows());
                for (int k = 0; k < 15; ++k) {
                    cases.push_back(g.rows(g.uniform(2, 3), g.uniform(1, 4), g.uniform(1, 3), 2, 3));
                }
                int bad = 0;
                for (auto& gens : cases) {
                    const int width = gens.front().width();
                    const std::string base = reduced_groebner(gens, width, {}, eo).str();
                    for (int t : {1, 2, 4}) {
                        EngineOptions o = eo;
                        o.threads = t;
                        std::shuffle(gens.begin(), gens.end(), g.engine());
                        bad += reduced_groebner(gens, width, {}, o).str() == base ? 0 : 1;
                    }
                    EngineOptions serial = eo;
                    serial.serial = true;
                    const GroebnerBasis s = reduced_groebner(gens, width, {}, serial);
                    bad += s.str() == base ? 0 : 1;
                    bad += reference::groebner(gens, width) == s.generators() ? 0 : 1;
                }
                return Outcome{std::to_string(cases.size()) + " generator sets, " + std::to_string(bad) + " mismatches",
                               bad == 0};
            });
    run.row(11, "prop.euler_rank", "Euler characteristic equals the module rank", "all resolutions", 0, [&] {
        int count = 0;
        int bad = 0;
        for (const auto& op : zoo_sample()) {
            if (op.nrows() == 0) continue;
            const Resolution r = resolve_module(op.rows(), op.ncols(), op.nvars() + 1, eo);
            ++count;
            bad += r.complete && euler_characteristic(r) == op.ncols() - fraction_rank(op.rows(), op.ncols()) ? 0 : 1;
        }
        return Outcome{std::to_string(count - bad) + "/" + std::to_string(count) + " resolutions", bad == 0};
    });
    run.row(11, "prop.ext_torsion", "ext^i has rank 0 for i >= 1", "all ext modules", 0, [&] {
        int count = 0;
        int bad = 0;
        for (const auto& op : zoo_sample()) {
            if (op.ncols() > 10 || op.nrows() > 10) continue;
            for (int i = 1; i <= op.nvars(); ++i) {
                ++count;
                bad += ext_module(op, i, dopts).rank == 0 ? 0 : 1;
            }
        }
        return Outcome{std::to_string(count - bad) + "/" + std::to_string(count) + " ext modules", bad == 0};
    });
    run.row(11, "prop.exactness", "resolutions are exact in every graded degree up to 4 above the generators",
            "zero defect", 0, [&] {
                int checks = 0;
                int bad = 0;
                for (const auto& op : zoo_sample()) {
                    if (op.ncols() > 10 || op.nrows() == 0) continue;
                    const Resolution r = resolve_module(op.rows(), op.ncols(), op.nvars() + 1, eo);
                    int width = op.ncols();
                    for (size_t k = 0; k < r.steps.size(); ++k) {
                        const auto& rows = r.steps[k];
                        const std::vector<FreeElem> next = k + 1 < r.steps.size() ? r.steps[k + 1]
                                                                                  : std::vector<FreeElem>{};
                        const auto shifts = homogenizing_shifts(rows, width);
                        if (!shifts) {
                            ++bad;
                            break;
                        }
                        int lo = 1 << 20;
                        for (const auto& row : rows) {
                            for (size_t j = 0; j < row.entries().size(); ++j) {
                                if (!row[j].is_zero()) lo = std::min(lo, row[j].degree() + (*shifts)[j]);
                            }
                        }
                        for (int d = lo; d <= lo + 4; ++d) {
                            ++checks;
                            bad += graded_exactness_defect(rows, next, width, d) == 0 ? 0 : 1;
                        }
                        width = static_cast<int>(rows.size());
                    }
                }
                return Outcome{std::to_string(checks) + " degree checks, " + std::to_string(bad) + " defects",
                               bad == 0};
            });
}

}  // namespace

std::vector<Criterion> criteria()
{
    return {{1, "conformal Killing resolutions", 30 + 300 + 1800},
            {2, "Killing resolutions and Euler characteristic", 600},
            {3, "Einstein self-adjointness", 5},
            {4, "Einstein is not parametrizable", 600},
            {5, "div parametrized by curl", 5},
            {6, "plane elasticity and Beltrami", 30},
            {7, "Cosserat couple-stress equations", 5},
            {8, "Lichnerowicz factorization", 600},
            {9, "Einstein factorizations", 5},
            {10, "dimension formulas and see-saw sums", 5},
            {11, "property suites", 600}};
}

std::vector<ReportRow> run(const ReportOptions& opts)
{
    DualityOptions dopts;
    dopts.engine.threads = opts.threads;
    Runner r(opts);
    conformal_rows(r, opts, dopts.engine);
    killing_rows(r, dopts.engine);
    einstein_rows(r, dopts.engine);
    nonparam_rows(r, dopts);
    div_rows(r, dopts);
    elasticity_rows(r, dopts);
    cosserat_rows(r, dopts);
    lichnerowicz_rows(r, dopts);
    factorization_rows(r);
    dimension_rows(r);
    property_rows(r, dopts);
    return r.take();
}

std::vector<CriterionResult> summarize(const std::vector<ReportRow>& rows)
{
    std::vector<CriterionResult> out;
    for (const auto& c : criteria()) {
        CriterionResult res;
        res.criterion = c;
        for (const auto& r : rows) {
            if (r.criterion != c.id) continue;
            ++res.rows;
            res.failed += r.pass ? 0 : 1;
            res.seconds += r.seconds;
        }
        if (res.rows == 0) continue;
        res.pass = res.failed == 0 && res.seconds <= c.limit;
        out.push_back(res);
    }
    return out;
}

std::string to_text(const std::vector<ReportRow>& rows)
{
    std::ostringstream os;
    for (const auto& r : rows) {
        os << (r.pass ? "PASS " : "FAIL ") << std::setw(2) << r.criterion << "  " << std::left << std::setw(30) << r.id
           << std::right << std::fixed << std::setprecision(3) << std::setw(9) << r.seconds << "s  " << r.anchor
           << "\n      expected: " << r.expected << "\n      computed: " << r.computed << "\n";
    }
    for (const auto& c : summarize(rows)) {
        os << "criterion " << c.criterion.id << " (" << c.criterion.title << "): " << (c.pass ? "PASS" : "FAIL") << ", "
           << c.rows - c.failed << "/" << c.rows << " rows, " << std::fixed << std::setprecision(2) << c.seconds
           << "s of " << c.criterion.limit << "s\n";
    }
    return os.str();
}

io::Json to_json(const std::vector<ReportRow>& rows, bool timings)
{
    io::Json arr = io::Json::array();
    for (const auto& r : rows) {
        io::Json j;
        j["criterion"] = r.criterion;
        j["id"] = r.id;
        j["anchor"] = r.anchor;
        j["expected"] = r.expected;
        j["computed"] = r.computed;
        j["pass"] = r.pass;
        if (timings) j["seconds"] = r.seconds;
        arr.push_back(std::move(j));
    }
    io::Json out;
    out["rows"] = std::move(arr);
    bool all = true;
    for (const auto& c : summarize(rows)) all = all && c.pass;
    out["pass"] = all;
    return out;
}

}  // namespace dgcalc::report
