/**
 * @file dgcalc.cpp
 * @brief Command-line front end: operator files in, operator and report files out.
 *
 * Exit codes: 0 success, 1 other failure, 2 parse error, 3 shape mismatch,
 * 4 budget exceeded, 5 not factorable, 6 failed report rows.
 */
#include "dgcalc/duality.hpp"
#include "dgcalc/io.hpp"
#include "dgcalc/report.hpp"
#include "dgcalc/zoo.hpp"

#include <CLI11.hpp>

#include <iostream>

namespace {

using namespace dgcalc;

struct Common {
    int threads = 0;
    std::string out;
};

EngineOptions engine(const Common& c)
{
    EngineOptions o;
    o.threads = c.threads;
    return o;
}

DualityOptions duality(const Common& c)
{
    DualityOptions o;
    o.engine = engine(c);
    return o;
}

/// Writes JSON to the output path, or to stdout when none was given.
void emit(const Common& c, const io::Json& j)
{
    if (c.out.empty()) {
        std::cout << io::dump(j);
    } else {
        io::write_text(c.out, io::dump(j));
    }
}

void summary(const Common& c, const std::string& text)
{
    (c.out.empty() ? std::cerr : std::cout) << text << "\n";
}

std::string shape(const LinDiffOp& op)
{
    return op.name() + ": " + std::to_string(op.nrows()) + " x " + std::to_string(op.ncols()) + ", order " +
           std::to_string(op.order());
}

std::string join(const std::vector<int>& v)
{
    std::string s = "[";
    for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + "]";
}

int run(int argc, char** argv)
{
    CLI::App app{"Linear differential operators over Q[d1..dn]: compatibility conditions, adjoints, resolutions "
                 "and parametrizations"};
    app.require_subcommand(1);
    Common common;
    app.add_option("--threads", common.threads, "Engine threads (0 = runtime default)");

    auto add_out = [&](CLI::App* sub) { sub->add_option("-o,--output", common.out, "Output path"); };

    std::string file_a;
    std::string file_b;

    auto* cc_cmd = app.add_subcommand("cc", "Generating compatibility conditions");
    cc_cmd->add_option("op", file_a, "Operator file")->required();
    add_out(cc_cmd);

    auto* adj_cmd = app.add_subcommand("adjoint", "Weighted formal adjoint");
    adj_cmd->add_option("op", file_a, "Operator file")->required();
    add_out(adj_cmd);

    auto* comp_cmd = app.add_subcommand("compose", "Composition A o B (B first)");
    comp_cmd->add_option("a", file_a, "Operator applied second")->required();
    comp_cmd->add_option("b", file_b, "Operator applied first")->required();
    add_out(comp_cmd);

    int steps = 0;
    auto* res_cmd = app.add_subcommand("resolve", "Free resolution by iterated syzygies");
    res_cmd->add_option("op", file_a, "Operator file")->required();
    res_cmd->add_option("--steps", steps, "Maximum number of matrices (default n+1)");
    add_out(res_cmd);

    auto* rank_cmd = app.add_subcommand("rank", "Rank over the fraction field and module rank");
    rank_cmd->add_option("op", file_a, "Operator file")->required();

    auto* pt_cmd = app.add_subcommand("paramtest", "Double-duality parametrizability test");
    pt_cmd->add_option("op", file_a, "Operator file")->required();
    add_out(pt_cmd);

    auto* mp_cmd = app.add_subcommand("minparam", "Minimal parametrization by column subsets");
    mp_cmd->add_option("op", file_a, "Operator file")->required();
    add_out(mp_cmd);

    int ext_index = 1;
    bool redundant = false;
    auto* ext_cmd = app.add_subcommand("ext", "Extension module of the adjoint module");
    ext_cmd->add_option("op", file_a, "Operator file")->required();
    ext_cmd->add_option("-i,--index", ext_index, "Index i of ext^i")->check(CLI::NonNegativeNumber);
    ext_cmd->add_flag("--redundant", redundant, "Use a resolution with every generator duplicated");
    add_out(ext_cmd);

    auto* fac_cmd = app.add_subcommand("factor", "Find Q with A = Q o B");
    fac_cmd->add_option("a", file_a, "Operator A")->required();
    fac_cmd->add_option("b", file_b, "Operator B")->required();
    add_out(fac_cmd);

    auto* zoo_cmd = app.add_subcommand("zoo", "Named operators");
    zoo_cmd->require_subcommand(1);
    std::string zoo_name;
    int zoo_n = 3;
    std::string zoo_metric = "euclidean";
    std::string lambda = "1";
    std::string mu = "1";
    int degree_r = 1;
    auto* emit_cmd = zoo_cmd->add_subcommand("emit", "Write a named operator");
    emit_cmd->add_option("name", zoo_name, "Generator name")->required();
    emit_cmd->add_option("--n", zoo_n, "Dimension");
    emit_cmd->add_option("--metric", zoo_metric, "euclidean or minkowski");
    emit_cmd->add_option("--lambda", lambda, "Lame constant lambda (p/q)");
    emit_cmd->add_option("--mu", mu, "Lame constant mu (p/q)");
    emit_cmd->add_option("--r", degree_r, "Form degree for exterior_derivative");
    add_out(emit_cmd);
    auto* list_cmd = zoo_cmd->add_subcommand("list", "List generator names");

    auto* rep_cmd = app.add_subcommand("report", "Regression suites");
    rep_cmd->require_subcommand(1);
    std::string only;
    std::string json_path;
    bool quick = false;
    bool timings = false;
    auto* paper_cmd = rep_cmd->add_subcommand("paper", "Reproduce every checkable published number");
    paper_cmd->add_option("--only", only, "Run rows whose id, description or criterion contains this text");
    paper_cmd->add_option("--json", json_path, "Also write the rows as JSON");
    paper_cmd->add_flag("--quick", quick, "Skip the n=5 conformal resolution");
    paper_cmd->add_flag("--timings", timings, "Include wall times in the JSON output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (*cc_cmd) {
        const LinDiffOp op = io::read_operator(file_a).op;
        const LinDiffOp out = cc(op, engine(common));
        emit(common, io::op_to_json(out));
        summary(common, shape(out) + ", orders " + join(order_profile(out)));
    } else if (*adj_cmd) {
        const LinDiffOp out = adjoint(io::read_operator(file_a).op);
        emit(common, io::op_to_json(out));
        summary(common, shape(out));
    } else if (*comp_cmd) {
        const LinDiffOp out = compose(io::read_operator(file_a).op, io::read_operator(file_b).op);
        emit(common, io::op_to_json(out));
        summary(common, shape(out));
    } else if (*res_cmd) {
        const LinDiffOp op = io::read_operator(file_a).op;
        const int max_steps = steps > 0 ? steps : op.nvars() + 1;
        const Resolution r = resolve_module(op.rows(), op.ncols(), max_steps, engine(common));
        if (!common.out.empty()) io::write_resolution(common.out, r, op);
        std::vector<int> top;
        for (const auto& o : r.orders) top.push_back(o.empty() ? 0 : o.back());
        std::cout << "dims " << join(r.dims) << " orders " << join(top) << " euler " << euler_characteristic(r)
                  << (r.complete ? " complete" : " truncated") << "\n";
    } else if (*rank_cmd) {
        const LinDiffOp op = io::read_operator(file_a).op;
        const int rk = op.nrows() == 0 ? 0 : fraction_rank(op.rows(), op.ncols());
        std::cout << "fraction_rank " << rk << " module_rank " << op.ncols() - rk << "\n";
    } else if (*pt_cmd) {
        const ParamReport r = param_test(io::read_operator(file_a).op, duality(common));
        emit(common, io::param_report_to_json(r));
        if (r.parametrizable) {
            summary(common, "parametrizable; " + std::to_string(r.parametrization.ncols()) + " potentials; ext1 = 0");
        } else {
            summary(common, std::string("NOT parametrizable; ext1 ") + (r.ext1_zero ? "= 0" : "!= 0") + "; " +
                                std::to_string(r.torsion.size()) + " torsion generators");
        }
    } else if (*mp_cmd) {
        const LinDiffOp out = minimal_parametrization(io::read_operator(file_a).op, duality(common));
        emit(common, io::op_to_json(out));
        summary(common, shape(out));
    } else if (*ext_cmd) {
        const ExtReport r = ext_module(io::read_operator(file_a).op, ext_index, duality(common), redundant);
        emit(common, io::ext_report_to_json(r));
        summary(common, "ext^" + std::to_string(r.index) + (r.is_zero ? " = 0" : " != 0") + ", rank " +
                            std::to_string(r.rank));
    } else if (*fac_cmd) {
        const LinDiffOp q = factor_through(io::read_operator(file_a).op, io::read_operator(file_b).op,
                                           engine(common));
        emit(common, io::op_to_json(q));
        summary(common, shape(q) + "; identity A = Q o B verified");
    } else if (*emit_cmd) {
        const LinDiffOp op = zoo::make(zoo_name, zoo_n, zoo::parse_metric_kind(zoo_metric), Rational::parse(lambda),
                                       Rational::parse(mu), degree_r);
        emit(common, io::op_to_json(op));
    } else if (*list_cmd) {
        for (const auto& n : zoo::generator_names()) std::cout << n << "\n";
    } else if (*paper_cmd) {
        report::ReportOptions ro;
        ro.only = only;
        ro.threads = common.threads;
        ro.quick = quick;
        const auto rows = report::run(ro);
        std::cout << report::to_text(rows);
        if (!json_path.empty()) io::write_text(json_path, io::dump(report::to_json(rows, timings)));
        for (const auto& c : report::summarize(rows)) {
            if (!c.pass) return 6;
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv)
{
    try {
        return run(argc, argv);
    } catch (const dgcalc::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const dgcalc::io::FormatError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const dgcalc::ShapeMismatch& e) {
        std::cerr << "shape mismatch: " << e.what() << "\n";
        return 3;
    } catch (const dgcalc::WidthMismatch& e) {
        std::cerr << "shape mismatch: " << e.what() << "\n";
        return 3;
    } catch (const dgcalc::BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return 4;
    } catch (const dgcalc::NotFactorable& e) {
        std::cerr << "not factorable: " << e.what() << "\n";
        return 5;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
