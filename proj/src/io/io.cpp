#include "dgcalc/io.hpp"

#include <fstream>
#include <sstream>

namespace dgcalc::io {

Json bundle_to_json(const Bundle& b)
{
    Json comps = Json::array();
    for (const auto& c : b.components()) {
        Json e;
        e["label"] = c.label;
        e["weight"] = c.weight.str();
        comps.push_back(std::move(e));
    }
    Json j;
    j["name"] = b.name();
    j["components"] = std::move(comps);
    return j;
}

Bundle bundle_from_json(const Json& j)
{
    try {
        std::vector<Component> comps;
        for (const auto& c : j.at("components")) {
            const std::string w = c.contains("weight") ? c.at("weight").get<std::string>() : "1";
            comps.push_back({c.at("label").get<std::string>(), Rational::parse(w)});
        }
        return {j.at("name").get<std::string>(), std::move(comps)};
    } catch (const Json::exception& e) {
        throw FormatError(std::string("bad bundle: ") + e.what());
    }
}

Json op_to_json(const LinDiffOp& op, const std::optional<std::string>& provenance)
{
    Json j;
    j["name"] = op.name();
    j["nvars"] = op.nvars();
    j["source"] = bundle_to_json(op.source());
    j["target"] = bundle_to_json(op.target());
    j["matrix"] = rows_to_json(op.rows());
    if (provenance) j["provenance"] = *provenance;
    return j;
}

OperatorFile op_from_json(const Json& j)
{
    OperatorFile out;
    try {
        const int nvars = j.at("nvars").get<int>();
        Bundle source = bundle_from_json(j.at("source"));
        Bundle target = bundle_from_json(j.at("target"));
        std::vector<FreeElem> rows;
        const auto& m = j.at("matrix");
        if (!m.is_array()) throw FormatError("matrix must be an array of rows");
        for (const auto& row : m) {
            if (static_cast<int>(row.size()) != source.dim()) {
                throw ShapeMismatch("matrix row has " + std::to_string(row.size()) + " entries, source has " +
                                    std::to_string(source.dim()));
            }
            std::vector<Poly> e;
            for (const auto& s : row) e.push_back(parse_poly(s.get<std::string>(), nvars));
            rows.push_back(e.empty() ? FreeElem(nvars, 0) : FreeElem(std::move(e)));
        }
        out.op = LinDiffOp(j.at("name").get<std::string>(), nvars, std::move(source), std::move(target),
                           std::move(rows));
        if (j.contains("provenance")) out.provenance = j.at("provenance").get<std::string>();
    } catch (const Json::exception& e) {
        throw FormatError(std::string("bad operator file: ") + e.what());
    }
    return out;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

OperatorFile read_operator(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open " + path.string());
    Json j;
    try {
        j = Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw FormatError(path.string() + ": " + e.what());
    }
    return op_from_json(j);
}

void write_text(const std::filesystem::path& path, const std::string& text)
{
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << text;
}

void write_operator(const std::filesystem::path& path, const LinDiffOp& op,
                    const std::optional<std::string>& provenance)
{
    write_text(path, dump(op_to_json(op, provenance)));
}

Json rows_to_json(const std::vector<FreeElem>& rows)
{
    Json m = Json::array();
    for (const auto& r : rows) {
        Json row = Json::array();
        for (const auto& p : r.entries()) row.push_back(p.str());
        m.push_back(std::move(row));
    }
    return m;
}

Json resolution_summary(const Resolution& r)
{
    Json j;
    j["nvars"] = r.nvars;
    j["source_width"] = r.source_width;
    j["dims"] = r.dims;
    j["orders"] = r.orders;
    j["complete"] = r.complete;
    j["truncated"] = r.truncated;
    j["euler_characteristic"] = euler_characteristic(r);
    return j;
}

void write_resolution(const std::filesystem::path& dir, const Resolution& r, const LinDiffOp& input)
{
    std::filesystem::create_directories(dir);
    write_text(dir / "summary.json", dump(resolution_summary(r)));
    Bundle src = input.source();
    for (size_t k = 0; k < r.steps.size(); ++k) {
        Bundle tgt = k == 0 ? input.target()
                            : Bundle::numbered("F" + std::to_string(k + 1), "z", static_cast<int>(r.steps[k].size()));
        LinDiffOp op(k == 0 ? input.name() : "step" + std::to_string(k), r.nvars, src, tgt, r.steps[k]);
        write_operator(dir / ("step_" + std::to_string(k) + ".json"), op);
        src = tgt;
    }
}

Json param_report_to_json(const ParamReport& r)
{
    Json j;
    j["input"] = op_to_json(r.input);
    j["adjoint_cc"] = op_to_json(r.adjoint_cc);
    j["parametrization"] = op_to_json(r.parametrization);
    j["recomputed_cc"] = op_to_json(r.recomputed_cc);
    j["parametrizable"] = r.parametrizable;
    Json tors = Json::array();
    for (const auto& t : r.torsion) {
        Json e;
        e["residue"] = rows_to_json({t.residue})[0];
        e["order"] = t.order;
        e["annihilator"] = t.annihilator.str();
        tors.push_back(std::move(e));
    }
    j["torsion_generators"] = std::move(tors);
    j["ext1_zero"] = r.ext1_zero;
    j["ext2_zero"] = r.ext2_zero;
    return j;
}

Json ext_report_to_json(const ExtReport& r)
{
    Json j;
    j["index"] = r.index;
    j["is_zero"] = r.is_zero;
    j["rank"] = r.rank;
    j["presentation_width"] = r.presentation_width;
    j["presentation"] = rows_to_json(r.presentation);
    return j;
}

}  // namespace dgcalc::io
