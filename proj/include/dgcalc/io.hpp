/**
 * @file io.hpp
 * @brief JSON serialization of operators, resolutions and duality reports.
 *
 * Field order is fixed and every number is an exact rational written as a
 * string, so equal values always produce byte-identical files.
 */
#pragma once

#include "dgcalc/diffop.hpp"
#include "dgcalc/duality.hpp"

#include <json.hpp>

#include <filesystem>
#include <optional>
#include <string>

namespace dgcalc::io {

using Json = nlohmann::ordered_json;

/// Malformed operator file or polynomial entry.
class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct OperatorFile {
    LinDiffOp op;
    std::optional<std::string> provenance;
};

Json bundle_to_json(const Bundle& b);
Bundle bundle_from_json(const Json& j);

Json op_to_json(const LinDiffOp& op, const std::optional<std::string>& provenance = std::nullopt);
OperatorFile op_from_json(const Json& j);

/// Pretty-printed with two-space indent and a trailing newline.
std::string dump(const Json& j);

OperatorFile read_operator(const std::filesystem::path& path);
void write_operator(const std::filesystem::path& path, const LinDiffOp& op,
                    const std::optional<std::string>& provenance = std::nullopt);
void write_text(const std::filesystem::path& path, const std::string& text);

Json rows_to_json(const std::vector<FreeElem>& rows);
Json resolution_summary(const Resolution& r);
/// Writes summary.json and step_<k>.json (one operator per step) into dir.
void write_resolution(const std::filesystem::path& dir, const Resolution& r, const LinDiffOp& input);

Json param_report_to_json(const ParamReport& r);
Json ext_report_to_json(const ExtReport& r);

}  // namespace dgcalc::io
