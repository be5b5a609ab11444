#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "ncg/fluct.hpp"

namespace ncg {

using json = nlohmann::json;

/// {"rows": R, "cols": C, "data": [[re, im], ...]} in row-major order.
/// Doubles are written in shortest round-trip form, so reading back is exact.
json matrix_to_json(const Mat& m);
Mat matrix_from_json(const json& j);

void write_matrix_file(const std::string& path, const Mat& m);
Mat read_matrix_file(const std::string& path);

/// Field file: optional keys "K", "X", "A", "S" (arrays of four matrices),
/// "phi" and "D_F" (single matrices).
json fields_to_json(const FuzzyData& fz, const FiniteData& fin, const Fluctuation& fl);

json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

/// Shortest decimal that parses back to the same double.
std::string format_double(double x);

}  // namespace ncg
