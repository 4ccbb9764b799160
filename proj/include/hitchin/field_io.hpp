#pragma once

#include <string>

#include "hitchin/cs_family.hpp"
#include "hitchin/hitchin_system.hpp"
#include "hitchin/hk_geometry.hpp"

#include "json.hpp"

namespace hitchin {

// Field file: {"n": int, "N": int, "Lx": float, "Ly": float,
//              "data": [N][N][n][n][2]} with (re, im) leaves, written with
// 17 significant digits so values round-trip bit-exactly. Readers reject
// shape mismatches.
void write_field(const std::string& path, const MatrixField& f);
MatrixField read_field(const std::string& path, const Grid& expected);

// Configuration file: {"a_zbar": <field>, "phi_z": <field>}.
void write_configuration(const std::string& path, const Configuration& c);
Configuration read_configuration(const std::string& path, const Grid& expected);

nlohmann::json to_json(const BilinearReport& r);
nlohmann::json to_json(const LambdaScanReport& r);

// One JSON object per accepted iteration, then a final status record.
void write_trace_jsonl(const std::string& path, const SolveTrace& t);

}  // namespace hitchin
