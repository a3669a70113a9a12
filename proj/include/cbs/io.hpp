#pragma once

// JSON interchange: Coxeter data, decomposition matrices, Schur tables.

#include <json.hpp>

#include <filesystem>
#include <string>
#include <vector>

#include "cbs/basicsets.hpp"
#include "cbs/charshur.hpp"
#include "cbs/coxeter.hpp"

namespace cbs::io {

using json = nlohmann::json;

/// {type, rank, weights, coxeterMatrix}
json datum_to_json(const CoxeterDatum& d);
DatumPtr datum_from_json(const json& j, std::size_t cap = kDefaultGroupOrderCap);

/// {rows:[{label, a, class?, d?}], cols:[label], entries:[[int]]}
json matrix_to_json(const LabeledDecompMatrix& d);
LabeledDecompMatrix matrix_from_json(const json& j);

/// Canonical text of a matrix file. A file written by this function reads back
/// and re-serializes to the same bytes.
std::string write_matrix(const LabeledDecompMatrix& d);
LabeledDecompMatrix read_matrix(const std::string& text);
LabeledDecompMatrix read_matrix_file(const std::filesystem::path& path);

/// Accepts a bare [[int]] array or an object with an "entries" member.
IntMatrix int_matrix_from_json(const json& j);
json int_matrix_to_json(const IntMatrix& m);

/// {datum, reps:[{name, dim, schur, aInvariant, fLambda}]}
json schur_table_to_json(const CoxeterDatum& d, const std::vector<SchurRow>& rows);
std::vector<SchurRow> schur_table_from_json(const json& j);

std::string read_file(const std::filesystem::path& path);

}  // namespace cbs::io
