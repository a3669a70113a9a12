#include "cbs/io.hpp"

#include <fstream>
#include <sstream>

namespace cbs::io {

namespace {

template <typename T>
T field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ParseError(std::string("field '") + key + "': " + e.what());
  }
}

}  // namespace

json datum_to_json(const CoxeterDatum& d) {
  json m = json::array();
  for (int i = 0; i < d.rank(); ++i) {
    json row = json::array();
    for (int k = 0; k < d.rank(); ++k) row.push_back(d.coxeter_matrix()(i, k));
    m.push_back(row);
  }
  return {{"type", to_string(d.type())}, {"rank", d.rank()}, {"weights", d.weights()}, {"coxeterMatrix", m}};
}

DatumPtr datum_from_json(const json& j, std::size_t cap) {
  const CoxeterType type = parse_coxeter_type(field<std::string>(j, "type"));
  const int rank = field<int>(j, "rank");
  auto weights = field<std::vector<int>>(j, "weights");
  if (type != CoxeterType::Custom) return CoxeterDatum::build(type, rank, std::move(weights), cap);
  const auto rows = field<std::vector<std::vector<int>>>(j, "coxeterMatrix");
  Eigen::MatrixXi m(rank, rank);
  if (static_cast<int>(rows.size()) != rank) throw ParseError("coxeterMatrix must be rank x rank");
  for (int i = 0; i < rank; ++i) {
    if (static_cast<int>(rows[i].size()) != rank) throw ParseError("coxeterMatrix must be rank x rank");
    for (int k = 0; k < rank; ++k) m(i, k) = rows[i][k];
  }
  return CoxeterDatum::custom(m, std::move(weights), cap);
}

json int_matrix_to_json(const IntMatrix& m) {
  json out = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back(m(i, k));
    out.push_back(row);
  }
  return out;
}

IntMatrix int_matrix_from_json(const json& j) {
  const json& arr = j.is_object() ? j.at("entries") : j;
  std::vector<std::vector<std::int64_t>> rows;
  try {
    rows = arr.get<std::vector<std::vector<std::int64_t>>>();
  } catch (const json::exception& e) {
    throw ParseError(std::string("entries must be an array of integer arrays: ") + e.what());
  }
  const auto cols = rows.empty() ? 0 : rows.front().size();
  IntMatrix m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(cols));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw ParseError("entries rows have different lengths");
    for (std::size_t k = 0; k < cols; ++k)
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) = rows[i][k];
  }
  return m;
}

json matrix_to_json(const LabeledDecompMatrix& d) {
  json rows = json::array();
  for (const RowLabel& r : d.rows()) {
    json row = {{"label", r.label}, {"a", r.a}};
    if (r.class_label) row["class"] = *r.class_label;
    if (r.d) row["d"] = *r.d;
    rows.push_back(row);
  }
  return {{"rows", rows}, {"cols", d.cols()}, {"entries", int_matrix_to_json(d.entries())}};
}

LabeledDecompMatrix matrix_from_json(const json& j) {
  std::vector<RowLabel> rows;
  if (!j.is_object() || !j.contains("rows") || !j.at("rows").is_array())
    throw ParseError("matrix file needs a 'rows' array");
  for (const json& r : j.at("rows")) {
    RowLabel row{field<std::string>(r, "label"), field<int>(r, "a"), {}, {}};
    if (r.contains("class")) row.class_label = field<std::string>(r, "class");
    if (r.contains("d")) row.d = field<int>(r, "d");
    rows.push_back(std::move(row));
  }
  auto cols = field<std::vector<std::string>>(j, "cols");
  if (!j.contains("entries")) throw ParseError("missing field 'entries'");
  IntMatrix entries = int_matrix_from_json(j.at("entries"));
  if (entries.rows() == 0) entries.resize(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(cols.size()));
  return {std::move(rows), std::move(cols), std::move(entries)};
}

std::string write_matrix(const LabeledDecompMatrix& d) {
  const json j = matrix_to_json(d);
  std::ostringstream out;
  out << "{\n  \"cols\": " << j["cols"].dump() << ",\n  \"entries\": [";
  const json& entries = j["entries"];
  for (std::size_t i = 0; i < entries.size(); ++i) out << (i ? ",\n    " : "\n    ") << entries[i].dump();
  out << (entries.empty() ? "],\n" : "\n  ],\n") << "  \"rows\": [";
  const json& rows = j["rows"];
  for (std::size_t i = 0; i < rows.size(); ++i) out << (i ? ",\n    " : "\n    ") << rows[i].dump();
  out << (rows.empty() ? "]\n}\n" : "\n  ]\n}\n");
  return out.str();
}

LabeledDecompMatrix read_matrix(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(e.what());
  }
  return matrix_from_json(j);
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw PreconditionError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

LabeledDecompMatrix read_matrix_file(const std::filesystem::path& path) { return read_matrix(read_file(path)); }

json schur_table_to_json(const CoxeterDatum& d, const std::vector<SchurRow>& rows) {
  json reps = json::array();
  for (const SchurRow& r : rows) {
    json f = r.a.f.fits_slong_p() ? json(r.a.f.get_si()) : json(r.a.f.get_str());
    reps.push_back({{"name", r.name}, {"dim", r.dim}, {"schur", to_string(r.schur)},
                    {"aInvariant", r.a.a}, {"fLambda", f}});
  }
  return {{"datum", datum_to_json(d)}, {"reps", reps}};
}

std::vector<SchurRow> schur_table_from_json(const json& j) {
  std::vector<SchurRow> rows;
  if (!j.contains("reps") || !j.at("reps").is_array()) throw ParseError("Schur table needs a 'reps' array");
  for (const json& r : j.at("reps")) {
    SchurRow row;
    row.name = field<std::string>(r, "name");
    row.dim = field<int>(r, "dim");
    row.schur = parse_laurent(field<std::string>(r, "schur"));
    row.a.a = field<int>(r, "aInvariant");
    const json& f = r.at("fLambda");
    row.a.f = f.is_string() ? mpz_class(f.get<std::string>()) : mpz_class(static_cast<long>(f.get<std::int64_t>()));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace cbs::io
