// hecke-cbs: command-line front end for the canonical basic set toolkit.

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "cbs/basicsets.hpp"
#include "cbs/charshur.hpp"
#include "cbs/combinat.hpp"
#include "cbs/genericity.hpp"
#include "cbs/io.hpp"

namespace fs = std::filesystem;
using namespace cbs;
using json = nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitPrecondition = 2;
constexpr int kExitMathematical = 3;
constexpr int kExitNotCatalogued = 4;

// Bump when the Schur cache format or its contents change.
constexpr const char* kCacheVersion = "schur-cache-v1";

struct Config {
  std::string format = "table";
  std::string cache_dir;
  std::size_t cap = kDefaultGroupOrderCap;

  bool json() const { return format == "json"; }
};

fs::path resolve_cache_dir(const Config& cfg) {
  if (!cfg.cache_dir.empty()) return cfg.cache_dir;
  if (const char* env = std::getenv("HECKE_CACHE_DIR"); env && *env) return env;
  if (const char* home = std::getenv("HOME"); home && *home) return fs::path(home) / ".cache" / "hecke-cbs";
  return fs::temp_directory_path() / "hecke-cbs";
}

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

void print_json(const json& j) { std::cout << j.dump(2) << "\n"; }

void print_table(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width(header.size());
  for (std::size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
  for (const auto& r : rows)
    for (std::size_t c = 0; c < r.size(); ++c) width[c] = std::max(width[c], r[c].size());
  auto line = [&](const std::vector<std::string>& r) {
    for (std::size_t c = 0; c < r.size(); ++c) {
      std::cout << (c ? "  " : "");
      if (c + 1 < r.size())
        std::cout << std::left << std::setw(static_cast<int>(width[c])) << r[c];
      else
        std::cout << r[c];
    }
    std::cout << "\n";
  };
  line(header);
  std::vector<std::string> rule;
  for (auto w : width) rule.emplace_back(w, '-');
  line(rule);
  for (const auto& r : rows) line(r);
}

std::string join(const std::vector<std::string>& v, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + v[i];
  return out;
}

json residue_json(const ResidueSet& s) { return {{"modulus", s.modulus()}, {"residues", s.residues()}}; }

json violations_json(const std::vector<EntryViolation>& vs, const LabeledDecompMatrix& d) {
  json out = json::array();
  for (const auto& v : vs)
    out.push_back({{"row", d.rows()[static_cast<std::size_t>(v.row)].label},
                   {"col", d.cols()[static_cast<std::size_t>(v.col)]},
                   {"rowIndex", v.row},
                   {"colIndex", v.col},
                   {"value", v.value},
                   {"rule", v.rule}});
  return out;
}

void print_violations(const std::vector<EntryViolation>& vs, const LabeledDecompMatrix& d) {
  std::vector<std::vector<std::string>> rows;
  for (const auto& v : vs)
    rows.push_back({d.rows()[static_cast<std::size_t>(v.row)].label, d.cols()[static_cast<std::size_t>(v.col)],
                    std::to_string(v.value), v.rule});
  print_table({"row", "col", "value", "rule"}, rows);
}

// --weights accepts a comma list, `b;a` for type B, or `unitary:s=K` for type B.
struct DatumSpec {
  std::string type;
  std::string weights;
  int rank = 0;
};

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw ParseError("'" + text + "' is not a comma-separated integer list");
    }
  }
  return out;
}

std::pair<CoxeterType, std::vector<int>> resolve_datum(const DatumSpec& spec) {
  const CoxeterType type = parse_coxeter_type(spec.type);
  if (type == CoxeterType::Custom) throw UnsupportedType("custom data are accepted as JSON only");
  int rank = spec.rank;
  if (type == CoxeterType::G2 && rank == 0) rank = 2;
  const std::string& w = spec.weights;
  std::vector<int> weights;
  if (w.rfind("unitary:s=", 0) == 0) {
    if (type != CoxeterType::B) throw InvalidWeights("unitary weights apply to type B only");
    if (rank < 1) throw PreconditionError("unitary weights need --m");
    const std::string s = w.substr(10);
    if (s != "0" && s != "1") throw InvalidWeights("unitary weights need s in {0,1}");
    weights = unitary_weights(rank, s == "1");
  } else if (auto semi = w.find(';'); semi != std::string::npos) {
    if (type != CoxeterType::B) throw InvalidWeights("the pair form b;a applies to type B only");
    if (rank < 1) throw PreconditionError("the pair form b;a needs --m");
    const auto b = parse_int_list(w.substr(0, semi)), a = parse_int_list(w.substr(semi + 1));
    if (b.size() != 1 || a.size() != 1) throw ParseError("expected b;a");
    weights = b_weights(rank, b[0], a[0]);
  } else if (!w.empty()) {
    weights = parse_int_list(w);
    if (rank == 0) rank = static_cast<int>(weights.size());
  } else {
    if (rank < 1) throw PreconditionError("give --weights or a rank");
    weights.assign(static_cast<std::size_t>(rank), 1);
  }
  if (static_cast<int>(weights.size()) != rank)
    throw InvalidWeights("expected " + std::to_string(rank) + " weights, got " + std::to_string(weights.size()));
  return {type, weights};
}

void add_datum_options(CLI::App* cmd, DatumSpec& spec) {
  cmd->add_option("--type", spec.type, "Coxeter type: a, b or g2")->required();
  cmd->add_option("--weights", spec.weights, "weights: 3,1 | b;a | unitary:s=0");
  cmd->add_option("--rank,--m", spec.rank, "rank (m for type B)");
}

// ---------------------------------------------------------------- commands

int cmd_e_value(const Config& cfg, std::int64_t q, std::int64_t ell, std::optional<std::int64_t> a, std::int64_t b) {
  const std::int64_t e = compute_e(q, ell);
  if (!a) {
    if (cfg.json())
      print_json({{"e", e}});
    else
      std::cout << "e = " << e << "\n";
    return kExitOk;
  }
  const GenericityReport r = verify_A_equals_A0(q, *a, b, ell);
  if (cfg.json()) {
    print_json({{"e", r.e}, {"ePrime", r.e_prime}, {"A", residue_json(r.A)}, {"A0", residue_json(r.A0)}, {"equal", r.equal}});
  } else {
    std::cout << "e  = " << r.e << "\ne' = " << r.e_prime << "\nA  = " << to_string(r.A) << "\nA0 = "
              << to_string(r.A0) << "\nA = A0: " << (r.equal ? "yes" : "no") << "\n";
  }
  return r.equal ? kExitOk : kExitMathematical;
}

int cmd_schur(const Config& cfg, const DatumSpec& spec) {
  auto [type, weights] = resolve_datum(spec);
  const DatumPtr datum = build_datum(type, static_cast<int>(weights.size()), weights, cfg.cap);
  const bool g2_builtin = type == CoxeterType::G2 && weights == std::vector<int>{3, 1};
  const std::vector<MatrixRep> reps = g2_builtin ? builtin_g2_reps(datum) : one_dim_reps(datum);

  std::string key = std::string(kCacheVersion) + "\n" + datum->fingerprint();
  for (const auto& r : reps) {
    key += "\n" + r.name;
    for (const auto& m : r.generator_images)
      for (Eigen::Index i = 0; i < m.size(); ++i) key += "|" + to_string(m.data()[i]);
  }
  std::ostringstream name;
  name << "schur-" << std::hex << std::setw(16) << std::setfill('0') << fnv1a(key) << ".json";
  const fs::path path = resolve_cache_dir(cfg) / name.str();

  std::string text;
  if (fs::exists(path)) {
    text = io::read_file(path);
    std::clog << "cache hit: " << path.string() << "\n";
  } else {
    text = io::schur_table_to_json(*datum, schur_table(reps)).dump(2) + "\n";
    std::error_code ec;
    fs::create_directories(path.parent_path(), ec);
    const fs::path tmp = path.string() + ".tmp";
    if (std::ofstream out(tmp, std::ios::binary); out && (out << text)) {
      out.close();
      fs::rename(tmp, path, ec);
    } else {
      std::clog << "warning: could not write cache file " << path.string() << "\n";
    }
  }

  if (cfg.json()) {
    std::cout << text;
    return kExitOk;
  }
  const auto rows = io::schur_table_from_json(json::parse(text));
  std::vector<std::vector<std::string>> out;
  for (const auto& r : rows)
    out.push_back({r.name, std::to_string(r.dim), std::to_string(r.a.a), r.a.f.get_str(), to_string(r.schur)});
  print_table({"name", "dim", "a", "f", "schur"}, out);
  return kExitOk;
}

int report_basic_set(const Config& cfg, const LabeledDecompMatrix& d) {
  const BasicSet b = canonical_basic_set(d);
  if (cfg.json()) {
    json iota = json::array();
    for (std::size_t mu = 0; mu < b.iota.size(); ++mu) {
      const RowLabel& row = d.rows()[static_cast<std::size_t>(b.iota[mu])];
      iota.push_back({{"col", d.cols()[mu]}, {"row", row.label}, {"a", row.a}});
    }
    print_json({{"iota", iota}, {"basicSet", b.label_set(d)}, {"pass", true}});
  } else {
    std::vector<std::vector<std::string>> rows;
    for (std::size_t mu = 0; mu < b.iota.size(); ++mu) {
      const RowLabel& row = d.rows()[static_cast<std::size_t>(b.iota[mu])];
      rows.push_back({d.cols()[mu], row.label, std::to_string(row.a)});
    }
    print_table({"column", "iota", "a"}, rows);
    std::cout << "basic set: {" << join(b.labels(d), ", ") << "}\npass\n";
  }
  return kExitOk;
}

int cmd_basic_set(const Config& cfg, const std::string& input, const DatumSpec& spec, std::optional<int> e) {
  if (!input.empty()) return report_basic_set(cfg, io::read_matrix_file(input));
  if (spec.type.empty() || !e) throw PreconditionError("basic-set needs --input, or --type with --e");
  auto [type, weights] = resolve_datum(spec);
  const CatalogResult r = basic_set_catalog({type, static_cast<int>(weights.size()), weights, *e});
  if (const auto* nc = std::get_if<NotCatalogued>(&r)) {
    if (cfg.json())
      print_json({{"notCatalogued", true}, {"reason", nc->reason}});
    std::cerr << "not catalogued: " << nc->reason << "\n";
    return kExitNotCatalogued;
  }
  const auto& labels = std::get<std::vector<std::string>>(r);
  if (cfg.json())
    print_json({{"basicSet", labels}, {"size", labels.size()}});
  else
    std::cout << "{" << join(labels, "; ") << "}\n" << labels.size() << " elements\n";
  return kExitOk;
}

int cmd_embed(const Config& cfg, const std::string& bip, int s) {
  const Bipartition b = parse_bipartition(bip);
  const Partition p = embed_bipartition(b, s);
  if (cfg.json())
    print_json({{"bipartition", to_string(b)}, {"s", s}, {"partition", to_string(p)}, {"n", p.size()}});
  else
    std::cout << to_string(p) << "\n";
  return kExitOk;
}

int cmd_extract(const Config& cfg, const std::string& part, int s) {
  const Partition p = parse_partition(part);
  const Bipartition b = extract_bipartition(p, s);
  if (cfg.json())
    print_json({{"partition", to_string(p)}, {"s", s}, {"bipartition", to_string(b)}});
  else
    std::cout << to_string(b) << "\n";
  return kExitOk;
}

int cmd_afun(const Config& cfg, const std::string& bip, int s) {
  const Bipartition b = parse_bipartition(bip);
  const int a = a_invariant_unitary(b, s);
  if (cfg.json())
    print_json({{"bipartition", to_string(b)}, {"s", s}, {"partition", to_string(embed_bipartition(b, s))}, {"a", a}});
  else
    std::cout << a << "\n";
  return kExitOk;
}

int cmd_factor(const Config& cfg, const std::string& full_path, const std::string& root_path,
               const std::string& dprime_path) {
  const LabeledDecompMatrix full = io::read_matrix_file(full_path);
  const LabeledDecompMatrix root = io::read_matrix_file(root_path);
  json dj;
  try {
    dj = json::parse(io::read_file(dprime_path));
  } catch (const json::parse_error& e) {
    throw ParseError(e.what());
  }
  const BetaReport r = beta_factorization(full, root, io::int_matrix_from_json(dj));
  if (cfg.json()) {
    json beta = json::array();
    for (std::size_t mu = 0; mu < r.beta.size(); ++mu)
      beta.push_back({{"col", full.cols()[mu]}, {"beta", root.cols()[static_cast<std::size_t>(r.beta[mu])]}});
    print_json({{"beta", beta},
                {"basicSet", r.full.label_set(full)},
                {"basicSetRoot", r.root.label_set(root)},
                {"setsEqual", r.sets_equal},
                {"pass", true}});
  } else {
    std::vector<std::vector<std::string>> rows;
    for (std::size_t mu = 0; mu < r.beta.size(); ++mu)
      rows.push_back({full.cols()[mu], root.cols()[static_cast<std::size_t>(r.beta[mu])],
                      full.rows()[static_cast<std::size_t>(r.full.iota[mu])].label});
    print_table({"column", "beta", "iota"}, rows);
    std::cout << "basic sets equal: " << (r.sets_equal ? "yes" : "no") << "\npass\n";
  }
  return kExitOk;
}

int cmd_verify_triangular(const Config& cfg, const std::string& input) {
  const LabeledDecompMatrix d = io::read_matrix_file(input);
  const UnitriangularReport r = verify_unitriangular(d);
  if (cfg.json()) {
    print_json({{"dominance", r.dominance_ok},
                {"nInvariant", r.n_ok},
                {"consistent", r.consistent},
                {"pass", r.ok()},
                {"violations", violations_json(r.violations, d)}});
  } else {
    std::cout << "dominance phrasing:   " << (r.dominance_ok ? "pass" : "fail") << "\n"
              << "n-invariant phrasing: " << (r.n_ok ? "pass" : "fail") << "\n"
              << "consistent:           " << (r.consistent ? "yes" : "no") << "\n";
    if (!r.violations.empty()) print_violations(r.violations, d);
  }
  return r.ok() ? kExitOk : kExitMathematical;
}

int cmd_verify_shape(const Config& cfg, const std::string& input) {
  const LabeledDecompMatrix d = io::read_matrix_file(input);
  const ShapeReport r = verify_conjecture_shape(d);
  if (cfg.json()) {
    json blocks = json::array();
    for (const auto& b : r.blocks) {
      json labels = json::array();
      for (auto i : b) labels.push_back(d.rows()[static_cast<std::size_t>(i)].label);
      blocks.push_back({{"class", *d.rows()[static_cast<std::size_t>(b.front())].class_label},
                        {"d", *d.rows()[static_cast<std::size_t>(b.front())].d},
                        {"rows", labels}});
    }
    print_json({{"blocks", blocks}, {"pass", r.ok}, {"violations", violations_json(r.violations, d)}});
  } else {
    std::vector<std::vector<std::string>> rows;
    for (const auto& b : r.blocks) {
      std::vector<std::string> labels;
      for (auto i : b) labels.push_back(d.rows()[static_cast<std::size_t>(i)].label);
      rows.push_back({*d.rows()[static_cast<std::size_t>(b.front())].class_label,
                      std::to_string(*d.rows()[static_cast<std::size_t>(b.front())].d), join(labels, "; ")});
    }
    print_table({"class", "d", "rows"}, rows);
    std::cout << (r.ok ? "pass" : "fail") << "\n";
    if (!r.violations.empty()) print_violations(r.violations, d);
  }
  return r.ok ? kExitOk : kExitMathematical;
}

int cmd_sweep(const Config& cfg, std::int64_t max_ell, std::int64_t max_q, std::int64_t max_b) {
  const SweepSummary s = sweep_genericity(max_ell, max_q, max_b);
  if (cfg.json()) {
    print_json({{"cases", s.cases}, {"skipped", s.skipped}, {"failures", s.failures}, {"pass", s.failures.empty()}});
  } else {
    std::cout << "cases:    " << s.cases << "\nskipped:  " << s.skipped << "\nfailures: " << s.failures.size() << "\n";
    for (const auto& f : s.failures) std::cout << "  " << f << "\n";
  }
  return s.failures.empty() ? kExitOk : kExitMathematical;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Canonical basic sets for Iwahori-Hecke algebras"};
  app.require_subcommand(1);
  Config cfg;
  app.add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"json", "table"}));
  app.add_option("--cache-dir", cfg.cache_dir, "Schur cache directory (default $HECKE_CACHE_DIR, then ~/.cache/hecke-cbs)");
  app.add_option("--cap", cfg.cap, "group-order cap");

  std::function<int()> run;

  std::int64_t q = 0, ell = 0, b = 0;
  std::optional<std::int64_t> a;
  auto* ev = app.add_subcommand("e-value", "e, e', A and A0 for q modulo ell");
  ev->add_option("--q", q)->required();
  ev->add_option("--ell", ell)->required();
  ev->add_option("--a", a);
  ev->add_option("--b", b);
  ev->callback([&] { run = [&] { return cmd_e_value(cfg, q, ell, a, b); }; });

  DatumSpec schur_spec;
  auto* schur = app.add_subcommand("schur", "Schur elements and a-invariants (cached)");
  add_datum_options(schur, schur_spec);
  schur->callback([&] { run = [&] { return cmd_schur(cfg, schur_spec); }; });

  DatumSpec bs_spec;
  std::string bs_input;
  std::optional<int> bs_e;
  auto* bs = app.add_subcommand("basic-set", "canonical basic set from a matrix file or the catalog");
  bs->add_option("--type", bs_spec.type, "Coxeter type: a, b or g2");
  bs->add_option("--weights", bs_spec.weights, "weights: 3,1 | b;a | unitary:s=0");
  bs->add_option("--rank,--m", bs_spec.rank, "rank (m for type B)");
  bs->add_option("--e", bs_e);
  bs->add_option("--input", bs_input, "decomposition matrix JSON");
  bs->callback([&] { run = [&] { return cmd_basic_set(cfg, bs_input, bs_spec, bs_e); }; });

  std::string bip, part;
  int s = 0;
  auto* embed = app.add_subcommand("embed", "bipartition of m -> partition of 2m+s");
  embed->add_option("--bipartition", bip)->required();
  embed->add_option("--s", s)->required();
  embed->callback([&] { run = [&] { return cmd_embed(cfg, bip, s); }; });

  auto* extract = app.add_subcommand("extract", "partition of 2m+s -> bipartition of m");
  extract->add_option("--partition", part)->required();
  extract->add_option("--s", s)->required();
  extract->callback([&] { run = [&] { return cmd_extract(cfg, part, s); }; });

  auto* afun = app.add_subcommand("afun", "a-invariant for the unitary weights (2s+1; 2, ..., 2)");
  afun->add_option("--bipartition", bip)->required();
  afun->add_option("--s", s)->required();
  afun->callback([&] { run = [&] { return cmd_afun(cfg, bip, s); }; });

  std::string full, root, dprime;
  auto* factor = app.add_subcommand("factor", "check D = De * D' and the induced map on basic sets");
  factor->add_option("--full", full)->required();
  factor->add_option("--root", root)->required();
  factor->add_option("--dprime", dprime)->required();
  factor->callback([&] { run = [&] { return cmd_factor(cfg, full, root, dprime); }; });

  std::string vt_input, vs_input;
  auto* vt = app.add_subcommand("verify-triangular", "unitriangularity over partition labels");
  vt->add_option("--input", vt_input)->required();
  vt->callback([&] { run = [&] { return cmd_verify_triangular(cfg, vt_input); }; });

  auto* vs = app.add_subcommand("verify-conjecture-shape", "block triangular shape by class label");
  vs->add_option("--input", vs_input)->required();
  vs->callback([&] { run = [&] { return cmd_verify_shape(cfg, vs_input); }; });

  std::int64_t max_ell = 50, max_q = 50, max_b = 3;
  auto* sweep = app.add_subcommand("sweep-genericity", "exhaustive A = A0 and e' checks");
  sweep->add_option("--max-ell", max_ell);
  sweep->add_option("--max-q", max_q);
  sweep->add_option("--max-b", max_b);
  sweep->callback([&] { run = [&] { return cmd_sweep(cfg, max_ell, max_q, max_b); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitPrecondition;
  }

  try {
    return run();
  } catch (const NoCanonicalSet& e) {
    std::cerr << "error: NoCanonicalSet(column " << e.column() << ", " << to_string(e.reason()) << "): " << e.what()
              << "\n";
    return kExitMathematical;
  } catch (const MathematicalFailure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitMathematical;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
