#include "polyeuler/cli.hpp"

#include <algorithm>
#include <chrono>
#include <ctime>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>
#include "polyeuler/errors.hpp"
#include "polyeuler/poly_euler.hpp"
#include "polyeuler/special_sequences.hpp"

namespace polyeuler::cli {

namespace {

const char* const kKnownKeys[] = {"family", "n_max", "k", "lambda", "x", "order", "format", "out", "ids", "variants"};

const char* command_name(Command c) {
  switch (c) {
    case Command::table: return "table";
    case Command::verify: return "verify";
    case Command::export_stirling: return "export-stirling";
  }
  return "";
}

std::string as_text(const std::string& field, const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  throw ConfigError(field, "expected a string or an integer");
}

int parse_int(const std::string& field, const Json& v) {
  const std::string s = as_text(field, v);
  try {
    std::size_t used = 0;
    const int value = std::stoi(s, &used);
    if (used == s.size()) return value;
  } catch (const std::exception&) {
  }
  throw ConfigError(field, "expected an integer, got '" + s + "'");
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream is(s);
  while (std::getline(is, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    if (b != std::string::npos) out.push_back(item.substr(b, e - b + 1));
  }
  return out;
}

std::vector<std::string> as_list(const std::string& field, const Json& v) {
  if (!v.is_array()) return split_list(as_text(field, v));
  std::vector<std::string> out;
  for (const Json& item : v) out.push_back(as_text(field, item));
  return out;
}

std::optional<Rational> parse_point(const std::string& field, const Json& v) {
  const std::string s = as_text(field, v);
  if (s == "symbolic") return std::nullopt;
  try {
    return Rational::parse(s);
  } catch (const ParseError&) {
    throw ConfigError(field, "expected 'symbolic' or a rational p/q, got '" + s + "'");
  }
}

const Json* pick(const Json& flags, const Json& file, const char* key) {
  if (flags.contains(key)) return &flags[key];
  if (file.contains(key)) return &file[key];
  return nullptr;
}

const std::vector<std::string>& table_families() {
  static const std::vector<std::string> f = {"poly_euler", "deg_poly_euler", "poly_bernoulli", "deg_poly_bernoulli",
                                             "euler",      "deg_euler",      "bernoulli",      "deg_bernoulli"};
  return f;
}

const std::vector<std::string>& stirling_families() {
  static const std::vector<std::string> f = {"stirling1", "stirling2", "deg_stirling1", "deg_stirling2"};
  return f;
}

bool k_indexed(const std::string& family) { return family.find("poly_") != std::string::npos; }

std::string point_text(const std::optional<Rational>& p) { return p ? p->to_fraction_string() : "symbolic"; }

XLambdaPoly family_value(const Families& fam, const std::string& family, int n, int k) {
  const SpecialSequences& seq = fam.sequences();
  if (family == "poly_euler") return fam.poly_euler(n, k);
  if (family == "deg_poly_euler") return fam.deg_poly_euler(n, k);
  if (family == "poly_bernoulli") return seq.poly_bernoulli(n, k, PolyBernoulliForm::classical);
  if (family == "deg_poly_bernoulli") return seq.poly_bernoulli(n, k, PolyBernoulliForm::degenerate);
  if (family == "euler") return seq.classical_family(ClassicalFamily::euler, n);
  if (family == "deg_euler") return seq.degenerate_family(ClassicalFamily::euler, n);
  if (family == "bernoulli") return seq.classical_family(ClassicalFamily::bernoulli, n);
  return seq.degenerate_family(ClassicalFamily::bernoulli, n);
}

struct Row {
  int n;
  std::optional<int> k;
  XLambdaPoly value;
};

std::vector<Row> table_rows(const RunConfig& c) {
  check_order(c);
  const Families fam(c.order);
  std::vector<Row> rows;
  const std::vector<std::optional<int>> ks =
      k_indexed(c.family) ? std::vector<std::optional<int>>(c.k.begin(), c.k.end())
                          : std::vector<std::optional<int>>{std::nullopt};
  for (const auto& k : ks) {
    for (int n = 0; n <= *c.n_max; ++n) {
      XLambdaPoly v = family_value(fam, c.family, n, k.value_or(0));
      if (c.lambda) v = specialize_lambda(v, *c.lambda);
      if (c.x) v = specialize_x(v, *c.x);
      rows.push_back({n, k, std::move(v)});
    }
  }
  return rows;
}

std::vector<Row> stirling_rows(const RunConfig& c) {
  const StirlingKind kind = c.family.back() == '1' ? StirlingKind::first : StirlingKind::second;
  const bool degenerate = c.family.starts_with("deg_");
  const StirlingTable table(kind, degenerate, *c.n_max);
  std::vector<Row> rows;
  for (int n = 0; n <= *c.n_max; ++n) {
    for (int k = 0; k <= n; ++k) {
      XLambdaPoly v = embed(table.at(n, k));
      if (c.lambda) v = specialize_lambda(v, *c.lambda);
      rows.push_back({n, k, std::move(v)});
    }
  }
  return rows;
}

Json rows_document(const RunConfig& c, const std::vector<Row>& rows) {
  Json doc;
  doc["header"] = make_header(c.command);
  doc["family"] = c.family;
  doc["n_max"] = *c.n_max;
  if (c.command == Command::table && k_indexed(c.family)) {
    doc["k"] = c.k;
  } else {
    doc["k"] = nullptr;
  }
  doc["lambda"] = point_text(c.lambda);
  if (c.command == Command::table) {
    doc["x"] = point_text(c.x);
    doc["order"] = c.order;
  }
  Json out = Json::array();
  for (const Row& r : rows) {
    Json row;
    row["n"] = r.n;
    if (r.k) {
      row["k"] = *r.k;
    } else {
      row["k"] = nullptr;
    }
    row["value"] = polynomial_to_json(r.value);
    out.push_back(std::move(row));
  }
  doc["rows"] = std::move(out);
  return doc;
}

std::string rows_csv(const std::vector<Row>& rows) {
  std::string out = "n,k,value\n";
  for (const Row& r : rows) {
    out += std::to_string(r.n) + ',' + (r.k ? std::to_string(*r.k) : std::string()) + ',' +
           csv_field(polynomial_to_monomials(r.value)) + '\n';
  }
  return out;
}

int emit(const RunConfig& c, const std::string& text, std::ostream& out, std::ostream& err) {
  std::filesystem::path path = c.out;
  if (path.empty()) {
    const char* dir = std::getenv(kOutDirEnv);
    if (dir == nullptr || *dir == '\0') {
      out << text;
      return kExitOk;
    }
    std::string name = command_name(c.command);
    if (c.command != Command::verify) name += "-" + c.family;
    path = std::filesystem::path(dir) / (name + (c.format == Format::json ? ".json" : ".csv"));
  }
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream f(path, std::ios::binary);
  f << text;
  if (!f) {
    err << "error: cannot write " << path.string() << "\n";
    return kExitConfigError;
  }
  err << "wrote " << path.string() << "\n";
  return kExitOk;
}

int cmd_verify(const RunConfig& c, std::ostream& out, std::ostream& err) {
  if (c.n_max) check_order(c);
  const Families fam(c.order);
  SuiteOptions options;
  options.n_max = c.n_max;
  options.k_set = c.k;
  options.variants = c.variants;
  options.ids = c.ids;
  SuiteResult result;
  try {
    result = run_suite(fam, options);
  } catch (const OrderExceeded& e) {
    throw OrderViolation(std::string("order: ") + e.what());
  }
  std::string text;
  if (c.format == Format::json) {
    Json header = make_header(c.command);
    Json runtimes;
    double total = 0;
    for (const auto& r : result.reports) {
      runtimes[r.id + "/" + r.variant] = r.runtime_ms;
      total += r.runtime_ms;
    }
    header["total_runtime_ms"] = total;
    header["runtime_ms"] = std::move(runtimes);
    text = suite_to_json(result, header).dump(2) + "\n";
  } else {
    text = suite_to_csv(result);
  }
  const int status = emit(c, text, out, err);
  if (status != kExitOk) return status;
  err << "verify: " << result.summary.passed << " passed, " << result.summary.failed << " failed, "
      << "must-pass failures " << result.summary.must_pass_failed << ", discrepancy count "
      << result.summary.discrepancy_count << "\n";
  return result.all_must_pass_satisfied() ? kExitOk : kExitMustPassFailed;
}

}  // namespace

RunConfig resolve(Command command, const Json& flags, const Json& file) {
  if (!file.is_null() && !file.is_object()) throw ConfigError("config", "expected a JSON object");
  if (file.is_object()) {
    for (const auto& [key, _] : file.items()) {
      bool known = false;
      for (const char* k : kKnownKeys) known = known || key == k;
      if (!known) throw ConfigError(key, "unknown configuration key");
    }
  }
  RunConfig c;
  c.command = command;

  switch (command) {
    case Command::table:
      c.family = "poly_euler";
      c.n_max = 8;
      c.k = {1};
      break;
    case Command::verify:
      c.k = {-2, -1, 0, 1, 2, 3};
      break;
    case Command::export_stirling:
      c.family = "stirling2";
      c.n_max = 10;
      break;
  }

  if (const Json* v = pick(flags, file, "family")) {
    c.family = as_text("family", *v);
    const auto& allowed = command == Command::export_stirling ? stirling_families() : table_families();
    if (command == Command::verify) throw ConfigError("family", "not used by verify");
    if (std::find(allowed.begin(), allowed.end(), c.family) == allowed.end()) {
      throw ConfigError("family", "unknown family '" + c.family + "'");
    }
  }
  if (const Json* v = pick(flags, file, "n_max")) {
    c.n_max = parse_int("n_max", *v);
    if (*c.n_max < 0) throw ConfigError("n_max", "must be nonnegative");
  }
  if (const Json* v = pick(flags, file, "order")) {
    c.order = parse_int("order", *v);
    if (c.order < 0) throw ConfigError("order", "must be nonnegative");
  }
  if (const Json* v = pick(flags, file, "k")) {
    c.k.clear();
    for (const auto& item : as_list("k", *v)) c.k.push_back(parse_int("k", item));
    if (c.k.empty()) throw ConfigError("k", "empty list");
  }
  if (const Json* v = pick(flags, file, "lambda")) c.lambda = parse_point("lambda", *v);
  if (const Json* v = pick(flags, file, "x")) c.x = parse_point("x", *v);
  if (const Json* v = pick(flags, file, "format")) {
    const std::string f = as_text("format", *v);
    if (f == "json") {
      c.format = Format::json;
    } else if (f == "csv") {
      c.format = Format::csv;
    } else {
      throw ConfigError("format", "expected json or csv, got '" + f + "'");
    }
  }
  if (const Json* v = pick(flags, file, "out")) c.out = as_text("out", *v);
  if (const Json* v = pick(flags, file, "ids")) c.ids = as_list("ids", *v);
  if (const Json* v = pick(flags, file, "variants")) {
    const std::string s = as_text("variants", *v);
    if (s == "all") {
      c.variants = VariantSelection::all;
    } else if (s == "printed-only") {
      c.variants = VariantSelection::printed_only;
    } else {
      throw ConfigError("variants", "expected all or printed-only, got '" + s + "'");
    }
  }
  return c;
}

void check_order(const RunConfig& c) {
  if (c.n_max && c.order < *c.n_max + 2) {
    throw OrderViolation("order: truncation order " + std::to_string(c.order) + " is below n_max + 2 = " +
                         std::to_string(*c.n_max + 2));
  }
}

Json table_document(const RunConfig& c) { return rows_document(c, table_rows(c)); }
std::string table_csv(const RunConfig& c) { return rows_csv(table_rows(c)); }
Json stirling_document(const RunConfig& c) { return rows_document(c, stirling_rows(c)); }
std::string stirling_csv(const RunConfig& c) { return rows_csv(stirling_rows(c)); }

Json make_header(Command command) {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm utc{};
  gmtime_r(&now, &utc);
  char stamp[32];
  std::strftime(stamp, sizeof stamp, "%Y-%m-%dT%H:%M:%SZ", &utc);
  Json h;
  h["tool"] = "polyeuler";
  h["command"] = command_name(command);
  h["generated_at"] = stamp;
  return h;
}

int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact tables and identity verification for degenerate poly-Euler polynomials"};
  app.require_subcommand(1);

  std::map<std::string, std::string> given;
  std::string config_path;
  auto add_common = [&](CLI::App* sub, bool verify) {
    auto opt = [&](const char* flag, const char* key, const char* help) {
      sub->add_option_function<std::string>(flag, [&given, key](const std::string& v) { given[key] = v; }, help);
    };
    if (!verify) opt("--family", "family", "family to tabulate");
    opt("--n-max", "n_max", "largest index n");
    opt("--k", "k", "comma separated k values");
    if (!verify) {
      opt("--lambda", "lambda", "symbolic or p/q");
      opt("--x", "x", "symbolic or p/q");
    }
    opt("--order", "order", "series truncation order");
    opt("--format", "format", "json or csv");
    opt("--out", "out", "output file");
    if (verify) {
      opt("--ids", "ids", "comma separated identity ids");
      opt("--variants", "variants", "all or printed-only");
    }
    sub->add_option("--config", config_path, "JSON configuration file; flags override it");
  };
  CLI::App* table = app.add_subcommand("table", "tabulate a polynomial family");
  CLI::App* verify = app.add_subcommand("verify", "run the identity suite");
  CLI::App* stirling = app.add_subcommand("export-stirling", "tabulate Stirling numbers");
  add_common(table, false);
  add_common(verify, true);
  add_common(stirling, false);
  stirling->remove_option(stirling->get_option("--x"));

  std::vector<std::string> args(argv.rbegin(), argv.rend() - 1);
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::Success&) {
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitConfigError;
  }

  Command command = Command::table;
  if (verify->parsed()) command = Command::verify;
  if (stirling->parsed()) command = Command::export_stirling;

  try {
    Json flags = Json::object();
    for (const auto& [k, v] : given) flags[k] = v;
    Json file;
    if (!config_path.empty()) {
      std::ifstream in(config_path);
      if (!in) throw ConfigError("config", "cannot read " + config_path);
      try {
        file = Json::parse(in);
      } catch (const Json::parse_error& e) {
        throw ConfigError("config", e.what());
      }
    }
    const RunConfig c = resolve(command, flags, file);
    switch (command) {
      case Command::table:
        check_order(c);
        return emit(c, c.format == Format::json ? table_document(c).dump(2) + "\n" : table_csv(c), out, err);
      case Command::export_stirling:
        return emit(c, c.format == Format::json ? stirling_document(c).dump(2) + "\n" : stirling_csv(c), out, err);
      case Command::verify:
        return cmd_verify(c, out, err);
    }
  } catch (const UnknownIdentity& e) {
    err << "error: ids: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const OrderViolation& e) {
    err << "error: " << e.what() << "\n";
    return kExitOrderViolation;
  }
  return kExitOk;
}

}  // namespace polyeuler::cli
