#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "polyeuler/errors.hpp"
#include "polyeuler/identity_suite.hpp"
#include "polyeuler/rational.hpp"
#include "polyeuler/serialization.hpp"

namespace polyeuler::cli {

enum class Command { table, verify, export_stirling };
enum class Format { json, csv };

/// Exit statuses of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitMustPassFailed = 1;
inline constexpr int kExitConfigError = 2;
inline constexpr int kExitOrderViolation = 3;

/// Environment variable naming the directory used when --out is absent.
inline constexpr const char* kOutDirEnv = "POLYEULER_OUT_DIR";

struct RunConfig {
  Command command = Command::table;
  std::string family;
  /// Unset for verify means the per-identity default (12 classical, 10 degenerate).
  std::optional<int> n_max;
  std::vector<int> k;
  /// Unset means symbolic.
  std::optional<Rational> lambda;
  std::optional<Rational> x;
  Format format = Format::json;
  std::string out;
  int order = 16;
  std::vector<std::string> ids;
  VariantSelection variants = VariantSelection::all;
};

/// Bad configuration; the message names the offending field.
class ConfigError : public ParseError {
 public:
  ConfigError(const std::string& field, const std::string& what)
      : ParseError(field + ": " + what), field_(field) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

/// Truncation order below n_max + 2.
class OrderViolation : public Error {
 public:
  using Error::Error;
};

/// Fills unset fields with the defaults of `command` and merges an
/// optional JSON config (flags first, then file, then defaults).
RunConfig resolve(Command command, const Json& flags, const Json& file);

/// Throws OrderViolation unless order >= n_max + 2.
void check_order(const RunConfig& config);

Json table_document(const RunConfig& config);
std::string table_csv(const RunConfig& config);
Json stirling_document(const RunConfig& config);
std::string stirling_csv(const RunConfig& config);

/// Header block with the generation timestamp; every other field of the
/// emitted documents is deterministic.
Json make_header(Command command);

/// Full front end: argv[0] is the program name.
int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);

}  // namespace polyeuler::cli
