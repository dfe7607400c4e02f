#include "polyeuler/serialization.hpp"

#include <sstream>

#include "polyeuler/errors.hpp"

namespace polyeuler {

Json polynomial_to_json(const XLambdaPoly& p) {
  Json out = Json::array();
  for (const LambdaPoly& c : p.coeffs()) {
    Json row = Json::array();
    for (const Rational& r : c.coeffs()) row.push_back(r.to_fraction_string());
    out.push_back(std::move(row));
  }
  return out;
}

XLambdaPoly polynomial_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("polynomial: expected an array of coefficient arrays");
  std::vector<LambdaPoly> xs;
  xs.reserve(j.size());
  for (const Json& row : j) {
    if (!row.is_array()) throw ParseError("polynomial: expected an array of \"p/q\" strings");
    std::vector<Rational> ls;
    ls.reserve(row.size());
    for (const Json& c : row) {
      if (!c.is_string()) throw ParseError("polynomial: coefficient is not a string");
      ls.push_back(Rational::parse(c.get<std::string>()));
    }
    xs.emplace_back(std::move(ls));
  }
  return XLambdaPoly(std::move(xs));
}

namespace {

std::string power(const char* var, int e) {
  if (e == 1) return var;
  return std::string(var) + "^" + std::to_string(e);
}

}  // namespace

std::string polynomial_to_monomials(const XLambdaPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int i = p.degree(); i >= 0; --i) {
    const LambdaPoly c = p[i];
    for (int j = c.degree(); j >= 0; --j) {
      const Rational& r = c.coeffs()[j];
      if (r.is_zero()) continue;
      Rational mag = r.sign() < 0 ? -r : r;
      if (out.empty()) {
        if (r.sign() < 0) out += "-";
      } else {
        out += r.sign() < 0 ? " - " : " + ";
      }
      std::vector<std::string> factors;
      if (!mag.is_one() || (i == 0 && j == 0)) factors.push_back(mag.to_string());
      if (j > 0) factors.push_back(power("lambda", j));
      if (i > 0) factors.push_back(power("x", i));
      for (std::size_t f = 0; f < factors.size(); ++f) {
        if (f) out += "*";
        out += factors[f];
      }
    }
  }
  return out;
}

Json report_to_json(const IdentityReport& r) {
  Json j;
  j["id"] = r.id;
  j["variant"] = r.variant;
  j["class"] = std::string(to_string(r.variant_class));
  j["must_pass"] = r.must_pass;
  j["verdict"] = r.verdict == Verdict::pass ? "pass" : "fail";
  Json range;
  range["empty"] = r.checked_range.empty();
  range["n_min"] = r.checked_range.n_min;
  range["n_max"] = r.checked_range.n_max;
  if (r.checked_range.k_independent) {
    range["k"] = nullptr;
  } else {
    range["k"] = r.checked_range.k;
  }
  j["checked_range"] = std::move(range);
  if (r.first_failure) {
    Json f;
    f["n"] = r.first_failure->n;
    if (r.checked_range.k_independent) {
      f["k"] = nullptr;
    } else {
      f["k"] = r.first_failure->k;
    }
    f["difference"] = polynomial_to_json(r.first_failure->difference);
    j["first_failure"] = std::move(f);
  } else {
    j["first_failure"] = nullptr;
  }
  return j;
}

Json summary_to_json(const SuiteSummary& s) {
  Json j;
  j["total"] = s.total;
  j["passed"] = s.passed;
  j["failed"] = s.failed;
  j["must_pass_failed"] = s.must_pass_failed;
  j["discrepancy_count"] = s.discrepancy_count;
  Json by_class;
  const std::pair<const char*, const SuiteSummary::ClassCount*> classes[] = {
      {"printed", &s.printed}, {"variant", &s.variant}, {"oracle", &s.oracle}, {"reduction", &s.reduction}};
  for (const auto& [name, c] : classes) {
    by_class[name] = {{"passed", c->passed}, {"failed", c->failed}};
  }
  j["by_class"] = std::move(by_class);
  return j;
}

Json suite_to_json(const SuiteResult& result, const Json& header) {
  Json doc;
  doc["header"] = header;
  Json reports = Json::array();
  for (const auto& r : result.reports) reports.push_back(report_to_json(r));
  doc["reports"] = std::move(reports);
  doc["summary"] = summary_to_json(result.summary);
  return doc;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string suite_to_csv(const SuiteResult& result) {
  std::ostringstream os;
  os << "id,variant,class,must_pass,verdict,n_min,n_max,k,failure_n,failure_k\n";
  for (const auto& r : result.reports) {
    std::string ks;
    for (std::size_t i = 0; i < r.checked_range.k.size(); ++i) {
      if (i) ks += ' ';
      ks += std::to_string(r.checked_range.k[i]);
    }
    os << csv_field(r.id) << ',' << csv_field(r.variant) << ',' << to_string(r.variant_class) << ','
       << (r.must_pass ? "true" : "false") << ',' << (r.verdict == Verdict::pass ? "pass" : "fail") << ','
       << r.checked_range.n_min << ',' << r.checked_range.n_max << ',' << ks << ',';
    if (r.first_failure) {
      os << r.first_failure->n << ',';
      if (!r.checked_range.k_independent) os << r.first_failure->k;
    } else {
      os << ',';
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace polyeuler
