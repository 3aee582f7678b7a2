#include "qosc/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace qosc {

using nlohmann::json;

CheckItem& VerificationReport::add(std::string identity, std::string params,
                                   double residual, double tolerance) {
  CheckItem item;
  item.identity = std::move(identity);
  item.params = std::move(params);
  item.residual = residual;
  item.tolerance = tolerance;
  item.pass = residual < tolerance;
  items.push_back(std::move(item));
  return items.back();
}

bool VerificationReport::all_pass() const {
  return std::all_of(items.begin(), items.end(),
                     [](const CheckItem& c) { return c.pass; });
}

double VerificationReport::max_residual() const {
  double r = 0.0;
  for (const auto& c : items) r = std::max(r, c.residual);
  return r;
}

const CheckItem* VerificationReport::find(const std::string& identity) const {
  for (const auto& c : items) {
    if (c.identity == identity) return &c;
  }
  return nullptr;
}

void VerificationReport::merge(const VerificationReport& other) {
  items.insert(items.end(), other.items.begin(), other.items.end());
}

bool operator==(const ScanRecord& a, const ScanRecord& b) {
  // Doubles compare at serialization granularity, so a parsed record equals
  // the record it was emitted from.
  return sig15(a.epsilon) == sig15(b.epsilon) && a.k == b.k &&
         a.ell == b.ell && sig15(a.nu0) == sig15(b.nu0) &&
         a.feasible == b.feasible &&
         sig15(a.min_margin) == sig15(b.min_margin) &&
         a.first_failure == b.first_failure && a.skipped == b.skipped;
}

double sig15(double v) {
  if (!std::isfinite(v)) return v;
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.15g", v);
  return std::strtod(buf, nullptr);
}

namespace {

json num(double v) { return json(sig15(v)); }

json item_to_json(const CheckItem& c) {
  json j;
  j["identity"] = c.identity;
  j["params"] = c.params;
  j["residual"] = num(c.residual);
  j["tolerance"] = num(c.tolerance);
  j["pass"] = c.pass;
  j["notes"] = c.notes;
  return j;
}

CheckItem item_from_json(const json& j) {
  CheckItem c;
  c.identity = j.at("identity").get<std::string>();
  c.params = j.at("params").get<std::string>();
  c.residual = j.at("residual").get<double>();
  c.tolerance = j.at("tolerance").get<double>();
  c.pass = j.at("pass").get<bool>();
  c.notes = j.at("notes").get<std::vector<std::string>>();
  return c;
}

json record_to_json(const ScanRecord& r) {
  json j;
  j["epsilon"] = num(r.epsilon);
  j["k"] = r.k;
  j["ell"] = r.ell;
  j["nu0"] = r.skipped ? json() : num(r.nu0);
  j["feasible"] = r.feasible;
  j["min_margin"] = r.skipped ? json() : num(r.min_margin);
  j["first_failure"] = r.first_failure ? json(*r.first_failure) : json();
  j["skipped"] = r.skipped;
  return j;
}

ScanRecord record_from_json(const json& j) {
  ScanRecord r;
  r.epsilon = j.at("epsilon").get<double>();
  r.k = j.at("k").get<int>();
  r.ell = j.at("ell").get<int>();
  r.skipped = j.at("skipped").get<bool>();
  if (!j.at("nu0").is_null()) r.nu0 = j.at("nu0").get<double>();
  r.feasible = j.at("feasible").get<bool>();
  if (!j.at("min_margin").is_null())
    r.min_margin = j.at("min_margin").get<double>();
  if (!j.at("first_failure").is_null())
    r.first_failure = j.at("first_failure").get<int>();
  return r;
}

std::string csv_num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.15g", sig15(v));
  return buf;
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : line) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace

std::string to_json(const VerificationReport& r) {
  json j;
  j["checks"] = json::array();
  for (const auto& c : r.items) j["checks"].push_back(item_to_json(c));
  j["all_pass"] = r.all_pass();
  return j.dump(2) + "\n";
}

VerificationReport report_from_json(const std::string& text) {
  const json j = json::parse(text);
  VerificationReport r;
  for (const auto& jc : j.at("checks")) r.items.push_back(item_from_json(jc));
  return r;
}

std::string scan_to_json(const std::vector<ScanRecord>& rows) {
  json j = json::array();
  for (const auto& r : rows) j.push_back(record_to_json(r));
  return j.dump(2) + "\n";
}

std::vector<ScanRecord> scan_from_json(const std::string& text) {
  const json j = json::parse(text);
  std::vector<ScanRecord> rows;
  for (const auto& jr : j) rows.push_back(record_from_json(jr));
  return rows;
}

std::string scan_to_csv(const std::vector<ScanRecord>& rows) {
  std::ostringstream out;
  out << "epsilon,k,ell,nu0,feasible,min_margin,first_failure,skipped\n";
  for (const auto& r : rows) {
    out << csv_num(r.epsilon) << ',' << r.k << ',' << r.ell << ',';
    out << (r.skipped ? "" : csv_num(r.nu0)) << ',';
    out << (r.feasible ? "true" : "false") << ',';
    out << (r.skipped ? "" : csv_num(r.min_margin)) << ',';
    if (r.first_failure) out << *r.first_failure;
    out << ',' << (r.skipped ? "true" : "false") << '\n';
  }
  return out.str();
}

std::vector<ScanRecord> scan_from_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) {
    throw std::invalid_argument("scan_from_csv: empty input");
  }
  if (line != "epsilon,k,ell,nu0,feasible,min_margin,first_failure,skipped") {
    throw std::invalid_argument("scan_from_csv: unexpected header: " + line);
  }
  std::vector<ScanRecord> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto f = split(line, ',');
    if (f.size() != 8) {
      throw std::invalid_argument("scan_from_csv: malformed row: " + line);
    }
    ScanRecord r;
    r.epsilon = std::strtod(f[0].c_str(), nullptr);
    r.k = std::atoi(f[1].c_str());
    r.ell = std::atoi(f[2].c_str());
    r.skipped = (f[7] == "true");
    if (!f[3].empty()) r.nu0 = std::strtod(f[3].c_str(), nullptr);
    r.feasible = (f[4] == "true");
    if (!f[5].empty()) r.min_margin = std::strtod(f[5].c_str(), nullptr);
    if (!f[6].empty()) r.first_failure = std::atoi(f[6].c_str());
    rows.push_back(r);
  }
  return rows;
}

std::string format_complex(const Complex& z) {
  std::ostringstream out;
  out << "(" << csv_num(z.real());
  if (z.imag() >= 0 || std::isnan(z.imag())) out << "+";
  out << csv_num(z.imag()) << "i)";
  return out.str();
}

}  // namespace qosc
