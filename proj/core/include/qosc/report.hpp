#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qosc/qnum.hpp"

namespace qosc {

/// One verified identity: residual against a pinned tolerance plus free-form
/// notes (e.g. alternate-form residuals, boundary diagnostics).
struct CheckItem {
  std::string identity;  // frozen key, e.g. "maccontr.b", "fujio", "genhol2.b"
  std::string params;    // human-readable echo of q, dims, Casimirs, window
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  std::vector<std::string> notes;
};

struct VerificationReport {
  std::vector<CheckItem> items;

  CheckItem& add(std::string identity, std::string params, double residual,
                 double tolerance);
  bool all_pass() const;
  double max_residual() const;
  const CheckItem* find(const std::string& identity) const;
  void merge(const VerificationReport& other);
};

/// One cell of the representation-truncation scan.
struct ScanRecord {
  double epsilon = 0.0;
  int k = 0;
  int ell = 0;
  double nu0 = 0.0;
  bool feasible = false;
  double min_margin = 0.0;
  std::optional<int> first_failure;
  bool skipped = false;  // eps too close to a multiple of pi
};

bool operator==(const ScanRecord& a, const ScanRecord& b);

/// Round toward the nearest value representable with 15 significant decimal
/// digits. Serialized numbers pass through this, which makes emit/parse/emit
/// round trips byte-identical.
double sig15(double v);

std::string to_json(const VerificationReport& r);
VerificationReport report_from_json(const std::string& text);

std::string scan_to_json(const std::vector<ScanRecord>& rows);
std::vector<ScanRecord> scan_from_json(const std::string& text);

std::string scan_to_csv(const std::vector<ScanRecord>& rows);
std::vector<ScanRecord> scan_from_csv(const std::string& text);

std::string format_complex(const Complex& z);

}  // namespace qosc
