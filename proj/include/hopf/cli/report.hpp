// Command reports: ordered human-readable lines, a machine-readable body and
// a verification ledger whose failures set exit status 1.
#pragma once

#include <string>
#include <vector>

#include "hopf/cli/json_io.hpp"

namespace hopf::cli {

struct LedgerEntry {
  std::string label;
  bool passed = false;
  std::string detail;
};

class Report {
 public:
  explicit Report(std::string command) : command_(std::move(command)) {}

  /// A result line "key = human" with its machine value stored under key.
  void value(const std::string& key, const std::string& human, Json machine);
  /// A free-form result line (text output only).
  void line(std::string text) { lines_.push_back(std::move(text)); }
  /// Extra machine-readable data that has no text line.
  Json& data() { return data_; }
  void verify(const std::string& label, bool passed, std::string detail = {});
  /// Text output lists only failed ledger entries plus a count.
  void set_compact(bool compact) { compact_ = compact; }

  bool passed() const;
  int exit_code() const { return passed() ? 0 : 1; }
  const std::vector<LedgerEntry>& ledger() const { return ledger_; }

  std::string text() const;
  /// {"command", "results", "ledger", "status"}; deterministic key order.
  std::string json() const;

 private:
  std::string command_;
  std::vector<std::string> lines_;
  Json data_ = Json::object();
  std::vector<LedgerEntry> ledger_;
  bool compact_ = false;
};

}  // namespace hopf::cli
