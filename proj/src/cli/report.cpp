#include "hopf/cli/report.hpp"

#include <fmt/format.h>

namespace hopf::cli {

void Report::value(const std::string& key, const std::string& human, Json machine) {
  lines_.push_back(fmt::format("{} = {}", key, human));
  data_[key] = std::move(machine);
}

void Report::verify(const std::string& label, bool passed, std::string detail) {
  ledger_.push_back({label, passed, std::move(detail)});
}

bool Report::passed() const {
  for (const LedgerEntry& e : ledger_)
    if (!e.passed) return false;
  return true;
}

std::string Report::text() const {
  std::string out = fmt::format("command: {}\n", command_);
  for (const std::string& l : lines_) out += l + "\n";
  if (!ledger_.empty()) {
    std::size_t passed_count = 0;
    for (const LedgerEntry& e : ledger_) passed_count += e.passed ? 1 : 0;
    out += compact_ ? fmt::format("verification: {} of {} checks passed\n", passed_count, ledger_.size())
                    : std::string("verification:\n");
    for (const LedgerEntry& e : ledger_) {
      if (compact_ && e.passed) continue;
      out += fmt::format("  [{}] {}", e.passed ? "PASS" : "FAIL", e.label);
      if (!e.detail.empty()) out += " (" + e.detail + ")";
      out += "\n";
    }
  }
  out += fmt::format("status: {}\n", passed() ? "ok" : "failed");
  return out;
}

std::string Report::json() const {
  Json j;
  j["command"] = command_;
  j["results"] = data_;
  Json ledger = Json::array();
  for (const LedgerEntry& e : ledger_) ledger.push_back(Json{{"label", e.label}, {"passed", e.passed}, {"detail", e.detail}});
  j["ledger"] = ledger;
  j["status"] = passed() ? "ok" : "failed";
  return j.dump(2) + "\n";
}

}  // namespace hopf::cli
