#ifndef TPV_REPORT_HPP
#define TPV_REPORT_HPP

#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tpv/part_arith.hpp"

namespace tpv {

enum class Verdict { Verified, Violated, NotApplicable, SkippedResource };

std::string to_string(Verdict v);
Verdict verdict_from_string(const std::string& s);

// Precedence when folding: violated > skipped-resource > verified > not-applicable.
Verdict combine(Verdict a, Verdict b);

constexpr int kReportSchema = 1;

struct VerificationReport {
  std::string lemma_id;
  std::map<std::string, std::string> params;
  Verdict verdict = Verdict::NotApplicable;
  std::optional<std::string> witness;
  std::map<std::string, BigInt> counts;
  std::vector<std::string> notes;
  std::int64_t elapsed_ms = 0;
  std::optional<std::uint64_t> seed;

  // Throws InternalError if a violated report has no witness.
  void check() const;
  bool operator==(const VerificationReport& other) const = default;
};

// Single-line JSON object. With stable, elapsed_ms is written as 0.
std::string to_json(const VerificationReport& r, bool stable = false);
// Unknown fields are ignored; throws InvalidArgument on malformed input or a schema mismatch.
VerificationReport report_from_json(const std::string& line);
// Newline-delimited list.
std::vector<VerificationReport> reports_from_ndjson(const std::string& text);

std::string csv_header();
std::string to_csv_row(const VerificationReport& r, bool stable = false);
std::string to_markdown(const std::vector<VerificationReport>& reports, bool stable = false);

// 0 all verified / not-applicable, 1 any violated, 2 any skipped.
int exit_code_for(const std::vector<VerificationReport>& reports);

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  std::int64_t elapsed_ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

}  // namespace tpv

#endif  // TPV_REPORT_HPP
