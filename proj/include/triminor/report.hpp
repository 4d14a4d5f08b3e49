#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <mutex>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace triminor {

enum class Verdict { pass, fail, witness };

std::string_view to_string(Verdict v);
Verdict parse_verdict(std::string_view text);

/// One self-contained report record. A failing record always carries a witness.
class ReportLine {
 public:
  ReportLine(std::string check, std::string input, Verdict verdict, std::string witness = {},
             std::int64_t millis = 0);

  const std::string& check() const { return check_; }
  const std::string& input() const { return input_; }
  Verdict verdict() const { return verdict_; }
  const std::string& witness() const { return witness_; }
  std::int64_t millis() const { return millis_; }
  void set_millis(std::int64_t ms) { millis_ = ms; }

  /// Single-line JSON object with keys check, input, verdict, witness, millis (in that order).
  std::string to_json() const;
  static ReportLine from_json(std::string_view line);

  bool operator==(const ReportLine&) const = default;

 private:
  std::string check_;
  std::string input_;
  Verdict verdict_;
  std::string witness_;
  std::int64_t millis_;
};

void emit_report(std::span<const ReportLine> lines, std::ostream& out);

/// Serializes records from any number of producer threads onto one stream.
class ReportWriter {
 public:
  explicit ReportWriter(std::ostream& out, bool timing = true) : out_(out), timing_(timing) {}
  void write(ReportLine line);
  int failures() const;
  int written() const;

 private:
  std::ostream& out_;
  bool timing_;
  mutable std::mutex mu_;
  int failures_ = 0;
  int written_ = 0;
};

/// Verdict tallies per check id; independent of record order.
struct ReportSummary {
  std::map<std::string, std::map<std::string, int>> counts;
  bool all_passed() const;
  bool operator==(const ReportSummary&) const = default;
};

ReportSummary summarize(std::span<const ReportLine> lines);

}  // namespace triminor
