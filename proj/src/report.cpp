#include "triminor/report.hpp"

#include <ostream>
#include <stdexcept>

#include "json.hpp"

namespace triminor {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::witness: return "witness";
  }
  return "fail";
}

Verdict parse_verdict(std::string_view text) {
  if (text == "pass") return Verdict::pass;
  if (text == "fail") return Verdict::fail;
  if (text == "witness") return Verdict::witness;
  throw std::invalid_argument("unknown verdict '" + std::string(text) + "'");
}

ReportLine::ReportLine(std::string check, std::string input, Verdict verdict, std::string witness,
                       std::int64_t millis)
    : check_(std::move(check)),
      input_(std::move(input)),
      verdict_(verdict),
      witness_(std::move(witness)),
      millis_(millis) {
  if (verdict_ == Verdict::fail && witness_.empty()) {
    throw std::invalid_argument("a failing report record needs a witness payload");
  }
}

std::string ReportLine::to_json() const {
  nlohmann::ordered_json j;
  j["check"] = check_;
  j["input"] = input_;
  j["verdict"] = std::string(to_string(verdict_));
  j["witness"] = witness_;
  j["millis"] = millis_;
  return j.dump();
}

ReportLine ReportLine::from_json(std::string_view line) {
  const auto j = nlohmann::json::parse(line);
  return ReportLine(j.at("check").get<std::string>(), j.at("input").get<std::string>(),
                    parse_verdict(j.at("verdict").get<std::string>()),
                    j.at("witness").get<std::string>(), j.at("millis").get<std::int64_t>());
}

void emit_report(std::span<const ReportLine> lines, std::ostream& out) {
  for (const auto& line : lines) out << line.to_json() << '\n';
}

void ReportWriter::write(ReportLine line) {
  if (!timing_) line.set_millis(0);
  const std::string text = line.to_json();
  std::lock_guard lock(mu_);
  out_ << text << '\n';
  out_.flush();
  ++written_;
  if (line.verdict() == Verdict::fail) ++failures_;
}

int ReportWriter::failures() const {
  std::lock_guard lock(mu_);
  return failures_;
}

int ReportWriter::written() const {
  std::lock_guard lock(mu_);
  return written_;
}

bool ReportSummary::all_passed() const {
  for (const auto& [check, tally] : counts) {
    if (tally.contains("fail")) return false;
  }
  return true;
}

ReportSummary summarize(std::span<const ReportLine> lines) {
  ReportSummary s;
  for (const auto& line : lines) ++s.counts[line.check()][std::string(to_string(line.verdict()))];
  return s;
}

}  // namespace triminor
