#include <algorithm>
#include <cstdio>
#include <sstream>

#include "json.hpp"
#include "segal/cli.hpp"

namespace segal::cli {

std::string to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::window_insufficient: return "window-insufficient";
  }
  return "fail";
}

int exit_code(Status s) {
  switch (s) {
    case Status::pass: return 0;
    case Status::fail: return 1;
    case Status::window_insufficient: return 2;
  }
  return 1;
}

int SuiteReport::exit_code() const {
  int code = 0;
  for (const auto& r : reports) {
    // A failure outranks an insufficient window.
    if (r.verdict == Status::fail) return 1;
    if (r.verdict == Status::window_insufficient) code = 2;
  }
  return code;
}

namespace {

using json = nlohmann::ordered_json;

std::string format_ms(double ms) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f", ms);
  return buf;
}

json report_json(const VerificationReport& r, bool timing) {
  json j;
  j["check"] = r.check;
  j["anchor"] = r.anchor;
  j["inputs"] = r.inputs;
  j["window"] = r.window;
  j["verdict"] = to_string(r.verdict);
  j["witness"] = r.witness;
  json details = json::object();
  for (const auto& d : r.details) details[d.key] = d.value;
  j["details"] = details;
  if (timing) j["wall_ms"] = std::stod(format_ms(r.wall_ms));
  return j;
}

std::string joined(const std::vector<std::string>& v) {
  std::string s;
  for (const auto& x : v) s += (s.empty() ? "" : " ") + x;
  return s;
}

}  // namespace

std::string to_json(const VerificationReport& r, bool timing) { return report_json(r, timing).dump(2) + "\n"; }

std::string to_json(const SuiteReport& r, bool timing) {
  json j;
  json list = json::array();
  int counts[3] = {0, 0, 0};
  for (const auto& rep : r.reports) {
    list.push_back(report_json(rep, timing));
    ++counts[static_cast<int>(rep.verdict)];
  }
  j["reports"] = list;
  j["summary"] = {{"pass", counts[0]}, {"fail", counts[1]}, {"window-insufficient", counts[2]}};
  j["exit_code"] = r.exit_code();
  return j.dump(2) + "\n";
}

std::string to_human(const VerificationReport& r, bool timing) {
  std::ostringstream out;
  out << r.check << " [" << r.anchor << "] " << joined(r.inputs) << "\n";
  out << "  window:  " << r.window << "\n";
  out << "  verdict: " << to_string(r.verdict) << "\n";
  if (!r.witness.empty()) out << "  witness: " << r.witness << "\n";
  for (const auto& d : r.details) out << "  " << d.key << ": " << d.value << "\n";
  if (timing) out << "  wall ms: " << format_ms(r.wall_ms) << "\n";
  return out.str();
}

std::string to_human(const SuiteReport& r, bool timing) {
  std::size_t wc = 5, wi = 6, ww = 6;
  for (const auto& rep : r.reports) {
    wc = std::max(wc, rep.check.size());
    wi = std::max(wi, joined(rep.inputs).size());
    ww = std::max(ww, rep.window.size());
  }
  std::ostringstream out;
  auto pad = [](const std::string& s, std::size_t w) { return s + std::string(w - s.size() + 2, ' '); };
  out << pad("check", wc) << pad("inputs", wi) << pad("window", ww) << "verdict";
  if (timing) out << "  ms";
  out << "\n";
  int passed = 0;
  for (const auto& rep : r.reports) {
    out << pad(rep.check, wc) << pad(joined(rep.inputs), wi) << pad(rep.window, ww) << to_string(rep.verdict);
    if (timing) out << "  " << format_ms(rep.wall_ms);
    out << "\n";
    if (!rep.witness.empty()) out << "    " << rep.witness << "\n";
    passed += rep.verdict == Status::pass;
  }
  out << passed << "/" << r.reports.size() << " passed\n";
  return out.str();
}

}  // namespace segal::cli
