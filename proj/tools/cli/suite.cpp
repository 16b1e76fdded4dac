#include <algorithm>

#include "json.hpp"
#include "segal/cli.hpp"

namespace segal::cli {

namespace {

Options with(int dim, int p, int q) {
  Options o;
  o.dim = dim;
  o.p = p;
  o.q = q;
  return o;
}

// I[2] has 3^16 bisimplices at (3,3), so it runs one vertical level lower.
Options classifying_window(const std::string& c) { return c == "I2" ? with(2, 3, 2) : with(2, 3, 3); }

}  // namespace

std::vector<SuiteEntry> default_suite() {
  std::vector<SuiteEntry> s;
  const std::vector<std::string> targets{"[1]", "[2]", "I1", "E"};
  const std::vector<std::pair<std::string, int>> sources{
      {"simplex:2", 2}, {"horn:2,1", 2}, {"spine:3", 2}, {"j:1", 3}, {"product:simplex:1|simplex:1", 2}};
  for (const auto& [x, d] : sources)
    for (const auto& c : targets) s.push_back({"adjunction", {x, c}, with(d, 3, 3)});
  for (int n = 0; n <= 2; ++n)
    for (int m = 0; m <= 2; ++m) {
      const std::string a = "simplex:" + std::to_string(n), b = "simplex:" + std::to_string(m);
      s.push_back({"tau1-iso", {"product:" + a + "|" + b, "[" + std::to_string(n) + "]x[" + std::to_string(m) + "]"},
                   with(2, 3, 3)});
    }
  for (const auto& c : corpus_categories()) {
    s.push_back({"inner-horns", {"nerve:" + c}, with(3, 3, 3)});
    s.push_back({"strict-segal", {"classify:" + c}, classifying_window(c)});
    s.push_back({"classifying-rows-columns", {c}, classifying_window(c)});
    s.push_back({"ho-iso", {"classify:" + c, c}, with(2, 2, 2)});
    s.push_back({"complete-1trunc", {"classify:" + c}, with(2, 2, 2)});
    s.push_back({"t-upper-classifying", {c}, classifying_window(c)});
  }
  for (int n = 0; n <= 2; ++n)
    for (int m = 0; m <= 2; ++m) s.push_back({"t-lower-box", {std::to_string(n), std::to_string(m)}, with(3, 3, 3)});
  for (const auto& y : {"box:simplex:1|point", "box:point|simplex:1", "box:simplex:1|simplex:1"})
    for (const auto& x : {"nerve:[1]", "nerve:I1"}) s.push_back({"transposition", {y, x}, with(2, 2, 2)});
  for (const auto& x : {"nerve:[1]", "nerve:[2]", "nerve:I1"}) s.push_back({"counit-tau1-iso", {x}, with(2, 2, 2)});
  s.push_back({"two-category-axioms", {"nerve:[1]", "nerve:[2]", "nerve:I1"}, with(2, 2, 2)});
  s.push_back({"two-category-axioms", {"classify:[0]", "classify:[1]", "classify:[2]"}, with(2, 2, 2)});
  for (const auto& f : {"functor:I1->[0]@0,0", "functor:[0]->I1@0", "functor:[0]->[1]@0", "functor:[1]->[0]@0,0"}) {
    s.push_back({"dk-vs-2cat", {f}, with(2, 2, 2)});
    s.push_back({"nerve-2cat-vs-categorical", {f}, with(2, 2, 2)});
  }
  for (const auto& [x, y] : std::vector<std::pair<std::string, std::string>>{
           {"point", "nerve:[1]"}, {"nerve:[1]", "nerve:[1]"}, {"nerve:I1", "nerve:[1]"}})
    s.push_back({"bridge", {x, y}, with(2, 2, 2)});
  return s;
}

std::vector<SuiteEntry> parse_suite(std::string_view json_text, const std::string& file) {
  using json = nlohmann::json;
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ParseError(file, 0, std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("checks") || !doc["checks"].is_array())
    throw ParseError(file, 0, "expected an object with a \"checks\" array");
  std::vector<SuiteEntry> out;
  int index = 0;
  for (const auto& e : doc["checks"]) {
    const std::string where = "entry " + std::to_string(index++);
    if (!e.is_object() || !e.contains("check") || !e["check"].is_string())
      throw ParseError(file, 0, where + ": missing \"check\" name");
    SuiteEntry entry;
    entry.check = e["check"].get<std::string>();
    if (e.contains("inputs")) {
      if (!e["inputs"].is_array()) throw ParseError(file, 0, where + ": \"inputs\" must be an array of strings");
      for (const auto& i : e["inputs"]) {
        if (!i.is_string()) throw ParseError(file, 0, where + ": \"inputs\" must be an array of strings");
        entry.inputs.push_back(i.get<std::string>());
      }
    }
    if (e.contains("dim")) {
      if (!e["dim"].is_number_integer() || e["dim"].get<int>() < 0) throw ParseError(file, 0, where + ": bad \"dim\"");
      entry.options.dim = e["dim"].get<int>();
    }
    if (e.contains("window")) {
      const auto& w = e["window"];
      if (!w.is_array() || w.size() != 2 || !w[0].is_number_integer() || !w[1].is_number_integer() || w[0].get<int>() < 0 ||
          w[1].get<int>() < 0)
        throw ParseError(file, 0, where + ": \"window\" must be [p, q]");
      entry.options.p = w[0].get<int>();
      entry.options.q = w[1].get<int>();
    }
    out.push_back(std::move(entry));
  }
  return out;
}

SuiteReport verify_suite(const std::vector<SuiteEntry>& entries) {
  SuiteReport s;
  for (const auto& e : entries) {
    try {
      s.reports.push_back(run_check(e.check, e.inputs, e.options));
    } catch (const InputError& err) {
      VerificationReport r;
      r.check = e.check;
      for (const auto& c : registered_checks())
        if (c.name == e.check) r.anchor = c.anchor;
      r.inputs = e.inputs;
      r.window = "(" + std::to_string(e.options.p) + "," + std::to_string(e.options.q) + ")";
      r.verdict = Status::fail;
      r.witness = std::string("input error: ") + err.what();
      s.reports.push_back(std::move(r));
    }
  }
  std::stable_sort(s.reports.begin(), s.reports.end(), [](const VerificationReport& a, const VerificationReport& b) {
    return std::tie(a.check, a.inputs) < std::tie(b.check, b.inputs);
  });
  return s;
}

}  // namespace segal::cli
