#include <catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <set>

#include "json.hpp"
#include "segal/cli.hpp"

using namespace segal;
using namespace segal::cli;
using Catch::Matchers::ContainsSubstring;

namespace {

Options window(int dim, int p, int q) {
  Options o;
  o.dim = dim;
  o.p = p;
  o.q = q;
  return o;
}

std::filesystem::path scratch_dir() {
  auto dir = std::filesystem::temp_directory_path() / "segal_test_cli";
  std::filesystem::create_directories(dir);
  return dir;
}

std::string write_temp(const std::string& name, const std::string& text) {
  auto p = scratch_dir() / name;
  std::ofstream(p) << text;
  return p.string();
}

std::string error_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const std::exception& e) {
    return e.what();
  }
  return "<no error>";
}

}  // namespace

TEST_CASE("well-formed category files", "[cli][parse]") {
  auto c = parse_fincat("# the arrow\nobj 0 1\nmor f: 0 -> 1\n");
  CHECK(c.num_objects() == 2);
  CHECK(c.num_morphisms() == 3);
  auto e = parse_fincat("obj x\nmor e: x -> x\ncomp e . e = e\n");
  CHECK(fincat::isomorphic(e, fincat::walking_idempotent()));
  for (const auto& id : corpus_categories()) {
    auto k = load_fincat(id);
    CHECK(fincat::isomorphic(parse_fincat(fincat::write_fincat(k)), k));
  }
}

TEST_CASE("category file errors carry line numbers", "[cli][parse]") {
  try {
    parse_fincat("obj 0 1\nmor f: 0 -> 2\n", "bad.fincat");
    FAIL("accepted an unknown object");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK_THAT(std::string(e.what()), ContainsSubstring("bad.fincat"));
    CHECK_THAT(std::string(e.what()), ContainsSubstring("unknown object 2"));
  }
  CHECK_THAT(error_of([] { parse_fincat("obj x\nmor a: x -> x\n"); }), ContainsSubstring("a . a"));
  CHECK_THAT(error_of([] { parse_fincat("obj x\nmor id_x: x -> x\n"); }), ContainsSubstring("reserved"));
  CHECK_THROWS_AS(parse_fincat("object x\n"), ParseError);
}

TEST_CASE("a missing face names the generator and the index", "[cli][parse]") {
  const std::string text =
      "dim 1\n"
      "gen 0 a\n"
      "gen 0 b\n"
      "gen 1 f\n"
      "face f 0 = [] b\n";
  try {
    parse_sset(text, "missing.sset");
    FAIL("accepted a generator without face 1");
  } catch (const ParseError& e) {
    const std::string what = e.what();
    CHECK_THAT(what, ContainsSubstring("generator f"));
    CHECK_THAT(what, ContainsSubstring("face 1"));
    CHECK(e.line() == 4);
  }
}

TEST_CASE("simplicial identity violations name the generator", "[cli][parse]") {
  const std::string text =
      "dim 2\n"
      "gen 0 a\ngen 0 b\ngen 1 f\ngen 2 s\n"
      "face f 0 = [] b\nface f 1 = [] a\n"
      "face s 0 = [] f\nface s 1 = [] f\nface s 2 = [] f\n";
  CHECK_THAT(error_of([&] { parse_sset(text); }), ContainsSubstring("s"));
  CHECK_THROWS_AS(parse_sset(text), InputError);
}

TEST_CASE("a mixed identity violation names both operators", "[cli][parse]") {
  const std::string text =
      "window 1 1\n"
      "gen 0 0 a\ngen 0 0 b\ngen 1 0 f\ngen 0 1 u\ngen 1 1 x\n"
      "hface f 0 = [] b\nhface f 1 = [] a\n"
      "vface u 0 = [] a\nvface u 1 = [] a\n"
      "hface x 0 = [v0] b\nhface x 1 = [] u\n"
      "vface x 0 = [] f\nvface x 1 = [h0] a\n";
  const auto what = error_of([&] { parse_bisset(text, "mixed.bisset"); });
  CHECK_THAT(what, ContainsSubstring("dh0"));
  CHECK_THAT(what, ContainsSubstring("dv1"));
  CHECK_THAT(what, ContainsSubstring("mixed.bisset"));
  CHECK_THROWS_AS(parse_bisset(text), InputError);
}

TEST_CASE("files round-trip through the writers", "[cli][parse]") {
  Options o = window(2, 2, 2);
  for (const std::string id : {"nerve:[2]", "j:1", "product:simplex:1|j:1", "horn:3,1"}) {
    auto x = load_sset(id, o);
    auto y = parse_sset(write_sset_file(*x));
    CHECK(sset::isomorphic(*x, y));
    CHECK(y.coskeletal_level() == x->coskeletal_level());
  }
  for (const std::string id : {"classify:[1]", "box:simplex:1|j:1", "terminal"}) {
    auto x = load_bisset(id, o);
    CHECK(bisset::isomorphic(*x, parse_bisset(write_bisset_file(*x))));
  }
  auto x = load_sset("simplex:1", o), y = load_sset("nerve:[2]", o);
  for (auto& f : sset::enumerate_maps(x, y)) CHECK(parse_sset_map(write_sset_map(f), x, y).img == f.img);
  auto a = load_bisset("box:simplex:1|point", o), b = load_bisset("classify:[1]", o);
  for (auto& f : bisset::enumerate_maps(a, b)) CHECK(parse_bisset_map(write_bisset_map(f), a, b).img == f.img);
}

TEST_CASE("input identifiers", "[cli][inputs]") {
  CHECK(kind_of("[1]xI1") == Kind::fincat);
  CHECK(kind_of("nerve:E") == Kind::sset);
  CHECK(kind_of("classify:I2") == Kind::bisset);
  CHECK(kind_of("functor:[1]->[0]@0,0") == Kind::functor);
  CHECK(load_fincat("I[2]").num_morphisms() == 9);
  CHECK(load_fincat("[1]xI1").num_objects() == 4);
  CHECK_THROWS_AS(load_fincat("Q"), InputError);
  CHECK(load_sset("nerve:[1]", window(3, 3, 3))->dim() == 3);
  CHECK_THROWS_AS(load_sset("missing-file.sset", Options{}), InputError);
  CHECK(load_functor("functor:I1->[0]@0,0").validate().ok);
  // Two functors E -> E fix the object: the identity and the constant at e.
  CHECK_THAT(error_of([] { load_functor("functor:E->E@x"); }), ContainsSubstring("do not determine a unique functor"));
  CHECK_THROWS_AS(load_functor("functor:[1]->[1]@1,0"), InputError);
}

TEST_CASE("exit codes", "[cli][report]") {
  CHECK(exit_code(Status::pass) == 0);
  CHECK(exit_code(Status::fail) == 1);
  CHECK(exit_code(Status::window_insufficient) == 2);
  CHECK(kInputErrorExit == 3);
  SuiteReport s;
  CHECK(s.exit_code() == 0);
  s.reports.push_back({});
  s.reports.back().verdict = Status::window_insufficient;
  CHECK(s.exit_code() == 2);
  s.reports.push_back({});
  s.reports.back().verdict = Status::fail;
  CHECK(s.exit_code() == 1);
}

TEST_CASE("named checks", "[cli][checks]") {
  auto segal = run_check("strict-segal", {"classify:[2]"}, window(2, 3, 3));
  CHECK(segal.verdict == Status::pass);
  CHECK(segal.anchor == "strict-segal-condition");
  CHECK(segal.window == "(3,3)");

  auto complete = run_check("complete-1trunc", {"box:nerve:I1|point"}, window(2, 2, 2));
  CHECK(complete.verdict == Status::fail);
  CHECK_THAT(complete.witness, ContainsSubstring("2 vs 4"));

  auto counit = run_check("counit-tau1-iso", {"nerve:[2]"}, window(2, 2, 2));
  CHECK(counit.verdict == Status::pass);

  auto short_window = run_check("ho-iso", {"classify:[1]", "[1]"}, window(2, 1, 1));
  CHECK(short_window.verdict == Status::window_insufficient);
  CHECK_THAT(short_window.witness, ContainsSubstring("requires p >= 2"));

  CHECK(run_check("dk-equiv", {"functor:[0]->[1]@0"}, window(2, 2, 2)).verdict == Status::fail);
  CHECK(run_check("equiv-search", {"functor:I1->[0]@0,0"}, window(2, 2, 2)).verdict == Status::pass);

  CHECK_THROWS_AS(run_check("no-such-check", {}, Options{}), InputError);
  CHECK_THROWS_AS(run_check("strict-segal", {}, Options{}), InputError);
  CHECK_THROWS_AS(run_check("strict-segal", {"nerve:[1]"}, Options{}), InputError);
}

TEST_CASE("every failing report carries a witness", "[cli][checks]") {
  std::vector<SuiteEntry> entries{
      {"complete-1trunc", {"box:nerve:I1|point"}, window(2, 2, 2)},
      {"ho-iso", {"classify:[1]", "[1]"}, window(2, 1, 1)},
      {"tau1-iso", {"simplex:1", "[2]"}, window(2, 2, 2)},
      {"inner-horns", {"horn:2,1"}, window(2, 2, 2)},
      {"adjunction", {"no-such-file.sset", "[1]"}, window(2, 2, 2)},
  };
  for (const auto& r : verify_suite(entries).reports) {
    CHECK(r.verdict != Status::pass);
    CHECK_FALSE(r.witness.empty());
  }
}

TEST_CASE("the empty suite passes", "[cli][suite]") {
  auto entries = parse_suite(R"({"checks": []})");
  CHECK(entries.empty());
  auto s = verify_suite(entries);
  CHECK(s.reports.empty());
  CHECK(s.exit_code() == 0);
  auto j = nlohmann::json::parse(to_json(s));
  CHECK(j["exit_code"] == 0);
}

TEST_CASE("a broken fixture fails exactly its own check", "[cli][suite]") {
  // Not a Segal space: the spine (01, 12) of the boundary has no 2-simplex.
  const auto not_segal = write_temp("not_segal.bisset",
                                    write_bisset_file(bisset::box(sset::boundary(2, 2), sset::point(2))));
  const auto good = write_temp("good.bisset", write_bisset_file(bisset::classifying_diagram(fincat::interval(2), 2, 2)));
  const std::string config = std::string(R"({"checks": [)") +
                             R"({"check": "strict-segal", "inputs": [")" + good + R"("]},)" +
                             R"({"check": "strict-segal", "inputs": [")" + not_segal + R"("]},)" +
                             R"({"check": "ho-iso", "inputs": [")" + good + R"(", "[2]"]},)" +
                             R"({"check": "tau1-iso", "inputs": ["nerve:[2]", "[2]"], "dim": 2}]})";
  auto s = verify_suite(parse_suite(config));
  REQUIRE(s.reports.size() == 4);
  int failures = 0;
  for (const auto& r : s.reports) {
    if (r.verdict == Status::pass) continue;
    ++failures;
    CHECK(r.check == "strict-segal");
    CHECK(r.inputs == std::vector<std::string>{not_segal});
  }
  CHECK(failures == 1);
  CHECK(s.exit_code() == 1);

  // A file that does not parse becomes a failing report instead of aborting the run.
  const auto garbled = write_temp("garbled.bisset", "window 1 1\ngen 0 0 a\nhface a 0 = [] a\n");
  auto t = verify_suite(parse_suite(std::string(R"({"checks": [{"check": "strict-segal", "inputs": [")") + garbled +
                                    R"("]}, {"check": "strict-segal", "inputs": [")" + good + R"("]}]})"));
  REQUIRE(t.reports.size() == 2);
  CHECK(t.reports[0].verdict != t.reports[1].verdict);
  for (const auto& r : t.reports)
    if (r.verdict == Status::fail) CHECK_THAT(r.witness, ContainsSubstring("input error"));
}

TEST_CASE("suite configs are validated", "[cli][suite]") {
  CHECK_THROWS_AS(parse_suite("not json"), ParseError);
  CHECK_THROWS_AS(parse_suite(R"({"tests": []})"), ParseError);
  CHECK_THROWS_AS(parse_suite(R"({"checks": [{"inputs": []}]})"), ParseError);
  CHECK_THROWS_AS(parse_suite(R"({"checks": [{"check": "x", "window": [1]}]})"), ParseError);
  auto e = parse_suite(R"({"checks": [{"check": "reedy", "inputs": ["classify:[1]"], "dim": 3, "window": [2, 1]}]})");
  REQUIRE(e.size() == 1);
  CHECK(e[0].options.dim == 3);
  CHECK(e[0].options.p == 2);
  CHECK(e[0].options.q == 1);
}

TEST_CASE("reports are deterministic", "[cli][report]") {
  std::vector<SuiteEntry> entries{
      {"tau1-iso", {"product:simplex:1|simplex:1", "[1]x[1]"}, window(2, 2, 2)},
      {"complete-1trunc", {"box:nerve:I1|point"}, window(2, 2, 2)},
      {"adjunction", {"j:1", "E"}, window(3, 2, 2)},
      {"strict-segal", {"classify:E"}, window(2, 2, 2)},
  };
  const auto first = to_json(verify_suite(entries));
  const auto second = to_json(verify_suite(entries));
  CHECK(first == second);
  CHECK(to_human(verify_suite(entries)) == to_human(verify_suite(entries)));
  CHECK(first.find("wall_ms") == std::string::npos);
  CHECK(to_json(verify_suite(entries), true).find("wall_ms") != std::string::npos);

  // Ordered by check name whatever the input order.
  auto s = verify_suite(entries);
  for (std::size_t i = 1; i < s.reports.size(); ++i) CHECK(s.reports[i - 1].check <= s.reports[i].check);

  auto j = nlohmann::json::parse(to_json(s.reports.front()));
  for (const char* key : {"check", "anchor", "inputs", "window", "verdict", "witness", "details"}) CHECK(j.contains(key));
}

TEST_CASE("every anchor is documented", "[cli][docs]") {
  std::ifstream in(SEGAL_CHECKS_DOC);
  REQUIRE(in);
  const std::string doc((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  std::set<std::string> names;
  for (const auto& c : registered_checks()) {
    CHECK(names.insert(c.name).second);
    INFO(c.name);
    CHECK_THAT(doc, ContainsSubstring("`" + c.anchor + "`"));
    CHECK_THAT(doc, ContainsSubstring("`" + c.name + "`"));
  }
  for (const auto& e : default_suite()) CHECK(names.count(e.check) == 1);
}

TEST_CASE("the shipped corpus parses", "[cli][corpus]") {
  const std::filesystem::path dir(SEGAL_CORPUS_DIR);
  REQUIRE(std::filesystem::is_directory(dir));
  int files = 0;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    const auto path = entry.path().string();
    const auto ext = entry.path().extension().string();
    INFO(path);
    if (ext == ".fincat") {
      CHECK_NOTHROW(parse_fincat(read_file(path), path));
    } else if (ext == ".sset") {
      CHECK(parse_sset(read_file(path), path).check_identities().ok);
    } else if (ext == ".bisset") {
      CHECK(parse_bisset(read_file(path), path).check_identities().ok);
    } else {
      continue;
    }
    ++files;
  }
  CHECK(files > 0);
  auto n = parse_sset(read_file((dir / "nerve_ord2.sset").string()));
  CHECK(sset::isomorphic(n, sset::nerve(fincat::interval(2), 3)));
  auto c = parse_bisset(read_file((dir / "classify_ord1_33.bisset").string()));
  CHECK(bisset::isomorphic(c, bisset::classifying_diagram(fincat::interval(1), 3, 3)));
}
