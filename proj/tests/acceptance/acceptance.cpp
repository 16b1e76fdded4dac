// One PASS/FAIL line per acceptance criterion. A criterion passes only when
// every property holds and the wall time stays inside its limit.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "derived_checks.hpp"
#include "segal/bicat.hpp"
#include "segal/bisset.hpp"
#include "segal/fincat.hpp"
#include "segal/sset.hpp"
#include "segal/totalize.hpp"

using namespace segal;

namespace {

struct Outcome {
  std::vector<std::string> failures;
  std::string note;
  void require(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

struct Corpus {
  std::string name;
  fincat::FinCat cat;
};

std::vector<Corpus> corpus() {
  return {
      {"[0]", fincat::interval(0)},
      {"[1]", fincat::interval(1)},
      {"[2]", fincat::interval(2)},
      {"I[1]", fincat::groupoid_interval(1)},
      {"I[2]", fincat::groupoid_interval(2)},
      {"E", fincat::walking_idempotent()},
      {"[1]xI[1]", fincat::product(fincat::interval(1), fincat::groupoid_interval(1))},
  };
}

// I[2] has 3^16 bisimplices in bidegree (3,3); its vertical window stops at 2.
int vertical_window(const std::string& name) { return name == "I[2]" ? 2 : 3; }

fincat::Functor with_objects(const fincat::CatPtr& c, const fincat::CatPtr& d, const std::vector<int>& obj) {
  for (auto& f : fincat::enumerate_functors(c, d))
    if (f.data.obj == obj) return f;
  throw Error("no functor with the requested object images");
}

Outcome criterion1() {
  Outcome o;
  const std::vector<std::pair<std::string, sset::TruncSSet>> sources{
      {"Delta2", sset::standard_simplex(2, 2)},
      {"Lambda2_1", sset::horn(2, 1, 2)},
      {"G3", sset::spine(3, 2)},
      {"J1 dim 3", sset::j_space(1, 3)},
      {"Delta1xDelta1", sset::product(sset::standard_simplex(1, 2), sset::standard_simplex(1, 2))},
  };
  const std::vector<Corpus> targets{{"[1]", fincat::interval(1)},
                                    {"[2]", fincat::interval(2)},
                                    {"I[1]", fincat::groupoid_interval(1)},
                                    {"E", fincat::walking_idempotent()}};
  int pairs = 0;
  for (const auto& [xn, x] : sources) {
    const auto t = sset::tau1(x);
    for (const auto& c : targets) {
      const auto maps = sset::count_maps(x, sset::nerve(c.cat, x.dim()));
      const auto functors = fincat::enumerate_functor_data(t, c.cat).size();
      o.require(maps == functors, xn + " -> " + c.name + ": " + std::to_string(maps) + " maps vs " +
                                      std::to_string(functors) + " functors");
      ++pairs;
    }
  }
  o.note = std::to_string(pairs) + " pairs";
  return o;
}

Outcome criterion2() {
  Outcome o;
  for (int n = 0; n <= 2; ++n)
    for (int m = 0; m <= 2; ++m) {
      auto t = sset::tau1(sset::product(sset::standard_simplex(n, 2), sset::standard_simplex(m, 2)));
      o.require(fincat::isomorphic(t, fincat::product(fincat::interval(n), fincat::interval(m))),
                "tau1 of Delta" + std::to_string(n) + " x Delta" + std::to_string(m));
    }
  o.note = "9 products";
  return o;
}

Outcome criterion3() {
  Outcome o;
  for (const auto& c : corpus()) {
    const int q = vertical_window(c.name);
    auto x = bisset::classifying_diagram(c.cat, 3, q);
    auto s = bisset::segal_check_strict(x);
    o.require(s.ok && s.levels_checked == std::vector<int>{1, 2, 3}, c.name + ": strict Segal " + s.witness);
    o.require(sset::isomorphic(bisset::row(x, 0), sset::nerve(c.cat, 3)), c.name + ": row 0");
    for (int n = 0; n <= 3; ++n) {
      auto iso = fincat::iso_subcategory(fincat::functor_category(fincat::interval(n), c.cat));
      o.require(sset::isomorphic(bisset::column(x, n), sset::nerve(iso, q)), c.name + ": column " + std::to_string(n));
    }
  }
  o.note = "window (3,3), I[2] at (3,2)";
  return o;
}

Outcome criterion4() {
  Outcome o;
  for (const auto& c : corpus())
    o.require(fincat::isomorphic(bisset::ho(bisset::classifying_diagram(c.cat, 2, 2)), c.cat), c.name);
  o.note = "window (2,2)";
  return o;
}

Outcome criterion5() {
  Outcome o;
  for (const auto& c : corpus()) {
    auto v = bisset::is_complete_1trunc(bisset::classifying_diagram(c.cat, 2, 2));
    o.require(v.ok, c.name + ": " + v.witness);
  }
  auto bad = bisset::is_complete_1trunc(bisset::box(sset::nerve(fincat::groupoid_interval(1), 2), sset::point(2)));
  o.require(!bad.ok, "box(nerve(I[1]), Delta0) was accepted");
  o.require(bad.witness.find("2 vs 4") != std::string::npos, "witness lacks the pi0 cardinalities: " + bad.witness);
  o.note = "negative witness: " + bad.witness;
  return o;
}

Outcome criterion6() {
  Outcome o;
  for (const auto& c : corpus()) {
    const int q = vertical_window(c.name);
    auto cp = fincat::share(c.cat);
    auto t = totalize::t_upper_data(sset::share(sset::nerve(c.cat, 2)), 3, q);
    auto nc = bisset::classifying_data(cp, 3, q);
    auto tp = bisset::share(t.object), ncp = bisset::share(nc.object);
    auto cmp = totalize::compare_with_classifying(t, c.cat, nc, tp, ncp);
    o.require(cmp.verdict.ok, "t_upper(nerve " + c.name + "): " + cmp.verdict.witness);
  }
  for (int n = 0; n <= 2; ++n)
    for (int m = 0; m <= 2; ++m) {
      const int w = std::max(n + m, 3);
      auto b = bisset::box(sset::standard_simplex(n, w), sset::standard_simplex(m, w));
      o.require(sset::isomorphic(totalize::t_lower(b, 3), totalize::representable(n, m, 3)),
                "t_lower(box(Delta" + std::to_string(n) + ", Delta" + std::to_string(m) + "))");
    }
  for (const auto& [xname, x] : {std::pair<std::string, fincat::FinCat>{"nerve [1]", fincat::interval(1)},
                                 std::pair<std::string, fincat::FinCat>{"nerve I[1]", fincat::groupoid_interval(1)}}) {
    auto target = sset::share(sset::nerve(x, 2));
    auto check = [&](const std::string& name, const sset::TruncSSet& a, const sset::TruncSSet& b) {
      auto r = totalize::adjunction_count_check(bisset::share(bisset::box(a, b)), target);
      o.require(r.ok, "transposition " + name + ", " + xname + ": " + r.witness);
    };
    check("box(Delta1, Delta0)", sset::standard_simplex(1, 2), sset::point(2));
    check("box(Delta0, Delta1)", sset::point(2), sset::standard_simplex(1, 2));
    check("box(Delta1, Delta1)", sset::standard_simplex(1, 2), sset::standard_simplex(1, 2));
  }
  for (const auto& [name, c] : {std::pair<std::string, fincat::FinCat>{"nerve [1]", fincat::interval(1)},
                                std::pair<std::string, fincat::FinCat>{"nerve [2]", fincat::interval(2)},
                                std::pair<std::string, fincat::FinCat>{"nerve I[1]", fincat::groupoid_interval(1)}}) {
    auto x = sset::share(sset::nerve(c, 2));
    auto k = totalize::counit(x, 2, 2, 2);
    bool bijective = k.lower.object.size(0) == x->size(0);
    std::vector<char> seen(x->size(0), 0);
    for (int v = 0; v < k.lower.object.size(0) && bijective; ++v) {
      const int w = k.map(0, v);
      bijective = !seen[w];
      seen[w] = 1;
    }
    o.require(bijective, "counit on " + name + " is not bijective on vertices");
    auto src = sset::tau1_presented(k.lower.object), tgt = sset::tau1_presented(*x);
    auto f = sset::tau1_map(k.map, src, tgt);
    bool iso = f.src->num_objects() == f.tgt->num_objects() && f.src->num_morphisms() == f.tgt->num_morphisms();
    std::vector<char> hit(f.tgt->num_morphisms(), 0);
    for (int g : f.data.mor) {
      iso = iso && !hit[g];
      hit[g] = 1;
    }
    o.require(iso, "tau1 of the counit on " + name + " is not an isomorphism");
  }
  o.note = "t_upper at (3,3) with I[2] at (3,2); transposition and counit at (2,2)";
  return o;
}

Outcome criterion7() {
  Outcome o;
  auto qc = bicat::Sub2Category::qcat({sset::share(sset::nerve(fincat::interval(1), 2)),
                                       sset::share(sset::nerve(fincat::interval(2), 2)),
                                       sset::share(sset::nerve(fincat::groupoid_interval(1), 2))});
  auto cs = bicat::Sub2Category::css({bisset::share(bisset::classifying_diagram(fincat::interval(0), 2, 2)),
                                      bisset::share(bisset::classifying_diagram(fincat::interval(1), 2, 2)),
                                      bisset::share(bisset::classifying_diagram(fincat::interval(2), 2, 2))});
  long checked = 0;
  for (auto* s : {&qc, &cs}) {
    const std::string side = s->side() == bicat::Side::qcat ? "quasicategories" : "complete Segal spaces";
    for (const auto& [name, r] : {std::pair<std::string, bicat::AxiomReport>{"units", s->check_units()},
                                  std::pair<std::string, bicat::AxiomReport>{"associativity", s->check_associativity()},
                                  std::pair<std::string, bicat::AxiomReport>{"interchange", s->check_interchange()}}) {
      o.require(r.ok && r.checked > 0, side + " " + name + ": " + r.witness);
      checked += r.checked;
    }
  }
  o.note = std::to_string(checked) + " instances";
  return o;
}

Outcome criterion8() {
  Outcome o;
  auto i1 = fincat::share(fincat::groupoid_interval(1));
  auto pt = fincat::share(fincat::interval(0));
  auto one = fincat::share(fincat::interval(1));
  const std::vector<std::pair<std::string, fincat::Functor>> maps{
      {"I[1] -> [0]", with_objects(i1, pt, {0, 0})},
      {"[0] -> I[1]", with_objects(pt, i1, {0})},
      {"[0] -> [1]", with_objects(pt, one, {0})},
      {"[1] -> [0]", with_objects(one, pt, {0, 0})},
  };
  int equivalences = 0;
  for (const auto& [name, f] : maps) {
    auto a = bisset::classifying_data(f.src, 2, 2), b = bisset::classifying_data(f.tgt, 2, 2);
    auto ap = bisset::share(a.object), bp = bisset::share(b.object);
    auto nf = bisset::classifying_map(f, a, b, ap, bp);
    const bool dk = bisset::is_dk_equivalence(nf).ok;
    const bool css = bicat::is_equivalence_2cat(nf).ok;
    o.require(dk == css, name + ": Dwyer-Kan " + std::to_string(dk) + ", 2-categorical " + std::to_string(css));

    auto sn = sset::nerve_map(f, sset::share(sset::nerve(*f.src, 2)), sset::share(sset::nerve(*f.tgt, 2)));
    const bool qcat = bicat::is_equivalence_2cat(sn).ok;
    const bool cat = fincat::is_categorical_equivalence(f).ok;
    o.require(qcat == cat, name + ": nerve 2-categorical " + std::to_string(qcat) + ", categorical " + std::to_string(cat));
    equivalences += cat ? 1 : 0;
  }
  // Both answers occur, so agreement is not vacuous.
  o.require(equivalences == 2, "expected two equivalences among the four maps");
  o.note = std::to_string(equivalences) + " of 4 maps are equivalences";
  return o;
}

Outcome criterion9() {
  Outcome o;
  auto n1 = sset::share(sset::nerve(fincat::interval(1), 3));
  const std::vector<std::pair<std::string, sset::SSetPtr>> xs{
      {"Delta0", sset::share(sset::point(2))},
      {"nerve [1]", sset::share(sset::nerve(fincat::interval(1), 2))},
      {"nerve I[1]", sset::share(sset::nerve(fincat::groupoid_interval(1), 2))},
  };
  for (const auto& [name, x] : xs) {
    auto r = bicat::bridge_check(x, n1);
    o.require(r.dk.ok, "(" + name + ", nerve [1]): " + r.dk.witness);
  }
  o.note = "window (2,2)";
  return o;
}

Outcome criterion10() {
  Outcome o;
  int n = 0;
  for (const auto& r : testing::compare_with_fixture(SEGAL_FIXTURE)) {
    o.require(r.ok, r.key + ": fixture " + r.expected + ", library " + r.actual);
    ++n;
  }
  o.note = std::to_string(n) + " oracle values";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int number;
    const char* title;
    double limit_s;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "adjunction suite", 10, criterion1},
      {2, "tau1 preserves products", 5, criterion2},
      {3, "classifying diagram suite", 30, criterion3},
      {4, "Ho reconstruction", 10, criterion4},
      {5, "completeness discrimination", 5, criterion5},
      {6, "totalization suite", 60, criterion6},
      {7, "2-category axioms", 30, criterion7},
      {8, "equivalence agreement", 60, criterion8},
      {9, "bridge check", 60, criterion9},
      {10, "oracle fixtures", 0, criterion10},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.failures.push_back(std::string("exception: ") + e.what());
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_s > 0 && s >= c.limit_s)
      o.failures.push_back("took " + std::to_string(s) + " s, limit " + std::to_string(c.limit_s) + " s");
    const bool ok = o.failures.empty();
    failed += ok ? 0 : 1;
    char timing[64];
    if (c.limit_s > 0)
      std::snprintf(timing, sizeof timing, "%.2f s < %.0f s", s, c.limit_s);
    else
      std::snprintf(timing, sizeof timing, "%.2f s", s);
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << c.number << ": " << c.title << " (" << timing << ")";
    if (!o.note.empty()) std::cout << " [" << o.note << "]";
    std::cout << "\n";
    for (const auto& f : o.failures) std::cout << "    " << f << "\n";
    std::cout.flush();
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
