#include <catch_amalgamated.hpp>

#include "segal/bisset.hpp"

using namespace segal;
using namespace segal::bisset;
using Catch::Matchers::ContainsSubstring;

namespace {

fincat::FinCat small_corpus(int i) {
  switch (i) {
    case 0: return fincat::interval(0);
    case 1: return fincat::interval(1);
    case 2: return fincat::interval(2);
    case 3: return fincat::groupoid_interval(1);
    default: return fincat::walking_idempotent();
  }
}

fincat::Functor with_objects(const fincat::CatPtr& c, const fincat::CatPtr& d, const std::vector<int>& obj) {
  for (auto& f : fincat::enumerate_functors(c, d))
    if (f.data.obj == obj) return f;
  FAIL("no functor with these object images");
  return {};
}

BiSSetMap classifying_of(const fincat::Functor& f, int p, int q) {
  auto a = classifying_data(f.src, p, q);
  auto b = classifying_data(f.tgt, p, q);
  auto ap = share(a.object), bp = share(b.object);
  return classifying_map(f, a, b, ap, bp);
}

}  // namespace

TEST_CASE("bidegree order sorts by total degree", "[bisset]") {
  auto o = bidegree_order(1, 1);
  REQUIRE(o.size() == 4);
  CHECK(o.front() == std::pair<int, int>{0, 0});
  CHECK(o.back() == std::pair<int, int>{1, 1});
  CHECK(bi_degenerate_name({0}, {1}, "x") == "sh0sv1(x)");
}

TEST_CASE("box products are levelwise products", "[bisset]") {
  auto b = box(sset::standard_simplex(1, 2), sset::j_space(1, 2));
  CHECK(b.size(1, 1) == 3 * 4);
  CHECK(b.size(2, 0) == 4 * 2);
  CHECK(b.check_identities().ok);
  // Column 0 is X_0 x Y and row 0 is X x Y_0; both X_0 and Y_0 have two points.
  auto two_points = sset::boundary(1, 2);
  CHECK(sset::isomorphic(column(b, 0), sset::product(two_points, sset::j_space(1, 2))));
  CHECK(sset::isomorphic(row(b, 0), sset::product(sset::standard_simplex(1, 2), two_points)));
  CHECK(terminal(2, 2).size(2, 2) == 1);
  CHECK(isomorphic(transpose(transpose(b)), b));
  CHECK(isomorphic(transpose(b), box(sset::j_space(1, 2), sset::standard_simplex(1, 2))));
}

TEST_CASE("classifying diagrams have the functor counts of their entries", "[bisset]") {
  auto x = classifying_diagram(fincat::groupoid_interval(1), 1, 1);
  CHECK(x.size(0, 0) == 2);
  CHECK(x.size(1, 0) == 4);
  CHECK(x.size(1, 1) == 16);
  auto y = classifying_diagram(fincat::interval(1), 2, 2);
  CHECK(y.check_identities().ok);
  CHECK(y.size(1, 1) == 3);  // functors [1] x I[1] -> [1] are constant in the groupoid direction
  CHECK(sset::isomorphic(row(y, 0), sset::nerve(fincat::interval(1), 2)));
  for (int n = 0; n <= 2; ++n) {
    auto iso = fincat::iso_subcategory(fincat::functor_category(fincat::interval(n), fincat::interval(1)));
    CHECK(sset::isomorphic(column(y, n), sset::nerve(iso, 2)));
  }
}

TEST_CASE("strict Segal condition", "[bisset]") {
  for (int i = 0; i < 5; ++i) {
    auto s = segal_check_strict(classifying_diagram(small_corpus(i), 3, 2));
    CHECK(s.ok);
    CHECK(s.levels_checked == std::vector<int>{1, 2, 3});
  }
  CHECK(segal_check_strict(box(sset::nerve(fincat::interval(2), 3), sset::point(2))).ok);
  auto bad = segal_check_strict(box(sset::boundary(2, 2), sset::point(2)));
  CHECK_FALSE(bad.ok);
  CHECK_THAT(bad.witness, ContainsSubstring("(2,0)"));
}

TEST_CASE("vertical Reedy fibrancy", "[bisset]") {
  CHECK(reedy_fibrancy_check(classifying_diagram(fincat::interval(1), 2, 2), 2).ok);
  CHECK(reedy_fibrancy_check(classifying_diagram(fincat::groupoid_interval(1), 2, 2), 2).ok);
  CHECK(reedy_fibrancy_check(box(sset::nerve(fincat::interval(1), 2), sset::point(2)), 2).ok);
  auto bad = reedy_fibrancy_check(box(sset::point(2), sset::nerve(fincat::interval(1), 2)), 2);
  CHECK_FALSE(bad.ok);
  CHECK_THAT(bad.witness, ContainsSubstring("no filler"));
  CHECK_THROWS_AS(reedy_fibrancy_check(box(sset::point(2), sset::point(1)), 2), WindowError);
}

TEST_CASE("mapping spaces", "[bisset]") {
  auto z = classifying_diagram(fincat::interval(2), 2, 2);
  CHECK(mv(sset::share(sset::spine(2, 2)), z).size(0) == 10);
  CHECK(mv(sset::share(sset::standard_simplex(2, 2)), z).size(0) == 10);
  CHECK(sset::isomorphic(mv(sset::share(sset::point(2)), z), column(z, 0)));
  CHECK(mh(sset::share(sset::point(2)), classifying_diagram(fincat::interval(1), 2, 2)).size(1) == 3);
}

TEST_CASE("hom-spaces of strict Segal spaces", "[bisset]") {
  auto x = classifying_diagram(fincat::interval(2), 2, 2);
  auto h = hom_space(x, {0, 1, 2});
  CHECK(hom_space_comparison(x, h).ok);
  CHECK(h.carrier.size(0) == 1);
  CHECK_THROWS_AS(hom_space(x, {0, 1, 2, 2}), WindowError);
}

TEST_CASE("homotopy categories recover the category", "[bisset]") {
  for (int i = 0; i < 5; ++i) {
    auto c = small_corpus(i);
    CHECK(fincat::isomorphic(ho(classifying_diagram(c, 2, 2)), c));
    CHECK(fincat::isomorphic(ho(box(sset::nerve(c, 2), sset::point(2))), c));
    CHECK(fincat::isomorphic(tau1_bisset(classifying_diagram(c, 2, 2)), c));
  }
  CHECK_THROWS_AS(ho(classifying_diagram(fincat::interval(1), 1, 1)), WindowError);
}

TEST_CASE("the functor j from tau1 of column 0", "[bisset]") {
  auto j = j_functor(classifying_diagram(fincat::groupoid_interval(1), 2, 2));
  CHECK(j.validate().ok);
  CHECK(j.src->num_morphisms() == 4);
  CHECK(fincat::is_categorical_equivalence(j).ok);
  // Column 0 of a box with a point is discrete, so j misses every non-identity.
  auto k = j_functor(box(sset::nerve(fincat::interval(1), 2), sset::point(2)));
  CHECK(k.src->num_morphisms() == 2);
  CHECK(k.tgt->num_morphisms() == 3);
}

TEST_CASE("equivalences and completeness", "[bisset]") {
  CHECK(equivalences(classifying_diagram(fincat::interval(1), 2, 2)).equivalence_vertices.size() == 2);
  CHECK(equivalences(classifying_diagram(fincat::groupoid_interval(1), 2, 2)).equivalence_vertices.size() == 4);
  for (int i = 0; i < 5; ++i) CHECK(is_complete_1trunc(classifying_diagram(small_corpus(i), 2, 2)).ok);
  auto v = is_complete_1trunc(box(sset::nerve(fincat::groupoid_interval(1), 2), sset::point(2)));
  CHECK_FALSE(v.ok);
  CHECK_THAT(v.witness, ContainsSubstring("2 vs 4"));
  CHECK(is_complete_1trunc(box(sset::nerve(fincat::interval(1), 2), sset::point(2))).ok);
}

TEST_CASE("Dwyer-Kan equivalences between classifying diagrams", "[bisset]") {
  auto i1 = fincat::share(fincat::groupoid_interval(1));
  auto pt = fincat::share(fincat::interval(0));
  auto one = fincat::share(fincat::interval(1));
  CHECK(is_dk_equivalence(classifying_of(with_objects(i1, pt, {0, 0}), 2, 2)).ok);
  CHECK(is_dk_equivalence(classifying_of(with_objects(pt, i1, {0}), 2, 2)).ok);
  auto v = is_dk_equivalence(classifying_of(with_objects(pt, one, {0}), 2, 2));
  CHECK_FALSE(v.ok);
  CHECK_THAT(v.witness, ContainsSubstring("not isomorphic"));
  CHECK_FALSE(is_dk_equivalence(classifying_of(with_objects(one, pt, {0, 0}), 2, 2)).ok);
}

TEST_CASE("maps of bisimplicial sets", "[bisset]") {
  auto a = share(box(sset::standard_simplex(1, 1), sset::point(1)));
  auto b = share(classifying_diagram(fincat::interval(1), 1, 1));
  CHECK(count_maps(*a, *b) == 3);
  auto maps = enumerate_maps(a, b);
  for (auto& f : maps) {
    CHECK(f.validate().ok);
    CHECK(map_from_assignment(a, b, f.assignment()).img == f.img);
  }
  CHECK(count_maps(terminal(1, 1), *b) == 2);
  CHECK_THROWS_AS(count_maps(terminal(2, 2), *b), WindowError);
  auto iso = find_isomorphism(b, share(transpose(transpose(*b))));
  CHECK(iso.has_value());
}

TEST_CASE("bisimplicial presentations are validated", "[bisset]") {
  auto x = classifying_diagram(fincat::interval(1), 2, 2);
  CHECK(isomorphic(from_presentation(presentation_of(x)), x));

  // d^h_0 d^v_1 x = a but d^v_1 d^h_0 x = b.
  Presentation p;
  p.p = 1;
  p.q = 1;
  p.gens[{0, 0}] = {"a", "b"};
  p.gens[{1, 0}] = {"f"};
  p.gens[{0, 1}] = {"u"};
  p.gens[{1, 1}] = {"x"};
  p.hfaces["f"] = {{{}, {}, "b"}, {{}, {}, "a"}};
  p.vfaces["u"] = {{{}, {}, "a"}, {{}, {}, "a"}};
  p.hfaces["x"] = {{{}, {0}, "b"}, {{}, {}, "u"}};
  p.vfaces["x"] = {{{}, {}, "f"}, {{0}, {}, "a"}};
  try {
    from_presentation(p);
    FAIL("mixed identity violation accepted");
  } catch (const Error& e) {
    const std::string what = e.what();
    CHECK_THAT(what, ContainsSubstring("dh0"));
    CHECK_THAT(what, ContainsSubstring("dv1"));
    CHECK_THAT(what, ContainsSubstring("x"));
  }
}
