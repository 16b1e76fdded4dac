#include <catch_amalgamated.hpp>

#include "segal/fincat.hpp"

using namespace segal;
using namespace segal::fincat;

namespace {

Functor constant(const CatPtr& c, const CatPtr& d, int y) {
  Functor f{c, d, {}};
  f.data.obj.assign(c->num_objects(), y);
  f.data.mor.assign(c->num_morphisms(), d->identity(y));
  return f;
}

Functor with_objects(const CatPtr& c, const CatPtr& d, const std::vector<int>& obj) {
  for (auto& f : enumerate_functors(c, d))
    if (f.data.obj == obj) return f;
  FAIL("no functor with these object images");
  return {};
}

}  // namespace

TEST_CASE("interval categories have one morphism per monotone pair", "[fincat]") {
  for (int n = 0; n <= 4; ++n) {
    auto c = interval(n);
    CHECK(c.num_objects() == n + 1);
    CHECK(c.num_morphisms() == (n + 1) * (n + 2) / 2);
  }
  auto c = interval(2);
  const int f01 = c.morphism_index("f01"), f12 = c.morphism_index("f12"), f02 = c.morphism_index("f02");
  REQUIRE(f01 >= 0);
  CHECK(c.compose(f12, f01) == f02);
  CHECK(c.compose(f01, f12) == -1);
  CHECK_FALSE(c.is_iso(f01));
}

TEST_CASE("groupoid intervals are chaotic groupoids", "[fincat]") {
  auto c = groupoid_interval(2);
  CHECK(c.num_objects() == 3);
  CHECK(c.num_morphisms() == 9);
  CHECK(c.is_groupoid());
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y) CHECK(c.hom(x, y).size() == 1);
}

TEST_CASE("the idempotent has no non-identity isomorphisms", "[fincat]") {
  auto e = walking_idempotent();
  CHECK(e.num_objects() == 1);
  CHECK(e.num_morphisms() == 2);
  const int ei = e.morphism_index("e");
  CHECK(e.compose(ei, ei) == ei);
  auto iso = iso_subcategory(e);
  CHECK(iso.num_objects() == 1);
  CHECK(iso.num_morphisms() == 1);
}

TEST_CASE("make_category rejects broken composition tables", "[fincat]") {
  CategorySpec ok{{"x"}, {{"a", "x", "x"}}, {{"a", "a", "a"}}};
  CHECK(make_category(ok).num_morphisms() == 2);

  CategorySpec missing{{"x"}, {{"a", "x", "x"}}, {}};
  CHECK_THROWS_WITH(make_category(missing), Catch::Matchers::ContainsSubstring("missing composite a . a"));

  // a.a = b, a.b = b, b.a = b, b.b = a fails (a.b).b = a.(b.b).
  CategorySpec nonassoc{{"x"},
                        {{"a", "x", "x"}, {"b", "x", "x"}},
                        {{"a", "a", "b"}, {"a", "b", "b"}, {"b", "a", "b"}, {"b", "b", "a"}}};
  CHECK_THROWS_WITH(make_category(nonassoc), Catch::Matchers::ContainsSubstring("associativity fails"));

  CategorySpec dangling{{"x"}, {{"a", "x", "y"}}, {}};
  CHECK_THROWS_AS(make_category(dangling), Error);

  CategorySpec noncomposable{{"x", "y"}, {{"a", "x", "y"}}, {{"a", "a", "a"}}};
  CHECK_THROWS_WITH(make_category(noncomposable), Catch::Matchers::ContainsSubstring("non-composable"));
}

TEST_CASE("products multiply objects and morphisms", "[fincat]") {
  auto p = product(interval(1), groupoid_interval(1));
  CHECK(p.num_objects() == 4);
  CHECK(p.num_morphisms() == 12);
  CHECK(tau0(p).size() == 2);
  auto c = interval(1), d = groupoid_interval(1);
  const int f = c.morphism_index("f01"), g = d.morphism_index("g01");
  const int fg = product_morphism(p, c, d, f, g);
  CHECK(p.morphism(fg).src == product_object(p, c, d, 0, 0));
  CHECK(p.morphism(fg).tgt == product_object(p, c, d, 1, 1));
}

TEST_CASE("functor enumeration is complete and ordered", "[fincat]") {
  auto fs = enumerate_functor_data(interval(1), interval(2));
  CHECK(fs.size() == 6);
  CHECK(std::is_sorted(fs.begin(), fs.end()));
  auto c = share(interval(1));
  for (auto& f : enumerate_functors(c, share(interval(2)))) CHECK(f.validate().ok);

  // A chaotic target accepts every object map.
  CHECK(enumerate_functor_data(product(interval(1), groupoid_interval(1)), groupoid_interval(1)).size() == 16);
  // Nothing maps an isomorphism onto a non-identity arrow of a poset.
  CHECK(enumerate_functor_data(groupoid_interval(1), interval(1)).size() == 2);
}

TEST_CASE("validate catches non-functors", "[fincat]") {
  auto c = share(interval(1));
  Functor f = constant(c, c, 0);
  f.data.obj[1] = 1;  // f01 still goes to id_0
  auto v = f.validate();
  CHECK_FALSE(v.ok);
  CHECK_FALSE(v.witness.empty());
}

TEST_CASE("natural transformations between constant functors", "[fincat]") {
  auto c = share(interval(1));
  CHECK(enumerate_nat_trans(constant(c, c, 0), constant(c, c, 1)).size() == 1);
  CHECK(enumerate_nat_trans(constant(c, c, 1), constant(c, c, 0)).empty());
  for (auto& a : enumerate_nat_trans(constant(c, c, 0), constant(c, c, 1))) CHECK(a.validate().ok);
}

TEST_CASE("functor categories", "[fincat]") {
  auto f = functor_category(interval(1), interval(1));
  CHECK(f.num_objects() == 3);
  CHECK(f.num_morphisms() == 6);
  CHECK(isomorphic(f, interval(2)));
  auto g = functor_category(interval(1), groupoid_interval(1));
  CHECK(g.num_objects() == 4);
  CHECK(g.num_morphisms() == 16);
  CHECK(g.is_groupoid());
}

TEST_CASE("categorical equivalences", "[fincat]") {
  auto i1 = share(groupoid_interval(1));
  auto pt = share(interval(0));
  auto one = share(interval(1));
  CHECK(is_categorical_equivalence(with_objects(i1, pt, {0, 0})).ok);
  CHECK(is_categorical_equivalence(with_objects(pt, i1, {1})).ok);
  auto v = is_categorical_equivalence(with_objects(pt, one, {0}));
  CHECK_FALSE(v.ok);
  CHECK_FALSE(v.witness.empty());
  CHECK_FALSE(is_categorical_equivalence(with_objects(one, pt, {0, 0})).ok);
  CHECK(is_categorical_equivalence(identity_functor(share(walking_idempotent()))).ok);
}

TEST_CASE("isofibrations", "[fincat]") {
  auto i1 = share(groupoid_interval(1));
  auto pt = share(interval(0));
  CHECK(is_isofibration(with_objects(i1, pt, {0, 0})).ok);
  // The inclusion of an endpoint cannot lift the isomorphism 0 -> 1.
  CHECK_FALSE(is_isofibration(with_objects(pt, i1, {0})).ok);
}

TEST_CASE("isomorphism search", "[fincat]") {
  CHECK(isomorphic(product(interval(0), interval(1)), interval(1)));
  CHECK(isomorphic(groupoid_interval(1), iso_subcategory(groupoid_interval(1))));
  CHECK_FALSE(isomorphic(interval(2), groupoid_interval(2)));
  CHECK_FALSE(isomorphic(product(interval(1), interval(1)), interval(3)));
  auto iso = find_isomorphism(product(interval(1), groupoid_interval(1)), product(groupoid_interval(1), interval(1)));
  REQUIRE(iso.has_value());
  CHECK(iso->obj.size() == 4);
}

TEST_CASE("composition of functors", "[fincat]") {
  auto one = share(interval(1)), two = share(interval(2)), pt = share(interval(0));
  auto f = with_objects(one, two, {0, 2});
  auto g = with_objects(two, pt, {0, 0, 0});
  auto gf = compose(g, f);
  CHECK(gf.validate().ok);
  CHECK(gf.data == constant(one, pt, 0).data);
  CHECK(compose(identity_functor(two), f).data == f.data);
}

TEST_CASE("serialization lists every non-identity arrow", "[fincat]") {
  auto text = write_fincat(interval(2));
  CHECK(text.find("mor f01: 0 -> 1") != std::string::npos);
  CHECK(text.find("id_0") == std::string::npos);
}
