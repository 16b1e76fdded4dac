#include <catch_amalgamated.hpp>

#include "segal/sset.hpp"

using namespace segal;
using namespace segal::sset;
using Catch::Matchers::ContainsSubstring;

namespace {

using V = std::vector<int>;

fincat::FinCat corpus(int i) {
  switch (i) {
    case 0: return fincat::interval(0);
    case 1: return fincat::interval(1);
    case 2: return fincat::interval(2);
    case 3: return fincat::groupoid_interval(1);
    case 4: return fincat::groupoid_interval(2);
    case 5: return fincat::walking_idempotent();
    default: return fincat::product(fincat::interval(1), fincat::groupoid_interval(1));
  }
}

}  // namespace

TEST_CASE("degeneracy words normalize to decreasing form", "[sset]") {
  CHECK(normalize_degeneracies({0, 0}) == V{1, 0});
  CHECK(normalize_degeneracies({1, 0}) == V{1, 0});
  CHECK(normalize_degeneracies({0, 1}) == V{2, 0});
  CHECK(normalize_degeneracies({}).empty());
  CHECK(degeneracy_words(2, 0) == std::vector<V>{{1, 0}});
  CHECK(degeneracy_words(1, 1).size() == 2);
  CHECK(degenerate_name({1, 0}, "x") == "s1s0(x)");
}

TEST_CASE("standard objects have the expected generators", "[sset]") {
  CHECK(standard_simplex(2, 2).counts() == V{3, 3, 1});
  CHECK(standard_simplex(2, 3).counts() == V{3, 3, 1, 0});
  CHECK(boundary(2, 2).counts() == V{3, 3, 0});
  CHECK(horn(2, 1, 2).counts() == V{3, 2, 0});
  CHECK(horn(3, 1, 3).counts() == V{4, 6, 3, 0});
  CHECK(spine(3, 3).counts() == V{4, 3, 0, 0});
  CHECK(point(3).counts() == V{1, 0, 0, 0});
  // Simplices of Δ² are the monotone maps [k] -> [2].
  auto s = standard_simplex(2, 2);
  CHECK(s.size(0) == 3);
  CHECK(s.size(1) == 6);
  CHECK(s.size(2) == 10);
  for (const auto& x : {standard_simplex(3, 3), boundary(3, 3), horn(3, 2, 3), spine(2, 3)}) CHECK(x.check_identities().ok);
}

TEST_CASE("nerves of the corpus", "[sset]") {
  CHECK(nerve(fincat::groupoid_interval(1), 3).counts() == V{2, 2, 2, 2});
  CHECK(nerve(fincat::interval(2), 2).counts() == V{3, 3, 1});
  CHECK(nerve(fincat::walking_idempotent(), 2).counts() == V{1, 1, 1});
  for (int i = 0; i < 7; ++i) {
    auto c = corpus(i);
    auto n = nerve(c, 3);
    CHECK(n.check_identities().ok);
    CHECK(n.size(0) == c.num_objects());
    CHECK(n.size(1) == c.num_morphisms());
    auto h = is_quasicategory(n, 3);
    CHECK(h.ok);
    CHECK(h.unique_fillers);
  }
  auto n = nerve(fincat::interval(2), 2);
  CHECK(n.name(1, n.find(1, "f01")) == "f01");
  CHECK(n.find(2, "f01|f12") >= 0);
}

TEST_CASE("J spaces are nerves of groupoid intervals", "[sset]") {
  CHECK(j_space(1, 1).counts() == V{2, 2});
  CHECK(j_space(1, 2).counts() == V{2, 2, 2});
  CHECK(j_space(1, 2).size(2) == 8);
  CHECK(isomorphic(j_space(1, 3), nerve(fincat::groupoid_interval(1), 3)));
  CHECK(isomorphic(j_space(2, 2), nerve(fincat::groupoid_interval(2), 2)));
  CHECK(pi0(j_space(1, 1)).size() == 1);
  CHECK(is_kan(j_space(1, 3), 3).ok);
}

TEST_CASE("products decompose into shuffles", "[sset]") {
  auto p = product(standard_simplex(1, 2), standard_simplex(1, 2));
  CHECK(p.counts() == V{4, 5, 2});
  CHECK(p.check_identities().ok);
  CHECK(product(standard_simplex(2, 3), standard_simplex(1, 3)).counts() == V{6, 12, 10, 3});
  auto x = standard_simplex(1, 2), y = j_space(1, 2);
  auto xy = product(x, y);
  const int idx = product_index(x, y, 0, 1, 0);
  CHECK(xy.vertex(0, idx, 0) == idx);
}

TEST_CASE("fundamental categories", "[sset]") {
  CHECK(fincat::isomorphic(tau1(nerve(fincat::interval(2), 2)), fincat::interval(2)));
  CHECK(fincat::isomorphic(tau1(j_space(1, 2)), fincat::groupoid_interval(1)));
  CHECK(fincat::isomorphic(tau1(horn(2, 1, 2)), fincat::interval(2)));
  // No 2-simplex identifies the long edge with the composite.
  auto b = tau1(boundary(2, 2));
  CHECK(b.num_objects() == 3);
  CHECK(b.num_morphisms() == 7);
  CHECK(fincat::isomorphic(tau1(spine(3, 2)), fincat::interval(3)));
  for (int n = 0; n <= 2; ++n)
    for (int m = 0; m <= 2; ++m)
      CHECK(fincat::isomorphic(tau1(product(standard_simplex(n, 2), standard_simplex(m, 2))),
                               fincat::product(fincat::interval(n), fincat::interval(m))));
  for (int i = 0; i < 7; ++i) CHECK(fincat::isomorphic(tau1(nerve(corpus(i), 2)), corpus(i)));
  CHECK_THROWS_AS(tau1(standard_simplex(1, 1)), WindowError);
}

TEST_CASE("induced functors on fundamental categories", "[sset]") {
  auto c = fincat::share(fincat::interval(1));
  auto d = fincat::share(fincat::interval(2));
  auto nc = share(nerve(*c, 2)), nd = share(nerve(*d, 2));
  for (auto& f : fincat::enumerate_functors(c, d)) {
    auto nf = nerve_map(f, nc, nd);
    CHECK(nf.validate().ok);
    auto tc = tau1_presented(*nc), td = tau1_presented(*nd);
    CHECK(tau1_map(nf, tc, td).validate().ok);
  }
}

TEST_CASE("horn filling", "[sset]") {
  auto n1 = nerve(fincat::interval(1), 2);
  auto k = is_kan(n1, 2);
  REQUIRE_FALSE(k.ok);
  REQUIRE(k.witness.has_value());
  CHECK(k.witness->n == 2);
  CHECK(k.witness->k != 1);
  CHECK_THAT(k.witness->describe(n1), ContainsSubstring("no filler"));
  CHECK(is_quasicategory(n1, 2).ok);
  CHECK_FALSE(is_quasicategory(horn(2, 1, 2), 2).ok);
  CHECK_FALSE(is_quasicategory(boundary(2, 2), 2).ok);
  CHECK_THROWS_AS(is_quasicategory(n1, 3), WindowError);
}

TEST_CASE("counting maps", "[sset]") {
  CHECK(count_maps(standard_simplex(1, 1), j_space(1, 1)) == 4);
  CHECK(count_maps(spine(2, 2), nerve(fincat::interval(1), 2)) == 4);
  CHECK(count_maps(standard_simplex(2, 2), nerve(fincat::interval(1), 2)) == 4);
  CHECK(count_maps(horn(2, 1, 2), nerve(fincat::interval(2), 2)) == 10);
  CHECK(count_maps(point(2), boundary(2, 2)) == 3);
  CHECK_THROWS_AS(count_maps(standard_simplex(3, 3), boundary(2, 2)), WindowError);
  auto x = share(standard_simplex(1, 2)), y = share(nerve(fincat::interval(2), 2));
  auto maps = enumerate_maps(x, y);
  CHECK(maps.size() == 6);
  for (auto& f : maps) CHECK(f.validate().ok);
  auto again = map_from_assignment(x, y, maps[3].assignment());
  CHECK(again.img == maps[3].img);
}

TEST_CASE("adjunction between nerve and tau1 on small sources", "[sset]") {
  const std::vector<TruncSSet> xs{standard_simplex(2, 2), horn(2, 1, 2), spine(3, 2), j_space(1, 3),
                                  product(standard_simplex(1, 2), standard_simplex(1, 2))};
  for (const auto& x : xs)
    for (int i : {1, 2, 3, 5}) {
      auto c = corpus(i);
      CHECK(count_maps(x, nerve(c, x.dim())) == fincat::enumerate_functor_data(tau1(x), c).size());
    }
}

TEST_CASE("exponentials", "[sset]") {
  auto d1 = share(standard_simplex(1, 1));
  auto n1 = share(nerve(fincat::interval(1), 3));
  auto e = exponential(d1, n1, 1);
  CHECK(e.size(0) == 3);
  CHECK(e.check_identities().ok);
  auto e2 = exponential(share(standard_simplex(1, 2)), share(nerve(fincat::interval(1), 4)), 2);
  CHECK(fincat::isomorphic(tau1(e2), fincat::functor_category(fincat::interval(1), fincat::interval(1))));
  CHECK_THROWS_AS(exponential(share(standard_simplex(1, 2)), share(boundary(2, 2)), 2), WindowError);
}

TEST_CASE("weak equivalences of homotopy 1-types", "[sset]") {
  auto j = share(j_space(1, 3));
  auto pt = share(point(3));
  auto maps = enumerate_maps(j, pt);
  REQUIRE(maps.size() == 1);
  CHECK(is_whe_1trunc(maps[0]).ok);
  auto disc = share(boundary(1, 3));
  auto to_pt = enumerate_maps(disc, pt);
  REQUIRE(to_pt.size() == 1);
  auto v = is_whe_1trunc(to_pt[0]);
  CHECK_FALSE(v.ok);
  CHECK_FALSE(v.witness.empty());
}

TEST_CASE("presentations round-trip and are validated", "[sset]") {
  auto n = nerve(fincat::interval(2), 2);
  CHECK(isomorphic(from_presentation(presentation_of(n)), n));
  CHECK(isomorphic(from_presentation(presentation_of(product(standard_simplex(1, 2), j_space(1, 2)))),
                   product(standard_simplex(1, 2), j_space(1, 2))));

  Presentation bad_base;
  bad_base.dim = 1;
  bad_base.gens = {{"a", "b"}, {"f"}};
  bad_base.faces["f"] = {{{}, "b"}, {{}, "c"}};
  CHECK_THROWS_WITH(from_presentation(bad_base), ContainsSubstring("face 1 of f"));

  Presentation bad_identity;
  bad_identity.dim = 2;
  bad_identity.gens = {{"a", "b"}, {"f"}, {"s"}};
  bad_identity.faces["f"] = {{{}, "b"}, {{}, "a"}};
  bad_identity.faces["s"] = {{{}, "f"}, {{}, "f"}, {{}, "f"}};
  CHECK_THROWS_WITH(from_presentation(bad_identity), ContainsSubstring("generator s"));

  // Skeletal extension adds only degenerate simplices.
  auto ext = from_presentation(presentation_of(standard_simplex(1, 1)), 3);
  CHECK(ext.counts() == V{2, 1, 0, 0});
  CHECK(ext.size(3) == 5);
}

TEST_CASE("isomorphism search distinguishes small simplicial sets", "[sset]") {
  CHECK(isomorphic(spine(2, 2), horn(2, 1, 2)));
  CHECK_FALSE(isomorphic(horn(2, 0, 2), horn(2, 1, 2)));
  CHECK_FALSE(isomorphic(boundary(2, 2), horn(2, 1, 2)));
  CHECK_FALSE(isomorphic(nerve(fincat::interval(1), 2), j_space(1, 2)));
  CHECK(isomorphic(product(standard_simplex(0, 2), j_space(1, 2)), j_space(1, 2)));
}
