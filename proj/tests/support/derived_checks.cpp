#include "derived_checks.hpp"

#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "json.hpp"
#include "segal/bicat.hpp"
#include "segal/bisset.hpp"
#include "segal/fincat.hpp"
#include "segal/sset.hpp"
#include "segal/totalize.hpp"

namespace segal::testing {

namespace {

using json = nlohmann::json;
using namespace segal;

json counts(const fincat::FinCat& c) { return json::array({c.num_objects(), c.num_morphisms()}); }

std::map<std::string, fincat::FinCat> corpus() {
  return {
      {"[0]", fincat::interval(0)},
      {"[1]", fincat::interval(1)},
      {"[2]", fincat::interval(2)},
      {"I1", fincat::groupoid_interval(1)},
      {"I2", fincat::groupoid_interval(2)},
      {"E", fincat::walking_idempotent()},
      {"[1]xI1", fincat::product(fincat::interval(1), fincat::groupoid_interval(1))},
  };
}

fincat::Functor constant(const fincat::CatPtr& c, const fincat::CatPtr& d, int y) {
  fincat::Functor f{c, d, {}};
  f.data.obj.assign(c->num_objects(), y);
  f.data.mor.assign(c->num_morphisms(), d->identity(y));
  return f;
}

/// The functor with the given object images (unique for the categories used here).
fincat::Functor functor_with(const fincat::CatPtr& c, const fincat::CatPtr& d, const std::vector<int>& obj) {
  for (auto& f : fincat::enumerate_functors(c, d))
    if (f.data.obj == obj) return f;
  throw Error("no functor with the requested object images");
}

std::map<std::string, std::function<json()>> computations() {
  std::map<std::string, std::function<json()>> v;
  auto i1 = fincat::share(fincat::interval(1));
  auto g1 = fincat::share(fincat::groupoid_interval(1));

  v["interval_3_counts"] = [] { return counts(fincat::interval(3)); };
  v["free_groupoid_2_counts"] = [] { return counts(fincat::groupoid_interval(2)); };
  v["iso_idempotent_counts"] = [] { return counts(fincat::iso_subcategory(fincat::walking_idempotent())); };
  v["fun_1_1_counts"] = [] { return counts(fincat::functor_category(fincat::interval(1), fincat::interval(1))); };
  v["fun_1xI1_I1_objects"] = [] {
    return json(fincat::enumerate_functor_data(fincat::product(fincat::interval(1), fincat::groupoid_interval(1)),
                                               fincat::groupoid_interval(1))
                    .size());
  };
  v["tau0_1xI1_classes"] = [] {
    return json(fincat::tau0(fincat::product(fincat::interval(1), fincat::groupoid_interval(1))).size());
  };
  v["functors_1_2"] = [] { return json(fincat::enumerate_functor_data(fincat::interval(1), fincat::interval(2)).size()); };
  v["nat_trans_const0_const1"] = [i1] { return json(fincat::enumerate_nat_trans(constant(i1, i1, 0), constant(i1, i1, 1)).size()); };

  v["j1_dim1_nondegenerate"] = [] { return json(sset::j_space(1, 1).counts()); };
  v["j1_dim2_nondegenerate"] = [] { return json(sset::j_space(1, 2).counts()); };
  v["nerve_I1_dim3_nondegenerate"] = [] { return json(sset::nerve(fincat::groupoid_interval(1), 3).counts()); };
  v["product_d1_d1_nondegenerate"] = [] {
    return json(sset::product(sset::standard_simplex(1, 2), sset::standard_simplex(1, 2)).counts());
  };
  v["tau1_nerve_2_counts"] = [] { return counts(sset::tau1(sset::nerve(fincat::interval(2), 2))); };
  v["tau1_j1_dim2_counts"] = [] { return counts(sset::tau1(sset::j_space(1, 2))); };
  v["j1_tau1_counts"] = [] { return counts(sset::tau1(sset::j_space(1, 3))); };
  v["pi0_j1_dim1"] = [] { return json(sset::pi0(sset::j_space(1, 1)).size()); };
  v["j1_dim3_pi0"] = [] { return json(sset::pi0(sset::j_space(1, 3)).size()); };
  v["nerve_inner_horns_unique"] = [] {
    json out = json::object();
    for (const auto& [name, c] : corpus()) {
      auto h = sset::is_quasicategory(sset::nerve(c, 3), 3);
      out[name] = json::array({h.ok, h.unique_fillers});
    }
    return out;
  };
  v["j1_dim3_kan"] = [] { return json(sset::is_kan(sset::j_space(1, 3), 3).ok); };
  v["nerve_1_dim2_kan"] = [] { return json(sset::is_kan(sset::nerve(fincat::interval(1), 2), 2).ok); };

  v["maps_d1_j1"] = [] { return json(sset::count_maps(sset::standard_simplex(1, 1), sset::j_space(1, 1))); };
  v["maps_spine2_nerve1"] = [] { return json(sset::count_maps(sset::spine(2, 2), sset::nerve(fincat::interval(1), 2))); };
  v["exp_d1_nerve1_vertices"] = [] {
    auto e = sset::exponential(sset::share(sset::standard_simplex(1, 1)), sset::share(sset::nerve(fincat::interval(1), 3)), 1);
    return json(e.size(0));
  };
  v["tau1_exp_d1_nerve1_counts"] = [] {
    auto e = sset::exponential(sset::share(sset::standard_simplex(1, 2)), sset::share(sset::nerve(fincat::interval(1), 4)), 2);
    return counts(sset::tau1(e));
  };
  v["exp_adjunction_d1_d1_nerve1"] = [] {
    auto d1 = sset::share(sset::standard_simplex(1, 2));
    auto y = sset::share(sset::nerve(fincat::interval(1), 4));
    const auto lhs = sset::count_maps(sset::product(*d1, *d1), *y);
    auto e = sset::exponential(d1, y, 2);
    const auto rhs = sset::count_maps(*d1, e);
    return lhs == rhs ? json(lhs) : json("disagree: " + std::to_string(lhs) + " vs " + std::to_string(rhs));
  };

  v["row0_classifying_1_counts"] = [] {
    auto r = bisset::row(bisset::classifying_diagram(fincat::interval(1), 2, 2), 0);
    return json::array({r.size(0), r.size(1), r.size(2)});
  };
  v["nerve_1_dim2_counts"] = [] {
    auto n = sset::nerve(fincat::interval(1), 2);
    return json::array({n.size(0), n.size(1), n.size(2)});
  };
  v["mv_spine2_classifying2_vertices"] = [] {
    auto z = bisset::classifying_diagram(fincat::interval(2), 2, 2);
    return json(bisset::mv(sset::share(sset::spine(2, 2)), z).size(0));
  };
  v["classifying_I1_11_count"] = [] { return json(bisset::classifying_diagram(fincat::groupoid_interval(1), 1, 1).size(1, 1)); };
  v["corpus_counts"] = [] {
    json out = json::object();
    for (const auto& [name, c] : corpus()) out[name] = counts(c);
    return out;
  };
  v["equivalence_vertices"] = [] {
    json out = json::object();
    out["[1]"] = bisset::equivalences(bisset::classifying_diagram(fincat::interval(1), 2, 2)).equivalence_vertices.size();
    out["I1"] = bisset::equivalences(bisset::classifying_diagram(fincat::groupoid_interval(1), 2, 2)).equivalence_vertices.size();
    return out;
  };
  v["completeness_box_nerveI1_point"] = [] {
    auto x = bisset::box(sset::nerve(fincat::groupoid_interval(1), 2), sset::point(2));
    json out = json::object();
    out["pi0_column0"] = sset::pi0(bisset::column(x, 0)).size();
    out["pi0_eq"] = sset::pi0(bisset::equivalences(x).object).size();
    return out;
  };
  v["equivalence_I1_to_0"] = [g1] {
    return json(fincat::is_categorical_equivalence(functor_with(g1, fincat::share(fincat::interval(0)), {0, 0})).ok);
  };
  v["equivalence_0_to_1"] = [i1] {
    return json(fincat::is_categorical_equivalence(functor_with(fincat::share(fincat::interval(0)), i1, {0})).ok);
  };
  v["iso_I1_hom_0_1"] = [] {
    // Isomorphisms j(0) -> j(1) in Ho of the classifying diagram of I[1] that j hits.
    auto x = bisset::classifying_diagram(fincat::groupoid_interval(1), 2, 2);
    auto j = bisset::j_functor(x);
    std::set<int> hit;
    for (int f = 0; f < j.src->num_morphisms(); ++f) {
      const auto& m = j.src->morphism(f);
      const int g = j.mor(f);
      if (j.obj(m.src) != j.obj(m.tgt) && j.tgt->is_iso(g)) hit.insert(g);
    }
    // Both directions are hit; count those from the image of object 0.
    int from0 = 0;
    for (int g : hit)
      if (j.tgt->morphism(g).src == j.obj(0)) ++from0;
    return json(from0);
  };

  v["t_upper_nerve1_11_counts"] = [] {
    auto t = totalize::t_upper(sset::nerve(fincat::interval(1), 2), 1, 1);
    return json::array({t.size(0, 0), t.size(1, 0), t.size(0, 1), t.size(1, 1)});
  };
  v["tau1_t_lower_box11_counts"] = [] {
    auto b = bisset::box(sset::standard_simplex(1, 2), sset::standard_simplex(1, 2));
    return counts(sset::tau1(totalize::t_lower(b, 2)));
  };
  v["tau1_product_d1_j1_counts"] = [] { return counts(sset::tau1(totalize::representable(1, 1, 2))); };
  v["transposition_counts"] = [] {
    auto x = sset::share(sset::nerve(fincat::interval(1), 2));
    json out = json::object();
    auto put = [&](const std::string& key, const sset::TruncSSet& a, const sset::TruncSSet& b) {
      auto r = totalize::adjunction_count_check(bisset::share(bisset::box(a, b)), x);
      out[key] = r.ok && r.lower_count == r.upper_count ? json(r.upper_count) : json("disagree: " + r.witness);
    };
    put("box(d1,pt)", sset::standard_simplex(1, 2), sset::point(2));
    put("box(pt,d1)", sset::point(2), sset::standard_simplex(1, 2));
    return out;
  };

  v["hom_qcat_d1_nerve1_counts"] = [] {
    auto h = bicat::hom_category_qcat(sset::share(sset::standard_simplex(1, 2)), sset::share(sset::nerve(fincat::interval(1), 3)));
    return counts(*h.carrier);
  };
  v["hom_css_box_d1_I1_counts"] = [] {
    auto x = bisset::share(bisset::box(sset::standard_simplex(1, 2), sset::point(2)));
    auto y = bisset::share(bisset::classifying_diagram(fincat::groupoid_interval(1), 2, 2));
    return counts(*bicat::hom_category_css(x, y).carrier);
  };
  v["bridge_hom_counts"] = [] {
    auto y = sset::share(sset::nerve(fincat::interval(1), 3));
    json out = json::object();
    out["point,[1]"] = counts(*bicat::hom_category_qcat(sset::share(sset::point(2)), y).carrier);
    out["[1],[1]"] = counts(*bicat::hom_category_qcat(sset::share(sset::nerve(fincat::interval(1), 2)), y).carrier);
    out["I1,[1]"] = counts(*bicat::hom_category_qcat(sset::share(sset::nerve(fincat::groupoid_interval(1), 2)), y).carrier);
    return out;
  };
  v["tau1_products"] = [] {
    json out = json::object();
    for (int n = 0; n <= 2; ++n)
      for (int m = 0; m <= 2; ++m)
        out[std::to_string(n) + "," + std::to_string(m)] =
            counts(sset::tau1(sset::product(sset::standard_simplex(n, 2), sset::standard_simplex(m, 2))));
    return out;
  };
  return v;
}

}  // namespace

std::vector<DerivedResult> compare_with_fixture(const std::string& fixture_path) {
  std::ifstream in(fixture_path);
  if (!in) throw Error("cannot read fixture " + fixture_path);
  const json fixture = json::parse(in);
  const auto comps = computations();

  std::set<std::string> keys;
  for (auto it = fixture.begin(); it != fixture.end(); ++it) keys.insert(it.key());
  for (const auto& [k, _] : comps) keys.insert(k);

  std::vector<DerivedResult> out;
  for (const auto& k : keys) {
    DerivedResult r;
    r.key = k;
    r.expected = fixture.contains(k) ? fixture[k].dump() : "<missing>";
    auto c = comps.find(k);
    if (c == comps.end()) {
      r.actual = "<no library computation>";
    } else {
      try {
        r.actual = c->second().dump();
      } catch (const std::exception& e) {
        r.actual = std::string("<error: ") + e.what() + ">";
      }
    }
    r.ok = fixture.contains(k) && c != comps.end() && r.expected == r.actual;
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace segal::testing
