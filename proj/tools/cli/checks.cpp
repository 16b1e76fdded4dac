#include <chrono>
#include <functional>
#include <map>

#include "segal/cli.hpp"

namespace segal::cli {

namespace {

using Inputs = std::vector<std::string>;
using Runner = std::function<void(const Inputs&, const Options&, VerificationReport&)>;

struct Check {
  CheckInfo info;
  std::size_t min_inputs, max_inputs;
  Runner run;
};

std::string window_of(const Options& o) { return "(" + std::to_string(o.p) + "," + std::to_string(o.q) + ")"; }
std::string dim_of(const Options& o) { return "dim " + std::to_string(o.dim); }

void set(VerificationReport& r, bool ok, const std::string& witness) {
  r.verdict = ok ? Status::pass : Status::fail;
  r.witness = ok ? std::string() : witness;
}

void detail(VerificationReport& r, const std::string& key, const std::string& value) { r.details.push_back({key, value}); }
void detail(VerificationReport& r, const std::string& key, long value) { detail(r, key, std::to_string(value)); }
void detail(VerificationReport& r, const std::string& key, bool value) { detail(r, key, std::string(value ? "true" : "false")); }

std::string shape(const fincat::FinCat& c) {
  return std::to_string(c.num_objects()) + " objects, " + std::to_string(c.num_morphisms()) + " morphisms";
}

bool bijective(const fincat::Functor& f) {
  if (f.src->num_objects() != f.tgt->num_objects() || f.src->num_morphisms() != f.tgt->num_morphisms()) return false;
  std::vector<char> o(f.tgt->num_objects(), 0), m(f.tgt->num_morphisms(), 0);
  for (int x : f.data.obj) {
    if (o[x]) return false;
    o[x] = 1;
  }
  for (int g : f.data.mor) {
    if (m[g]) return false;
    m[g] = 1;
  }
  return true;
}

Kind require(const std::string& id, std::initializer_list<Kind> kinds) {
  Kind k = kind_of(id);
  for (Kind allowed : kinds)
    if (k == allowed) return k;
  throw InputError("input '" + id + "' has the wrong kind for this check");
}

sset::SSetPtr as_sset(const std::string& id, const Options& o) {
  require(id, {Kind::sset});
  return load_sset(id, o);
}
bisset::BiSSetPtr as_bisset(const std::string& id, const Options& o) {
  require(id, {Kind::bisset});
  return load_bisset(id, o);
}
fincat::FinCat as_fincat(const std::string& id) {
  require(id, {Kind::fincat});
  return load_fincat(id);
}
int as_int(const std::string& s) {
  if (s.empty() || s.size() > 2 || s.find_first_not_of("0123456789") != std::string::npos)
    throw InputError("expected a small non-negative integer, got '" + s + "'");
  return std::stoi(s);
}

void run_adjunction(const Inputs& in, const Options& o, VerificationReport& r) {
  auto x = as_sset(in[0], o);
  auto c = as_fincat(in[1]);
  r.window = "dim " + std::to_string(x->dim());
  auto nc = sset::nerve(c, x->dim());
  const long maps = static_cast<long>(sset::count_maps(*x, nc));
  const long functors = static_cast<long>(fincat::enumerate_functor_data(sset::tau1(*x), c).size());
  detail(r, "maps into nerve", maps);
  detail(r, "functors from tau1", functors);
  set(r, maps == functors, std::to_string(maps) + " maps vs " + std::to_string(functors) + " functors");
}

void run_tau1_iso(const Inputs& in, const Options& o, VerificationReport& r) {
  auto x = as_sset(in[0], o);
  auto c = as_fincat(in[1]);
  r.window = "dim " + std::to_string(x->dim());
  auto t = sset::tau1(*x);
  detail(r, "tau1", shape(t));
  set(r, fincat::isomorphic(t, c), "tau1 has " + shape(t) + "; expected a category isomorphic to one with " + shape(c));
}

void run_inner_horns(const Inputs& in, const Options& o, VerificationReport& r) {
  auto x = as_sset(in[0], o);
  r.window = "dim " + std::to_string(x->dim());
  auto h = sset::is_quasicategory(*x, x->dim());
  detail(r, "horns checked", h.horns_checked);
  detail(r, "unique fillers", h.unique_fillers);
  set(r, h.ok, h.witness ? "unfillable horn " + h.witness->describe(*x) : "");
}

void run_strict_segal(const Inputs& in, const Options& o, VerificationReport& r) {
  auto x = as_bisset(in[0], o);
  r.window = "(" + std::to_string(x->p()) + "," + std::to_string(x->q()) + ")";
  auto s = bisset::segal_check_strict(*x);
  std::string levels;
  for (int n : s.levels_checked) levels += (levels.empty() ? "" : " ") + std::to_string(n);
  detail(r, "levels checked", levels);
  set(r, s.ok, s.witness);
}

void run_reedy(const Inputs& in, const Options& o, VerificationReport& r) {
  auto x = as_bisset(in[0], o);
  r.window = "(" + std::to_string(x->p()) + "," + std::to_string(x->q()) + ")";
  auto s = bisset::reedy_fibrancy_check(*x, x->q());
  detail(r, "certified pairs", static_cast<long>(s.certified.size()));
  set(r, s.ok, s.witness);
}

void run_complete(const Inputs& in, const Options& o, VerificationReport& r) {
  auto x = as_bisset(in[0], o);
  r.window = "(" + std::to_string(x->p()) + "," + std::to_string(x->q()) + ")";
  detail(r, "level", std::string("1-truncated"));
  auto v = bisset::is_complete_1trunc(*x);
  set(r, v.ok, v.witness);
}

void run_rows_columns(const Inputs& in, const Options& o, VerificationReport& r) {
  auto c = as_fincat(in[0]);
  r.window = window_of(o);
  auto x = bisset::classifying_diagram(c, o.p, o.q);
  if (!sset::isomorphic(bisset::row(x, 0), sset::nerve(c, o.p))) {
    set(r, false, "row 0 is not isomorphic to the nerve");
    return;
  }
  for (int n = 0; n <= o.p; ++n) {
    auto iso = fincat::iso_subcategory(fincat::functor_category(fincat::interval(n), c));
    if (!sset::isomorphic(bisset::column(x, n), sset::nerve(iso, o.q))) {
      set(r, false, "column " + std::to_string(n) + " is not isomorphic to the nerve of the isomorphisms of Fun([" +
                        std::to_string(n) + "], C)");
      return;
    }
  }
  detail(r, "columns compared", static_cast<long>(o.p + 1));
  set(r, true, "");
}

void run_ho_iso(const Inputs& in, const Options& o, VerificationReport& r) {
  auto y = as_bisset(in[0], o);
  auto c = as_fincat(in[1]);
  r.window = "(" + std::to_string(y->p()) + "," + std::to_string(y->q()) + ")";
  auto h = bisset::ho(*y);
  detail(r, "Ho", shape(h));
  set(r, fincat::isomorphic(h, c), "Ho has " + shape(h) + "; expected a category isomorphic to one with " + shape(c));
}

void run_t_upper_classifying(const Inputs& in, const Options& o, VerificationReport& r) {
  auto c = fincat::share(as_fincat(in[0]));
  r.window = window_of(o);
  auto nc = sset::share(sset::nerve(*c, 2));
  auto t = totalize::t_upper_data(nc, o.p, o.q);
  auto tp = bisset::share(t.object);
  auto cl = bisset::classifying_data(c, o.p, o.q);
  auto clp = bisset::share(cl.object);
  auto cmp = totalize::compare_with_classifying(t, *c, cl, tp, clp);
  detail(r, "comparison", std::string("canonical functor grid"));
  set(r, cmp.verdict.ok, cmp.verdict.witness);
}

void run_t_lower_box(const Inputs& in, const Options& o, VerificationReport& r) {
  const int n = as_int(in[0]), m = as_int(in[1]);
  const int d = std::max(o.dim, 1);
  const int w = std::max(n + m, d);
  r.window = "(" + std::to_string(w) + "," + std::to_string(w) + ") dim " + std::to_string(d);
  auto b = bisset::box(sset::standard_simplex(n, w), sset::standard_simplex(m, w));
  auto l = totalize::t_lower(b, d);
  auto rep = totalize::representable(n, m, d);
  detail(r, "vertices", static_cast<long>(l.size(0)));
  set(r, sset::isomorphic(l, rep), "t_lower of the box product is not isomorphic to the representable piece");
}

void run_transposition(const Inputs& in, const Options& o, VerificationReport& r) {
  auto y = as_bisset(in[0], o);
  auto x = as_sset(in[1], o);
  r.window = "(" + std::to_string(y->p()) + "," + std::to_string(y->q()) + ") " + dim_of(o);
  auto a = totalize::adjunction_count_check(y, x);
  detail(r, "maps from t_lower", static_cast<long>(a.lower_count));
  detail(r, "maps into t_upper", static_cast<long>(a.upper_count));
  set(r, a.ok, a.witness);
}

void run_counit(const Inputs& in, const Options& o, VerificationReport& r) {
  auto x = as_sset(in[0], o);
  r.window = window_of(o) + " " + dim_of(o);
  auto cu = totalize::counit(x, o.dim, o.p, o.q);
  const auto& low = cu.lower.object;
  bool vertices = low.size(0) == x->size(0);
  if (vertices) {
    std::vector<char> hit(x->size(0), 0);
    for (int v : cu.map.img[0]) {
      if (hit[v]) vertices = false;
      hit[v] = 1;
    }
  }
  detail(r, "vertex bijection", vertices);
  auto ts = sset::tau1_presented(low);
  auto tt = sset::tau1_presented(*x);
  const bool iso = bijective(sset::tau1_map(cu.map, ts, tt));
  detail(r, "tau1 isomorphism", iso);
  const bool agree = fincat::isomorphic(ts.cat(), bisset::tau1_bisset(cu.upper.object));
  detail(r, "cross-check with tau1 of t_upper", std::string(agree ? "agree" : "disagree"));
  if (!agree)
    set(r, false, "tau1 of the windowed t_lower disagrees with tau1 of t_upper; enlarge the window");
  else if (!vertices)
    set(r, false, "the counit is not a bijection on vertices");
  else
    set(r, iso, "tau1 of the counit is not an isomorphism");
}

void run_axioms(const Inputs& in, const Options& o, VerificationReport& r) {
  const Kind k = require(in[0], {Kind::sset, Kind::bisset});
  std::optional<bicat::Sub2Category> s;
  if (k == Kind::sset) {
    std::vector<sset::SSetPtr> objs;
    for (const auto& id : in) objs.push_back(as_sset(id, o));
    r.window = dim_of(o) + ", hom-categories at level 2";
    s = bicat::Sub2Category::qcat(objs, 2);
  } else {
    std::vector<bisset::BiSSetPtr> objs;
    for (const auto& id : in) objs.push_back(as_bisset(id, o));
    r.window = window_of(o);
    s = bicat::Sub2Category::css(objs, o.p, o.q);
  }
  for (auto [name, rep] : {std::pair<const char*, bicat::AxiomReport>{"units", s->check_units()},
                           {"associativity", s->check_associativity()},
                           {"interchange", s->check_interchange()}}) {
    detail(r, std::string(name) + " instances", rep.checked);
    if (!rep.ok) {
      set(r, false, std::string(name) + ": " + rep.witness);
      return;
    }
  }
  set(r, true, "");
}

// Both sides of a functor F : C -> D as maps of classifying diagrams.
struct ClassifyingPair {
  bisset::Classifying src, dst;
  bisset::BiSSetMap map;
};
ClassifyingPair classifying_pair(const fincat::Functor& f, const Options& o) {
  ClassifyingPair cp{bisset::classifying_data(f.src, o.p, o.q), bisset::classifying_data(f.tgt, o.p, o.q), {}};
  cp.map = bisset::classifying_map(f, cp.src, cp.dst, bisset::share(cp.src.object), bisset::share(cp.dst.object));
  return cp;
}

void run_dk_vs_2cat(const Inputs& in, const Options& o, VerificationReport& r) {
  require(in[0], {Kind::functor});
  auto f = load_functor(in[0]);
  r.window = window_of(o);
  auto cp = classifying_pair(f, o);
  auto dk = bisset::is_dk_equivalence(cp.map);
  auto eq = bicat::is_equivalence_2cat(cp.map, o.p, o.q);
  detail(r, "Dwyer-Kan equivalence", dk.ok);
  detail(r, "2-categorical equivalence", eq.ok);
  detail(r, "candidate inverses", static_cast<long>(eq.candidates));
  set(r, dk.ok == eq.ok, "the tests disagree: " + (dk.ok ? eq.witness : dk.witness));
}

void run_nerve_2cat(const Inputs& in, const Options& o, VerificationReport& r) {
  require(in[0], {Kind::functor});
  auto f = load_functor(in[0]);
  r.window = dim_of(o) + ", hom-categories at level 2";
  auto nc = sset::share(sset::nerve(*f.src, o.dim));
  auto nd = sset::share(sset::nerve(*f.tgt, o.dim));
  auto eq = bicat::is_equivalence_2cat(sset::nerve_map(f, nc, nd), 2);
  auto cat = fincat::is_categorical_equivalence(f);
  detail(r, "2-categorical equivalence", eq.ok);
  detail(r, "equivalence of categories", cat.ok);
  set(r, eq.ok == cat.ok, "the tests disagree: " + (cat.ok ? eq.witness : cat.witness));
}

void run_bridge(const Inputs& in, const Options& o, VerificationReport& r) {
  auto x = as_sset(in[0], o);
  auto y = as_sset(in[1], o);
  r.window = window_of(o) + " " + dim_of(o);
  auto b = bicat::bridge_check(x, y, o.p, o.q);
  detail(r, "Dwyer-Kan (1-truncated)", b.dk.ok);
  detail(r, "levelwise isomorphism", b.isomorphism);
  detail(r, "hom-categories", b.hom_level.ok);
  if (!b.dk.ok)
    set(r, false, b.dk.witness);
  else
    set(r, b.hom_level.ok, b.hom_level.witness);
}

void run_dk(const Inputs& in, const Options& o, VerificationReport& r) {
  r.window = window_of(o);
  if (in.size() == 1) {
    require(in[0], {Kind::functor});
    auto cp = classifying_pair(load_functor(in[0]), o);
    auto v = bisset::is_dk_equivalence(cp.map);
    set(r, v.ok, v.witness);
    return;
  }
  auto src = as_bisset(in[0], o);
  auto tgt = as_bisset(in[1], o);
  auto f = parse_bisset_map(read_file(in[2]), src, tgt, in[2]);
  auto v = bisset::is_dk_equivalence(f);
  set(r, v.ok, v.witness);
}

void run_equiv_search(const Inputs& in, const Options& o, VerificationReport& r) {
  bicat::EquivalenceReport e;
  if (in.size() == 1) {
    require(in[0], {Kind::functor});
    auto f = load_functor(in[0]);
    r.window = dim_of(o) + ", hom-categories at level 2";
    auto nc = sset::share(sset::nerve(*f.src, o.dim));
    auto nd = sset::share(sset::nerve(*f.tgt, o.dim));
    e = bicat::is_equivalence_2cat(sset::nerve_map(f, nc, nd), 2);
  } else if (in.size() == 3 && require(in[0], {Kind::sset, Kind::bisset}) == Kind::sset) {
    auto src = as_sset(in[0], o);
    auto tgt = as_sset(in[1], o);
    r.window = dim_of(o) + ", hom-categories at level 2";
    e = bicat::is_equivalence_2cat(parse_sset_map(read_file(in[2]), src, tgt, in[2]), 2);
  } else if (in.size() == 3) {
    auto src = as_bisset(in[0], o);
    auto tgt = as_bisset(in[1], o);
    r.window = window_of(o);
    e = bicat::is_equivalence_2cat(parse_bisset_map(read_file(in[2]), src, tgt, in[2]), o.p, o.q);
  } else {
    throw InputError("equiv-search expects a functor, or a source, a target and a map file");
  }
  detail(r, "candidate inverses", static_cast<long>(e.candidates));
  if (e.ok) detail(r, "inverse", e.witness);
  set(r, e.ok, e.witness);
}

const std::vector<Check>& registry() {
  static const std::vector<Check> checks{
      {{"adjunction", "nerve-adjunction", "<sset> <category>",
        "maps from X into the nerve of C correspond to functors from tau1 X to C"},
       2, 2, run_adjunction},
      {{"bridge", "totalization-bridge", "<sset> <sset>",
        "the canonical map from t_upper of the exponential to the exponential of the t_upper images is a Dwyer-Kan "
        "equivalence, and the hom-categories agree"},
       2, 2, run_bridge},
      {{"classifying-rows-columns", "classifying-diagram-rows-columns", "<category>",
        "row 0 of the classifying diagram is the nerve of C and column n is the nerve of the isomorphisms of Fun([n], C)"},
       1, 1, run_rows_columns},
      {{"complete-1trunc", "completeness", "<bisset>",
        "X_{0,*} -> X_eq is a weak equivalence, tested on homotopy 1-types"},
       1, 1, run_complete},
      {{"counit-tau1-iso", "totalization-counit", "<sset>",
        "the counit of the totalization adjunction is bijective on vertices and an isomorphism on tau1"},
       1, 1, run_counit},
      {{"dk-equiv", "dwyer-kan-equivalence", "<functor> | <bisset> <bisset> <map file>",
        "the map induces an equivalence on Ho and weak equivalences of hom-spaces"},
       1, 3, run_dk},
      {{"dk-vs-2cat", "equivalences-in-css", "<functor>",
        "between complete Segal spaces, Dwyer-Kan equivalences are the equivalences of the homotopy 2-category"},
       1, 1, run_dk_vs_2cat},
      {{"equiv-search", "two-category-equivalence", "<functor> | <source> <target> <map file>",
        "some map back is inverse to the given map up to invertible 2-cells"},
       1, 3, run_equiv_search},
      {{"ho-iso", "homotopy-category-of-classifying", "<bisset> <category>",
        "the homotopy category of the Segal space is isomorphic to C"},
       2, 2, run_ho_iso},
      {{"inner-horns", "nerve-inner-horns", "<sset>", "every inner horn has a filler"}, 1, 1, run_inner_horns},
      {{"nerve-2cat-vs-categorical", "equivalences-of-nerves", "<functor>",
        "the nerve of F is an equivalence of the homotopy 2-category exactly when F is an equivalence of categories"},
       1, 1, run_nerve_2cat},
      {{"reedy", "vertical-reedy-fibrancy", "<bisset>",
        "matching maps along boundaries of simplices have the horn-filling property"},
       1, 1, run_reedy},
      {{"strict-segal", "strict-segal-condition", "<bisset>",
        "spine restriction is a bijection in every horizontal degree of the window"},
       1, 1, run_strict_segal},
      {{"t-lower-box", "totalization-of-box", "<n> <m>",
        "t_lower of the box product of simplices is the representable piece"},
       2, 2, run_t_lower_box},
      {{"t-upper-classifying", "totalization-of-nerve", "<category>",
        "t_upper of the nerve of C is isomorphic to the classifying diagram of C"},
       1, 1, run_t_upper_classifying},
      {{"tau1-iso", "tau1-presentation", "<sset> <category>", "tau1 X is isomorphic to C"}, 2, 2, run_tau1_iso},
      {{"transposition", "totalization-adjunction", "<bisset> <sset>",
        "maps from t_lower Y to X correspond by transposition to maps from Y to t_upper X"},
       2, 2, run_transposition},
      {{"two-category-axioms", "two-category-axioms", "<object>...",
        "units, associativity and interchange hold in the full sub-2-category on the objects"},
       1, 8, run_axioms},
  };
  return checks;
}

}  // namespace

const std::vector<CheckInfo>& registered_checks() {
  static const std::vector<CheckInfo> infos = [] {
    std::vector<CheckInfo> out;
    for (const auto& c : registry()) out.push_back(c.info);
    return out;
  }();
  return infos;
}

VerificationReport run_check(const std::string& name, const std::vector<std::string>& inputs, const Options& opt) {
  const Check* check = nullptr;
  for (const auto& c : registry())
    if (c.info.name == name) check = &c;
  if (!check) throw InputError("unknown check '" + name + "'");
  if (inputs.size() < check->min_inputs || inputs.size() > check->max_inputs)
    throw InputError("check '" + name + "' expects " + check->info.signature);

  VerificationReport r;
  r.check = name;
  r.anchor = check->info.anchor;
  r.inputs = inputs;
  const auto start = std::chrono::steady_clock::now();
  try {
    check->run(inputs, opt, r);
  } catch (const WindowError& e) {
    r.verdict = Status::window_insufficient;
    r.witness = std::string(e.what()) + "; requires " + e.requirement();
  } catch (const UncertifiedError& e) {
    r.verdict = Status::fail;
    r.witness = std::string("uncertified: ") + e.what();
  } catch (const InputError&) {
    throw;
  } catch (const Error& e) {
    r.verdict = Status::fail;
    r.witness = e.what();
  }
  if (r.window.empty()) r.window = window_of(opt);
  r.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace segal::cli
