#include "segal/fincat.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace segal::fincat {

namespace {

std::string triple_name(const std::vector<Morphism>& m, int h, int g, int f) {
  return "(" + m[h].id + ", " + m[g].id + ", " + m[f].id + ")";
}

}  // namespace

FinCat FinCat::build(std::vector<std::string> objects, std::vector<Morphism> morphisms,
                     std::vector<int> identity, std::vector<int> comp) {
  const int no = static_cast<int>(objects.size());
  const int nm = static_cast<int>(morphisms.size());
  if (static_cast<int>(identity.size()) != no) throw Error("identity map must cover every object");
  if (comp.size() != static_cast<std::size_t>(nm) * nm) throw Error("composition table has wrong size");

  for (int i = 0; i < no; ++i)
    for (int j = i + 1; j < no; ++j)
      if (objects[i] == objects[j]) throw Error("duplicate object " + objects[i]);
  {
    std::vector<std::string> ids;
    for (auto& m : morphisms) ids.push_back(m.id);
    std::sort(ids.begin(), ids.end());
    auto dup = std::adjacent_find(ids.begin(), ids.end());
    if (dup != ids.end()) throw Error("duplicate morphism " + *dup);
  }
  for (auto& m : morphisms)
    if (m.src < 0 || m.src >= no || m.tgt < 0 || m.tgt >= no)
      throw Error("dangling source/target on morphism " + m.id);
  for (int x = 0; x < no; ++x) {
    int e = identity[x];
    if (e < 0 || e >= nm) throw Error("missing identity for object " + objects[x]);
    if (morphisms[e].src != x || morphisms[e].tgt != x)
      throw Error("identity of " + objects[x] + " is not an endomorphism");
  }
  auto at = [&](int g, int f) -> int& { return comp[static_cast<std::size_t>(g) * nm + f]; };
  for (int g = 0; g < nm; ++g)
    for (int f = 0; f < nm; ++f) {
      int h = at(g, f);
      bool composable = morphisms[f].tgt == morphisms[g].src;
      if (!composable) {
        if (h != -1) throw Error("composite declared for non-composable pair " + morphisms[g].id + " . " + morphisms[f].id);
        continue;
      }
      if (h < 0 || h >= nm) throw Error("missing composite " + morphisms[g].id + " . " + morphisms[f].id);
      if (morphisms[h].src != morphisms[f].src || morphisms[h].tgt != morphisms[g].tgt)
        throw Error("composite " + morphisms[g].id + " . " + morphisms[f].id + " = " + morphisms[h].id +
                    " has wrong endpoints");
    }
  for (int f = 0; f < nm; ++f) {
    if (at(identity[morphisms[f].tgt], f) != f || at(f, identity[morphisms[f].src]) != f)
      throw Error("unit law fails for morphism " + morphisms[f].id);
  }
  std::vector<std::vector<int>> out(no);
  for (int f = 0; f < nm; ++f) out[morphisms[f].src].push_back(f);
  for (int f = 0; f < nm; ++f)
    for (int g : out[morphisms[f].tgt]) {
      int gf = at(g, f);
      for (int h : out[morphisms[g].tgt]) {
        int hg = at(h, g);
        if (at(h, gf) != at(hg, f))
          throw Error("associativity fails on triple " + triple_name(morphisms, h, g, f));
      }
    }

  // Canonical order: sort by identifier.
  std::vector<int> operm(no), mperm(nm);
  std::iota(operm.begin(), operm.end(), 0);
  std::iota(mperm.begin(), mperm.end(), 0);
  std::sort(operm.begin(), operm.end(), [&](int a, int b) { return objects[a] < objects[b]; });
  std::sort(mperm.begin(), mperm.end(), [&](int a, int b) { return morphisms[a].id < morphisms[b].id; });
  std::vector<int> oinv(no), minv(nm);
  for (int i = 0; i < no; ++i) oinv[operm[i]] = i;
  for (int i = 0; i < nm; ++i) minv[mperm[i]] = i;

  FinCat c;
  c.objects_.resize(no);
  c.morphisms_.resize(nm);
  c.identity_.resize(no);
  for (int i = 0; i < no; ++i) c.objects_[i] = objects[operm[i]];
  for (int i = 0; i < nm; ++i) {
    const auto& m = morphisms[mperm[i]];
    c.morphisms_[i] = Morphism{m.id, oinv[m.src], oinv[m.tgt]};
  }
  for (int x = 0; x < no; ++x) c.identity_[oinv[x]] = minv[identity[x]];
  c.comp_.assign(static_cast<std::size_t>(nm) * nm, -1);
  for (int g = 0; g < nm; ++g)
    for (int f = 0; f < nm; ++f) {
      int h = at(g, f);
      if (h >= 0) c.comp_[static_cast<std::size_t>(minv[g]) * nm + minv[f]] = minv[h];
    }
  c.hom_.assign(static_cast<std::size_t>(no) * no, {});
  for (int f = 0; f < nm; ++f)
    c.hom_[static_cast<std::size_t>(c.morphisms_[f].src) * no + c.morphisms_[f].tgt].push_back(f);
  c.inverse_.assign(nm, -1);
  for (int f = 0; f < nm; ++f) {
    const auto& m = c.morphisms_[f];
    for (int g : c.hom(m.tgt, m.src))
      if (c.compose(g, f) == c.identity_[m.src] && c.compose(f, g) == c.identity_[m.tgt]) {
        c.inverse_[f] = g;
        break;
      }
  }
  for (int x = 0; x < no; ++x) c.object_lookup_[c.objects_[x]] = x;
  for (int f = 0; f < nm; ++f) c.morphism_lookup_[c.morphisms_[f].id] = f;
  return c;
}

int FinCat::object_index(const std::string& id) const {
  auto it = object_lookup_.find(id);
  return it == object_lookup_.end() ? -1 : it->second;
}

int FinCat::morphism_index(const std::string& id) const {
  auto it = morphism_lookup_.find(id);
  return it == morphism_lookup_.end() ? -1 : it->second;
}

bool FinCat::is_groupoid() const {
  return std::all_of(inverse_.begin(), inverse_.end(), [](int g) { return g >= 0; });
}

FinCat make_category(const CategorySpec& spec) {
  std::vector<std::string> objects = spec.objects;
  std::map<std::string, int> oidx;
  for (int i = 0; i < static_cast<int>(objects.size()); ++i) {
    if (!oidx.emplace(objects[i], i).second) throw Error("duplicate object " + objects[i]);
  }
  std::vector<Morphism> mors;
  std::map<std::string, int> midx;
  std::vector<int> identity;
  for (auto& o : objects) {
    identity.push_back(static_cast<int>(mors.size()));
    midx["id_" + o] = static_cast<int>(mors.size());
    mors.push_back({"id_" + o, oidx[o], oidx[o]});
  }
  for (auto& a : spec.arrows) {
    auto s = oidx.find(a.src);
    auto t = oidx.find(a.tgt);
    if (s == oidx.end() || t == oidx.end())
      throw Error("dangling source/target on morphism " + a.id + ": " + a.src + " -> " + a.tgt);
    if (!midx.emplace(a.id, static_cast<int>(mors.size())).second) throw Error("duplicate morphism " + a.id);
    mors.push_back({a.id, s->second, t->second});
  }
  const int nm = static_cast<int>(mors.size());
  std::vector<int> comp(static_cast<std::size_t>(nm) * nm, -1);
  auto lookup = [&](const std::string& id) {
    auto it = midx.find(id);
    if (it == midx.end()) throw Error("unknown morphism " + id + " in composition table");
    return it->second;
  };
  for (auto& c : spec.comps) {
    int g = lookup(c.g), f = lookup(c.f), h = lookup(c.h);
    if (mors[f].tgt != mors[g].src) throw Error("composite declared for non-composable pair " + c.g + " . " + c.f);
    auto& slot = comp[static_cast<std::size_t>(g) * nm + f];
    if (slot >= 0 && slot != h) throw Error("conflicting composites for " + c.g + " . " + c.f);
    slot = h;
  }
  for (int f = 0; f < nm; ++f) {
    auto& left = comp[static_cast<std::size_t>(identity[mors[f].tgt]) * nm + f];
    if (left < 0) left = f;
    auto& right = comp[static_cast<std::size_t>(f) * nm + identity[mors[f].src]];
    if (right < 0) right = f;
  }
  return FinCat::build(std::move(objects), std::move(mors), std::move(identity), std::move(comp));
}

FinCat interval(int n) {
  if (n < 0) throw Error("interval needs n >= 0");
  std::vector<std::string> objs;
  for (int i = 0; i <= n; ++i) objs.push_back(std::to_string(i));
  std::vector<Morphism> mors;
  std::vector<std::vector<int>> idx(n + 1, std::vector<int>(n + 1, -1));
  for (int i = 0; i <= n; ++i)
    for (int j = i; j <= n; ++j) {
      idx[i][j] = static_cast<int>(mors.size());
      std::string id = i == j ? "id_" + objs[i] : "f" + objs[i] + objs[j];
      if (n >= 10 && i != j) id = "f" + objs[i] + "_" + objs[j];
      mors.push_back({id, i, j});
    }
  const int nm = static_cast<int>(mors.size());
  std::vector<int> comp(static_cast<std::size_t>(nm) * nm, -1);
  std::vector<int> identity(n + 1);
  for (int i = 0; i <= n; ++i) identity[i] = idx[i][i];
  for (int i = 0; i <= n; ++i)
    for (int j = i; j <= n; ++j)
      for (int k = j; k <= n; ++k) comp[static_cast<std::size_t>(idx[j][k]) * nm + idx[i][j]] = idx[i][k];
  return FinCat::build(objs, mors, identity, comp);
}

FinCat groupoid_interval(int m) {
  if (m < 0) throw Error("groupoid_interval needs m >= 0");
  std::vector<std::string> objs;
  for (int i = 0; i <= m; ++i) objs.push_back(std::to_string(i));
  const int n = m + 1;
  std::vector<Morphism> mors;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::string id = i == j ? "id_" + objs[i] : (m >= 10 ? "g" + objs[i] + "_" + objs[j] : "g" + objs[i] + objs[j]);
      mors.push_back({id, i, j});
    }
  const int nm = n * n;
  std::vector<int> comp(static_cast<std::size_t>(nm) * nm, -1);
  std::vector<int> identity(n);
  for (int i = 0; i < n; ++i) identity[i] = i * n + i;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) comp[static_cast<std::size_t>(j * n + k) * nm + (i * n + j)] = i * n + k;
  return FinCat::build(objs, mors, identity, comp);
}

FinCat walking_idempotent() {
  CategorySpec s;
  s.objects = {"x"};
  s.arrows = {{"e", "x", "x"}};
  s.comps = {{"e", "e", "e"}};
  return make_category(s);
}

FinCat iso_subcategory(const FinCat& c) {
  std::vector<int> keep;
  std::vector<int> newidx(c.num_morphisms(), -1);
  for (int f = 0; f < c.num_morphisms(); ++f)
    if (c.is_iso(f)) {
      newidx[f] = static_cast<int>(keep.size());
      keep.push_back(f);
    }
  std::vector<Morphism> mors;
  for (int f : keep) mors.push_back(c.morphism(f));
  const int nm = static_cast<int>(keep.size());
  std::vector<int> comp(static_cast<std::size_t>(nm) * nm, -1);
  for (int a = 0; a < nm; ++a)
    for (int b = 0; b < nm; ++b) {
      int h = c.compose(keep[a], keep[b]);
      if (h >= 0) comp[static_cast<std::size_t>(a) * nm + b] = newidx[h];
    }
  std::vector<int> identity(c.num_objects());
  for (int x = 0; x < c.num_objects(); ++x) identity[x] = newidx[c.identity(x)];
  return FinCat::build(c.objects(), mors, identity, comp);
}

FinCat product(const FinCat& c, const FinCat& d) {
  std::vector<std::string> objs;
  for (int x = 0; x < c.num_objects(); ++x)
    for (int y = 0; y < d.num_objects(); ++y) objs.push_back("(" + c.object(x) + "," + d.object(y) + ")");
  auto pm = [&](int f, int g) { return f * d.num_morphisms() + g; };
  std::vector<Morphism> mors;
  for (int f = 0; f < c.num_morphisms(); ++f)
    for (int g = 0; g < d.num_morphisms(); ++g) {
      const auto& mf = c.morphism(f);
      const auto& mg = d.morphism(g);
      mors.push_back({"(" + mf.id + "," + mg.id + ")", mf.src * d.num_objects() + mg.src,
                      mf.tgt * d.num_objects() + mg.tgt});
    }
  const int nm = static_cast<int>(mors.size());
  std::vector<int> comp(static_cast<std::size_t>(nm) * nm, -1);
  for (int f1 = 0; f1 < c.num_morphisms(); ++f1)
    for (int f2 = 0; f2 < c.num_morphisms(); ++f2) {
      int f = c.compose(f2, f1);
      if (f < 0) continue;
      for (int g1 = 0; g1 < d.num_morphisms(); ++g1)
        for (int g2 = 0; g2 < d.num_morphisms(); ++g2) {
          int g = d.compose(g2, g1);
          if (g < 0) continue;
          comp[static_cast<std::size_t>(pm(f2, g2)) * nm + pm(f1, g1)] =
              pm(f, g);
        }
    }
  std::vector<int> identity;
  for (int x = 0; x < c.num_objects(); ++x)
    for (int y = 0; y < d.num_objects(); ++y) identity.push_back(pm(c.identity(x), d.identity(y)));
  return FinCat::build(objs, mors, identity, comp);
}

Verdict Functor::validate() const {
  const FinCat& c = *src;
  const FinCat& d = *tgt;
  if (static_cast<int>(data.obj.size()) != c.num_objects() || static_cast<int>(data.mor.size()) != c.num_morphisms())
    return {false, "functor data has wrong size"};
  for (int f = 0; f < c.num_morphisms(); ++f) {
    int g = data.mor[f];
    if (g < 0 || g >= d.num_morphisms()) return {false, "morphism " + c.morphism(f).id + " unmapped"};
    if (d.morphism(g).src != data.obj[c.morphism(f).src] || d.morphism(g).tgt != data.obj[c.morphism(f).tgt])
      return {false, "endpoints not preserved at " + c.morphism(f).id};
  }
  for (int x = 0; x < c.num_objects(); ++x)
    if (data.mor[c.identity(x)] != d.identity(data.obj[x])) return {false, "identity not preserved at " + c.object(x)};
  for (int g = 0; g < c.num_morphisms(); ++g)
    for (int f = 0; f < c.num_morphisms(); ++f) {
      int h = c.compose(g, f);
      if (h >= 0 && d.compose(data.mor[g], data.mor[f]) != data.mor[h])
        return {false, "composition not preserved at " + c.morphism(g).id + " . " + c.morphism(f).id};
    }
  return {true, ""};
}

Functor identity_functor(const CatPtr& c) {
  Functor f{c, c, {}};
  f.data.obj.resize(c->num_objects());
  f.data.mor.resize(c->num_morphisms());
  std::iota(f.data.obj.begin(), f.data.obj.end(), 0);
  std::iota(f.data.mor.begin(), f.data.mor.end(), 0);
  return f;
}

Functor compose(const Functor& g, const Functor& f) {
  Functor h{f.src, g.tgt, {}};
  for (int x : f.data.obj) h.data.obj.push_back(g.data.obj[x]);
  for (int m : f.data.mor) h.data.mor.push_back(g.data.mor[m]);
  return h;
}

Verdict NatTrans::validate() const {
  const FinCat& c = *source.src;
  const FinCat& d = *source.tgt;
  for (int x = 0; x < c.num_objects(); ++x) {
    const auto& m = d.morphism(component[x]);
    if (m.src != source.obj(x) || m.tgt != target.obj(x)) return {false, "component at " + c.object(x) + " has wrong endpoints"};
  }
  for (int f = 0; f < c.num_morphisms(); ++f) {
    const auto& m = c.morphism(f);
    if (d.compose(target.mor(f), component[m.src]) != d.compose(component[m.tgt], source.mor(f)))
      return {false, "naturality fails at " + m.id};
  }
  return {true, ""};
}

namespace {

// Interleaved search plan: after object step i, the morphisms whose endpoints
// are both assigned get their turn; composition triples are checked as soon
// as all three members are assigned.
struct Plan {
  std::vector<int> object_order;
  std::vector<std::vector<int>> mors_after_object;  // per object step
  std::vector<std::vector<std::pair<int, int>>> checks;  // per morphism: (g, f) pairs to verify
};

Plan make_plan(const FinCat& c) {
  Plan p;
  const int no = c.num_objects();
  const int nm = c.num_morphisms();
  p.object_order.resize(no);
  std::iota(p.object_order.begin(), p.object_order.end(), 0);
  std::vector<int> opos(no);
  for (int i = 0; i < no; ++i) opos[p.object_order[i]] = i;
  p.mors_after_object.assign(no, {});
  std::vector<int> mstep(nm);
  for (int f = 0; f < nm; ++f) {
    int s = std::max(opos[c.morphism(f).src], opos[c.morphism(f).tgt]);
    p.mors_after_object[s].push_back(f);
  }
  int counter = 0;
  std::vector<int> mpos(nm);
  for (int s = 0; s < no; ++s)
    for (int f : p.mors_after_object[s]) mpos[f] = counter++;
  p.checks.assign(nm, {});
  for (int g = 0; g < nm; ++g)
    for (int f = 0; f < nm; ++f) {
      int h = c.compose(g, f);
      if (h < 0) continue;
      if (c.is_identity(g) || c.is_identity(f)) continue;  // unit laws hold automatically
      int last = std::max({mpos[g], mpos[f], mpos[h]});
      int who = mpos[g] == last ? g : (mpos[f] == last ? f : h);
      p.checks[who].push_back({g, f});
    }
  return p;
}

struct Searcher {
  const FinCat& c;
  const FinCat& d;
  const SearchOptions& opts;
  const std::function<bool(const FunctorData&)>& visit;
  Plan plan;
  FunctorData cur;
  std::vector<char> used_obj, used_mor;
  bool stop = false;

  Searcher(const FinCat& c_, const FinCat& d_, const SearchOptions& o, const std::function<bool(const FunctorData&)>& v)
      : c(c_), d(d_), opts(o), visit(v), plan(make_plan(c_)) {
    cur.obj.assign(c.num_objects(), -1);
    cur.mor.assign(c.num_morphisms(), -1);
    used_obj.assign(d.num_objects(), 0);
    used_mor.assign(d.num_morphisms(), 0);
  }

  bool checks_ok(int f) const {
    for (auto [g, h] : plan.checks[f]) {
      int gh = c.compose(g, h);
      if (d.compose(cur.mor[g], cur.mor[h]) != cur.mor[gh]) return false;
    }
    return true;
  }

  void objects(int step) {
    if (stop) return;
    if (step == static_cast<int>(plan.object_order.size())) {
      if (!visit(cur)) stop = true;
      return;
    }
    int x = plan.object_order[step];
    for (int y = 0; y < d.num_objects() && !stop; ++y) {
      if (opts.injective && used_obj[y]) continue;
      if (opts.object_filter && !opts.object_filter(x, y)) continue;
      cur.obj[x] = y;
      used_obj[y] = 1;
      morphisms(step, 0);
      used_obj[y] = 0;
    }
    cur.obj[x] = -1;
  }

  void morphisms(int step, std::size_t k) {
    if (stop) return;
    const auto& list = plan.mors_after_object[step];
    if (k == list.size()) {
      objects(step + 1);
      return;
    }
    int f = list[k];
    const auto& m = c.morphism(f);
    if (c.is_identity(f)) {
      int g = d.identity(cur.obj[m.src]);
      if (opts.injective && used_mor[g]) return;
      cur.mor[f] = g;
      used_mor[g] = 1;
      if (checks_ok(f)) morphisms(step, k + 1);
      used_mor[g] = 0;
      cur.mor[f] = -1;
      return;
    }
    for (int g : d.hom(cur.obj[m.src], cur.obj[m.tgt])) {
      if (stop) break;
      if (opts.injective && used_mor[g]) continue;
      cur.mor[f] = g;
      used_mor[g] = 1;
      if (checks_ok(f)) morphisms(step, k + 1);
      used_mor[g] = 0;
    }
    cur.mor[f] = -1;
  }
};

}  // namespace

void search_functors(const FinCat& c, const FinCat& d, const SearchOptions& opts,
                     const std::function<bool(const FunctorData&)>& visit) {
  if (c.num_objects() == 0) {
    visit(FunctorData{});
    return;
  }
  Searcher s(c, d, opts, visit);
  s.objects(0);
}

std::vector<FunctorData> enumerate_functor_data(const FinCat& c, const FinCat& d) {
  std::vector<FunctorData> out;
  search_functors(c, d, {}, [&](const FunctorData& f) {
    out.push_back(f);
    return true;
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Functor> enumerate_functors(const CatPtr& c, const CatPtr& d) {
  std::vector<Functor> out;
  for (auto& f : enumerate_functor_data(*c, *d)) out.push_back(Functor{c, d, std::move(f)});
  return out;
}

std::vector<NatTrans> enumerate_nat_trans(const Functor& f, const Functor& g) {
  const FinCat& c = *f.src;
  const FinCat& d = *f.tgt;
  std::vector<NatTrans> out;
  std::vector<int> comp(c.num_objects(), -1);
  // Naturality squares are checked once both endpoints have components.
  std::vector<std::vector<int>> ready(c.num_objects());
  for (int m = 0; m < c.num_morphisms(); ++m) {
    const auto& mm = c.morphism(m);
    ready[std::max(mm.src, mm.tgt)].push_back(m);
  }
  std::function<void(int)> rec = [&](int x) {
    if (x == c.num_objects()) {
      out.push_back(NatTrans{f, g, comp});
      return;
    }
    for (int a : d.hom(f.obj(x), g.obj(x))) {
      comp[x] = a;
      bool ok = true;
      for (int m : ready[x]) {
        const auto& mm = c.morphism(m);
        if (d.compose(g.mor(m), comp[mm.src]) != d.compose(comp[mm.tgt], f.mor(m))) {
          ok = false;
          break;
        }
      }
      if (ok) rec(x + 1);
    }
    comp[x] = -1;
  };
  rec(0);
  return out;
}

std::string functor_name(const FinCat& c, const FinCat& d, const FunctorData& f) {
  std::string s = "<";
  for (int x = 0; x < c.num_objects(); ++x) {
    if (x) s += ",";
    s += d.object(f.obj[x]);
  }
  s += ";";
  bool first = true;
  for (int m = 0; m < c.num_morphisms(); ++m) {
    if (c.is_identity(m)) continue;
    if (!first) s += ",";
    first = false;
    s += d.morphism(f.mor[m]).id;
  }
  return s + ">";
}

FinCat functor_category(const FinCat& c, const FinCat& d) {
  auto functors = enumerate_functor_data(c, d);
  const int nf = static_cast<int>(functors.size());
  std::vector<std::string> objs;
  for (auto& f : functors) objs.push_back(functor_name(c, d, f));

  struct Cell {
    int s, t;
    std::vector<int> comp;
  };
  std::vector<Cell> cells;
  std::map<std::tuple<int, int, std::vector<int>>, int> cell_index;
  std::vector<int> identity(nf);
  std::vector<std::vector<int>> from(nf);
  auto cp = std::make_shared<const FinCat>(c);
  auto dp = std::make_shared<const FinCat>(d);
  for (int a = 0; a < nf; ++a)
    for (int b = 0; b < nf; ++b) {
      Functor fa{cp, dp, functors[a]}, fb{cp, dp, functors[b]};
      for (auto& t : enumerate_nat_trans(fa, fb)) {
        int id = static_cast<int>(cells.size());
        cell_index[{a, b, t.component}] = id;
        from[a].push_back(id);
        cells.push_back({a, b, t.component});
      }
    }
  for (int a = 0; a < nf; ++a) {
    std::vector<int> comp;
    for (int x = 0; x < c.num_objects(); ++x) comp.push_back(d.identity(functors[a].obj[x]));
    identity[a] = cell_index.at({a, a, comp});
  }
  std::vector<Morphism> mors;
  for (auto& cell : cells) {
    std::string name = "[" + objs[cell.s] + "=>" + objs[cell.t] + ":";
    for (std::size_t i = 0; i < cell.comp.size(); ++i) name += (i ? "," : "") + d.morphism(cell.comp[i]).id;
    mors.push_back({name + "]", cell.s, cell.t});
  }
  const int nm = static_cast<int>(cells.size());
  std::vector<int> table(static_cast<std::size_t>(nm) * nm, -1);
  for (int f = 0; f < nm; ++f)
    for (int g : from[cells[f].t]) {
      std::vector<int> comp(c.num_objects());
      for (int x = 0; x < c.num_objects(); ++x) comp[x] = d.compose(cells[g].comp[x], cells[f].comp[x]);
      table[static_cast<std::size_t>(g) * nm + f] = cell_index.at({cells[f].s, cells[g].t, comp});
    }
  return FinCat::build(objs, mors, identity, table);
}

std::vector<std::vector<int>> tau0(const FinCat& c) {
  const int n = c.num_objects();
  std::vector<int> cls(n, -1);
  std::vector<std::vector<int>> out;
  for (int x = 0; x < n; ++x) {
    if (cls[x] >= 0) continue;
    std::vector<int> group;
    for (int y = x; y < n; ++y) {
      if (cls[y] >= 0) continue;
      bool iso = false;
      for (int f : c.hom(x, y))
        if (c.is_iso(f)) {
          iso = true;
          break;
        }
      if (iso) {
        cls[y] = static_cast<int>(out.size());
        group.push_back(y);
      }
    }
    out.push_back(group);
  }
  return out;
}

Verdict is_categorical_equivalence(const Functor& f) {
  const FinCat& c = *f.src;
  const FinCat& d = *f.tgt;
  for (int x = 0; x < c.num_objects(); ++x)
    for (int y = 0; y < c.num_objects(); ++y) {
      const auto& src_hom = c.hom(x, y);
      const auto& tgt_hom = d.hom(f.obj(x), f.obj(y));
      std::vector<int> images;
      for (int m : src_hom) images.push_back(f.mor(m));
      std::sort(images.begin(), images.end());
      bool injective = std::adjacent_find(images.begin(), images.end()) == images.end();
      if (!injective || images.size() != tgt_hom.size())
        return {false, "hom map " + c.object(x) + " -> " + c.object(y) + " is not a bijection (" +
                           std::to_string(src_hom.size()) + " vs " + std::to_string(tgt_hom.size()) + ")"};
    }
  for (int y = 0; y < d.num_objects(); ++y) {
    bool hit = false;
    for (int x = 0; x < c.num_objects() && !hit; ++x)
      for (int m : d.hom(f.obj(x), y))
        if (d.is_iso(m)) {
          hit = true;
          break;
        }
    if (!hit) return {false, "object " + d.object(y) + " is not isomorphic to any image object"};
  }
  return {true, ""};
}

Verdict is_isofibration(const Functor& f) {
  const FinCat& c = *f.src;
  const FinCat& d = *f.tgt;
  for (int x = 0; x < c.num_objects(); ++x)
    for (int m = 0; m < d.num_morphisms(); ++m) {
      if (d.morphism(m).src != f.obj(x) || !d.is_iso(m)) continue;
      bool lifted = false;
      for (int g = 0; g < c.num_morphisms() && !lifted; ++g)
        if (c.morphism(g).src == x && c.is_iso(g) && f.mor(g) == m) lifted = true;
      if (!lifted)
        return {false, "iso " + d.morphism(m).id + " out of F(" + c.object(x) + ") has no lift at " + c.object(x)};
    }
  return {true, ""};
}

std::optional<FunctorData> find_isomorphism(const FinCat& c, const FinCat& d) {
  if (c.num_objects() != d.num_objects() || c.num_morphisms() != d.num_morphisms()) return std::nullopt;
  auto signature = [](const FinCat& k, int x) {
    std::vector<int> out_sizes, in_sizes;
    for (int y = 0; y < k.num_objects(); ++y) {
      out_sizes.push_back(static_cast<int>(k.hom(x, y).size()));
      in_sizes.push_back(static_cast<int>(k.hom(y, x).size()));
    }
    std::sort(out_sizes.begin(), out_sizes.end());
    std::sort(in_sizes.begin(), in_sizes.end());
    int isos = 0;
    for (int f : k.hom(x, x)) isos += k.is_iso(f);
    return std::make_tuple(static_cast<int>(k.hom(x, x).size()), isos, out_sizes, in_sizes);
  };
  std::vector<decltype(signature(c, 0))> sc, sd;
  for (int x = 0; x < c.num_objects(); ++x) sc.push_back(signature(c, x));
  for (int x = 0; x < d.num_objects(); ++x) sd.push_back(signature(d, x));
  {
    auto a = sc, b = sd;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return std::nullopt;
  }
  SearchOptions opts;
  opts.injective = true;
  opts.object_filter = [&](int x, int y) { return sc[x] == sd[y]; };
  std::optional<FunctorData> found;
  search_functors(c, d, opts, [&](const FunctorData& f) {
    found = f;
    return false;
  });
  return found;
}

std::string write_fincat(const FinCat& c) {
  std::ostringstream out;
  auto name = [&](int f) { return c.is_identity(f) ? "id_" + c.object(c.morphism(f).src) : c.morphism(f).id; };
  out << "obj";
  for (auto& o : c.objects()) out << ' ' << o;
  out << '\n';
  for (int f = 0; f < c.num_morphisms(); ++f) {
    if (c.is_identity(f)) continue;
    const auto& m = c.morphism(f);
    out << "mor " << m.id << ": " << c.object(m.src) << " -> " << c.object(m.tgt) << '\n';
  }
  for (int g = 0; g < c.num_morphisms(); ++g)
    for (int f = 0; f < c.num_morphisms(); ++f) {
      if (c.is_identity(g) || c.is_identity(f)) continue;
      int h = c.compose(g, f);
      if (h >= 0) out << "comp " << name(g) << " . " << name(f) << " = " << name(h) << '\n';
    }
  return out.str();
}

}  // namespace segal::fincat

namespace segal::fincat {

int product_object(const FinCat& p, const FinCat& c, const FinCat& d, int x, int y) {
  return p.object_index("(" + c.object(x) + "," + d.object(y) + ")");
}

int product_morphism(const FinCat& p, const FinCat& c, const FinCat& d, int f, int g) {
  return p.morphism_index("(" + c.morphism(f).id + "," + d.morphism(g).id + ")");
}

}  // namespace segal::fincat
