#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "segal/bisset.hpp"

namespace segal::bisset {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int u) {
    while (parent[u] != u) u = parent[u] = parent[parent[u]];
    return u;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

int degenerate_vertex(const TruncBiSSet& x, int v, int l) {
  for (int k = 0; k < l; ++k) v = x.vdegen(0, k, v, 0);
  return v;
}

}  // namespace

Ho ho_data(const TruncBiSSet& x) {
  if (x.p() < 2) throw WindowError("the homotopy category needs bidegree (2,0)", "p >= 2");
  const int nv = x.size(0, 0);
  const int ne = x.size(1, 0);
  auto src = [&](int f) { return x.hface(1, 0, f, 1); };
  auto tgt = [&](int f) { return x.hface(1, 0, f, 0); };
  // Components of the hom-spaces: edges of X_{1,•} lying over degenerate vertices.
  UnionFind uf(ne);
  if (x.q() >= 1)
    for (int s = 0; s < x.size(1, 1); ++s) {
      int a = x.h_vertex(1, 1, s, 0), b = x.h_vertex(1, 1, s, 1);
      int va = x.vface(0, 1, a, 0), vb = x.vface(0, 1, b, 0);
      if (a != degenerate_vertex(x, va, 1) || b != degenerate_vertex(x, vb, 1)) continue;
      uf.unite(x.vface(1, 1, s, 0), x.vface(1, 1, s, 1));
    }
  std::vector<int> cls(ne, -1), rep;
  for (int f = 0; f < ne; ++f) {
    int r = uf.find(f);
    if (cls[r] < 0) {
      cls[r] = static_cast<int>(rep.size());
      rep.push_back(f);
    }
    cls[f] = cls[r];
  }
  const int nm = static_cast<int>(rep.size());
  std::vector<int> identity(nv);
  for (int v = 0; v < nv; ++v) {
    identity[v] = cls[x.hdegen(0, 0, v, 0)];
    rep[identity[v]] = x.hdegen(0, 0, v, 0);
  }
  // Composition through 2-simplices, checked for independence of choices.
  std::vector<int> comp(static_cast<std::size_t>(nm) * nm, -1);
  std::vector<int> witness(static_cast<std::size_t>(nm) * nm, -1);
  for (int s = 0; s < x.size(2, 0); ++s) {
    int f = cls[x.hface(2, 0, s, 2)], g = cls[x.hface(2, 0, s, 0)], h = cls[x.hface(2, 0, s, 1)];
    auto slot = static_cast<std::size_t>(g) * nm + f;
    if (comp[slot] < 0) {
      comp[slot] = h;
      witness[slot] = s;
    } else if (comp[slot] != h) {
      throw Error("homotopy composition is not well defined: " + x.name(2, 0, witness[slot]) + " and " + x.name(2, 0, s) +
                  " compose the same classes to different classes");
    }
  }
  for (int f = 0; f < nm; ++f)
    for (int g = 0; g < nm; ++g)
      if (src(rep[g]) == tgt(rep[f]) && comp[static_cast<std::size_t>(g) * nm + f] < 0)
        throw Error("no 2-simplex composes " + x.name(1, 0, rep[f]) + " with " + x.name(1, 0, rep[g]) +
                    " within the window");
  std::vector<std::string> objects;
  for (int v = 0; v < nv; ++v) objects.push_back(x.name(0, 0, v));
  std::vector<fincat::Morphism> mors;
  std::vector<char> is_id(nm, 0);
  for (int v = 0; v < nv; ++v) is_id[identity[v]] = 1;
  for (int k = 0; k < nm; ++k) {
    std::string id = is_id[k] ? "id_" + x.name(0, 0, src(rep[k])) : x.name(1, 0, rep[k]);
    mors.push_back({id, src(rep[k]), tgt(rep[k])});
  }
  auto names = mors;
  Ho ho;
  ho.cat = fincat::FinCat::build(objects, mors, identity, comp);
  ho.object_of.resize(nv);
  for (int v = 0; v < nv; ++v) ho.object_of[v] = ho.cat.object_index(objects[v]);
  std::vector<int> final_index(nm);
  for (int k = 0; k < nm; ++k) final_index[k] = ho.cat.morphism_index(names[k].id);
  ho.morphism_of.resize(ne);
  for (int f = 0; f < ne; ++f) ho.morphism_of[f] = final_index[cls[f]];
  ho.representative.assign(nm, -1);
  for (int k = 0; k < nm; ++k) ho.representative[final_index[k]] = rep[k];
  return ho;
}

fincat::FinCat ho(const TruncBiSSet& x) { return ho_data(x).cat; }

fincat::Functor ho_map(const BiSSetMap& f, const Ho& src, const Ho& tgt) {
  fincat::Functor F{fincat::share(src.cat), fincat::share(tgt.cat), {}};
  F.data.obj.resize(src.cat.num_objects());
  for (int v = 0; v < f.src->size(0, 0); ++v) F.data.obj[src.object_of[v]] = tgt.object_of[f(0, 0, v)];
  F.data.mor.resize(src.cat.num_morphisms());
  for (int m = 0; m < src.cat.num_morphisms(); ++m) F.data.mor[m] = tgt.morphism_of[f(1, 0, src.representative[m])];
  auto v = F.validate();
  if (!v.ok) throw Error("induced functor on homotopy categories is invalid: " + v.witness);
  return F;
}

fincat::Functor j_functor(const TruncBiSSet& x) {
  auto seg = segal_check_strict(x);
  if (!seg.ok) throw UncertifiedError("j needs a Segal input: " + seg.witness);
  auto col = column(x, 0);
  auto t = sset::tau1_presented(col);
  auto h = ho_data(x);
  // For each edge p of X_{0,•}, a square sigma with the prescribed faces.
  std::vector<int> edge_image(x.size(0, 1), -1);
  for (int p = 0; p < x.size(0, 1); ++p) {
    int y = x.vface(0, 1, p, 0);
    int sv = x.vdegen(0, 0, y, 0), sh = x.hdegen(0, 0, y, 0);
    for (int s = 0; s < x.size(1, 1) && edge_image[p] < 0; ++s)
      if (x.hface(1, 1, s, 1) == p && x.hface(1, 1, s, 0) == sv && x.vface(1, 1, s, 0) == sh)
        edge_image[p] = h.morphism_of[x.vface(1, 1, s, 1)];
    if (edge_image[p] < 0) throw Error("no square witnesses the image of edge " + x.name(0, 1, p) + " under j");
  }
  const auto& c = t.cat();
  fincat::Functor J{fincat::share(c), fincat::share(h.cat), {}};
  J.data.obj.resize(c.num_objects());
  for (int v = 0; v < col.size(0); ++v) J.data.obj[t.presented.object_of[v]] = h.object_of[v];
  const auto& gens = col.generators(1);
  J.data.mor.resize(c.num_morphisms());
  for (int m = 0; m < c.num_morphisms(); ++m) {
    int cur = h.cat.identity(J.data.obj[c.morphism(m).src]);
    for (int g : t.presented.representative[m]) {
      cur = h.cat.compose(edge_image[gens[g]], cur);
      if (cur < 0) throw Error("j does not respect composable paths at " + col.name(1, gens[g]));
    }
    J.data.mor[m] = cur;
  }
  auto v = J.validate();
  if (!v.ok) throw Error("j is not a functor: " + v.witness);
  // The image of an edge must not depend on the path chosen for it.
  for (int p = 0; p < col.size(1); ++p)
    if (J.data.mor[t.edge_morphism(col, p)] != edge_image[p])
      throw Error("j is not well defined on edge " + col.name(1, p));
  return J;
}

Equivalences equivalences(const TruncBiSSet& x) {
  auto h = ho_data(x);
  Equivalences eq;
  std::vector<char> is_eq(x.size(1, 0), 0);
  for (int f = 0; f < x.size(1, 0); ++f)
    if (h.cat.is_iso(h.morphism_of[f])) {
      is_eq[f] = 1;
      eq.equivalence_vertices.push_back(f);
    }
  eq.member.resize(x.q() + 1);
  std::vector<std::unordered_map<int, int>> index(x.q() + 1);
  for (int l = 0; l <= x.q(); ++l)
    for (int s = 0; s < x.size(1, l); ++s) {
      bool all = true;
      for (int j = 0; j <= l && all; ++j) all = is_eq[x.v_vertex(1, l, s, j)];
      if (all) {
        index[l][s] = static_cast<int>(eq.member[l].size());
        eq.member[l].push_back(s);
      }
    }
  if (x.q() >= 1)
    for (int s = 0; s < x.size(1, 1); ++s)
      if (is_eq[x.vface(1, 1, s, 0)] != is_eq[x.vface(1, 1, s, 1)])
        throw Error("equivalences do not form a union of components: edge " + x.name(1, 1, s) +
                    " joins an equivalence to a non-equivalence");
  std::vector<int> sizes;
  for (auto& m : eq.member) sizes.push_back(static_cast<int>(m.size()));
  eq.object = sset::TruncSSet::from_model(
      x.q(), sizes, [&](int l, int s, int i) { return index[l - 1].at(x.vface(1, l, eq.member[l][s], i)); },
      [&](int l, int s, int j) { return index[l + 1].at(x.vdegen(1, l, eq.member[l][s], j)); },
      [&](int l, int s) { return x.name(1, l, eq.member[l][s]); });
  eq.object.set_coskeletal(x.coskeletal_level(), x.determined_level());
  return eq;
}

Verdict is_complete_1trunc(const TruncBiSSet& x) {
  auto seg = segal_check_strict(x);
  if (!seg.ok) throw UncertifiedError("completeness needs a Segal input: " + seg.witness);
  auto eq = equivalences(x);
  auto col = sset::share(column(x, 0));
  auto xe = sset::share(eq.object);
  std::vector<std::unordered_map<int, int>> index(x.q() + 1);
  for (int l = 0; l <= x.q(); ++l)
    for (std::size_t k = 0; k < eq.member[l].size(); ++k) index[l][eq.member[l][k]] = static_cast<int>(k);
  sset::SSetMap f{col, xe, {}};
  for (int l = 0; l <= x.q(); ++l) {
    f.img.emplace_back(x.size(0, l));
    for (int s = 0; s < x.size(0, l); ++s) {
      auto it = index[l].find(x.hdegen(0, l, s, 0));
      if (it == index[l].end()) throw Error("internal: a degenerate edge is not an equivalence");
      f.img[l][s] = it->second;
    }
  }
  auto v = f.validate();
  if (!v.ok) throw Error("internal: the degeneracy map into X_eq is invalid: " + v.witness);
  return sset::is_whe_1trunc(f);
}

Verdict is_dk_equivalence(const BiSSetMap& f) {
  const auto& x = *f.src;
  const auto& y = *f.tgt;
  for (const TruncBiSSet* s : {&x, &y}) {
    auto seg = segal_check_strict(*s);
    if (!seg.ok) throw UncertifiedError("Dwyer-Kan test needs Segal inputs: " + seg.witness);
  }
  auto hx = ho_data(x), hy = ho_data(y);
  auto F = ho_map(f, hx, hy);
  auto eq = fincat::is_categorical_equivalence(F);
  if (!eq.ok) return {false, "functor on homotopy categories is not an equivalence: " + eq.witness};
  for (int a = 0; a < x.size(0, 0); ++a)
    for (int b = 0; b < x.size(0, 0); ++b) {
      auto hs = hom_space(x, {a, b});
      auto ht = hom_space(y, {f(0, 0, a), f(0, 0, b)});
      std::vector<std::unordered_map<int, int>> index(y.q() + 1);
      for (int l = 0; l <= y.q(); ++l)
        for (std::size_t k = 0; k < ht.member[l].size(); ++k) index[l][ht.member[l][k]] = static_cast<int>(k);
      auto sp = sset::share(hs.carrier), tp = sset::share(ht.carrier);
      sset::SSetMap g{sp, tp, {}};
      for (int l = 0; l <= x.q(); ++l) {
        g.img.emplace_back(hs.member[l].size());
        for (std::size_t k = 0; k < hs.member[l].size(); ++k) g.img[l][k] = index[l].at(f(1, l, hs.member[l][k]));
      }
      auto w = sset::is_whe_1trunc(g);
      if (!w.ok)
        return {false, "hom-space map over (" + x.name(0, 0, a) + "," + x.name(0, 0, b) + ") is not a weak equivalence: " +
                           w.witness};
    }
  return {true, ""};
}

}  // namespace segal::bisset
