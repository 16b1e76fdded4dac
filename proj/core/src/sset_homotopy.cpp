#include <algorithm>
#include <numeric>
#include <sstream>

#include "segal/sset.hpp"

namespace segal::sset {

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

}  // namespace

int Tau1::edge_morphism(const TruncSSet& x, int e) const {
  if (edge_generator[e] < 0) return presented.cat.identity(presented.object_of[x.face(1, e, 0)]);
  return presented.gen_morphism[edge_generator[e]];
}

Tau1 tau1_presented(const TruncSSet& x, long bound) {
  if (x.dim() < 2) throw WindowError("the fundamental category needs 2-simplices", "dim >= 2");
  present::Presentation p;
  for (int v = 0; v < x.size(0); ++v) p.objects.push_back(x.name(0, v));
  Tau1 t;
  t.edge_generator.assign(x.size(1), -1);
  for (int e : x.generators(1)) {
    t.edge_generator[e] = static_cast<int>(p.gens.size());
    p.gens.push_back({x.name(1, e), x.face(1, e, 1), x.face(1, e, 0)});
  }
  auto word = [&](int e) { return t.edge_generator[e] < 0 ? present::Word{} : present::Word{t.edge_generator[e]}; };
  for (int s : x.generators(2)) {
    present::Relation r;
    r.src = x.vertex(2, s, 0);
    r.lhs = word(x.face(2, s, 2));
    auto second = word(x.face(2, s, 0));
    r.lhs.insert(r.lhs.end(), second.begin(), second.end());
    r.rhs = word(x.face(2, s, 1));
    p.rels.push_back(std::move(r));
  }
  t.presented = present::present(p, bound);
  return t;
}

fincat::FinCat tau1(const TruncSSet& x, long bound) { return tau1_presented(x, bound).presented.cat; }

fincat::Functor tau1_map(const SSetMap& f, const Tau1& src, const Tau1& tgt) {
  const auto& x = *f.src;
  const auto& y = *f.tgt;
  const auto& c = src.cat();
  fincat::Functor F{fincat::share(c), fincat::share(tgt.cat()), {}};
  F.data.obj.assign(c.num_objects(), -1);
  for (int v = 0; v < x.size(0); ++v) F.data.obj[src.presented.object_of[v]] = tgt.presented.object_of[f(0, v)];
  const auto& gens = x.generators(1);
  F.data.mor.assign(c.num_morphisms(), -1);
  for (int m = 0; m < c.num_morphisms(); ++m) {
    int at = tgt.cat().identity(F.data.obj[c.morphism(m).src]);
    for (int g : src.presented.representative[m]) {
      at = tgt.cat().compose(tgt.edge_morphism(y, f(1, gens[g])), at);
      if (at < 0) throw Error("internal: image path is not composable");
    }
    F.data.mor[m] = at;
  }
  auto v = F.validate();
  if (!v.ok) throw Error("internal: induced functor is invalid: " + v.witness);
  return F;
}

std::vector<std::vector<int>> pi0(const TruncSSet& x) {
  UnionFind uf(x.size(0));
  if (x.dim() >= 1)
    for (int e : x.generators(1)) uf.unite(x.face(1, e, 0), x.face(1, e, 1));
  std::vector<std::vector<int>> classes;
  std::vector<int> slot(x.size(0), -1);
  for (int v = 0; v < x.size(0); ++v) {
    int r = uf.find(v);
    if (slot[r] < 0) {
      slot[r] = static_cast<int>(classes.size());
      classes.emplace_back();
    }
    classes[slot[r]].push_back(v);
  }
  return classes;
}

std::string HornWitness::describe(const TruncSSet& x) const {
  std::ostringstream out;
  out << "horn n=" << n << " k=" << k << " with faces";
  for (int i = 0; i <= n; ++i)
    if (i != k) out << " d" << i << "=" << x.name(n - 1, faces[i]);
  out << " has no filler";
  return out.str();
}

HornReport check_horns(const TruncSSet& x, int up_to, bool inner_only) {
  if (up_to > x.dim()) throw WindowError("horn check above the truncation", "dim >= " + std::to_string(up_to));
  HornReport rep;
  auto sx = std::make_shared<const TruncSSet>(x);
  for (int n = 2; n <= up_to; ++n)
    for (int k = 0; k <= n; ++k) {
      if (inner_only && (k == 0 || k == n)) continue;
      std::unordered_map<std::string, int> fillers;
      std::vector<int> key(n);
      auto encode = [&](const std::vector<int>& faces) {
        int t = 0;
        for (int i = 0; i <= n; ++i)
          if (i != k) key[t++] = faces[i];
        return std::string(reinterpret_cast<const char*>(key.data()), sizeof(int) * key.size());
      };
      std::vector<int> faces(n + 1);
      for (int s = 0; s < x.size(n); ++s) {
        for (int i = 0; i <= n; ++i) faces[i] = x.face(n, s, i);
        ++fillers[encode(faces)];
      }
      auto h = std::make_shared<const TruncSSet>(horn(n, k, n));
      auto ms = map_set(h, sx);
      std::vector<int> face_idx(n + 1, -1);
      for (int i = 0; i <= n; ++i) {
        if (i == k) continue;
        std::string nm;
        for (int v = 0; v <= n; ++v)
          if (v != i) nm += std::to_string(v);
        face_idx[i] = h->find(n - 1, nm);
      }
      for (int m = 0; m < ms.size(); ++m) {
        auto flat = ms.images(m);
        faces.assign(n + 1, -1);
        for (int i = 0; i <= n; ++i)
          if (i != k) faces[i] = ms.image(flat, n - 1, face_idx[i]);
        ++rep.horns_checked;
        auto it = fillers.find(encode(faces));
        int count = it == fillers.end() ? 0 : it->second;
        if (count > 1) rep.unique_fillers = false;
        if (count == 0) {
          rep.ok = false;
          rep.unique_fillers = false;
          if (!rep.witness) rep.witness = HornWitness{n, k, faces};
        }
      }
      if (!rep.ok) return rep;
    }
  return rep;
}

namespace {

std::string vkey(const std::vector<int>& v) { return std::string(reinterpret_cast<const char*>(v.data()), sizeof(int) * v.size()); }

}  // namespace

VertexIndex::VertexIndex(const TruncSSet& x) : x_(&x), index_(x.dim() + 1) {
  for (int k = 0; k <= x.dim(); ++k)
    for (int s = 0; s < x.size(k); ++s)
      if (!index_[k].emplace(vkey(vertices(k, s)), s).second) throw Error("simplices are not determined by their vertices");
}

std::vector<int> VertexIndex::vertices(int k, int s) const {
  std::vector<int> v(k + 1);
  for (int i = 0; i <= k; ++i) v[i] = x_->vertex(k, s, i);
  return v;
}

int VertexIndex::find(const std::vector<int>& v) const {
  auto it = index_.at(v.size() - 1).find(vkey(v));
  if (it == index_[v.size() - 1].end()) throw Error("no simplex with the given vertices");
  return it->second;
}

Exponential exponential_data(const SSetPtr& x, const SSetPtr& y, int out_dim) {
  Exponential ex;
  ex.x = x;
  ex.y = y;
  const int xd = x->dim();
  const int c = y->coskeletal_level();
  const bool cosk = c >= 0 && c <= y->dim();
  if (!cosk && y->dim() < out_dim + xd)
    throw WindowError("exponential window is insufficient", "target dim >= " + std::to_string(out_dim + xd));
  std::vector<TruncSSet> simplices;
  std::vector<int> build(out_dim + 1);
  for (int n = 0; n <= out_dim; ++n) {
    int b = n + xd + (n < out_dim ? 1 : 0);
    if (cosk) b = std::min(b, c);
    b = std::min(b, y->dim());
    build[n] = b;
    simplices.push_back(standard_simplex(n, b));
    ex.sources.push_back(share(product(simplices.back(), fit_to(*x, b))));
    ex.maps.push_back(map_set(ex.sources.back(), y));
  }
  // Operator tables by precomposition with delta^i x id and sigma^j x id.
  std::vector<std::vector<std::vector<int>>> face_tab(out_dim + 1), degen_tab(out_dim + 1);
  auto plan_for = [&](int from_n, int to_n, const std::function<int(int)>& vmap) {
    const auto& from = ex.maps[from_n];
    const auto& to = ex.maps[to_n];
    VertexIndex big(simplices[from_n]), small(simplices[to_n]);
    const auto& src_to = *to.src;
    auto phi = [&](int k, int s) {
      // s indexes product(simplices[to_n], X') at level k as a * |X'_k| + b.
      int xk = src_to.size(k) / simplices[to_n].size(k);
      int a = s / xk, b = s % xk;
      auto v = small.vertices(k, a);
      for (auto& t : v) t = vmap(t);
      return big.find(v) * xk + b;
    };
    return make_precompose_plan(from, to, phi);
  };
  for (int n = 1; n <= out_dim; ++n)
    for (int i = 0; i <= n; ++i) {
      auto plan = plan_for(n, n - 1, [i](int v) { return v < i ? v : v + 1; });
      std::vector<int> tab(ex.maps[n].size());
      for (int f = 0; f < ex.maps[n].size(); ++f) tab[f] = precompose(ex.maps[n], f, ex.maps[n - 1], plan);
      face_tab[n].push_back(std::move(tab));
    }
  for (int n = 0; n < out_dim; ++n)
    for (int j = 0; j <= n; ++j) {
      auto plan = plan_for(n, n + 1, [j](int v) { return v <= j ? v : v - 1; });
      std::vector<int> tab(ex.maps[n].size());
      for (int f = 0; f < ex.maps[n].size(); ++f) tab[f] = precompose(ex.maps[n], f, ex.maps[n + 1], plan);
      degen_tab[n].push_back(std::move(tab));
    }
  std::vector<int> sizes;
  for (auto& m : ex.maps) sizes.push_back(m.size());
  auto name = [&](int n, int f) {
    const auto& ms = ex.maps[n];
    if (ms.key_length() > 16) return "m" + std::to_string(n) + "_" + std::to_string(f);
    auto flat = ms.images(f);
    const auto& src = *ms.src;
    std::string out = "<";
    int pos = 0;
    for (int k = 0; k <= ms.level; ++k)
      for (std::size_t g = 0; g < src.generators(k).size(); ++g, ++pos)
        out += (pos ? "," : "") + y->name(k, flat[pos]);
    return out + ">";
  };
  ex.object = TruncSSet::from_model(
      out_dim, sizes, [&](int k, int s, int i) { return face_tab[k][i][s]; },
      [&](int k, int s, int j) { return degen_tab[k][j][s]; }, name);
  ex.object.set_coskeletal(y->coskeletal_level(), y->determined_level());
  return ex;
}

TruncSSet exponential(const SSetPtr& x, const SSetPtr& y, int out_dim) { return exponential_data(x, y, out_dim).object; }

Verdict is_whe_1trunc(const SSetMap& f) {
  const auto& x = *f.src;
  const auto& y = *f.tgt;
  for (const TruncSSet* s : {&x, &y}) {
    auto rep = is_kan(*s, s->dim());
    if (!rep.ok)
      throw UncertifiedError("weak-equivalence test needs Kan inputs: " + rep.witness->describe(*s));
  }
  auto cx = pi0(x), cy = pi0(y);
  if (cx.size() != cy.size())
    return {false, "pi0 cardinalities differ: " + std::to_string(cx.size()) + " vs " + std::to_string(cy.size())};
  std::vector<int> cls(y.size(0));
  for (std::size_t i = 0; i < cy.size(); ++i)
    for (int v : cy[i]) cls[v] = static_cast<int>(i);
  std::vector<char> hit(cy.size(), 0);
  for (const auto& c : cx) {
    int t = cls[f(0, c.front())];
    if (hit[t]) return {false, "two components map to the component of " + y.name(0, cy[t].front())};
    hit[t] = 1;
  }
  auto tx = tau1_presented(x);
  auto ty = tau1_presented(y);
  auto F = tau1_map(f, tx, ty);
  auto eq = fincat::is_categorical_equivalence(F);
  if (!eq.ok) return {false, "fundamental groupoids not equivalent: " + eq.witness};
  return {true, ""};
}

}  // namespace segal::sset
