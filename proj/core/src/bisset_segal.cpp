#include <algorithm>
#include <unordered_map>

#include "segal/bisset.hpp"

namespace segal::bisset {

namespace {

std::string at(int n, int m) { return "(" + std::to_string(n) + "," + std::to_string(m) + ")"; }

std::string key_of(const std::vector<int>& v) {
  return std::string(reinterpret_cast<const char*>(v.data()), sizeof(int) * v.size());
}

// Restricts a bisimplex at (n, m) horizontally to the sorted vertex subset `keep`.
int restrict_h(const TruncBiSSet& x, int n, int m, int s, const std::vector<int>& keep) {
  int level = n;
  for (int j = n; j >= 0; --j)
    if (!std::binary_search(keep.begin(), keep.end(), j)) s = x.hface(level--, m, s, j);
  return s;
}

// v-degenerate copy of a vertex of X_{0,0} at vertical level l.
int degenerate_vertex(const TruncBiSSet& x, int v, int l) {
  for (int k = 0; k < l; ++k) v = x.vdegen(0, k, v, 0);
  return v;
}

}  // namespace

int BiTau1::h_morphism(const TruncBiSSet& x, int e) const {
  if (h_generator[e] < 0) return presented.cat.identity(presented.object_of[x.hface(1, 0, e, 0)]);
  return presented.gen_morphism[h_generator[e]];
}

int BiTau1::v_morphism(const TruncBiSSet& x, int e) const {
  if (v_generator[e] < 0) return presented.cat.identity(presented.object_of[x.vface(0, 1, e, 0)]);
  return presented.gen_morphism[v_generator[e]];
}

BiTau1 tau1_bisset_presented(const TruncBiSSet& x, long bound) {
  if (x.p() < 2 || x.q() < 2) throw WindowError("the fundamental category needs bidegrees (2,0), (0,2) and (1,1)", "window >= (2,2)");
  present::Presentation pr;
  for (int v = 0; v < x.size(0, 0); ++v) pr.objects.push_back(x.name(0, 0, v));
  BiTau1 t;
  t.h_generator.assign(x.size(1, 0), -1);
  t.v_generator.assign(x.size(0, 1), -1);
  t.v_inverse.assign(x.size(0, 1), -1);
  for (int e : x.generators(1, 0)) {
    t.h_generator[e] = static_cast<int>(pr.gens.size());
    pr.gens.push_back({x.name(1, 0, e), x.hface(1, 0, e, 1), x.hface(1, 0, e, 0)});
  }
  for (int e : x.generators(0, 1)) {
    int s = x.vface(0, 1, e, 1), d = x.vface(0, 1, e, 0);
    t.v_generator[e] = static_cast<int>(pr.gens.size());
    pr.gens.push_back({x.name(0, 1, e), s, d});
    t.v_inverse[e] = static_cast<int>(pr.gens.size());
    pr.gens.push_back({x.name(0, 1, e) + "^-1", d, s});
    pr.rels.push_back({s, {t.v_generator[e], t.v_inverse[e]}, {}});
    pr.rels.push_back({d, {t.v_inverse[e], t.v_generator[e]}, {}});
  }
  auto hword = [&](int e) { return t.h_generator[e] < 0 ? present::Word{} : present::Word{t.h_generator[e]}; };
  auto vword = [&](int e) { return t.v_generator[e] < 0 ? present::Word{} : present::Word{t.v_generator[e]}; };
  auto cat = [](present::Word a, const present::Word& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
  };
  for (int s : x.generators(2, 0))
    pr.rels.push_back({x.h_vertex(2, 0, s, 0), cat(hword(x.hface(2, 0, s, 2)), hword(x.hface(2, 0, s, 0))),
                       hword(x.hface(2, 0, s, 1))});
  for (int s : x.generators(0, 2))
    pr.rels.push_back({x.v_vertex(0, 2, s, 0), cat(vword(x.vface(0, 2, s, 2)), vword(x.vface(0, 2, s, 0))),
                       vword(x.vface(0, 2, s, 1))});
  for (int s : x.generators(1, 1)) {
    int corner = x.hface(1, 0, x.vface(1, 1, s, 1), 1);
    pr.rels.push_back({corner, cat(hword(x.vface(1, 1, s, 1)), vword(x.hface(1, 1, s, 0))),
                       cat(vword(x.hface(1, 1, s, 1)), hword(x.vface(1, 1, s, 0)))});
  }
  t.presented = present::present(pr, bound);
  return t;
}

fincat::FinCat tau1_bisset(const TruncBiSSet& x, long bound) { return tau1_bisset_presented(x, bound).presented.cat; }

fincat::Functor tau1_bisset_map(const BiSSetMap& f, const BiTau1& src, const BiTau1& tgt) {
  const auto& x = *f.src;
  const auto& y = *f.tgt;
  const auto& c = src.cat();
  const auto& d = tgt.cat();
  // Image of every generator of the source presentation.
  std::vector<int> gen_image(src.presented.gen_morphism.size(), -1);
  for (int e = 0; e < x.size(1, 0); ++e)
    if (src.h_generator[e] >= 0) gen_image[src.h_generator[e]] = tgt.h_morphism(y, f(1, 0, e));
  for (int e = 0; e < x.size(0, 1); ++e)
    if (src.v_generator[e] >= 0) {
      int g = tgt.v_morphism(y, f(0, 1, e));
      gen_image[src.v_generator[e]] = g;
      gen_image[src.v_inverse[e]] = d.inverse(g);
    }
  fincat::Functor F{fincat::share(c), fincat::share(d), {}};
  F.data.obj.assign(c.num_objects(), -1);
  for (int v = 0; v < x.size(0, 0); ++v) F.data.obj[src.presented.object_of[v]] = tgt.presented.object_of[f(0, 0, v)];
  F.data.mor.assign(c.num_morphisms(), -1);
  for (int m = 0; m < c.num_morphisms(); ++m) {
    int cur = d.identity(F.data.obj[c.morphism(m).src]);
    for (int g : src.presented.representative[m]) {
      cur = d.compose(gen_image[g], cur);
      if (cur < 0) throw Error("internal: image path is not composable");
    }
    F.data.mor[m] = cur;
  }
  auto v = F.validate();
  if (!v.ok) throw Error("internal: induced functor is invalid: " + v.witness);
  return F;
}

int principal_edge(const TruncBiSSet& x, int n, int m, int s, int i) { return restrict_h(x, n, m, s, {i, i + 1}); }

SegalReport segal_check_strict(const TruncBiSSet& x) {
  SegalReport rep;
  for (int n = 1; n <= x.p(); ++n) {
    rep.levels_checked.push_back(n);
    for (int m = 0; m <= x.q(); ++m) {
      // Composable tuples counted by walking the chain of edges.
      const int nv = x.size(0, m);
      std::vector<long long> ways(nv, 1);
      for (int k = 0; k < n; ++k) {
        std::vector<long long> next(nv, 0);
        for (int e = 0; e < x.size(1, m); ++e) next[x.hface(1, m, e, 0)] += ways[x.hface(1, m, e, 1)];
        ways = std::move(next);
      }
      long long tuples = 0;
      for (auto w : ways) tuples += w;
      std::unordered_map<std::string, int> seen;
      std::vector<int> spine(n);
      for (int s = 0; s < x.size(n, m); ++s) {
        for (int i = 0; i < n; ++i) spine[i] = principal_edge(x, n, m, s, i);
        auto [it, fresh] = seen.emplace(key_of(spine), s);
        if (!fresh) {
          rep.ok = false;
          rep.witness = "n=" + std::to_string(n) + " at " + at(n, m) + ": " + x.name(n, m, it->second) + " and " +
                        x.name(n, m, s) + " have the same principal edges";
          return rep;
        }
      }
      if (static_cast<long long>(x.size(n, m)) != tuples) {
        rep.ok = false;
        rep.witness = "n=" + std::to_string(n) + " at " + at(n, m) + ": " + std::to_string(tuples) +
                      " composable edge tuples but " + std::to_string(x.size(n, m)) + " bisimplices";
        return rep;
      }
    }
  }
  return rep;
}

ReedyReport reedy_fibrancy_check(const TruncBiSSet& x, int up_to) {
  if (up_to > x.q()) throw WindowError("Reedy check above the vertical window", "q >= " + std::to_string(up_to));
  ReedyReport rep;
  for (int n = 0; n <= x.p(); ++n) {
    auto col = sset::share(column(x, n));
    // Boundary data: index of each column simplex in M_v(∂Δⁿ, X) (n >= 1).
    std::vector<std::vector<int>> pi(x.q() + 1);
    sset::TruncSSet base;
    if (n >= 1) {
      auto bd = sset::share(sset::boundary(n, n - 1));
      auto md = mv_data(bd, x);
      base = std::move(md.object);
      std::vector<std::vector<int>> verts;  // per flat generator of ∂Δⁿ
      for (int k = 0; k <= md.maps[0].level; ++k)
        for (int g : bd->generators(k)) {
          std::vector<int> v;
          for (char ch : bd->name(k, g)) v.push_back(ch - '0');
          verts.push_back(v);
        }
      for (int l = 0; l <= x.q(); ++l) {
        pi[l].resize(x.size(n, l));
        std::vector<int> flat(verts.size());
        for (int s = 0; s < x.size(n, l); ++s) {
          for (std::size_t g = 0; g < verts.size(); ++g) flat[g] = restrict_h(x, n, l, s, verts[g]);
          pi[l][s] = md.maps[l].find(flat);
          if (pi[l][s] < 0) throw Error("internal: boundary restriction missing from the mapping space");
        }
      }
    } else {
      base = sset::point(x.q());
      for (int l = 0; l <= x.q(); ++l) pi[l].assign(x.size(0, l), 0);
    }
    for (int l = 1; l <= up_to; ++l) {
      for (int k = 0; k <= l; ++k) {
        // Existing fillers keyed by (faces except k, image in the base).
        std::unordered_map<std::string, int> fillers;
        std::vector<int> key(l + 1);
        auto encode = [&](const std::vector<int>& faces, int b) {
          int t = 0;
          for (int i = 0; i <= l; ++i)
            if (i != k) key[t++] = faces[i];
          key[t] = b;
          return key_of(key);
        };
        std::vector<int> faces(l + 1);
        for (int s = 0; s < x.size(n, l); ++s) {
          for (int i = 0; i <= l; ++i) faces[i] = x.vface(n, l, s, i);
          ++fillers[encode(faces, pi[l][s])];
        }
        // Base simplices keyed by their faces except k.
        std::unordered_map<std::string, std::vector<int>> over;
        std::vector<int> bkey(l);
        for (int b = 0; b < base.size(l); ++b) {
          int t = 0;
          for (int i = 0; i <= l; ++i)
            if (i != k) bkey[t++] = base.face(l, b, i);
          over[key_of(bkey)].push_back(b);
        }
        auto h = sset::share(sset::horn(l, k, l));
        auto ms = sset::map_set(h, col);
        std::vector<int> face_idx(l + 1, -1);
        for (int i = 0; i <= l; ++i) {
          if (i == k) continue;
          std::string nm;
          for (int v = 0; v <= l; ++v)
            if (v != i) nm += std::to_string(v);
          face_idx[i] = h->find(l - 1, nm);
        }
        for (int hm = 0; hm < ms.size(); ++hm) {
          auto flat = ms.images(hm);
          faces.assign(l + 1, -1);
          int t = 0;
          for (int i = 0; i <= l; ++i)
            if (i != k) {
              faces[i] = ms.image(flat, l - 1, face_idx[i]);
              bkey[t++] = pi[l - 1][faces[i]];
            }
          auto it = over.find(key_of(bkey));
          if (it == over.end()) continue;
          for (int b : it->second)
            if (!fillers.count(encode(faces, b))) {
              rep.ok = false;
              std::string desc;
              for (int i = 0; i <= l; ++i)
                if (i != k) desc += " d" + std::to_string(i) + "=" + x.name(n, l - 1, faces[i]);
              rep.witness = "column " + std::to_string(n) + ": horn l=" + std::to_string(l) + " k=" + std::to_string(k) +
                            " with faces" + desc + " over " + base.name(l, b) + " has no filler";
              return rep;
            }
        }
      }
      rep.certified.emplace_back(n, l);
    }
  }
  return rep;
}

HomSpace hom_space(const TruncBiSSet& x, const std::vector<int>& tuple) {
  const int n = static_cast<int>(tuple.size()) - 1;
  if (n < 0) throw Error("hom-space needs at least one vertex");
  if (n > x.p()) throw WindowError("hom-space tuple longer than the horizontal window", "p >= " + std::to_string(n));
  for (int v : tuple)
    if (v < 0 || v >= x.size(0, 0)) throw Error("unknown vertex in hom-space tuple");
  HomSpace h;
  h.tuple = tuple;
  h.member.resize(x.q() + 1);
  std::vector<std::unordered_map<int, int>> index(x.q() + 1);
  for (int l = 0; l <= x.q(); ++l) {
    std::vector<int> want;
    for (int v : tuple) want.push_back(degenerate_vertex(x, v, l));
    for (int s = 0; s < x.size(n, l); ++s) {
      bool in = true;
      for (int i = 0; i <= n && in; ++i) in = x.h_vertex(n, l, s, i) == want[i];
      if (in) {
        index[l][s] = static_cast<int>(h.member[l].size());
        h.member[l].push_back(s);
      }
    }
  }
  std::vector<int> sizes;
  for (auto& m : h.member) sizes.push_back(static_cast<int>(m.size()));
  h.carrier = sset::TruncSSet::from_model(
      x.q(), sizes, [&](int l, int s, int i) { return index[l - 1].at(x.vface(n, l, h.member[l][s], i)); },
      [&](int l, int s, int j) { return index[l + 1].at(x.vdegen(n, l, h.member[l][s], j)); },
      [&](int l, int s) { return x.name(n, l, h.member[l][s]); });
  h.carrier.set_coskeletal(x.coskeletal_level(), x.determined_level());
  return h;
}

Verdict hom_space_comparison(const TruncBiSSet& x, const HomSpace& h) {
  const int n = static_cast<int>(h.tuple.size()) - 1;
  for (int l = 0; l <= x.q(); ++l) {
    std::vector<int> want;
    for (int v : h.tuple) want.push_back(degenerate_vertex(x, v, l));
    // Size of each factor X(x_i, x_{i+1}) at level l.
    long long product = 1;
    for (int i = 0; i < n; ++i) {
      long long c = 0;
      for (int e = 0; e < x.size(1, l); ++e)
        if (x.hface(1, l, e, 1) == want[i] && x.hface(1, l, e, 0) == want[i + 1]) ++c;
      product *= c;
    }
    std::unordered_map<std::string, int> seen;
    std::vector<int> spine(n);
    for (int s : h.member[l]) {
      for (int i = 0; i < n; ++i) spine[i] = principal_edge(x, n, l, s, i);
      auto [it, fresh] = seen.emplace(key_of(spine), s);
      if (!fresh)
        return {false, "level " + std::to_string(l) + ": " + x.name(n, l, it->second) + " and " + x.name(n, l, s) +
                           " have the same principal edges"};
    }
    if (static_cast<long long>(h.member[l].size()) != product)
      return {false, "level " + std::to_string(l) + ": fiber has " + std::to_string(h.member[l].size()) +
                         " simplices but the product of hom-spaces has " + std::to_string(product)};
  }
  return {true, ""};
}

}  // namespace segal::bisset
