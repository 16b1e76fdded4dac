#include "segal/totalize.hpp"

#include <algorithm>
#include <functional>
#include <memory>
#include <tuple>
#include <map>
#include <numeric>

namespace segal::totalize {

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

int apply_codegeneracies(int v, const std::vector<int>& word) {
  for (int j : word) v = v <= j ? v : v - 1;
  return v;
}

// Maps a simplex of one representable to another along vertex maps of the two factors.
int transport(const sset::VertexIndex& from, int from_m, const sset::VertexIndex& to, int to_m, int k, int s,
              const std::function<int(int)>& alpha, const std::function<int(int)>& beta) {
  auto v = from.vertices(k, s);
  for (auto& t : v) t = alpha(t / (from_m + 1)) * (to_m + 1) + beta(t % (from_m + 1));
  return to.find(v);
}

// Piece simplices translated into the sources of t^! X and evaluated there.
class Evaluator {
 public:
  explicit Evaluator(const TUpper& t) : t_(t) {}

  std::vector<std::vector<int>> eval(int n, int m, int f, const sset::TruncSSet& piece) {
    const auto& tr = translation(n, m, piece);
    const auto& ms = t_.at(n, m);
    const auto& x = *t_.x;
    const auto flat = ms.images(f);
    std::vector<std::vector<int>> img(piece.dim() + 1);
    std::vector<int> faces;
    for (int k = 0; k <= piece.dim(); ++k) {
      img[k].resize(piece.size(k));
      for (int s = 0; s < piece.size(k); ++s) {
        if (k <= t_.level) {
          img[k][s] = ms.image(flat, k, tr[k][s]);
          continue;
        }
        if (k > x.dim()) throw WindowError("evaluation above the truncation of X", "dim >= " + std::to_string(k));
        if (piece.is_degenerate(k, s)) {
          int bl = k - static_cast<int>(piece.word(k, s).size());
          img[k][s] = x.apply_degeneracies(bl, img[bl][piece.base(k, s)], piece.word(k, s));
          continue;
        }
        faces.resize(k + 1);
        for (int i = 0; i <= k; ++i) faces[i] = img[k - 1][piece.face(k, s, i)];
        const auto& cand = x.with_faces(k, faces.data());
        if (cand.size() != 1) throw Error("internal: evaluation is not determined by faces at level " + std::to_string(k));
        img[k][s] = cand.front();
      }
    }
    return img;
  }

 private:
  const std::vector<std::vector<int>>& translation(int n, int m, const sset::TruncSSet& piece) {
    auto key = std::make_tuple(n, m, piece.dim());
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    sset::VertexIndex from(piece), to(*t_.source(n, m));
    std::vector<std::vector<int>> tr(std::min(piece.dim(), t_.level) + 1);
    auto same = [](int v) { return v; };
    for (int k = 0; k < static_cast<int>(tr.size()); ++k)
      for (int s = 0; s < piece.size(k); ++s) tr[k].push_back(transport(from, m, to, m, k, s, same, same));
    return cache_.emplace(key, std::move(tr)).first->second;
  }

  const TUpper& t_;
  std::map<std::tuple<int, int, int>, std::vector<std::vector<int>>> cache_;
};

}  // namespace

sset::TruncSSet representable(int n, int m, int d) { return sset::product(sset::standard_simplex(n, d), sset::j_space(m, d)); }

TUpper t_upper_data(const sset::SSetPtr& x, int p, int q) {
  if (p < 0 || q < 0) throw Error("window must be non-negative");
  TUpper t;
  t.x = x;
  t.p = p;
  t.q = q;
  const int c = x->coskeletal_level();
  t.level = (c >= 0 && c <= x->dim()) ? c : x->dim();
  const auto id = [&](int n, int m) { return static_cast<std::size_t>(n) * (q + 1) + m; };
  t.sources.resize(static_cast<std::size_t>(p + 1) * (q + 1));
  t.maps.resize(t.sources.size());
  std::vector<std::unique_ptr<sset::VertexIndex>> index(t.sources.size());
  for (int n = 0; n <= p; ++n)
    for (int m = 0; m <= q; ++m) {
      t.sources[id(n, m)] = sset::share(representable(n, m, t.level));
      t.maps[id(n, m)] = sset::map_set(t.sources[id(n, m)], x);
      index[id(n, m)] = std::make_unique<sset::VertexIndex>(*t.sources[id(n, m)]);
    }
  auto table = [&](int fn, int fm, int tn, int tm, const std::function<int(int)>& alpha, const std::function<int(int)>& beta) {
    const auto& from = t.maps[id(fn, fm)];
    const auto& to = t.maps[id(tn, tm)];
    auto phi = [&](int k, int s) { return transport(*index[id(tn, tm)], tm, *index[id(fn, fm)], fm, k, s, alpha, beta); };
    auto plan = sset::make_precompose_plan(from, to, phi);
    std::vector<int> tab(from.size());
    for (int f = 0; f < from.size(); ++f) tab[f] = sset::precompose(from, f, to, plan);
    return tab;
  };
  auto same = [](int v) { return v; };
  auto face_vm = [](int i) { return [i](int v) { return v < i ? v : v + 1; }; };
  auto degen_vm = [](int j) { return [j](int v) { return v <= j ? v : v - 1; }; };
  std::vector<std::vector<std::vector<int>>> hf(t.maps.size()), vf(t.maps.size()), hd(t.maps.size()), vd(t.maps.size());
  for (int n = 0; n <= p; ++n)
    for (int m = 0; m <= q; ++m) {
      for (int i = 0; n >= 1 && i <= n; ++i) hf[id(n, m)].push_back(table(n, m, n - 1, m, face_vm(i), same));
      for (int i = 0; m >= 1 && i <= m; ++i) vf[id(n, m)].push_back(table(n, m, n, m - 1, same, face_vm(i)));
      for (int j = 0; n < p && j <= n; ++j) hd[id(n, m)].push_back(table(n, m, n + 1, m, degen_vm(j), same));
      for (int j = 0; m < q && j <= m; ++j) vd[id(n, m)].push_back(table(n, m, n, m + 1, same, degen_vm(j)));
    }
  auto name = [&](int n, int m, int f) {
    const auto& ms = t.maps[id(n, m)];
    if (ms.key_length() > 16) return "m" + std::to_string(n) + "_" + std::to_string(m) + "_" + std::to_string(f);
    auto flat = ms.images(f);
    const auto& src = *ms.src;
    std::string out = "<";
    for (int k = 0, pos = 0; k <= ms.level; ++k)
      for (std::size_t g = 0; g < src.generators(k).size(); ++g, ++pos) out += (pos ? "," : "") + x->name(k, flat[pos]);
    return out + ">";
  };
  t.object = bisset::TruncBiSSet::from_model(
      p, q, [&](int n, int m) { return t.maps[id(n, m)].size(); },
      [&](int n, int m, int s, int i) { return hf[id(n, m)][i][s]; },
      [&](int n, int m, int s, int i) { return vf[id(n, m)][i][s]; },
      [&](int n, int m, int s, int j) { return hd[id(n, m)][j][s]; },
      [&](int n, int m, int s, int j) { return vd[id(n, m)][j][s]; }, name);
  // Nerve-like targets give classifying-diagram-like results.
  if (x->coskeletal_level() == 2 && x->determined_level() >= 0 && x->determined_level() <= 1) t.object.set_coskeletal(2, 1);
  return t;
}

bisset::TruncBiSSet t_upper(const sset::TruncSSet& x, int p, int q) {
  return t_upper_data(sset::share(x), p, q).object;
}

ElementsDiagram elements_diagram(const bisset::TruncBiSSet& y) {
  ElementsDiagram d;
  std::map<std::tuple<int, int, int>, int> elem_of;
  for (auto [n, m] : bisset::bidegree_order(y.p(), y.q()))
    for (int s : y.generators(n, m)) {
      elem_of[{n, m, s}] = static_cast<int>(d.elements.size());
      d.elements.push_back({n, m, s});
    }
  auto link = [&](int e, bool horizontal, int i, int fn, int fm, int f) {
    const auto& hw = y.hword(fn, fm, f);
    const auto& vw = y.vword(fn, fm, f);
    int bn = fn - static_cast<int>(hw.size()), bm = fm - static_cast<int>(vw.size());
    d.links.push_back({e, horizontal, i, elem_of.at({bn, bm, y.base(fn, fm, f)}), hw, vw});
  };
  for (int e = 0; e < static_cast<int>(d.elements.size()); ++e) {
    auto [n, m, s] = d.elements[e];
    for (int i = 0; n >= 1 && i <= n; ++i) link(e, true, i, n - 1, m, y.hface(n, m, s, i));
    for (int i = 0; m >= 1 && i <= m; ++i) link(e, false, i, n, m - 1, y.vface(n, m, s, i));
  }
  return d;
}

TLower t_lower_data(const bisset::TruncBiSSet& y, int out_dim) {
  if (out_dim < 0) throw Error("output dimension must be non-negative");
  TLower low;
  low.out_dim = out_dim;
  low.diagram = elements_diagram(y);
  const auto& els = low.diagram.elements;
  const int ne = static_cast<int>(els.size());
  std::map<std::pair<int, int>, sset::SSetPtr> rep;
  std::map<std::pair<int, int>, std::unique_ptr<sset::VertexIndex>> vidx;
  auto piece = [&](int n, int m) -> const sset::SSetPtr& {
    auto it = rep.find({n, m});
    if (it == rep.end()) {
      it = rep.emplace(std::make_pair(n, m), sset::share(representable(n, m, out_dim))).first;
      vidx.emplace(std::make_pair(n, m), std::make_unique<sset::VertexIndex>(*it->second));
    }
    return it->second;
  };
  for (const auto& e : els) low.pieces.push_back(piece(e.n, e.m));
  low.offset.assign(out_dim + 1, std::vector<int>(ne + 1, 0));
  for (int k = 0; k <= out_dim; ++k)
    for (int e = 0; e < ne; ++e) low.offset[k][e + 1] = low.offset[k][e] + low.pieces[e]->size(k);
  std::vector<UnionFind> uf;
  for (int k = 0; k <= out_dim; ++k) uf.emplace_back(low.offset[k][ne]);
  auto same = [](int v) { return v; };
  for (const auto& l : low.diagram.links) {
    const auto& src = els[l.element];
    const auto& tgt = els[l.target];
    const int fn = src.n - (l.horizontal ? 1 : 0), fm = src.m - (l.horizontal ? 0 : 1);
    const auto& fp = piece(fn, fm);
    piece(src.n, src.m);
    piece(tgt.n, tgt.m);
    const auto& fi = *vidx.at({fn, fm});
    const auto& si = *vidx.at({src.n, src.m});
    const auto& ti = *vidx.at({tgt.n, tgt.m});
    const int i = l.index;
    std::function<int(int)> delta = [i](int v) { return v < i ? v : v + 1; };
    std::function<int(int)> hdeg = [&l](int v) { return apply_codegeneracies(v, l.hword); };
    std::function<int(int)> vdeg = [&l](int v) { return apply_codegeneracies(v, l.vword); };
    for (int k = 0; k <= out_dim; ++k)
      for (int s = 0; s < fp->size(k); ++s) {
        int a = l.horizontal ? transport(fi, fm, si, src.m, k, s, delta, same) : transport(fi, fm, si, src.m, k, s, same, delta);
        int b = transport(fi, fm, ti, tgt.m, k, s, hdeg, vdeg);
        uf[k].unite(low.instance(k, l.element, a), low.instance(k, l.target, b));
      }
  }
  low.class_of.resize(out_dim + 1);
  low.origin.resize(out_dim + 1);
  std::vector<int> sizes;
  for (int k = 0; k <= out_dim; ++k) {
    const int total = low.offset[k][ne];
    low.class_of[k].assign(total, -1);
    for (int u = 0; u < total; ++u) {
      int r = uf[k].find(u);
      if (low.class_of[k][r] < 0) {
        low.class_of[k][r] = static_cast<int>(low.origin[k].size());
        low.origin[k].push_back(r);
      }
      low.class_of[k][u] = low.class_of[k][r];
    }
    sizes.push_back(static_cast<int>(low.origin[k].size()));
  }
  // Instance -> (element, piece simplex).
  auto locate = [&](int k, int u) {
    int e = static_cast<int>(std::upper_bound(low.offset[k].begin(), low.offset[k].end(), u) - low.offset[k].begin()) - 1;
    while (low.offset[k][e + 1] <= u) ++e;
    return std::make_pair(e, u - low.offset[k][e]);
  };
  low.object = sset::TruncSSet::from_model(
      out_dim, sizes,
      [&](int k, int c, int i) {
        auto [e, s] = locate(k, low.origin[k][c]);
        return low.class_of[k - 1][low.instance(k - 1, e, low.pieces[e]->face(k, s, i))];
      },
      [&](int k, int c, int j) {
        auto [e, s] = locate(k, low.origin[k][c]);
        return low.class_of[k + 1][low.instance(k + 1, e, low.pieces[e]->degen(k, s, j))];
      },
      [&](int k, int c) {
        auto [e, s] = locate(k, low.origin[k][c]);
        const auto& el = els[e];
        return y.name(el.n, el.m, el.simplex) + ":" + low.pieces[e]->name(k, s);
      });
  return low;
}

sset::TruncSSet t_lower(const bisset::TruncBiSSet& y, int out_dim) { return t_lower_data(y, out_dim).object; }

std::vector<std::vector<int>> evaluate(const TUpper& t, int n, int m, int f, const sset::TruncSSet& piece) {
  Evaluator ev(t);
  return ev.eval(n, m, f, piece);
}

namespace {

// Glues evaluations of the elements' images; every instance of a class must agree.
sset::SSetMap glue(const TLower& low, const sset::SSetPtr& low_ptr, const TUpper& up, const std::function<int(int)>& image_of) {
  Evaluator ev(up);
  const int D = low.out_dim;
  sset::SSetMap f{low_ptr, up.x, std::vector<std::vector<int>>(D + 1)};
  for (int k = 0; k <= D; ++k) f.img[k].assign(low.object.size(k), -1);
  const auto& els = low.diagram.elements;
  for (int e = 0; e < static_cast<int>(els.size()); ++e) {
    auto table = ev.eval(els[e].n, els[e].m, image_of(e), *low.pieces[e]);
    for (int k = 0; k <= D; ++k)
      for (int s = 0; s < low.pieces[e]->size(k); ++s) {
        int c = low.class_of[k][low.instance(k, e, s)];
        if (f.img[k][c] < 0) {
          f.img[k][c] = table[k][s];
        } else if (f.img[k][c] != table[k][s]) {
          throw Error("gluing is inconsistent at " + low.object.name(k, c));
        }
      }
  }
  auto v = f.validate();
  if (!v.ok) throw Error("glued map is not simplicial: " + v.witness);
  return f;
}

}  // namespace

sset::SSetMap transpose_map(const TLower& low, const sset::SSetPtr& low_ptr, const TUpper& up, const bisset::BiSSetMap& g) {
  const auto& els = low.diagram.elements;
  return glue(low, low_ptr, up, [&](int e) { return g(els[e].n, els[e].m, els[e].simplex); });
}

Counit counit(const sset::SSetPtr& x, int out_dim, int p, int q) {
  if (out_dim > x->dim()) throw WindowError("counit output above the truncation of X", "dim >= " + std::to_string(out_dim));
  Counit c;
  c.upper = t_upper_data(x, p, q);
  c.lower = t_lower_data(c.upper.object, out_dim);
  auto low_ptr = sset::share(c.lower.object);
  const auto& els = c.lower.diagram.elements;
  c.map = glue(c.lower, low_ptr, c.upper, [&](int e) { return els[e].simplex; });
  return c;
}

AdjunctionReport adjunction_count_check(const bisset::BiSSetPtr& y, const sset::SSetPtr& x) {
  AdjunctionReport rep;
  auto up = t_upper_data(x, y->p(), y->q());
  auto up_ptr = bisset::share(up.object);
  auto low = t_lower_data(*y, x->dim());
  auto low_ptr = sset::share(low.object);
  auto lower = sset::map_set(low_ptr, x);
  auto upper = bisset::map_set(y, up_ptr);
  rep.lower_count = static_cast<std::size_t>(lower.size());
  rep.upper_count = static_cast<std::size_t>(upper.size());
  std::vector<char> hit(lower.size(), 0);
  for (int i = 0; i < upper.size(); ++i) {
    auto f = transpose_map(low, low_ptr, up, upper.materialize(i));
    std::vector<int> flat;
    for (int k = 0; k <= lower.level; ++k)
      for (int s : low.object.generators(k)) flat.push_back(f(k, s));
    int j = lower.find(flat);
    if (j < 0) {
      rep.witness = "transpose of map " + std::to_string(i) + " is not among the maps out of t_! Y";
      return rep;
    }
    if (hit[j]) {
      rep.witness = "two maps transpose to the same map " + std::to_string(j);
      return rep;
    }
    hit[j] = 1;
  }
  if (rep.lower_count != rep.upper_count) {
    rep.witness = "counts differ: " + std::to_string(rep.lower_count) + " vs " + std::to_string(rep.upper_count);
    return rep;
  }
  rep.ok = true;
  return rep;
}

Comparison compare_with_classifying(const TUpper& t, const fincat::FinCat& c, const bisset::Classifying& nc,
                                    const bisset::BiSSetPtr& t_ptr, const bisset::BiSSetPtr& nc_ptr) {
  Comparison out;
  const auto& x = *t.x;
  if (t.p != nc.object.p() || t.q != nc.object.q()) {
    out.verdict = {false, "windows differ"};
    return out;
  }
  if (x.dim() < 1 || x.size(0) != c.num_objects()) {
    out.verdict = {false, "X is not the nerve of the given category"};
    return out;
  }
  auto morphism_of_edge = [&](int e) {
    if (x.is_degenerate(1, e)) return c.identity(x.face(1, e, 0));
    int f = c.morphism_index(x.name(1, e));
    if (f < 0) throw Error("edge " + x.name(1, e) + " is not a morphism of the category");
    return f;
  };
  std::map<std::pair<int, int>, std::unique_ptr<sset::VertexIndex>> vidx;
  auto grid_of = [&](int n, int m, int f) {
    const auto& ms = t.at(n, m);
    auto& vi = vidx[{n, m}];
    if (!vi) vi = std::make_unique<sset::VertexIndex>(*t.source(n, m));
    const auto flat = ms.images(f);
    std::vector<int> grid;
    for (int i = 0; i <= n; ++i)
      for (int a = 0; a <= m; ++a) grid.push_back(ms.image(flat, 0, i * (m + 1) + a));
    for (int i = 0; i < n; ++i)
      for (int a = 0; a <= m; ++a)
        grid.push_back(morphism_of_edge(ms.image(flat, 1, vi->find({i * (m + 1) + a, (i + 1) * (m + 1) + a}))));
    for (int i = 0; i <= n; ++i)
      for (int a = 0; a < m; ++a)
        grid.push_back(morphism_of_edge(ms.image(flat, 1, vi->find({i * (m + 1) + a, i * (m + 1) + a + 1}))));
    return grid;
  };
  try {
    auto map = bisset::map_from_function(t_ptr, nc_ptr, [&](int n, int m, int f) {
      int k = nc.key_of(n, m, grid_of(n, m, f));
      if (k < 0) throw Error("a map out of Δ" + std::to_string(n) + "×J" + std::to_string(m) + " gives no functor grid");
      return k;
    });
    for (int n = 0; n <= t.p; ++n)
      for (int m = 0; m <= t.q; ++m) {
        if (t_ptr->size(n, m) != nc_ptr->size(n, m)) {
          out.verdict = {false, "sizes differ at (" + std::to_string(n) + "," + std::to_string(m) + "): " +
                                    std::to_string(t_ptr->size(n, m)) + " vs " + std::to_string(nc_ptr->size(n, m))};
          return out;
        }
        std::vector<char> hit(nc_ptr->size(n, m), 0);
        for (int s = 0; s < t_ptr->size(n, m); ++s) {
          if (hit[map(n, m, s)]) {
            out.verdict = {false, "comparison is not injective at (" + std::to_string(n) + "," + std::to_string(m) + ")"};
            return out;
          }
          hit[map(n, m, s)] = 1;
        }
      }
    out.iso = std::move(map);
    out.verdict = {true, ""};
  } catch (const Error& e) {
    out.verdict = {false, e.what()};
  }
  return out;
}

}  // namespace segal::totalize
