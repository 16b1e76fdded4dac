#include <algorithm>
#include <numeric>

#include "segal/bisset.hpp"

namespace segal::bisset {

namespace {

int max_flag(int a, int b) { return (a < 0 || b < 0) ? -1 : std::max(a, b); }

}  // namespace

TruncBiSSet terminal(int p, int q) {
  auto zero = [](int, int, int, int) { return 0; };
  TruncBiSSet t = TruncBiSSet::from_model(
      p, q, [](int, int) { return 1; }, zero, zero, zero, zero, [](int, int, int) { return std::string("*"); });
  t.set_coskeletal(0, 0);
  return t;
}

TruncBiSSet box(const sset::TruncSSet& x, const sset::TruncSSet& y) {
  TruncBiSSet b = TruncBiSSet::from_model(
      x.dim(), y.dim(), [&](int n, int m) { return x.size(n) * y.size(m); },
      [&](int n, int m, int s, int i) { return x.face(n, s / y.size(m), i) * y.size(m) + s % y.size(m); },
      [&](int, int m, int s, int i) { return (s / y.size(m)) * y.size(m - 1) + y.face(m, s % y.size(m), i); },
      [&](int n, int m, int s, int j) { return x.degen(n, s / y.size(m), j) * y.size(m) + s % y.size(m); },
      [&](int, int m, int s, int j) { return (s / y.size(m)) * y.size(m + 1) + y.degen(m, s % y.size(m), j); },
      [&](int n, int m, int s) { return "(" + x.name(n, s / y.size(m)) + "," + y.name(m, s % y.size(m)) + ")"; });
  // Bisimplices with both degrees positive are fixed by their faces, so only
  // the pure directions constrain the flags.
  const int c = max_flag(x.coskeletal_level(), y.coskeletal_level());
  const int d = max_flag(x.determined_level(), y.determined_level());
  if (c >= 0 && d >= 0) b.set_coskeletal(std::max(c, d + 1), d);
  return b;
}

TruncBiSSet product(const TruncBiSSet& x, const TruncBiSSet& y) {
  if (x.p() != y.p() || x.q() != y.q()) throw Error("product needs equal windows");
  TruncBiSSet r = TruncBiSSet::from_model(
      x.p(), x.q(), [&](int n, int m) { return x.size(n, m) * y.size(n, m); },
      [&](int n, int m, int s, int i) {
        return x.hface(n, m, s / y.size(n, m), i) * y.size(n - 1, m) + y.hface(n, m, s % y.size(n, m), i);
      },
      [&](int n, int m, int s, int i) {
        return x.vface(n, m, s / y.size(n, m), i) * y.size(n, m - 1) + y.vface(n, m, s % y.size(n, m), i);
      },
      [&](int n, int m, int s, int j) {
        return x.hdegen(n, m, s / y.size(n, m), j) * y.size(n + 1, m) + y.hdegen(n, m, s % y.size(n, m), j);
      },
      [&](int n, int m, int s, int j) {
        return x.vdegen(n, m, s / y.size(n, m), j) * y.size(n, m + 1) + y.vdegen(n, m, s % y.size(n, m), j);
      },
      [&](int n, int m, int s) {
        return "(" + x.name(n, m, s / y.size(n, m)) + "," + y.name(n, m, s % y.size(n, m)) + ")";
      });
  const int c = max_flag(x.coskeletal_level(), y.coskeletal_level());
  const int d = max_flag(x.determined_level(), y.determined_level());
  if (c >= 0 && d >= 0) r.set_coskeletal(c, d);
  return r;
}

sset::TruncSSet column(const TruncBiSSet& x, int n) {
  if (n < 0 || n > x.p()) throw WindowError("column outside the window", "p >= " + std::to_string(n));
  std::vector<int> sizes;
  for (int m = 0; m <= x.q(); ++m) sizes.push_back(x.size(n, m));
  auto col = sset::TruncSSet::from_model(
      x.q(), sizes, [&](int m, int s, int i) { return x.vface(n, m, s, i); },
      [&](int m, int s, int j) { return x.vdegen(n, m, s, j); }, [&](int m, int s) { return x.name(n, m, s); });
  col.set_coskeletal(x.coskeletal_level(), x.determined_level());
  return col;
}

sset::TruncSSet row(const TruncBiSSet& x, int m) {
  if (m < 0 || m > x.q()) throw WindowError("row outside the window", "q >= " + std::to_string(m));
  std::vector<int> sizes;
  for (int n = 0; n <= x.p(); ++n) sizes.push_back(x.size(n, m));
  auto r = sset::TruncSSet::from_model(
      x.p(), sizes, [&](int n, int s, int i) { return x.hface(n, m, s, i); },
      [&](int n, int s, int j) { return x.hdegen(n, m, s, j); }, [&](int n, int s) { return x.name(n, m, s); });
  r.set_coskeletal(x.coskeletal_level(), x.determined_level());
  return r;
}

TruncBiSSet transpose(const TruncBiSSet& x) {
  TruncBiSSet t = TruncBiSSet::from_model(
      x.q(), x.p(), [&](int n, int m) { return x.size(m, n); },
      [&](int n, int m, int s, int i) { return x.vface(m, n, s, i); },
      [&](int n, int m, int s, int i) { return x.hface(m, n, s, i); },
      [&](int n, int m, int s, int j) { return x.vdegen(m, n, s, j); },
      [&](int n, int m, int s, int j) { return x.hdegen(m, n, s, j); },
      [&](int n, int m, int s) { return x.name(m, n, s); });
  t.set_coskeletal(x.coskeletal_level(), x.determined_level());
  return t;
}

// ---------------------------------------------------------------------------
// Classifying diagram. A grid at (n, m) lists the objects at (i, a) (index
// i * (m + 1) + a), then the horizontal generators (i, a) -> (i + 1, a)
// (index i * (m + 1) + a), then the vertical isomorphisms (i, a) -> (i, a + 1)
// (index i * m + a).

int grid_length(int n, int m) { return (n + 1) * (m + 1) + n * (m + 1) + (n + 1) * m; }

namespace {

struct GridView {
  int n, m;
  int obj(int i, int a) const { return i * (m + 1) + a; }
  int h(int i, int a) const { return (n + 1) * (m + 1) + i * (m + 1) + a; }
  int v(int i, int a) const { return (n + 1) * (m + 1) + n * (m + 1) + i * m + a; }
};

void enumerate_grids(const fincat::FinCat& c, int n, int m, const std::function<void(const std::vector<int>&)>& emit) {
  GridView g{n, m};
  std::vector<int> grid(grid_length(n, m), -1);
  // Column i is fixed by its bottom object and its vertical isomorphisms; a
  // later column is fixed by the bottom horizontal arrow and its own
  // vertical isomorphisms, the other horizontal arrows being conjugates.
  std::function<void(int, int)> place_column;
  std::function<void(int)> next_column = [&](int i) {
    if (i > n) {
      emit(grid);
      return;
    }
    if (i == 0) {
      for (int x = 0; x < c.num_objects(); ++x) {
        grid[g.obj(0, 0)] = x;
        place_column(0, 0);
      }
      return;
    }
    int src = grid[g.obj(i - 1, 0)];
    for (int f = 0; f < c.num_morphisms(); ++f) {
      if (c.morphism(f).src != src) continue;
      grid[g.h(i - 1, 0)] = f;
      grid[g.obj(i, 0)] = c.morphism(f).tgt;
      place_column(i, 0);
    }
  };
  place_column = [&](int i, int a) {
    if (a == m) {
      next_column(i + 1);
      return;
    }
    int src = grid[g.obj(i, a)];
    for (int e = 0; e < c.num_morphisms(); ++e) {
      if (c.morphism(e).src != src || !c.is_iso(e)) continue;
      grid[g.v(i, a)] = e;
      grid[g.obj(i, a + 1)] = c.morphism(e).tgt;
      if (i > 0) {
        int f = c.compose(e, c.compose(grid[g.h(i - 1, a)], c.inverse(grid[g.v(i - 1, a)])));
        grid[g.h(i - 1, a + 1)] = f;
      }
      place_column(i, a + 1);
    }
  };
  next_column(0);
}

// Composite of horizontal generators from column i to column j at level a.
int h_path(const fincat::FinCat& c, const GridView& g, const std::vector<int>& grid, int i, int j, int a) {
  int f = c.identity(grid[g.obj(i, a)]);
  for (int k = i; k < j; ++k) f = c.compose(grid[g.h(k, a)], f);
  return f;
}

int v_path(const fincat::FinCat& c, const GridView& g, const std::vector<int>& grid, int i, int a, int b) {
  int f = c.identity(grid[g.obj(i, a)]);
  if (a <= b) {
    for (int k = a; k < b; ++k) f = c.compose(grid[g.v(i, k)], f);
  } else {
    for (int k = a; k > b; --k) f = c.compose(c.inverse(grid[g.v(i, k - 1)]), f);
  }
  return f;
}

// Reindexes a grid along monotone maps alpha: [n'] -> [n], beta: [m'] -> [m].
std::vector<int> reindex(const fincat::FinCat& c, const GridView& from, const std::vector<int>& grid,
                         const std::vector<int>& alpha, const std::vector<int>& beta) {
  const int n2 = static_cast<int>(alpha.size()) - 1, m2 = static_cast<int>(beta.size()) - 1;
  GridView to{n2, m2};
  std::vector<int> out(grid_length(n2, m2));
  for (int i = 0; i <= n2; ++i)
    for (int a = 0; a <= m2; ++a) {
      out[to.obj(i, a)] = grid[from.obj(alpha[i], beta[a])];
      if (i < n2) out[to.h(i, a)] = h_path(c, from, grid, alpha[i], alpha[i + 1], beta[a]);
      if (a < m2) out[to.v(i, a)] = v_path(c, from, grid, alpha[i], beta[a], beta[a + 1]);
    }
  return out;
}

std::vector<int> face_map(int k, int i) {
  std::vector<int> v;
  for (int t = 0; t < k; ++t) v.push_back(t < i ? t : t + 1);
  return v;
}

std::vector<int> degen_map(int k, int j) {
  std::vector<int> v;
  for (int t = 0; t <= k + 1; ++t) v.push_back(t <= j ? t : t - 1);
  return v;
}

std::vector<int> identity_map_of(int k) {
  std::vector<int> v(k + 1);
  std::iota(v.begin(), v.end(), 0);
  return v;
}

}  // namespace

int Classifying::key_of(int n, int m, const std::vector<int>& grid) const {
  return keys[static_cast<std::size_t>(n) * (object.q() + 1) + m].find(grid.data());
}

Classifying classifying_data(const fincat::CatPtr& c, int p, int q) {
  if (p < 0 || q < 0) throw Error("window must be non-negative");
  Classifying out;
  out.cat = c;
  const int maxv = std::max(c->num_objects(), c->num_morphisms());
  out.keys.resize(static_cast<std::size_t>(p + 1) * (q + 1));
  for (int n = 0; n <= p; ++n)
    for (int m = 0; m <= q; ++m) {
      std::vector<std::vector<int>> grids;
      enumerate_grids(*c, n, m, [&](const std::vector<int>& g) { grids.push_back(g); });
      std::sort(grids.begin(), grids.end());
      PackedKeys keys(grid_length(n, m), maxv);
      for (auto& g : grids) keys.add(g.data());
      out.keys[static_cast<std::size_t>(n) * (q + 1) + m] = std::move(keys);
    }
  auto at = [&](int n, int m) -> const PackedKeys& { return out.keys[static_cast<std::size_t>(n) * (q + 1) + m]; };
  auto op = [&](int n, int m, int s, int n2, int m2, const std::vector<int>& alpha, const std::vector<int>& beta) {
    auto grid = at(n, m).get(s);
    auto r = reindex(*c, GridView{n, m}, grid, alpha, beta);
    int t = at(n2, m2).find(r.data());
    if (t < 0) throw Error("internal: classifying diagram grid not found");
    return t;
  };
  out.object = TruncBiSSet::from_model(
      p, q, [&](int n, int m) { return at(n, m).size(); },
      [&](int n, int m, int s, int i) { return op(n, m, s, n - 1, m, face_map(n, i), identity_map_of(m)); },
      [&](int n, int m, int s, int i) { return op(n, m, s, n, m - 1, identity_map_of(n), face_map(m, i)); },
      [&](int n, int m, int s, int j) { return op(n, m, s, n + 1, m, degen_map(n, j), identity_map_of(m)); },
      [&](int n, int m, int s, int j) { return op(n, m, s, n, m + 1, identity_map_of(n), degen_map(m, j)); },
      [&](int n, int m, int s) {
        auto grid = at(n, m).get(s);
        GridView g{n, m};
        if (n == 0 && m == 0) return c->object(grid[0]);
        std::vector<std::string> hs, vs;
        for (int i = 0; i < n; ++i)
          for (int a = 0; a <= m; ++a) hs.push_back(c->morphism(grid[g.h(i, a)]).id);
        for (int i = 0; i <= n; ++i)
          for (int a = 0; a < m; ++a) vs.push_back(c->morphism(grid[g.v(i, a)]).id);
        return join(hs, ",") + "/" + join(vs, ",");
      });
  out.object.set_coskeletal(2, 1);
  return out;
}

TruncBiSSet classifying_diagram(const fincat::FinCat& c, int p, int q) {
  return classifying_data(fincat::share(c), p, q).object;
}

fincat::FunctorData grid_functor(const fincat::FinCat& c, int n, int m, const std::vector<int>& grid) {
  auto cn = fincat::interval(n);
  auto im = fincat::groupoid_interval(m);
  auto prod = fincat::product(cn, im);
  GridView g{n, m};
  auto pos = [](const fincat::FinCat& k, int x) { return std::stoi(k.object(x)); };
  fincat::FunctorData f;
  f.obj.assign(prod.num_objects(), -1);
  f.mor.assign(prod.num_morphisms(), -1);
  for (int x = 0; x < cn.num_objects(); ++x)
    for (int y = 0; y < im.num_objects(); ++y)
      f.obj[fincat::product_object(prod, cn, im, x, y)] = grid[g.obj(pos(cn, x), pos(im, y))];
  for (int u = 0; u < cn.num_morphisms(); ++u)
    for (int w = 0; w < im.num_morphisms(); ++w) {
      int i = pos(cn, cn.morphism(u).src), j = pos(cn, cn.morphism(u).tgt);
      int a = pos(im, im.morphism(w).src), b = pos(im, im.morphism(w).tgt);
      int hpart = h_path(c, g, grid, i, j, a);
      int vpart = v_path(c, g, grid, j, a, b);
      f.mor[fincat::product_morphism(prod, cn, im, u, w)] = c.compose(vpart, hpart);
    }
  return f;
}

BiSSetMap classifying_map(const fincat::Functor& f, const Classifying& src, const Classifying& dst,
                          const BiSSetPtr& src_ptr, const BiSSetPtr& dst_ptr) {
  const int q = src.object.q();
  return map_from_function(src_ptr, dst_ptr, [&](int n, int m, int s) {
    auto grid = src.grid(n, m, s);
    const int objs = (n + 1) * (m + 1);
    for (int k = 0; k < static_cast<int>(grid.size()); ++k) grid[k] = k < objs ? f.obj(grid[k]) : f.mor(grid[k]);
    int t = dst.keys[static_cast<std::size_t>(n) * (q + 1) + m].find(grid.data());
    if (t < 0) throw Error("internal: image grid missing from the target classifying diagram");
    return t;
  });
}

}  // namespace segal::bisset
