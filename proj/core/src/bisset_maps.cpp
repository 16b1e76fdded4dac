#include <algorithm>
#include <queue>
#include <tuple>

#include "segal/bisset.hpp"

namespace segal::bisset {

namespace {

std::string at(int n, int m) { return "(" + std::to_string(n) + "," + std::to_string(m) + ")"; }

std::size_t bid(const TruncBiSSet& x, int n, int m) { return static_cast<std::size_t>(n) * (x.q() + 1) + m; }

}  // namespace

Verdict BiSSetMap::validate() const {
  const auto& x = *src;
  const auto& y = *tgt;
  if (x.p() > y.p() || x.q() > y.q()) return {false, "source window exceeds target window"};
  for (int n = 0; n <= x.p(); ++n)
    for (int m = 0; m <= x.q(); ++m) {
      const auto& row = img[bid(x, n, m)];
      if (static_cast<int>(row.size()) != x.size(n, m)) return {false, "image table has the wrong size at " + at(n, m)};
      for (int s = 0; s < x.size(n, m); ++s) {
        int t = row[s];
        if (t < 0 || t >= y.size(n, m)) return {false, "image of " + x.name(n, m, s) + " is out of range"};
        auto here = [&](int n2, int m2, int s2) { return img[bid(x, n2, m2)][s2]; };
        if (n >= 1)
          for (int i = 0; i <= n; ++i)
            if (y.hface(n, m, t, i) != here(n - 1, m, x.hface(n, m, s, i)))
              return {false, "horizontal face dh" + std::to_string(i) + " not preserved on " + x.name(n, m, s)};
        if (m >= 1)
          for (int i = 0; i <= m; ++i)
            if (y.vface(n, m, t, i) != here(n, m - 1, x.vface(n, m, s, i)))
              return {false, "vertical face dv" + std::to_string(i) + " not preserved on " + x.name(n, m, s)};
        if (n < x.p())
          for (int j = 0; j <= n; ++j)
            if (y.hdegen(n, m, t, j) != here(n + 1, m, x.hdegen(n, m, s, j)))
              return {false, "horizontal degeneracy sh" + std::to_string(j) + " not preserved on " + x.name(n, m, s)};
        if (m < x.q())
          for (int j = 0; j <= m; ++j)
            if (y.vdegen(n, m, t, j) != here(n, m + 1, x.vdegen(n, m, s, j)))
              return {false, "vertical degeneracy sv" + std::to_string(j) + " not preserved on " + x.name(n, m, s)};
      }
    }
  return {true, ""};
}

std::map<std::string, BiExpr> BiSSetMap::assignment() const {
  std::map<std::string, BiExpr> out;
  for (int n = 0; n <= src->p(); ++n)
    for (int m = 0; m <= src->q(); ++m)
      for (int s : src->generators(n, m)) out[src->name(n, m, s)] = tgt->expr(n, m, (*this)(n, m, s));
  return out;
}

sset::SSetMap BiSSetMap::column_map(int n, const sset::SSetPtr& src_col, const sset::SSetPtr& tgt_col) const {
  sset::SSetMap f{src_col, tgt_col, {}};
  for (int m = 0; m <= src_col->dim(); ++m) f.img.push_back(img[bid(*src, n, m)]);
  return f;
}

BiSSetMap identity_map(const BiSSetPtr& x) {
  return map_from_function(x, x, [](int, int, int s) { return s; });
}

BiSSetMap compose(const BiSSetMap& g, const BiSSetMap& f) {
  if (f.tgt.get() != g.src.get() &&
      (f.tgt->p() != g.src->p() || f.tgt->q() != g.src->q() || f.tgt->counts() != g.src->counts()))
    throw Error("maps are not composable");
  BiSSetMap h{f.src, g.tgt, {}};
  for (int n = 0; n <= f.src->p(); ++n)
    for (int m = 0; m <= f.src->q(); ++m) {
      std::vector<int> row(f.src->size(n, m));
      for (int s = 0; s < f.src->size(n, m); ++s) row[s] = g(n, m, f(n, m, s));
      h.img.push_back(std::move(row));
    }
  return h;
}

BiSSetMap map_from_function(const BiSSetPtr& src, const BiSSetPtr& tgt, const std::function<int(int, int, int)>& fn) {
  BiSSetMap h{src, tgt, {}};
  for (int n = 0; n <= src->p(); ++n)
    for (int m = 0; m <= src->q(); ++m) {
      std::vector<int> row(src->size(n, m));
      for (int s = 0; s < src->size(n, m); ++s) row[s] = fn(n, m, s);
      h.img.push_back(std::move(row));
    }
  auto v = h.validate();
  if (!v.ok) throw Error("not a bisimplicial map: " + v.witness);
  return h;
}

BiSSetMap map_from_assignment(const BiSSetPtr& src, const BiSSetPtr& tgt, const std::map<std::string, BiExpr>& assignment) {
  const auto& x = *src;
  const auto& y = *tgt;
  if (x.p() > y.p() || x.q() > y.q()) throw Error("map source window exceeds target window");
  BiSSetMap h{src, tgt, std::vector<std::vector<int>>(static_cast<std::size_t>(x.p() + 1) * (x.q() + 1))};
  for (auto [n, m] : bidegree_order(x.p(), x.q())) {
    auto& row = h.img[bid(x, n, m)];
    row.assign(x.size(n, m), -1);
    for (int s = 0; s < x.size(n, m); ++s) {
      if (x.is_degenerate(n, m, s)) {
        const auto& hw = x.hword(n, m, s);
        const auto& vw = x.vword(n, m, s);
        int bn = n - static_cast<int>(hw.size()), bm = m - static_cast<int>(vw.size());
        row[s] = y.apply_degeneracies(bn, bm, h(bn, bm, x.base(n, m, s)), hw, vw);
        continue;
      }
      auto it = assignment.find(x.name(n, m, s));
      if (it == assignment.end()) throw Error("no image given for generator " + x.name(n, m, s));
      int t = y.find(n, m, bi_degenerate_name(it->second.hword, it->second.vword, it->second.base));
      if (t < 0) throw Error("image of " + x.name(n, m, s) + " is not a bisimplex of the target at " + at(n, m));
      row[s] = t;
    }
  }
  auto v = h.validate();
  if (!v.ok) throw Error("assignment is not a bisimplicial map: " + v.witness);
  return h;
}

int search_level(const TruncBiSSet& x, const TruncBiSSet& y) {
  if (x.p() > y.p() || x.q() > y.q())
    throw WindowError("map source window " + at(x.p(), x.q()) + " exceeds the target's " + at(y.p(), y.q()),
                      "target window >= " + at(x.p(), x.q()));
  const int top = x.p() + x.q();
  return y.coskeletal_level() >= 0 ? std::min(top, y.coskeletal_level()) : top;
}

namespace {

int key_level(const TruncBiSSet& y, int search) {
  return y.determined_level() >= 0 ? std::min(search, y.determined_level()) : search;
}

struct FaceRef {
  int base_n, base_m, flat;
  std::vector<int> hword, vword;
};

struct Step {
  int n, m, simplex, flat;
  std::vector<FaceRef> faces;
};

int flat_of(const TruncBiSSet& x, int n, int m, int s) { return x.flat_offset(n, m) + x.generator_position(n, m, s); }

FaceRef face_ref(const TruncBiSSet& x, int n, int m, int f) {
  const auto& hw = x.hword(n, m, f);
  const auto& vw = x.vword(n, m, f);
  int bn = n - static_cast<int>(hw.size()), bm = m - static_cast<int>(vw.size());
  return {bn, bm, flat_of(x, bn, bm, x.base(n, m, f)), hw, vw};
}

std::vector<FaceRef> faces_of(const TruncBiSSet& x, int n, int m, int s) {
  std::vector<FaceRef> out;
  if (n >= 1)
    for (int i = 0; i <= n; ++i) out.push_back(face_ref(x, n - 1, m, x.hface(n, m, s, i)));
  if (m >= 1)
    for (int i = 0; i <= m; ++i) out.push_back(face_ref(x, n, m - 1, x.vface(n, m, s, i)));
  return out;
}

std::vector<Step> search_order(const TruncBiSSet& x, int levels) {
  // Same ready-queue scheme as for simplicial sets; the priority is the
  // bidegree's rank in bidegree_order, then the generator's position.
  std::vector<Step> order;
  const int total = x.flat_length(levels);
  std::vector<std::pair<int, int>> degrees;
  for (auto d : bidegree_order(x.p(), x.q()))
    if (d.first + d.second <= levels && d.first + d.second >= 1) degrees.push_back(d);
  std::vector<std::tuple<int, int, int>> at_flat(total);
  std::vector<long> priority(total, 0);
  std::vector<int> missing(total, 0);
  std::vector<std::vector<int>> dependents(total);
  for (int v : x.generators(0, 0)) at_flat[flat_of(x, 0, 0, v)] = {0, 0, v};
  for (std::size_t r = 0; r < degrees.size(); ++r) {
    auto [n, m] = degrees[r];
    for (int s : x.generators(n, m)) {
      const int g = flat_of(x, n, m, s);
      at_flat[g] = {n, m, s};
      priority[g] = static_cast<long>(r) * total + x.generator_position(n, m, s);
      std::vector<int> bases;
      for (const auto& fr : faces_of(x, n, m, s)) bases.push_back(fr.flat);
      std::sort(bases.begin(), bases.end());
      bases.erase(std::unique(bases.begin(), bases.end()), bases.end());
      missing[g] = static_cast<int>(bases.size());
      for (int b : bases) dependents[b].push_back(g);
    }
  }
  using Entry = std::pair<long, int>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> ready;
  auto make = [&](int n, int m, int s) {
    Step st{n, m, s, flat_of(x, n, m, s), faces_of(x, n, m, s)};
    for (int d : dependents[st.flat])
      if (--missing[d] == 0) ready.push({priority[d], d});
    order.push_back(std::move(st));
  };
  for (int v : x.generators(0, 0)) {
    make(0, 0, v);
    while (!ready.empty()) {
      const int g = ready.top().second;
      ready.pop();
      auto [n, m, s] = at_flat[g];
      make(n, m, s);
    }
  }
  return order;
}

}  // namespace

void search_maps(const TruncBiSSet& x, const TruncBiSSet& y, int levels, const sset::MapSearchOptions& opts,
                 const std::function<bool(const std::vector<int>&)>& visit) {
  if (x.p() > y.p() || x.q() > y.q()) throw WindowError("map search beyond the target's window", "target window >= " + at(x.p(), x.q()));
  const auto order = search_order(x, levels);
  std::vector<int> flat(static_cast<std::size_t>(x.flat_length(levels)), -1);
  std::vector<std::vector<char>> used;
  if (opts.injective)
    for (int n = 0; n <= y.p(); ++n)
      for (int m = 0; m <= y.q(); ++m) used.emplace_back(y.size(n, m), 0);
  auto used_at = [&](int n, int m) -> std::vector<char>& { return used[bid(y, n, m)]; };
  std::vector<int> all_vertices(y.size(0, 0));
  for (int v = 0; v < y.size(0, 0); ++v) all_vertices[v] = v;
  std::vector<int> faces;
  // Iterative depth-first search, as for simplicial sets.
  const std::size_t depth_end = order.size();
  std::vector<const std::vector<int>*> cand(depth_end + 1, nullptr);
  std::vector<std::size_t> pos(depth_end + 1, 0);
  auto enter = [&](std::size_t depth) {
    pos[depth] = 0;
    if (depth == depth_end) return;
    const Step& st = order[depth];
    cand[depth] = &all_vertices;
    if (st.n + st.m >= 1) {
      faces.resize(st.faces.size());
      for (std::size_t i = 0; i < st.faces.size(); ++i) {
        const auto& fr = st.faces[i];
        faces[i] = y.apply_degeneracies(fr.base_n, fr.base_m, flat[fr.flat], fr.hword, fr.vword);
      }
      cand[depth] = &y.with_faces(st.n, st.m, faces.data());
    }
  };
  std::size_t depth = 0;
  enter(0);
  while (true) {
    if (depth == depth_end) {
      if (!visit(flat)) return;
      if (depth == 0) return;
      --depth;
      continue;
    }
    const Step& st = order[depth];
    if (opts.injective && flat[st.flat] >= 0) used_at(st.n, st.m)[flat[st.flat]] = 0;
    const auto& cs = *cand[depth];
    int next = -1;
    while (pos[depth] < cs.size()) {
      const int t = cs[pos[depth]++];
      if (opts.generators_to_generators && y.is_degenerate(st.n, st.m, t)) continue;
      if (opts.injective && used_at(st.n, st.m)[t]) continue;
      next = t;
      break;
    }
    if (next < 0) {
      flat[st.flat] = -1;
      if (depth == 0) return;
      --depth;
      continue;
    }
    flat[st.flat] = next;
    if (opts.injective) used_at(st.n, st.m)[next] = 1;
    enter(++depth);
  }
}

BiMapSet::BiMapSet(BiSSetPtr s, BiSSetPtr t, int lvl, int srch) : src(std::move(s)), tgt(std::move(t)), level(lvl), search(srch) {
  int biggest = 0;
  for (int n = 0; n <= tgt->p(); ++n)
    for (int m = 0; m <= tgt->q(); ++m)
      if (n + m <= level) biggest = std::max(biggest, tgt->size(n, m));
  keys_ = PackedKeys(src->flat_length(level), biggest);
}

int BiMapSet::image(const std::vector<int>& flat, int n, int m, int s) const {
  const auto& x = *src;
  const auto& y = *tgt;
  if (x.is_degenerate(n, m, s)) {
    const auto& hw = x.hword(n, m, s);
    const auto& vw = x.vword(n, m, s);
    int bn = n - static_cast<int>(hw.size()), bm = m - static_cast<int>(vw.size());
    return y.apply_degeneracies(bn, bm, image(flat, bn, bm, x.base(n, m, s)), hw, vw);
  }
  if (n + m <= level) return flat[flat_of(x, n, m, s)];
  std::vector<int> faces;
  if (n >= 1)
    for (int i = 0; i <= n; ++i) faces.push_back(image(flat, n - 1, m, x.hface(n, m, s, i)));
  if (m >= 1)
    for (int i = 0; i <= m; ++i) faces.push_back(image(flat, n, m - 1, x.vface(n, m, s, i)));
  const auto& cand = y.with_faces(n, m, faces.data());
  if (cand.size() != 1) throw Error("internal: image of " + x.name(n, m, s) + " is not determined by its faces");
  return cand.front();
}

BiSSetMap BiMapSet::materialize(int i) const {
  const auto& x = *src;
  const auto& y = *tgt;
  const auto flat = images(i);
  BiSSetMap f{src, tgt, std::vector<std::vector<int>>(static_cast<std::size_t>(x.p() + 1) * (x.q() + 1))};
  std::vector<int> faces;
  for (auto [n, m] : bidegree_order(x.p(), x.q())) {
    auto& row = f.img[bid(x, n, m)];
    row.assign(x.size(n, m), -1);
    for (int s = 0; s < x.size(n, m); ++s) {
      if (x.is_degenerate(n, m, s)) {
        const auto& hw = x.hword(n, m, s);
        const auto& vw = x.vword(n, m, s);
        int bn = n - static_cast<int>(hw.size()), bm = m - static_cast<int>(vw.size());
        row[s] = y.apply_degeneracies(bn, bm, f(bn, bm, x.base(n, m, s)), hw, vw);
      } else if (n + m <= level) {
        row[s] = flat[flat_of(x, n, m, s)];
      } else {
        faces.clear();
        if (n >= 1)
          for (int j = 0; j <= n; ++j) faces.push_back(f(n - 1, m, x.hface(n, m, s, j)));
        if (m >= 1)
          for (int j = 0; j <= m; ++j) faces.push_back(f(n, m - 1, x.vface(n, m, s, j)));
        const auto& cand = y.with_faces(n, m, faces.data());
        if (cand.size() != 1) throw Error("internal: image of " + x.name(n, m, s) + " is not determined by its faces");
        row[s] = cand.front();
      }
    }
  }
  return f;
}

BiPrecomposePlan make_precompose_plan(const BiMapSet& from, const BiMapSet& to, const std::function<int(int, int, int)>& phi) {
  const auto& sp = *to.src;
  const auto& s = *from.src;
  BiPrecomposePlan plan;
  for (auto [n, m] : bidegree_order(sp.p(), sp.q())) {
    if (n + m > to.level) continue;
    for (int g : sp.generators(n, m)) {
      BiPrecomposePlan::Entry e;
      e.n = n;
      e.m = m;
      e.simplex = phi(n, m, g);
      e.hword = s.hword(n, m, e.simplex);
      e.vword = s.vword(n, m, e.simplex);
      e.base_n = n - static_cast<int>(e.hword.size());
      e.base_m = m - static_cast<int>(e.vword.size());
      int b = s.base(n, m, e.simplex);
      e.base_pos = e.base_n + e.base_m <= from.level ? flat_of(s, e.base_n, e.base_m, b) : -1;
      plan.entries.push_back(std::move(e));
    }
  }
  return plan;
}

int precompose(const BiMapSet& from, int i, const BiMapSet& to, const BiPrecomposePlan& plan) {
  const auto flat = from.images(i);
  const auto& y = *from.tgt;
  std::vector<int> out;
  out.reserve(plan.entries.size());
  for (const auto& e : plan.entries) {
    if (e.base_pos >= 0)
      out.push_back(y.apply_degeneracies(e.base_n, e.base_m, flat[e.base_pos], e.hword, e.vword));
    else
      out.push_back(from.image(flat, e.n, e.m, e.simplex));
  }
  int j = to.find(out);
  if (j < 0) throw Error("internal: precomposite is missing from the target map set");
  return j;
}

BiMapSet map_set(const BiSSetPtr& x, const BiSSetPtr& y) {
  const int search = search_level(*x, *y);
  BiMapSet ms(x, y, key_level(*y, search), search);
  const int len = ms.key_length();
  std::vector<std::vector<int>> found;
  search_maps(*x, *y, search, {}, [&](const std::vector<int>& flat) {
    found.emplace_back(flat.begin(), flat.begin() + len);
    return true;
  });
  std::sort(found.begin(), found.end());
  for (const auto& f : found) ms.add(f);
  return ms;
}

std::vector<BiSSetMap> enumerate_maps(const BiSSetPtr& x, const BiSSetPtr& y) {
  auto ms = map_set(x, y);
  std::vector<BiSSetMap> out;
  out.reserve(ms.size());
  for (int i = 0; i < ms.size(); ++i) out.push_back(ms.materialize(i));
  return out;
}

std::size_t count_maps(const TruncBiSSet& x, const TruncBiSSet& y) {
  std::size_t n = 0;
  search_maps(x, y, search_level(x, y), {}, [&](const std::vector<int>&) {
    ++n;
    return true;
  });
  return n;
}

std::optional<BiSSetMap> find_isomorphism(const BiSSetPtr& x, const BiSSetPtr& y) {
  if (x->p() != y->p() || x->q() != y->q() || x->counts() != y->counts()) return std::nullopt;
  const int top = x->p() + x->q();
  BiMapSet ms(x, y, top, top);
  bool found = false;
  search_maps(*x, *y, top, {true, true}, [&](const std::vector<int>& flat) {
    ms.add(flat);
    found = true;
    return false;
  });
  if (!found) return std::nullopt;
  return ms.materialize(0);
}

bool isomorphic(const TruncBiSSet& x, const TruncBiSSet& y) {
  return find_isomorphism(share(x), share(y)).has_value();
}

}  // namespace segal::bisset
