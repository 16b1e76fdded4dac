#include <algorithm>
#include <cstring>
#include <queue>

#include "segal/sset.hpp"

namespace segal::sset {

Verdict SSetMap::validate() const {
  const auto& x = *src;
  const auto& y = *tgt;
  if (x.dim() > y.dim()) return {false, "source dimension exceeds target dimension"};
  for (int k = 0; k <= x.dim(); ++k) {
    if (static_cast<int>(img[k].size()) != x.size(k)) return {false, "image table has the wrong size at level " + std::to_string(k)};
    for (int s = 0; s < x.size(k); ++s) {
      int t = img[k][s];
      if (t < 0 || t >= y.size(k)) return {false, "image of " + x.name(k, s) + " is out of range"};
      if (k >= 1)
        for (int i = 0; i <= k; ++i)
          if (y.face(k, t, i) != img[k - 1][x.face(k, s, i)])
            return {false, "face d" + std::to_string(i) + " not preserved on " + x.name(k, s)};
      if (k < x.dim())
        for (int j = 0; j <= k; ++j)
          if (y.degen(k, t, j) != img[k + 1][x.degen(k, s, j)])
            return {false, "degeneracy s" + std::to_string(j) + " not preserved on " + x.name(k, s)};
    }
  }
  return {true, ""};
}

std::map<std::string, DegenerateExpr> SSetMap::assignment() const {
  std::map<std::string, DegenerateExpr> out;
  for (int k = 0; k <= src->dim(); ++k)
    for (int s : src->generators(k)) out[src->name(k, s)] = tgt->expr(k, img[k][s]);
  return out;
}

SSetMap identity_map(const SSetPtr& x) {
  SSetMap f{x, x, {}};
  for (int k = 0; k <= x->dim(); ++k) {
    f.img.emplace_back(x->size(k));
    for (int s = 0; s < x->size(k); ++s) f.img[k][s] = s;
  }
  return f;
}

SSetMap compose(const SSetMap& g, const SSetMap& f) {
  if (f.tgt.get() != g.src.get() && (f.tgt->dim() != g.src->dim() || f.tgt->counts() != g.src->counts()))
    throw Error("maps are not composable");
  SSetMap h{f.src, g.tgt, {}};
  for (int k = 0; k <= f.src->dim(); ++k) {
    h.img.emplace_back(f.src->size(k));
    for (int s = 0; s < f.src->size(k); ++s) h.img[k][s] = g.img[k][f.img[k][s]];
  }
  return h;
}

SSetMap map_from_assignment(const SSetPtr& src, const SSetPtr& tgt, const std::map<std::string, DegenerateExpr>& assignment) {
  const auto& x = *src;
  const auto& y = *tgt;
  if (x.dim() > y.dim()) throw Error("map source dimension exceeds target dimension");
  SSetMap f{src, tgt, {}};
  for (int k = 0; k <= x.dim(); ++k) {
    f.img.emplace_back(x.size(k), -1);
    for (int s = 0; s < x.size(k); ++s) {
      if (x.is_degenerate(k, s)) {
        int bl = k - static_cast<int>(x.word(k, s).size());
        f.img[k][s] = y.apply_degeneracies(bl, f.img[bl][x.base(k, s)], x.word(k, s));
        continue;
      }
      auto it = assignment.find(x.name(k, s));
      if (it == assignment.end()) throw Error("no image given for generator " + x.name(k, s));
      int t = y.find(k, degenerate_name(it->second.word, it->second.base));
      if (t < 0) throw Error("image of " + x.name(k, s) + " is not a level-" + std::to_string(k) + " simplex of the target");
      f.img[k][s] = t;
    }
  }
  auto v = f.validate();
  if (!v.ok) throw Error("assignment is not a simplicial map: " + v.witness);
  return f;
}

int search_level(const TruncSSet& x, const TruncSSet& y) {
  if (x.dim() > y.dim())
    throw WindowError("map source has dimension " + std::to_string(x.dim()) + " above the target's " + std::to_string(y.dim()),
                      "target dim >= " + std::to_string(x.dim()));
  if (y.coskeletal_level() >= 0) return std::min(x.dim(), y.coskeletal_level());
  return x.dim();
}

namespace {

int key_level(const TruncSSet& y, int search) {
  return y.determined_level() >= 0 ? std::min(search, y.determined_level()) : search;
}

// Where the face of a generator gets its image from.
struct FaceRef {
  int base_level, flat;  // flat index of the base generator
  std::vector<int> word;
};

struct Step {
  int level, simplex, flat;
  std::vector<FaceRef> faces;
};

std::vector<Step> search_order(const TruncSSet& x, int levels) {
  // After each vertex, place the least ready generator (by level, then
  // position) until none is ready. Readiness is tracked by counting unplaced
  // face bases, so the order is produced in near-linear time.
  std::vector<Step> order;
  const int total = x.gen_offset(levels + 1);
  auto flat_of = [&](int k, int s) { return x.gen_offset(k) + x.generator_position(k, s); };
  std::vector<std::pair<int, int>> at_flat(total);
  std::vector<int> missing(total, 0);
  std::vector<std::vector<int>> dependents(total);
  for (int k = 1; k <= levels; ++k)
    for (int s : x.generators(k)) {
      const int g = flat_of(k, s);
      std::vector<int> bases;
      for (int i = 0; i <= k; ++i) {
        int f = x.face(k, s, i);
        int bl = k - 1 - static_cast<int>(x.word(k - 1, f).size());
        bases.push_back(flat_of(bl, x.base(k - 1, f)));
      }
      std::sort(bases.begin(), bases.end());
      bases.erase(std::unique(bases.begin(), bases.end()), bases.end());
      missing[g] = static_cast<int>(bases.size());
      for (int b : bases) dependents[b].push_back(g);
    }
  for (int k = 0; k <= levels; ++k)
    for (int s : x.generators(k)) at_flat[flat_of(k, s)] = {k, s};
  std::priority_queue<int, std::vector<int>, std::greater<>> ready;
  auto make = [&](int k, int s) {
    Step st{k, s, flat_of(k, s), {}};
    if (k >= 1)
      for (int i = 0; i <= k; ++i) {
        int f = x.face(k, s, i);
        int bl = k - 1 - static_cast<int>(x.word(k - 1, f).size());
        st.faces.push_back({bl, flat_of(bl, x.base(k - 1, f)), x.word(k - 1, f)});
      }
    for (int d : dependents[st.flat])
      if (--missing[d] == 0) ready.push(d);
    order.push_back(std::move(st));
  };
  for (int v : x.generators(0)) {
    make(0, v);
    while (!ready.empty()) {
      const int g = ready.top();
      ready.pop();
      make(at_flat[g].first, at_flat[g].second);
    }
  }
  return order;
}

}  // namespace

void search_maps(const TruncSSet& x, const TruncSSet& y, int levels, const MapSearchOptions& opts,
                 const std::function<bool(const std::vector<int>&)>& visit) {
  if (levels > y.dim()) throw WindowError("map search beyond the target's truncation", "target dim >= " + std::to_string(levels));
  const auto order = search_order(x, levels);
  std::vector<int> flat(static_cast<std::size_t>(x.gen_offset(levels + 1)), -1);
  std::vector<std::vector<char>> used;
  if (opts.injective)
    for (int k = 0; k <= levels; ++k) used.emplace_back(y.size(k), 0);
  std::vector<int> all_vertices(y.size(0));
  for (int v = 0; v < y.size(0); ++v) all_vertices[v] = v;
  std::vector<int> faces;
  // Iterative depth-first search: sources can have 10^5 generators.
  const std::size_t depth_end = order.size();
  std::vector<const std::vector<int>*> cand(depth_end + 1, nullptr);
  std::vector<std::size_t> pos(depth_end + 1, 0);
  auto enter = [&](std::size_t depth) {
    pos[depth] = 0;
    if (depth == depth_end) return;
    const Step& st = order[depth];
    cand[depth] = &all_vertices;
    if (st.level >= 1) {
      faces.resize(st.faces.size());
      for (std::size_t i = 0; i < st.faces.size(); ++i) {
        const auto& fr = st.faces[i];
        faces[i] = y.apply_degeneracies(fr.base_level, flat[fr.flat], fr.word);
      }
      cand[depth] = &y.with_faces(st.level, faces.data());
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
    if (opts.injective && flat[st.flat] >= 0) used[st.level][flat[st.flat]] = 0;
    const auto& cs = *cand[depth];
    int next = -1;
    while (pos[depth] < cs.size()) {
      const int t = cs[pos[depth]++];
      if (opts.generators_to_generators && y.is_degenerate(st.level, t)) continue;
      if (opts.injective && used[st.level][t]) continue;
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
    if (opts.injective) used[st.level][next] = 1;
    enter(++depth);
  }
}

MapSet::MapSet(SSetPtr s, SSetPtr t, int lvl, int srch) : src(std::move(s)), tgt(std::move(t)), level(lvl), search(srch) {
  int biggest = 0;
  for (int k = 0; k <= std::min(level, tgt->dim()); ++k) biggest = std::max(biggest, tgt->size(k));
  keys_ = PackedKeys(src->gen_offset(level + 1), biggest);
}

std::vector<int> MapSet::images(int i) const { return keys_.get(i); }
int MapSet::find(const std::vector<int>& flat) const { return keys_.find(flat.data()); }
int MapSet::add(const std::vector<int>& flat) { return keys_.add(flat.data()); }

int MapSet::image(const std::vector<int>& flat, int k, int s) const {
  const auto& x = *src;
  const auto& y = *tgt;
  if (x.is_degenerate(k, s)) {
    int bl = k - static_cast<int>(x.word(k, s).size());
    return y.apply_degeneracies(bl, image(flat, bl, x.base(k, s)), x.word(k, s));
  }
  if (k <= level) return flat[x.gen_offset(k) + x.generator_position(k, s)];
  std::vector<int> faces(k + 1);
  for (int i = 0; i <= k; ++i) faces[i] = image(flat, k - 1, x.face(k, s, i));
  const auto& cand = y.with_faces(k, faces.data());
  if (cand.size() != 1) throw Error("internal: image of " + x.name(k, s) + " is not determined by its faces");
  return cand.front();
}

SSetMap MapSet::materialize(int i) const {
  const auto& x = *src;
  const auto& y = *tgt;
  const auto flat = images(i);
  SSetMap f{src, tgt, {}};
  std::vector<int> faces;
  for (int k = 0; k <= x.dim(); ++k) {
    f.img.emplace_back(x.size(k), -1);
    for (int s = 0; s < x.size(k); ++s) {
      if (x.is_degenerate(k, s)) {
        int bl = k - static_cast<int>(x.word(k, s).size());
        f.img[k][s] = y.apply_degeneracies(bl, f.img[bl][x.base(k, s)], x.word(k, s));
      } else if (k <= level) {
        f.img[k][s] = flat[x.gen_offset(k) + x.generator_position(k, s)];
      } else {
        faces.resize(k + 1);
        for (int j = 0; j <= k; ++j) faces[j] = f.img[k - 1][x.face(k, s, j)];
        const auto& cand = y.with_faces(k, faces.data());
        if (cand.size() != 1) throw Error("internal: image of " + x.name(k, s) + " is not determined by its faces");
        f.img[k][s] = cand.front();
      }
    }
  }
  return f;
}

PrecomposePlan make_precompose_plan(const MapSet& from, const MapSet& to, const std::function<int(int, int)>& phi) {
  const auto& sp = *to.src;
  const auto& s = *from.src;
  PrecomposePlan plan;
  for (int k = 0; k <= to.level; ++k)
    for (int g : sp.generators(k)) {
      PrecomposePlan::Entry e;
      e.level = k;
      e.simplex = phi(k, g);
      e.word = s.word(k, e.simplex);
      e.base_level = k - static_cast<int>(e.word.size());
      int b = s.base(k, e.simplex);
      e.base_pos = e.base_level <= from.level ? s.gen_offset(e.base_level) + s.generator_position(e.base_level, b) : -1;
      plan.entries.push_back(std::move(e));
    }
  return plan;
}

int precompose(const MapSet& from, int i, const MapSet& to, const PrecomposePlan& plan) {
  const auto flat = from.images(i);
  const auto& y = *from.tgt;
  std::vector<int> out;
  out.reserve(plan.entries.size());
  for (const auto& e : plan.entries) {
    if (e.base_pos >= 0)
      out.push_back(y.apply_degeneracies(e.base_level, flat[e.base_pos], e.word));
    else
      out.push_back(from.image(flat, e.level, e.simplex));
  }
  int j = to.find(out);
  if (j < 0) throw Error("internal: precomposite is missing from the target map set");
  return j;
}

MapSet map_set(const SSetPtr& x, const SSetPtr& y) {
  const int search = search_level(*x, *y);
  MapSet ms(x, y, key_level(*y, search), search);
  const int n = ms.key_length();
  std::vector<std::vector<int>> found;
  search_maps(*x, *y, search, {}, [&](const std::vector<int>& flat) {
    found.emplace_back(flat.begin(), flat.begin() + n);
    return true;
  });
  std::sort(found.begin(), found.end());
  for (const auto& f : found) ms.add(f);
  return ms;
}

std::vector<SSetMap> enumerate_maps(const SSetPtr& x, const SSetPtr& y) {
  auto ms = map_set(x, y);
  std::vector<SSetMap> out;
  out.reserve(ms.size());
  for (int i = 0; i < ms.size(); ++i) out.push_back(ms.materialize(i));
  return out;
}

std::size_t count_maps(const TruncSSet& x, const TruncSSet& y) {
  std::size_t n = 0;
  search_maps(x, y, search_level(x, y), {}, [&](const std::vector<int>&) {
    ++n;
    return true;
  });
  return n;
}

std::optional<SSetMap> find_isomorphism(const SSetPtr& x, const SSetPtr& y) {
  if (x->dim() != y->dim() || x->counts() != y->counts()) return std::nullopt;
  MapSet ms(x, y, x->dim(), x->dim());
  bool found = false;
  search_maps(*x, *y, x->dim(), {true, true}, [&](const std::vector<int>& flat) {
    ms.add(flat);
    found = true;
    return false;
  });
  if (!found) return std::nullopt;
  return ms.materialize(0);
}

bool isomorphic(const TruncSSet& x, const TruncSSet& y) {
  auto px = std::make_shared<const TruncSSet>(x);
  auto py = std::make_shared<const TruncSSet>(y);
  return find_isomorphism(px, py).has_value();
}

SSetMap nerve_map(const fincat::Functor& f, const SSetPtr& nc, const SSetPtr& nd) {
  const auto& c = *f.src;
  const auto& d = *f.tgt;
  const auto& x = *nc;
  const auto& y = *nd;
  if (x.size(0) != c.num_objects() || y.size(0) != d.num_objects()) throw Error("nerve map needs the nerves of the functor's categories");
  SSetMap m{nc, nd, std::vector<std::vector<int>>(x.dim() + 1)};
  for (int k = 0; k <= x.dim(); ++k) {
    if (k > y.dim()) throw WindowError("target nerve is truncated below the source", "dim >= " + std::to_string(k));
    m.img[k].resize(x.size(k));
    for (int s = 0; s < x.size(k); ++s) {
      if (k == 0) {
        m.img[0][s] = f.obj(s);
      } else if (x.is_degenerate(k, s)) {
        int bl = k - static_cast<int>(x.word(k, s).size());
        m.img[k][s] = y.apply_degeneracies(bl, m.img[bl][x.base(k, s)], x.word(k, s));
      } else if (k == 1) {
        int g = f.mor(c.morphism_index(x.name(1, s)));
        m.img[1][s] = d.is_identity(g) ? y.degen(0, f.obj(x.face(1, s, 0)), 0) : y.find(1, d.morphism(g).id);
      } else {
        std::vector<int> faces(k + 1);
        for (int i = 0; i <= k; ++i) faces[i] = m.img[k - 1][x.face(k, s, i)];
        const auto& cand = y.with_faces(k, faces.data());
        if (cand.size() != 1) throw Error("nerve map: simplex " + x.name(k, s) + " has no unique image");
        m.img[k][s] = cand.front();
      }
    }
  }
  auto v = m.validate();
  if (!v.ok) throw Error("nerve map is not simplicial: " + v.witness);
  return m;
}

}  // namespace segal::sset
