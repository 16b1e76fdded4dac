#include <algorithm>
#include <map>
#include <numeric>

#include "segal/bicat.hpp"

namespace segal::bicat {

namespace {

// Evaluations of maps out of Δⁿ × Jᵐ, memoized per (n, m, map, piece).
class Tables {
 public:
  explicit Tables(const totalize::TUpper& t) : t_(t) {}
  const std::vector<std::vector<int>>& get(int n, int m, int f, const sset::TruncSSet& piece) {
    auto key = std::make_tuple(n, m, f, &piece);
    auto it = cache_.find(key);
    if (it == cache_.end()) it = cache_.emplace(key, totalize::evaluate(t_, n, m, f, piece)).first;
    return it->second;
  }

 private:
  const totalize::TUpper& t_;
  std::map<std::tuple<int, int, int, const sset::TruncSSet*>, std::vector<std::vector<int>>> cache_;
};

}  // namespace

Bridge bridge_map(const sset::SSetPtr& x, const sset::SSetPtr& y, int p, int q) {
  Bridge br;
  auto ex = std::make_shared<sset::Exponential>(sset::exponential_data(x, y, 2));
  br.e = ex;
  auto e_ptr = sset::share(ex->object);
  br.tx = totalize::t_upper_data(x, p, q);
  br.ty = totalize::t_upper_data(y, p, q);
  br.te = totalize::t_upper_data(e_ptr, p, q);
  br.tx_ptr = bisset::share(br.tx.object);
  br.ty_ptr = bisset::share(br.ty.object);
  br.te_ptr = bisset::share(br.te.object);
  br.b = std::make_shared<bisset::BiExponential>(bisset::exponential_data(br.tx_ptr, br.ty_ptr, p, q));
  br.b_ptr = bisset::share(br.b->object);

  int top = 0;
  for (int k = 0; k <= p; ++k)
    for (int l = 0; l <= q; ++l) top = std::max(top, br.ty.at(k, l).level);
  Tables xtab(br.tx), etab(br.te);
  std::map<std::pair<int, int>, sset::TruncSSet> pieces;
  std::map<std::pair<int, int>, std::unique_ptr<sset::VertexIndex>> piece_index, source_index;
  auto piece = [&](int n, int m) -> const sset::TruncSSet& {
    auto it = pieces.find({n, m});
    if (it == pieces.end()) {
      it = pieces.emplace(std::make_pair(n, m), totalize::representable(n, m, top)).first;
      piece_index[{n, m}] = std::make_unique<sset::VertexIndex>(it->second);
    }
    return it->second;
  };
  auto source_vi = [&](int k, int l) -> const sset::VertexIndex& {
    auto& slot = source_index[{k, l}];
    if (!slot) slot = std::make_unique<sset::VertexIndex>(*br.ty.source(k, l));
    return *slot;
  };
  std::map<int, std::pair<sset::TruncSSet, std::unique_ptr<sset::VertexIndex>>> simplices;
  auto simplex_entry = [&](int n) -> const std::pair<sset::TruncSSet, std::unique_ptr<sset::VertexIndex>>& {
    auto it = simplices.find(n);
    if (it == simplices.end()) {
      it = simplices.emplace(n, std::make_pair(sset::standard_simplex(n, std::max({top, p, q})), nullptr)).first;
      it->second.second = std::make_unique<sset::VertexIndex>(it->second.first);
    }
    return it->second;
  };
  auto simplex = [&](int n) -> const sset::VertexIndex& { return *simplex_entry(n).second; };
  auto simplex_count = [&](int n, int k) { return simplex_entry(n).first.size(k); };

  // The value on (α ⊠ β, u) is the map Δᵏ × Jˡ -> Y sending z to φ(α × β (z)) evaluated at (ι, u(z)).
  auto image_of = [&](int n, int m, int phi) {
    const auto& to = br.b->at(n, m);
    const auto& src = *to.src;
    const auto& pn = piece(n, m);
    const auto& pvi = *piece_index.at({n, m});
    const auto& etable = etab.get(n, m, phi, pn);
    std::vector<int> flat(to.key_length(), -1);
    for (auto [k, l] : bisset::bidegree_order(src.p(), src.q())) {
      if (k + l > to.level) continue;
      if (k > p || l > q) throw WindowError("bridge map needs bidegrees above the window", "window >= (" + std::to_string(k) + "," + std::to_string(l) + ")");
      const int dm = simplex_count(m, l);
      const int dn = simplex_count(n, k);
      const int xs = src.size(k, l) / (dn * dm);
      const auto& ty_maps = br.ty.at(k, l);
      const auto& tsrc = *ty_maps.src;
      const auto& tvi = source_vi(k, l);
      for (int s : src.generators(k, l)) {
        const int c = s / xs, u = s % xs;
        const auto alpha = simplex(n).vertices(k, c / dm);
        const auto beta = simplex(m).vertices(l, c % dm);
        const auto& xtable = xtab.get(k, l, u, tsrc);
        std::vector<int> key(ty_maps.key_length(), -1);
        for (int j = 0; j <= ty_maps.level; ++j) {
          const auto& em = ex->maps[j];
          const int dj = simplex_count(j, j);
          std::vector<int> top_vertices(j + 1);
          std::iota(top_vertices.begin(), top_vertices.end(), 0);
          const int iota = simplex(j).find(top_vertices);
          const int exs = em.src->size(j) / dj;
          for (int z : tsrc.generators(j)) {
            auto verts = tvi.vertices(j, z);
            for (auto& v : verts) v = alpha[v / (l + 1)] * (m + 1) + beta[v % (l + 1)];
            const int e = etable[j][pvi.find(verts)];
            key[tsrc.gen_offset(j) + tsrc.generator_position(j, z)] = em.image(em.images(e), j, iota * exs + xtable[j][z]);
          }
        }
        const int w = ty_maps.find(key);
        if (w < 0) throw Error("internal: bridge value is not a map out of Δ" + std::to_string(k) + " × J" + std::to_string(l));
        flat[src.flat_offset(k, l) + src.generator_position(k, l, s)] = w;
      }
    }
    const int i = to.find(flat);
    if (i < 0) throw Error("internal: bridge image is not among the enumerated maps");
    return i;
  };
  br.map = bisset::map_from_function(br.te_ptr, br.b_ptr, image_of);
  return br;
}

BridgeReport bridge_check(const sset::SSetPtr& x, const sset::SSetPtr& y, int p, int q) {
  BridgeReport r;
  r.p = p;
  r.q = q;
  auto br = bridge_map(x, y, p, q);
  try {
    r.dk = bisset::is_dk_equivalence(br.map);
  } catch (const UncertifiedError& e) {
    r.dk = {false, std::string("uncertified: ") + e.what()};
  }
  r.isomorphism = true;
  for (int n = 0; n <= p && r.isomorphism; ++n)
    for (int m = 0; m <= q && r.isomorphism; ++m) {
      if (br.te_ptr->size(n, m) != br.b_ptr->size(n, m)) {
        r.isomorphism = false;
        break;
      }
      std::vector<char> hit(br.b_ptr->size(n, m), 0);
      for (int s = 0; s < br.te_ptr->size(n, m); ++s) {
        if (hit[br.map(n, m, s)]) {
          r.isomorphism = false;
          break;
        }
        hit[br.map(n, m, s)] = 1;
      }
    }
  auto hs = bisset::ho_data(*br.te_ptr);
  auto ht = bisset::ho_data(*br.b_ptr);
  auto F = bisset::ho_map(br.map, hs, ht);
  auto tau = sset::tau1(br.e->object);
  std::vector<char> seen_obj(ht.cat.num_objects(), 0), seen_mor(ht.cat.num_morphisms(), 0);
  bool bij = hs.cat.num_objects() == ht.cat.num_objects() && hs.cat.num_morphisms() == ht.cat.num_morphisms();
  for (int o : F.data.obj) {
    if (seen_obj[o]) bij = false;
    seen_obj[o] = 1;
  }
  for (int f : F.data.mor) {
    if (seen_mor[f]) bij = false;
    seen_mor[f] = 1;
  }
  if (!bij) {
    r.hom_level = {false, "the map on homotopy categories is not an isomorphism"};
  } else if (!fincat::isomorphic(tau, ht.cat)) {
    r.hom_level = {false, "the hom-category of the quasicategories differs from Ho of the Segal-space exponential"};
  } else {
    r.hom_level = {true, ""};
  }
  return r;
}

}  // namespace segal::bicat
