#include <functional>

#include "segal/bicat.hpp"

namespace segal::bicat {

namespace {

long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// |Δⁿ_k|: monotone maps [k] -> [n].
int simplex_count(int n, int k) { return static_cast<int>(binomial(n + k + 1, k + 1)); }

// Finds in `to` (maps Δⁿ × X'' -> Z) the map whose value on the pair
// (Δ-simplex a, X-simplex x) at level lvl is value(lvl, a, x).
int find_sset(const sset::MapSet& to, int n, const std::function<int(int, int, int)>& value) {
  const auto& src = *to.src;
  std::vector<int> flat(to.key_length(), -1);
  for (int lvl = 0; lvl <= to.level; ++lvl) {
    const int xs = src.size(lvl) / simplex_count(n, lvl);
    for (int s : src.generators(lvl)) flat[src.gen_offset(lvl) + src.generator_position(lvl, s)] = value(lvl, s / xs, s % xs);
  }
  int i = to.find(flat);
  if (i < 0) throw Error("internal: composite is not among the enumerated maps");
  return i;
}

// Same for maps (Δⁿ ⊠ Δᵐ) × X'' -> Z; `c` indexes the box factor.
int find_bisset(const bisset::BiMapSet& to, int n, int m, const std::function<int(int, int, int, int)>& value) {
  const auto& src = *to.src;
  std::vector<int> flat(to.key_length(), -1);
  for (auto [h, v] : bisset::bidegree_order(src.p(), src.q())) {
    if (h + v > to.level) continue;
    const int xs = src.size(h, v) / (simplex_count(n, h) * simplex_count(m, v));
    for (int s : src.generators(h, v)) flat[src.flat_offset(h, v) + src.generator_position(h, v, s)] = value(h, v, s / xs, s % xs);
  }
  int i = to.find(flat);
  if (i < 0) throw Error("internal: composite is not among the enumerated maps");
  return i;
}

void require_level(int lvl, int dim, const char* what) {
  if (lvl > dim) throw WindowError(std::string("composition needs ") + what + " above its truncation", "dim >= " + std::to_string(lvl));
}

// Unique simplex of y with the given faces, for images above a truncation.
int fill_sset(const sset::TruncSSet& y, int k, const std::vector<int>& faces) {
  const auto& cand = y.with_faces(k, faces.data());
  if (cand.size() != 1) throw Error("internal: map is not determined by faces at level " + std::to_string(k));
  return cand.front();
}

// Post-composition of a cell of H(X,Y) at bidegree (n, m) with object g of H(Y,Z).
int post_cell(const HomCat2& xy, int n, int m, int e, const HomCat2& yz, int g, const HomCat2& xz) {
  if (xy.side == Side::qcat) {
    const auto& from = xy.sexp->maps[n];
    const auto flat = from.images(e);
    const auto gm = yz.sset_map(g);
    return find_sset(xz.sexp->maps[n], n, [&](int lvl, int a, int x) {
      require_level(lvl, from.src->dim(), "a homotopy");
      require_level(lvl, gm.src->dim(), "the postcomposed map");
      const int xs = from.src->size(lvl) / simplex_count(n, lvl);
      return gm(lvl, from.image(flat, lvl, a * xs + x));
    });
  }
  const auto& from = xy.bexp->at(n, m);
  const auto flat = from.images(e);
  const auto gm = yz.bisset_map(g);
  return find_bisset(xz.bexp->at(n, m), n, m, [&](int h, int v, int c, int x) {
    if (h > from.src->p() || v > from.src->q() || h > gm.src->p() || v > gm.src->q())
      throw WindowError("composition needs bidegrees above the window", "window >= (" + std::to_string(h) + "," + std::to_string(v) + ")");
    const int xs = from.src->size(h, v) / (simplex_count(n, h) * simplex_count(m, v));
    return gm(h, v, from.image(flat, h, v, c * xs + x));
  });
}

// Precomposition of a cell of H(Y,Z) at bidegree (n, m) with object f of H(X,Y).
int pre_cell(const HomCat2& xy, int f, const HomCat2& yz, int n, int m, int e, const HomCat2& xz) {
  if (xy.side == Side::qcat) {
    const auto& from = yz.sexp->maps[n];
    const auto flat = from.images(e);
    const auto fm = xy.sset_map(f);
    return find_sset(xz.sexp->maps[n], n, [&](int lvl, int a, int x) {
      require_level(lvl, fm.src->dim(), "the precomposed map");
      require_level(lvl, from.src->dim(), "a homotopy");
      const int ys = from.src->size(lvl) / simplex_count(n, lvl);
      return from.image(flat, lvl, a * ys + fm(lvl, x));
    });
  }
  const auto& from = yz.bexp->at(n, m);
  const auto flat = from.images(e);
  const auto fm = xy.bisset_map(f);
  return find_bisset(xz.bexp->at(n, m), n, m, [&](int h, int v, int c, int x) {
    if (h > from.src->p() || v > from.src->q() || h > fm.src->p() || v > fm.src->q())
      throw WindowError("composition needs bidegrees above the window", "window >= (" + std::to_string(h) + "," + std::to_string(v) + ")");
    const int ys = from.src->size(h, v) / (simplex_count(n, h) * simplex_count(m, v));
    return from.image(flat, h, v, c * ys + fm(h, v, x));
  });
}

// Bidegree and index of a cell.
std::tuple<int, int, int> cell_position(const HomCat2& h, int cell) {
  if (h.side == Side::qcat) return {1, 0, cell};
  const int n10 = h.bexp->object.size(1, 0);
  return cell < n10 ? std::make_tuple(1, 0, cell) : std::make_tuple(0, 1, cell - n10);
}

int cell_index(const HomCat2& h, int n, int s) {
  if (h.side == Side::qcat || n == 1) return s;
  return h.bexp->object.size(1, 0) + s;
}

void finish(HomCat2& h, int vertices, const std::vector<int>& object_of, const std::function<int(int)>& h_cell_morphism,
            int h_cells) {
  h.object_of_map = object_of;
  h.map_of_object.assign(h.carrier->num_objects(), -1);
  for (int v = 0; v < vertices; ++v) {
    if (h.map_of_object[object_of[v]] >= 0) throw Error("internal: two maps share a hom-category object");
    h.map_of_object[object_of[v]] = v;
  }
  h.representative.assign(h.carrier->num_morphisms(), -1);
  for (int e = 0; e < h_cells; ++e) {
    int mor = h_cell_morphism(e);
    if (h.representative[mor] < 0) h.representative[mor] = e;
  }
  for (int mor = 0; mor < h.carrier->num_morphisms(); ++mor)
    if (h.representative[mor] < 0)
      throw UncertifiedError("morphism " + h.carrier->morphism(mor).id + " of the hom-category is not carried by a single homotopy");
}

}  // namespace

int HomCat2::num_cells() const {
  if (side == Side::qcat) return sexp->object.size(1);
  return bexp->object.size(1, 0) + bexp->object.size(0, 1);
}

int HomCat2::cell_morphism(int cell) const {
  if (side == Side::qcat) return stau->edge_morphism(sexp->object, cell);
  auto [n, m, s] = cell_position(*this, cell);
  return n == 1 ? btau->h_morphism(bexp->object, s) : btau->v_morphism(bexp->object, s);
}

int HomCat2::object_of(const sset::SSetMap& f) const {
  if (side != Side::qcat) throw Error("a simplicial map has no object in a Segal-space hom-category");
  int i = find_sset(sexp->maps[0], 0, [&](int lvl, int, int x) {
    require_level(lvl, f.src->dim(), "the map");
    return f(lvl, x);
  });
  return object_of_map[i];
}

int HomCat2::object_of(const bisset::BiSSetMap& f) const {
  if (side != Side::css) throw Error("a bisimplicial map has no object in a quasicategory hom-category");
  int i = find_bisset(bexp->at(0, 0), 0, 0, [&](int h, int v, int, int x) {
    if (h > f.src->p() || v > f.src->q()) throw WindowError("map lookup above the window", "window >= (" + std::to_string(h) + "," + std::to_string(v) + ")");
    return f(h, v, x);
  });
  return object_of_map[i];
}

sset::SSetMap HomCat2::sset_map(int object) const {
  const auto& ms = sexp->maps[0];
  const auto flat = ms.images(map_of_object[object]);
  const auto& x = *sexp->x;
  const auto& y = *sexp->y;
  sset::SSetMap f{sexp->x, sexp->y, std::vector<std::vector<int>>(x.dim() + 1)};
  for (int k = 0; k <= x.dim(); ++k) {
    f.img[k].resize(x.size(k));
    for (int s = 0; s < x.size(k); ++s) {
      if (k <= ms.src->dim()) {
        f.img[k][s] = ms.image(flat, k, s);
      } else if (x.is_degenerate(k, s)) {
        int bl = k - static_cast<int>(x.word(k, s).size());
        f.img[k][s] = y.apply_degeneracies(bl, f.img[bl][x.base(k, s)], x.word(k, s));
      } else {
        std::vector<int> faces(k + 1);
        for (int i = 0; i <= k; ++i) faces[i] = f.img[k - 1][x.face(k, s, i)];
        f.img[k][s] = fill_sset(y, k, faces);
      }
    }
  }
  return f;
}

bisset::BiSSetMap HomCat2::bisset_map(int object) const {
  const auto& ms = bexp->at(0, 0);
  const auto flat = ms.images(map_of_object[object]);
  const auto& x = *bexp->x;
  const auto& y = *bexp->y;
  const auto& src = *ms.src;
  bisset::BiSSetMap f{bexp->x, bexp->y, std::vector<std::vector<int>>(static_cast<std::size_t>(x.p() + 1) * (x.q() + 1))};
  const auto id = [&](int n, int m) { return static_cast<std::size_t>(n) * (x.q() + 1) + m; };
  for (auto [n, m] : bisset::bidegree_order(x.p(), x.q())) {
    auto& row = f.img[id(n, m)];
    row.resize(x.size(n, m));
    for (int s = 0; s < x.size(n, m); ++s) {
      if (n <= src.p() && m <= src.q()) {
        row[s] = ms.image(flat, n, m, s);
      } else if (x.is_degenerate(n, m, s)) {
        const auto& hw = x.hword(n, m, s);
        const auto& vw = x.vword(n, m, s);
        int bn = n - static_cast<int>(hw.size()), bm = m - static_cast<int>(vw.size());
        row[s] = y.apply_degeneracies(bn, bm, f.img[id(bn, bm)][x.base(n, m, s)], hw, vw);
      } else {
        std::vector<int> faces;
        for (int i = 0; n > 0 && i <= n; ++i) faces.push_back(f.img[id(n - 1, m)][x.hface(n, m, s, i)]);
        for (int i = 0; m > 0 && i <= m; ++i) faces.push_back(f.img[id(n, m - 1)][x.vface(n, m, s, i)]);
        const auto& cand = y.with_faces(n, m, faces.data());
        if (cand.size() != 1) throw Error("internal: map is not determined by faces");
        row[s] = cand.front();
      }
    }
  }
  return f;
}

HomCat2 hom_category_qcat(const sset::SSetPtr& x, const sset::SSetPtr& y, int out_dim) {
  if (out_dim < 2) throw WindowError("hom-categories need 2-simplices of the exponential", "dim >= 2");
  auto rep = sset::is_quasicategory(*y, y->dim());
  if (!rep.ok) throw UncertifiedError("target is not a quasicategory: " + rep.witness->describe(*y));
  HomCat2 h;
  h.side = Side::qcat;
  h.p = out_dim;
  auto ex = std::make_shared<sset::Exponential>(sset::exponential_data(x, y, out_dim));
  auto tau = std::make_shared<sset::Tau1>(sset::tau1_presented(ex->object));
  h.sexp = ex;
  h.stau = tau;
  h.carrier = fincat::share(tau->cat());
  finish(h, ex->object.size(0), tau->presented.object_of,
         [&](int e) { return tau->edge_morphism(ex->object, e); }, ex->object.size(1));
  return h;
}

HomCat2 hom_category_css(const bisset::BiSSetPtr& x, const bisset::BiSSetPtr& y, int p, int q) {
  auto seg = bisset::segal_check_strict(*y);
  if (!seg.ok) throw UncertifiedError("target is not strict Segal: " + seg.witness);
  auto comp = bisset::is_complete_1trunc(*y);
  if (!comp.ok) throw UncertifiedError("target is not complete: " + comp.witness);
  HomCat2 h;
  h.side = Side::css;
  h.p = p;
  h.q = q;
  auto ex = std::make_shared<bisset::BiExponential>(bisset::exponential_data(x, y, p, q));
  auto tau = std::make_shared<bisset::BiTau1>(bisset::tau1_bisset_presented(ex->object));
  h.bexp = ex;
  h.btau = tau;
  h.carrier = fincat::share(tau->cat());
  finish(h, ex->object.size(0, 0), tau->presented.object_of,
         [&](int e) { return tau->h_morphism(ex->object, e); }, ex->object.size(1, 0));
  return h;
}

int whisker_post(const HomCat2& xy, int alpha, const HomCat2& yz, int g, const HomCat2& xz) {
  auto [n, m, s] = cell_position(xy, xy.representative[alpha]);
  return xz.cell_morphism(cell_index(xz, n, post_cell(xy, n, m, s, yz, g, xz)));
}

int whisker_pre(const HomCat2& xy, int f, const HomCat2& yz, int beta, const HomCat2& xz) {
  auto [n, m, s] = cell_position(yz, yz.representative[beta]);
  return xz.cell_morphism(cell_index(xz, n, pre_cell(xy, f, yz, n, m, s, xz)));
}

fincat::Functor horizontal_compose(const HomCat2& xy, const HomCat2& yz, const HomCat2& xz) {
  if (xy.side != yz.side || xy.side != xz.side) throw Error("hom-categories come from different sides");
  const auto& c1 = *xy.carrier;
  const auto& c2 = *yz.carrier;
  const auto& c3 = *xz.carrier;
  auto prod = fincat::share(fincat::product(c1, c2));
  fincat::Functor F{prod, xz.carrier, {}};
  F.data.obj.assign(prod->num_objects(), -1);
  F.data.mor.assign(prod->num_morphisms(), -1);
  for (int a = 0; a < c1.num_objects(); ++a)
    for (int b = 0; b < c2.num_objects(); ++b) {
      int composite = post_cell(xy, 0, 0, xy.map_of_object[a], yz, b, xz);
      F.data.obj[fincat::product_object(*prod, c1, c2, a, b)] = xz.object_of_map[composite];
    }
  for (int al = 0; al < c1.num_morphisms(); ++al)
    for (int be = 0; be < c2.num_morphisms(); ++be) {
      int f = c1.morphism(al).src;
      int g2 = c2.morphism(be).tgt;
      int first = whisker_pre(xy, f, yz, be, xz);
      int second = whisker_post(xy, al, yz, g2, xz);
      int h = c3.compose(second, first);
      if (h < 0) throw Error("internal: whiskered 2-cells are not composable");
      F.data.mor[fincat::product_morphism(*prod, c1, c2, al, be)] = h;
    }
  // Whiskering must not depend on the chosen representatives.
  for (int cell = 0; cell < xy.num_cells(); ++cell) {
    auto [n, m, s] = cell_position(xy, cell);
    int al = xy.cell_morphism(cell);
    for (int g = 0; g < c2.num_objects(); ++g) {
      int got = xz.cell_morphism(cell_index(xz, n, post_cell(xy, n, m, s, yz, g, xz)));
      if (got != whisker_post(xy, al, yz, g, xz))
        throw Error("whiskering by " + c2.object(g) + " does not descend to classes at " + c1.morphism(al).id);
    }
  }
  for (int cell = 0; cell < yz.num_cells(); ++cell) {
    auto [n, m, s] = cell_position(yz, cell);
    int be = yz.cell_morphism(cell);
    for (int f = 0; f < c1.num_objects(); ++f) {
      int got = xz.cell_morphism(cell_index(xz, n, pre_cell(xy, f, yz, n, m, s, xz)));
      if (got != whisker_pre(xy, f, yz, be, xz))
        throw Error("whiskering by " + c1.object(f) + " does not descend to classes at " + c2.morphism(be).id);
    }
  }
  auto v = F.validate();
  if (!v.ok) throw Error("horizontal composition is not a functor: " + v.witness);
  return F;
}

}  // namespace segal::bicat
