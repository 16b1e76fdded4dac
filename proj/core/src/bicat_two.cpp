#include "segal/bicat.hpp"

namespace segal::bicat {

Sub2Category Sub2Category::qcat(std::vector<sset::SSetPtr> objects, int out_dim) {
  Sub2Category s;
  s.side_ = Side::qcat;
  s.p_ = out_dim;
  s.sobjects_ = std::move(objects);
  return s;
}

Sub2Category Sub2Category::css(std::vector<bisset::BiSSetPtr> objects, int p, int q) {
  Sub2Category s;
  s.side_ = Side::css;
  s.p_ = p;
  s.q_ = q;
  s.bobjects_ = std::move(objects);
  return s;
}

int Sub2Category::size() const {
  return static_cast<int>(side_ == Side::qcat ? sobjects_.size() : bobjects_.size());
}

const HomCat2& Sub2Category::hom(int a, int b) const {
  auto& slot = homs_[{a, b}];
  if (!slot) {
    slot = std::make_shared<const HomCat2>(side_ == Side::qcat ? hom_category_qcat(sobjects_[a], sobjects_[b], p_)
                                                               : hom_category_css(bobjects_[a], bobjects_[b], p_, q_));
  }
  return *slot;
}

const fincat::Functor& Sub2Category::composition(int a, int b, int c) const {
  auto& slot = comps_[{a, b, c}];
  if (!slot) slot = std::make_shared<const fincat::Functor>(horizontal_compose(hom(a, b), hom(b, c), hom(a, c)));
  return *slot;
}

int Sub2Category::compose(int a, int b, int c, int alpha, int beta) const {
  const auto& F = composition(a, b, c);
  return F.mor(fincat::product_morphism(*F.src, *hom(a, b).carrier, *hom(b, c).carrier, alpha, beta));
}

int Sub2Category::identity_object(int a) const {
  const auto& h = hom(a, a);
  if (side_ == Side::qcat) return h.object_of(sset::identity_map(sobjects_[a]));
  return h.object_of(bisset::identity_map(bobjects_[a]));
}

AxiomReport Sub2Category::check_units() const {
  AxiomReport r;
  const int n = size();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const auto& c = *hom(a, b).carrier;
      const int ia = hom(a, a).carrier->identity(identity_object(a));
      const int ib = hom(b, b).carrier->identity(identity_object(b));
      for (int be = 0; be < c.num_morphisms(); ++be) {
        ++r.checked;
        if (compose(a, a, b, ia, be) != be || compose(a, b, b, be, ib) != be) {
          r.ok = false;
          r.witness = "identity law fails for 2-cell " + c.morphism(be).id + " in H(" + std::to_string(a) + "," + std::to_string(b) + ")";
          return r;
        }
      }
    }
  return r;
}

AxiomReport Sub2Category::check_associativity() const {
  AxiomReport r;
  const int n = size();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) {
          const int na = hom(a, b).carrier->num_morphisms();
          const int nb = hom(b, c).carrier->num_morphisms();
          const int nc = hom(c, d).carrier->num_morphisms();
          for (int al = 0; al < na; ++al)
            for (int be = 0; be < nb; ++be) {
              const int ab = compose(a, b, c, al, be);
              for (int ga = 0; ga < nc; ++ga) {
                ++r.checked;
                if (compose(a, c, d, ab, ga) != compose(a, b, d, al, compose(b, c, d, be, ga))) {
                  r.ok = false;
                  r.witness = "associativity fails on objects " + std::to_string(a) + std::to_string(b) + std::to_string(c) +
                              std::to_string(d) + " for 2-cells " + hom(a, b).carrier->morphism(al).id + ", " +
                              hom(b, c).carrier->morphism(be).id + ", " + hom(c, d).carrier->morphism(ga).id;
                  return r;
                }
              }
            }
        }
  return r;
}

AxiomReport Sub2Category::check_interchange() const {
  AxiomReport r;
  const int n = size();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        const auto& xy = hom(a, b);
        const auto& yz = hom(b, c);
        const auto& xz = hom(a, c);
        const auto& c1 = *xy.carrier;
        const auto& c2 = *yz.carrier;
        const auto& c3 = *xz.carrier;
        for (int al = 0; al < c1.num_morphisms(); ++al)
          for (int be = 0; be < c2.num_morphisms(); ++be) {
            ++r.checked;
            const auto& ma = c1.morphism(al);
            const auto& mb = c2.morphism(be);
            int one = c3.compose(whisker_post(xy, al, yz, mb.tgt, xz), whisker_pre(xy, ma.src, yz, be, xz));
            int two = c3.compose(whisker_pre(xy, ma.tgt, yz, be, xz), whisker_post(xy, al, yz, mb.src, xz));
            if (one < 0 || one != two) {
              r.ok = false;
              r.witness = "the two whiskering orders differ for " + ma.id + " and " + mb.id;
              return r;
            }
          }
        for (int al = 0; al < c1.num_morphisms(); ++al)
          for (int al2 = 0; al2 < c1.num_morphisms(); ++al2) {
            int alc = c1.compose(al2, al);
            if (alc < 0) continue;
            for (int be = 0; be < c2.num_morphisms(); ++be)
              for (int be2 = 0; be2 < c2.num_morphisms(); ++be2) {
                int bec = c2.compose(be2, be);
                if (bec < 0) continue;
                ++r.checked;
                if (compose(a, b, c, alc, bec) != c3.compose(compose(a, b, c, al2, be2), compose(a, b, c, al, be))) {
                  r.ok = false;
                  r.witness = "interchange fails for " + c1.morphism(al2).id + "∘" + c1.morphism(al).id + " and " +
                              c2.morphism(be2).id + "∘" + c2.morphism(be).id;
                  return r;
                }
              }
          }
      }
  return r;
}

namespace {

int invertible_cell(const fincat::FinCat& c, int from, int to) {
  for (int f : c.hom(from, to))
    if (c.is_iso(f)) return f;
  return -1;
}

template <class Map, class Hom, class Enumerate, class Compose, class Identity, class Describe>
EquivalenceReport search(const Map& f, const Hom& hxx, const Hom& hyy, const Enumerate& candidates, const Compose& comp,
                         const Identity& ident, const Describe& describe) {
  EquivalenceReport r;
  const int idx = hxx.object_of(ident(f.src));
  const int idy = hyy.object_of(ident(f.tgt));
  const auto gs = candidates();
  r.candidates = static_cast<int>(gs.size());
  for (int i = 0; i < r.candidates; ++i) {
    const auto& g = gs[i];
    int unit = invertible_cell(*hxx.carrier, hxx.object_of(comp(g, f)), idx);
    if (unit < 0) continue;
    int counit = invertible_cell(*hyy.carrier, hyy.object_of(comp(f, g)), idy);
    if (counit < 0) continue;
    r.ok = true;
    r.inverse = i;
    r.unit = unit;
    r.counit = counit;
    r.witness = "quasi-inverse " + describe(g) + " with invertible 2-cells " + hxx.carrier->morphism(unit).id + " and " +
                hyy.carrier->morphism(counit).id;
    return r;
  }
  r.witness = "none of the " + std::to_string(r.candidates) + " maps back is a quasi-inverse";
  return r;
}

}  // namespace

EquivalenceReport is_equivalence_2cat(const sset::SSetMap& f, int out_dim) {
  auto hxx = hom_category_qcat(f.src, f.src, out_dim);
  auto hyy = hom_category_qcat(f.tgt, f.tgt, out_dim);
  return search(
      f, hxx, hyy, [&] { return sset::enumerate_maps(f.tgt, f.src); },
      [](const sset::SSetMap& g, const sset::SSetMap& h) { return sset::compose(g, h); },
      [](const sset::SSetPtr& x) { return sset::identity_map(x); },
      [](const sset::SSetMap& g) {
        std::string out = "{";
        for (int v = 0; v < g.src->size(0); ++v) out += (v ? ", " : "") + g.src->name(0, v) + "->" + g.tgt->name(0, g(0, v));
        return out + "}";
      });
}

EquivalenceReport is_equivalence_2cat(const bisset::BiSSetMap& f, int p, int q) {
  auto hxx = hom_category_css(f.src, f.src, p, q);
  auto hyy = hom_category_css(f.tgt, f.tgt, p, q);
  return search(
      f, hxx, hyy, [&] { return bisset::enumerate_maps(f.tgt, f.src); },
      [](const bisset::BiSSetMap& g, const bisset::BiSSetMap& h) { return bisset::compose(g, h); },
      [](const bisset::BiSSetPtr& x) { return bisset::identity_map(x); },
      [](const bisset::BiSSetMap& g) {
        std::string out = "{";
        for (int v = 0; v < g.src->size(0, 0); ++v)
          out += (v ? ", " : "") + g.src->name(0, 0, v) + "->" + g.tgt->name(0, 0, g(0, 0, v));
        return out + "}";
      });
}

}  // namespace segal::bicat
