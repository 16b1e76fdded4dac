#include <algorithm>

#include "segal/bisset.hpp"

namespace segal::bisset {

namespace {

std::string window_str(int p, int q) { return "(" + std::to_string(p) + "," + std::to_string(q) + ")"; }

}  // namespace

MappingSpace mv_data(const sset::SSetPtr& a, const TruncBiSSet& z) {
  if (a->dim() > z.p())
    throw WindowError("mapping space needs the horizontal window to cover the source",
                      "p >= " + std::to_string(a->dim()));
  MappingSpace out;
  for (int m = 0; m <= z.q(); ++m) {
    out.rows.push_back(sset::share(row(z, m)));
    out.maps.push_back(sset::map_set(a, out.rows.back()));
  }
  const int len = out.maps[0].key_length();
  for (const auto& ms : out.maps)
    if (ms.key_length() != len) throw Error("internal: rows disagree on the key level");
  const int level = out.maps[0].level;
  // Postcomposition with a vertical operator acts entrywise on the keys.
  auto act = [&](int m_from, int m_to, int f, const std::function<int(int, int)>& op) {
    auto flat = out.maps[m_from].images(f);
    for (int k = 0, pos = 0; k <= level; ++k)
      for (std::size_t g = 0; g < a->generators(k).size(); ++g, ++pos) flat[pos] = op(k, flat[pos]);
    int t = out.maps[m_to].find(flat);
    if (t < 0) throw Error("internal: postcomposite missing from the mapping space");
    return t;
  };
  std::vector<int> sizes;
  for (auto& ms : out.maps) sizes.push_back(ms.size());
  auto name = [&](int m, int f) {
    const auto& ms = out.maps[m];
    if (ms.key_length() > 16) return "m" + std::to_string(m) + "_" + std::to_string(f);
    auto flat = ms.images(f);
    std::string s = "<";
    for (int k = 0, pos = 0; k <= level; ++k)
      for (std::size_t g = 0; g < a->generators(k).size(); ++g, ++pos)
        s += (pos ? "," : "") + out.rows[m]->name(k, flat[pos]);
    return s + ">";
  };
  out.object = sset::TruncSSet::from_model(
      z.q(), sizes,
      [&](int m, int f, int i) { return act(m, m - 1, f, [&](int k, int t) { return z.vface(k, m, t, i); }); },
      [&](int m, int f, int j) { return act(m, m + 1, f, [&](int k, int t) { return z.vdegen(k, m, t, j); }); },
      name);
  out.object.set_coskeletal(z.coskeletal_level(), z.determined_level());
  return out;
}

sset::TruncSSet mv(const sset::SSetPtr& a, const TruncBiSSet& z) { return mv_data(a, z).object; }

sset::TruncSSet mh(const sset::SSetPtr& a, const TruncBiSSet& z) { return mv_data(a, transpose(z)).object; }

BiExponential exponential_data(const BiSSetPtr& x, const BiSSetPtr& y, int p, int q) {
  BiExponential ex;
  ex.x = x;
  ex.y = y;
  ex.p = p;
  ex.q = q;
  const int c = y->coskeletal_level();
  const bool cosk = c >= 0 && c <= std::min(y->p(), y->q());
  if (!cosk && (y->p() < p + x->p() || y->q() < q + x->q()))
    throw WindowError("exponential window is insufficient", "target window >= " + window_str(p + x->p(), q + x->q()));
  auto build = [&](int n, int top, int xd, int ydim) {
    int b = n + xd + (n < top ? 1 : 0);
    if (cosk) b = std::min(b, c);
    return std::min(b, ydim);
  };
  std::vector<int> bh(p + 1), bv(q + 1);
  for (int n = 0; n <= p; ++n) bh[n] = build(n, p, x->p(), y->p());
  for (int m = 0; m <= q; ++m) bv[m] = build(m, q, x->q(), y->q());
  // Standard simplices per output degree, each at the build level it needs.
  std::vector<sset::TruncSSet> hs, vs;
  for (int n = 0; n <= p; ++n) hs.push_back(sset::standard_simplex(n, bh[n]));
  for (int m = 0; m <= q; ++m) vs.push_back(sset::standard_simplex(m, bv[m]));
  std::vector<sset::VertexIndex> hidx, vidx;
  for (auto& s : hs) hidx.emplace_back(s);
  for (auto& s : vs) vidx.emplace_back(s);
  const auto id = [&](int n, int m) { return static_cast<std::size_t>(n) * (q + 1) + m; };
  ex.sources.resize(static_cast<std::size_t>(p + 1) * (q + 1));
  ex.maps.resize(ex.sources.size());
  for (int n = 0; n <= p; ++n)
    for (int m = 0; m <= q; ++m) {
      auto xs = fit_to(*x, bh[n], bv[m]);
      ex.sources[id(n, m)] = share(product(box(hs[n], vs[m]), xs));
      ex.maps[id(n, m)] = map_set(ex.sources[id(n, m)], y);
    }
  // Precomposition along (alpha ⊠ beta) × id for vertex maps alpha, beta.
  auto table = [&](int fn, int fm, int tn, int tm, const std::function<int(int)>& ha, const std::function<int(int)>& va) {
    const auto& from = ex.maps[id(fn, fm)];
    const auto& to = ex.maps[id(tn, tm)];
    const auto& src_to = *to.src;
    auto phi = [&](int h, int v, int s) {
      int boxsize = hs[tn].size(h) * vs[tm].size(v);
      int xk = src_to.size(h, v) / boxsize;
      int bx = s / xk, xr = s % xk;
      int a = bx / vs[tm].size(v), b = bx % vs[tm].size(v);
      auto av = hidx[tn].vertices(h, a);
      for (auto& t : av) t = ha(t);
      auto bvv = vidx[tm].vertices(v, b);
      for (auto& t : bvv) t = va(t);
      int a2 = hidx[fn].find(av), b2 = vidx[fm].find(bvv);
      return (a2 * vs[fm].size(v) + b2) * xk + xr;
    };
    auto plan = make_precompose_plan(from, to, phi);
    std::vector<int> tab(from.size());
    for (int f = 0; f < from.size(); ++f) tab[f] = precompose(from, f, to, plan);
    return tab;
  };
  auto same = [](int v) { return v; };
  auto face_vm = [](int i) { return [i](int v) { return v < i ? v : v + 1; }; };
  auto degen_vm = [](int j) { return [j](int v) { return v <= j ? v : v - 1; }; };
  std::vector<std::vector<std::vector<int>>> hf(ex.maps.size()), vf(ex.maps.size()), hd(ex.maps.size()), vd(ex.maps.size());
  for (int n = 0; n <= p; ++n)
    for (int m = 0; m <= q; ++m) {
      for (int i = 0; n >= 1 && i <= n; ++i) hf[id(n, m)].push_back(table(n, m, n - 1, m, face_vm(i), same));
      for (int i = 0; m >= 1 && i <= m; ++i) vf[id(n, m)].push_back(table(n, m, n, m - 1, same, face_vm(i)));
      for (int j = 0; n < p && j <= n; ++j) hd[id(n, m)].push_back(table(n, m, n + 1, m, degen_vm(j), same));
      for (int j = 0; m < q && j <= m; ++j) vd[id(n, m)].push_back(table(n, m, n, m + 1, same, degen_vm(j)));
    }
  auto name = [&](int n, int m, int f) {
    const auto& ms = ex.maps[id(n, m)];
    if (ms.key_length() > 16) return "m" + std::to_string(n) + "_" + std::to_string(m) + "_" + std::to_string(f);
    auto flat = ms.images(f);
    const auto& src = *ms.src;
    std::string out = "<";
    int pos = 0;
    for (auto [h, v] : bidegree_order(src.p(), src.q())) {
      if (h + v > ms.level) continue;
      for (std::size_t g = 0; g < src.generators(h, v).size(); ++g, ++pos)
        out += (pos ? "," : "") + y->name(h, v, flat[src.flat_offset(h, v) + static_cast<int>(g)]);
    }
    return out + ">";
  };
  ex.object = TruncBiSSet::from_model(
      p, q, [&](int n, int m) { return ex.maps[id(n, m)].size(); },
      [&](int n, int m, int s, int i) { return hf[id(n, m)][i][s]; },
      [&](int n, int m, int s, int i) { return vf[id(n, m)][i][s]; },
      [&](int n, int m, int s, int j) { return hd[id(n, m)][j][s]; },
      [&](int n, int m, int s, int j) { return vd[id(n, m)][j][s]; }, name);
  ex.object.set_coskeletal(y->coskeletal_level(), y->determined_level());
  return ex;
}

TruncBiSSet exponential_bisset(const BiSSetPtr& x, const BiSSetPtr& y, int p, int q) {
  return exponential_data(x, y, p, q).object;
}

}  // namespace segal::bisset
