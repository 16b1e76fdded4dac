#include <algorithm>
#include <sstream>

#include "segal/bisset.hpp"

namespace segal::bisset {

using sset::normalize_degeneracies;
using sset::push_face;

std::string bi_degenerate_name(const std::vector<int>& hword, const std::vector<int>& vword, const std::string& base) {
  if (hword.empty() && vword.empty()) return base;
  std::string s;
  for (int j : hword) s += "sh" + std::to_string(j);
  for (int j : vword) s += "sv" + std::to_string(j);
  return s + "(" + base + ")";
}

std::vector<std::pair<int, int>> bidegree_order(int p, int q) {
  std::vector<std::pair<int, int>> out;
  for (int t = 0; t <= p + q; ++t)
    for (int n = 0; n <= std::min(t, p); ++n)
      if (t - n <= q) out.emplace_back(n, t - n);
  return out;
}

namespace {

const std::vector<int> kEmpty;

std::string face_key(const std::vector<int>& faces) {
  return std::string(reinterpret_cast<const char*>(faces.data()), sizeof(int) * faces.size());
}

}  // namespace

int TruncBiSSet::find(int n, int m, const std::string& nm) const {
  if (!in_window(n, m)) return -1;
  auto it = lookup_[id(n, m)].find(nm);
  return it == lookup_[id(n, m)].end() ? -1 : it->second;
}

int TruncBiSSet::flat_length(int total) const {
  if (total < 0) return 0;
  if (total >= static_cast<int>(total_length_.size())) return total_length_.back();
  return total_length_[total];
}

const std::vector<int>& TruncBiSSet::with_faces(int n, int m, const int* faces) const {
  const int len = (n >= 1 ? n + 1 : 0) + (m >= 1 ? m + 1 : 0);
  std::string key(reinterpret_cast<const char*>(faces), sizeof(int) * static_cast<std::size_t>(len));
  auto it = face_index_[id(n, m)].find(key);
  return it == face_index_[id(n, m)].end() ? kEmpty : it->second;
}

int TruncBiSSet::apply_degeneracies(int n, int m, int s, const std::vector<int>& hw, const std::vector<int>& vw) const {
  for (auto it = vw.rbegin(); it != vw.rend(); ++it) {
    if (m >= q_) throw WindowError("vertical degeneracy leaves the window", "q > " + std::to_string(q_));
    s = vdegen(n, m, s, *it);
    ++m;
  }
  for (auto it = hw.rbegin(); it != hw.rend(); ++it) {
    if (n >= p_) throw WindowError("horizontal degeneracy leaves the window", "p > " + std::to_string(p_));
    s = hdegen(n, m, s, *it);
    ++n;
  }
  return s;
}

int TruncBiSSet::h_vertex(int n, int m, int s, int i) const {
  for (int lev = n; lev > 0; --lev) {
    if (i < lev) {
      s = hface(lev, m, s, lev);
    } else {
      s = hface(lev, m, s, 0);
      --i;
    }
  }
  return s;
}

int TruncBiSSet::v_vertex(int n, int m, int s, int j) const {
  for (int lev = m; lev > 0; --lev) {
    if (j < lev) {
      s = vface(n, lev, s, lev);
    } else {
      s = vface(n, lev, s, 0);
      --j;
    }
  }
  return s;
}

BiExpr TruncBiSSet::expr(int n, int m, int s) const {
  const auto& hw = hword(n, m, s);
  const auto& vw = vword(n, m, s);
  int bn = n - static_cast<int>(hw.size()), bm = m - static_cast<int>(vw.size());
  return BiExpr{hw, vw, name(bn, bm, base(n, m, s))};
}

std::map<std::pair<int, int>, int> TruncBiSSet::counts() const {
  std::map<std::pair<int, int>, int> c;
  for (int n = 0; n <= p_; ++n)
    for (int m = 0; m <= q_; ++m) c[{n, m}] = static_cast<int>(generators(n, m).size());
  return c;
}

Verdict TruncBiSSet::check_identities() const {
  auto fail = [&](int n, int m, int s, const std::string& what) {
    return Verdict{false, "identity " + what + " fails on " + name(n, m, s) + " at (" + std::to_string(n) + "," +
                              std::to_string(m) + ")"};
  };
  auto str = [](const char* op, int i) { return std::string(op) + std::to_string(i); };
  for (int n = 0; n <= p_; ++n)
    for (int m = 0; m <= q_; ++m)
      for (int s = 0; s < size(n, m); ++s) {
        // d d identities in each direction
        for (int j = 1; j <= n; ++j)
          for (int i = 0; i < j && n >= 2; ++i)
            if (hface(n - 1, m, hface(n, m, s, j), i) != hface(n - 1, m, hface(n, m, s, i), j - 1))
              return fail(n, m, s, str("dh", i) + str("dh", j));
        for (int j = 1; j <= m; ++j)
          for (int i = 0; i < j && m >= 2; ++i)
            if (vface(n, m - 1, vface(n, m, s, j), i) != vface(n, m - 1, vface(n, m, s, i), j - 1))
              return fail(n, m, s, str("dv", i) + str("dv", j));
        // mixed faces
        if (n >= 1 && m >= 1)
          for (int i = 0; i <= n; ++i)
            for (int j = 0; j <= m; ++j)
              if (hface(n, m - 1, vface(n, m, s, j), i) != vface(n - 1, m, hface(n, m, s, i), j))
                return fail(n, m, s, str("dh", i) + str("dv", j) + " = " + str("dv", j) + str("dh", i));
        // d s identities in each direction
        if (n < p_)
          for (int j = 0; j <= n; ++j) {
            int t = hdegen(n, m, s, j);
            for (int i = 0; i <= n + 1; ++i) {
              int rhs = i < j ? hdegen(n - 1, m, hface(n, m, s, i), j - 1)
                        : (i == j || i == j + 1) ? s
                                                 : hdegen(n - 1, m, hface(n, m, s, i - 1), j);
              if (hface(n + 1, m, t, i) != rhs) return fail(n, m, s, str("dh", i) + str("sh", j));
            }
            if (n + 1 < p_)
              for (int i = 0; i <= j; ++i)
                if (hdegen(n + 1, m, t, i) != hdegen(n + 1, m, hdegen(n, m, s, i), j + 1))
                  return fail(n, m, s, str("sh", i) + str("sh", j));
            if (m >= 1)
              for (int i = 0; i <= m; ++i)
                if (vface(n + 1, m, t, i) != hdegen(n, m - 1, vface(n, m, s, i), j))
                  return fail(n, m, s, str("dv", i) + str("sh", j) + " = " + str("sh", j) + str("dv", i));
            if (m < q_)
              for (int i = 0; i <= m; ++i)
                if (vdegen(n + 1, m, t, i) != hdegen(n, m + 1, vdegen(n, m, s, i), j))
                  return fail(n, m, s, str("sv", i) + str("sh", j) + " = " + str("sh", j) + str("sv", i));
          }
        if (m < q_)
          for (int j = 0; j <= m; ++j) {
            int t = vdegen(n, m, s, j);
            for (int i = 0; i <= m + 1; ++i) {
              int rhs = i < j ? vdegen(n, m - 1, vface(n, m, s, i), j - 1)
                        : (i == j || i == j + 1) ? s
                                                 : vdegen(n, m - 1, vface(n, m, s, i - 1), j);
              if (vface(n, m + 1, t, i) != rhs) return fail(n, m, s, str("dv", i) + str("sv", j));
            }
            if (m + 1 < q_)
              for (int i = 0; i <= j; ++i)
                if (vdegen(n, m + 1, t, i) != vdegen(n, m + 1, vdegen(n, m, s, i), j + 1))
                  return fail(n, m, s, str("sv", i) + str("sv", j));
            if (n >= 1)
              for (int i = 0; i <= n; ++i)
                if (hface(n, m + 1, t, i) != vdegen(n - 1, m, hface(n, m, s, i), j))
                  return fail(n, m, s, str("dh", i) + str("sv", j) + " = " + str("sv", j) + str("dh", i));
          }
      }
  return {true, ""};
}

void TruncBiSSet::finalize() {
  const int ids = (p_ + 1) * (q_ + 1);
  gens_.assign(ids, {});
  genpos_.assign(ids, {});
  lookup_.assign(ids, {});
  face_index_.assign(ids, {});
  flat_offset_.assign(ids, 0);
  total_length_.assign(p_ + q_ + 1, 0);
  for (int n = 0; n <= p_; ++n)
    for (int m = 0; m <= q_; ++m) {
      const int b = id(n, m);
      genpos_[b].assign(size(n, m), -1);
      for (int s = 0; s < size(n, m); ++s) {
        if (!is_degenerate(n, m, s)) {
          genpos_[b][s] = static_cast<int>(gens_[b].size());
          gens_[b].push_back(s);
        }
        lookup_[b].emplace(name_[b][s], s);
      }
      if (n + m > 0) {
        auto& idx = face_index_[b];
        idx.reserve(static_cast<std::size_t>(size(n, m)));
        std::vector<int> faces;
        for (int s = 0; s < size(n, m); ++s) {
          faces.clear();
          if (n >= 1)
            for (int i = 0; i <= n; ++i) faces.push_back(hface(n, m, s, i));
          if (m >= 1)
            for (int i = 0; i <= m; ++i) faces.push_back(vface(n, m, s, i));
          idx[face_key(faces)].push_back(s);
        }
      }
    }
  int offset = 0;
  for (auto [n, m] : bidegree_order(p_, q_)) {
    flat_offset_[id(n, m)] = offset;
    offset += static_cast<int>(gens_[id(n, m)].size());
    total_length_[n + m] = offset;
  }
}

TruncBiSSet TruncBiSSet::from_model(int p, int q, const SizeFn& size, const OpFn& hface, const OpFn& vface,
                                    const OpFn& hdegen, const OpFn& vdegen,
                                    const std::function<std::string(int, int, int)>& name) {
  if (p < 0 || q < 0) throw Error("window must be non-negative");
  TruncBiSSet x;
  x.p_ = p;
  x.q_ = q;
  const int ids = (p + 1) * (q + 1);
  x.hface_.assign(ids, {});
  x.vface_.assign(ids, {});
  x.hdegen_.assign(ids, {});
  x.vdegen_.assign(ids, {});
  x.hword_.assign(ids, {});
  x.vword_.assign(ids, {});
  x.base_.assign(ids, {});
  x.name_.assign(ids, {});
  for (int n = 0; n <= p; ++n)
    for (int m = 0; m <= q; ++m) {
      const int b = x.id(n, m);
      const int cnt = size(n, m);
      x.base_[b].assign(cnt, -1);
      x.hword_[b].assign(cnt, {});
      x.vword_[b].assign(cnt, {});
      x.name_[b].assign(cnt, {});
      auto fill = [&](std::vector<int>& tab, int arity, const OpFn& op) {
        tab.resize(static_cast<std::size_t>(cnt) * arity);
        for (int s = 0; s < cnt; ++s)
          for (int i = 0; i < arity; ++i) tab[static_cast<std::size_t>(s) * arity + i] = op(n, m, s, i);
      };
      if (n >= 1) fill(x.hface_[b], n + 1, hface);
      if (m >= 1) fill(x.vface_[b], m + 1, vface);
      if (n < p) fill(x.hdegen_[b], n + 1, hdegen);
      if (m < q) fill(x.vdegen_[b], m + 1, vdegen);
    }
  // Eilenberg–Zilber decomposition: horizontal first, then vertical.
  for (int n = 0; n <= p; ++n)
    for (int m = 0; m <= q; ++m) {
      const int b = x.id(n, m);
      const int cnt = x.size(n, m);
      std::vector<int> hfrom(cnt, -1), hvia(cnt, -1), vfrom(cnt, -1), vvia(cnt, -1);
      if (n >= 1)
        for (int t = 0; t < x.size(n - 1, m); ++t)
          for (int j = 0; j < n; ++j) {
            int s = x.hdegen(n - 1, m, t, j);
            if (hfrom[s] < 0) {
              hfrom[s] = t;
              hvia[s] = j;
            }
          }
      if (m >= 1)
        for (int t = 0; t < x.size(n, m - 1); ++t)
          for (int j = 0; j < m; ++j) {
            int s = x.vdegen(n, m - 1, t, j);
            if (vfrom[s] < 0) {
              vfrom[s] = t;
              vvia[s] = j;
            }
          }
      for (int s = 0; s < cnt; ++s) {
        if (hfrom[s] >= 0) {
          int t = hfrom[s];
          std::vector<int> w{hvia[s]};
          const auto& wt = x.hword(n - 1, m, t);
          w.insert(w.end(), wt.begin(), wt.end());
          x.hword_[b][s] = normalize_degeneracies(w);
          x.vword_[b][s] = x.vword(n - 1, m, t);
          x.base_[b][s] = x.base(n - 1, m, t);
        } else if (vfrom[s] >= 0) {
          int t = vfrom[s];
          std::vector<int> w{vvia[s]};
          const auto& wt = x.vword(n, m - 1, t);
          w.insert(w.end(), wt.begin(), wt.end());
          x.vword_[b][s] = normalize_degeneracies(w);
          x.base_[b][s] = x.base(n, m - 1, t);
        } else {
          x.base_[b][s] = s;
          x.name_[b][s] = name(n, m, s);
        }
      }
      for (int s = 0; s < cnt; ++s)
        if (x.is_degenerate(n, m, s)) {
          const auto& hw = x.hword_[b][s];
          const auto& vw = x.vword_[b][s];
          int bn = n - static_cast<int>(hw.size()), bm = m - static_cast<int>(vw.size());
          x.name_[b][s] = bi_degenerate_name(hw, vw, x.name(bn, bm, x.base_[b][s]));
        }
    }
  x.finalize();
  return x;
}

TruncBiSSet from_presentation(const Presentation& pr, int p, int q) {
  if (p < 0) p = pr.p;
  if (q < 0) q = pr.q;
  std::map<std::string, std::pair<int, int>> gen_at;
  for (const auto& [deg, names] : pr.gens) {
    auto [n, m] = deg;
    if (n < 0 || m < 0 || n > pr.p || m > pr.q) throw Error("generator bidegree outside the window");
    for (const auto& g : names)
      if (!gen_at.emplace(g, deg).second) throw Error("duplicate generator " + g);
  }
  auto check_faces = [&](const std::map<std::string, std::vector<BiExpr>>& table, bool horizontal) {
    const char* dir = horizontal ? "horizontal" : "vertical";
    for (const auto& [g, at] : gen_at) {
      int deg = horizontal ? at.first : at.second;
      auto it = table.find(g);
      if (deg == 0) {
        if (it != table.end() && !it->second.empty()) throw Error(std::string(dir) + " faces given for " + g + " in degree 0");
        continue;
      }
      int have = it == table.end() ? 0 : static_cast<int>(it->second.size());
      if (have != deg + 1) throw Error("generator " + g + " is missing " + dir + " face " + std::to_string(have));
      for (int i = 0; i <= deg; ++i) {
        const auto& e = it->second[i];
        auto b = gen_at.find(e.base);
        if (b == gen_at.end()) throw Error(std::string(dir) + " face " + std::to_string(i) + " of " + g + " names unknown generator " + e.base);
        int tn = at.first - (horizontal ? 1 : 0), tm = at.second - (horizontal ? 0 : 1);
        if (b->second.first + static_cast<int>(e.hword.size()) != tn || b->second.second + static_cast<int>(e.vword.size()) != tm)
          throw Error(std::string(dir) + " face " + std::to_string(i) + " of " + g + " has the wrong bidegree");
        if (!sset::word_valid(e.hword, b->second.first) || !sset::word_valid(e.vword, b->second.second))
          throw Error(std::string(dir) + " face " + std::to_string(i) + " of " + g + " is not in normal form");
      }
    }
    for (const auto& [g, fs] : table)
      if (!gen_at.count(g)) throw Error(std::string(dir) + " faces given for unknown generator " + g);
  };
  check_faces(pr.hfaces, true);
  check_faces(pr.vfaces, false);

  struct Simplex {
    std::vector<int> hw, vw;
    std::string gen;
  };
  const int ids = (p + 1) * (q + 1);
  std::vector<std::vector<Simplex>> cells(ids);
  std::vector<std::unordered_map<std::string, int>> index(ids);
  auto bid = [&](int n, int m) { return n * (q + 1) + m; };
  for (int n = 0; n <= p; ++n)
    for (int m = 0; m <= q; ++m) {
      auto& lst = cells[bid(n, m)];
      for (int gn = std::min(n, pr.p); gn >= 0; --gn)
        for (int gm = std::min(m, pr.q); gm >= 0; --gm) {
          auto it = pr.gens.find({gn, gm});
          if (it == pr.gens.end()) continue;
          auto hws = gn == n ? std::vector<std::vector<int>>{{}} : sset::degeneracy_words(n - gn, gn);
          auto vws = gm == m ? std::vector<std::vector<int>>{{}} : sset::degeneracy_words(m - gm, gm);
          for (auto& hw : hws)
            for (auto& vw : vws)
              for (auto& g : it->second) lst.push_back({hw, vw, g});
        }
      for (int s = 0; s < static_cast<int>(lst.size()); ++s)
        index[bid(n, m)][bi_degenerate_name(lst[s].hw, lst[s].vw, lst[s].gen)] = s;
    }
  auto locate = [&](int n, int m, const std::vector<int>& hw, const std::vector<int>& vw, const std::string& g) {
    auto it = index[bid(n, m)].find(bi_degenerate_name(hw, vw, g));
    if (it == index[bid(n, m)].end()) throw Error("internal: bisimplex " + bi_degenerate_name(hw, vw, g) + " not enumerated");
    return it->second;
  };
  auto face_of = [&](bool horizontal, int n, int m, int s, int i) {
    const auto& sx = cells[bid(n, m)][s];
    const auto& own = horizontal ? sx.hw : sx.vw;
    const auto& other = horizontal ? sx.vw : sx.hw;
    std::vector<int> prefix, rest;
    int fi = push_face(i, own, prefix, rest);
    int tn = n - (horizontal ? 1 : 0), tm = m - (horizontal ? 0 : 1);
    if (fi < 0) {
      prefix.insert(prefix.end(), rest.begin(), rest.end());
      auto w = normalize_degeneracies(prefix);
      return horizontal ? locate(tn, tm, w, other, sx.gen) : locate(tn, tm, other, w, sx.gen);
    }
    const auto& e = (horizontal ? pr.hfaces : pr.vfaces).at(sx.gen)[fi];
    const auto& e_own = horizontal ? e.hword : e.vword;
    const auto& e_other = horizontal ? e.vword : e.hword;
    prefix.insert(prefix.end(), e_own.begin(), e_own.end());
    std::vector<int> o = other;
    o.insert(o.end(), e_other.begin(), e_other.end());
    auto w = normalize_degeneracies(prefix);
    auto ow = normalize_degeneracies(o);
    return horizontal ? locate(tn, tm, w, ow, e.base) : locate(tn, tm, ow, w, e.base);
  };
  auto degen_of = [&](bool horizontal, int n, int m, int s, int j) {
    const auto& sx = cells[bid(n, m)][s];
    std::vector<int> w{j};
    const auto& own = horizontal ? sx.hw : sx.vw;
    w.insert(w.end(), own.begin(), own.end());
    w = normalize_degeneracies(w);
    return horizontal ? locate(n + 1, m, w, sx.vw, sx.gen) : locate(n, m + 1, sx.hw, w, sx.gen);
  };
  TruncBiSSet x = TruncBiSSet::from_model(
      p, q, [&](int n, int m) { return static_cast<int>(cells[bid(n, m)].size()); },
      [&](int n, int m, int s, int i) { return face_of(true, n, m, s, i); },
      [&](int n, int m, int s, int i) { return face_of(false, n, m, s, i); },
      [&](int n, int m, int s, int j) { return degen_of(true, n, m, s, j); },
      [&](int n, int m, int s, int j) { return degen_of(false, n, m, s, j); },
      [&](int n, int m, int s) { return cells[bid(n, m)][s].gen; });
  // Identities on generators.
  auto op = [](const char* o, int i) { return std::string(o) + std::to_string(i); };
  for (int n = 0; n <= std::min(p, pr.p); ++n)
    for (int m = 0; m <= std::min(q, pr.q); ++m)
      for (int s : x.generators(n, m)) {
        const auto& g = x.name(n, m, s);
        for (int j = 1; j <= n && n >= 2; ++j)
          for (int i = 0; i < j; ++i)
            if (x.hface(n - 1, m, x.hface(n, m, s, j), i) != x.hface(n - 1, m, x.hface(n, m, s, i), j - 1))
              throw Error("identity " + op("dh", i) + op("dh", j) + " = " + op("dh", j - 1) + op("dh", i) + " fails on generator " + g);
        for (int j = 1; j <= m && m >= 2; ++j)
          for (int i = 0; i < j; ++i)
            if (x.vface(n, m - 1, x.vface(n, m, s, j), i) != x.vface(n, m - 1, x.vface(n, m, s, i), j - 1))
              throw Error("identity " + op("dv", i) + op("dv", j) + " = " + op("dv", j - 1) + op("dv", i) + " fails on generator " + g);
        if (n >= 1 && m >= 1)
          for (int i = 0; i <= n; ++i)
            for (int j = 0; j <= m; ++j)
              if (x.hface(n, m - 1, x.vface(n, m, s, j), i) != x.vface(n - 1, m, x.hface(n, m, s, i), j))
                throw Error("mixed identity " + op("dh", i) + op("dv", j) + " = " + op("dv", j) + op("dh", i) +
                            " fails on generator " + g);
      }
  return x;
}

Presentation presentation_of(const TruncBiSSet& x) {
  Presentation pr;
  pr.p = x.p();
  pr.q = x.q();
  for (int n = 0; n <= x.p(); ++n)
    for (int m = 0; m <= x.q(); ++m) {
      if (x.generators(n, m).empty()) continue;
      auto& names = pr.gens[{n, m}];
      for (int s : x.generators(n, m)) {
        const auto& g = x.name(n, m, s);
        names.push_back(g);
        if (n >= 1)
          for (int i = 0; i <= n; ++i) pr.hfaces[g].push_back(x.expr(n - 1, m, x.hface(n, m, s, i)));
        if (m >= 1)
          for (int i = 0; i <= m; ++i) pr.vfaces[g].push_back(x.expr(n, m - 1, x.vface(n, m, s, i)));
      }
    }
  return pr;
}

std::string write_bisset(const TruncBiSSet& x) {
  std::ostringstream out;
  out << "window " << x.p() << ' ' << x.q() << '\n';
  auto pr = presentation_of(x);
  for (const auto& [deg, names] : pr.gens)
    for (const auto& g : names) out << "gen " << deg.first << ' ' << deg.second << ' ' << g << '\n';
  auto emit = [&](const char* kw, const std::map<std::string, std::vector<BiExpr>>& table) {
    for (const auto& [deg, names] : pr.gens)
      for (const auto& g : names) {
        auto it = table.find(g);
        if (it == table.end()) continue;
        for (std::size_t i = 0; i < it->second.size(); ++i) {
          const auto& e = it->second[i];
          out << kw << ' ' << g << ' ' << i << " = [";
          bool first = true;
          for (int j : e.hword) {
            out << (first ? "" : " ") << 'h' << j;
            first = false;
          }
          for (int j : e.vword) {
            out << (first ? "" : " ") << 'v' << j;
            first = false;
          }
          out << "] " << e.base << '\n';
        }
      }
  };
  emit("hface", pr.hfaces);
  emit("vface", pr.vfaces);
  return out.str();
}

TruncBiSSet truncate(const TruncBiSSet& x, int p, int q) {
  if (p > x.p() || q > x.q() || p < 0 || q < 0) throw Error("cannot truncate to a larger window");
  TruncBiSSet t = TruncBiSSet::from_model(
      p, q, [&](int n, int m) { return x.size(n, m); },
      [&](int n, int m, int s, int i) { return x.hface(n, m, s, i); },
      [&](int n, int m, int s, int i) { return x.vface(n, m, s, i); },
      [&](int n, int m, int s, int j) { return x.hdegen(n, m, s, j); },
      [&](int n, int m, int s, int j) { return x.vdegen(n, m, s, j); },
      [&](int n, int m, int s) { return x.name(n, m, s); });
  t.set_coskeletal(x.coskeletal_level(), x.determined_level());
  return t;
}

TruncBiSSet fit_to(const TruncBiSSet& x, int p, int q) {
  if (p == x.p() && q == x.q()) return x;
  if (p <= x.p() && q <= x.q()) return truncate(x, p, q);
  const int P = std::max(p, x.p()), Q = std::max(q, x.q());
  TruncBiSSet e = from_presentation(presentation_of(x), P, Q);
  // Keep the order of x inside its own window.
  const int ids = (P + 1) * (Q + 1);
  std::vector<std::vector<int>> to_new(ids), to_old(ids);
  auto bid = [&](int n, int m) { return n * (Q + 1) + m; };
  for (int n = 0; n <= P; ++n)
    for (int m = 0; m <= Q; ++m) {
      auto& tn = to_new[bid(n, m)];
      auto& to = to_old[bid(n, m)];
      tn.resize(e.size(n, m));
      to.resize(e.size(n, m));
      for (int s = 0; s < e.size(n, m); ++s) {
        int t = x.in_window(n, m) ? x.find(n, m, e.name(n, m, s)) : s;
        if (t < 0) throw Error("internal: skeletal extension lost bisimplex " + e.name(n, m, s));
        tn[s] = t;
        to[t] = s;
      }
    }
  TruncBiSSet ext = TruncBiSSet::from_model(
      P, Q, [&](int n, int m) { return e.size(n, m); },
      [&](int n, int m, int s, int i) { return to_new[bid(n - 1, m)][e.hface(n, m, to_old[bid(n, m)][s], i)]; },
      [&](int n, int m, int s, int i) { return to_new[bid(n, m - 1)][e.vface(n, m, to_old[bid(n, m)][s], i)]; },
      [&](int n, int m, int s, int j) { return to_new[bid(n + 1, m)][e.hdegen(n, m, to_old[bid(n, m)][s], j)]; },
      [&](int n, int m, int s, int j) { return to_new[bid(n, m + 1)][e.vdegen(n, m, to_old[bid(n, m)][s], j)]; },
      [&](int n, int m, int s) { return e.name(n, m, to_old[bid(n, m)][s]); });
  return (P == p && Q == q) ? ext : truncate(ext, p, q);
}

}  // namespace segal::bisset
