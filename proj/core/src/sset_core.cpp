#include <algorithm>
#include <cstring>
#include <set>
#include <sstream>

#include "segal/sset.hpp"

namespace segal::sset {

std::vector<int> normalize_degeneracies(std::vector<int> w) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t t = 0; t + 1 < w.size(); ++t) {
      if (w[t] <= w[t + 1]) {
        int i = w[t], j = w[t + 1];
        w[t] = j + 1;
        w[t + 1] = i;
        changed = true;
      }
    }
  }
  return w;
}

int push_face(int i, const std::vector<int>& word, std::vector<int>& prefix, std::vector<int>& rest) {
  prefix.clear();
  rest.clear();
  for (std::size_t t = 0; t < word.size(); ++t) {
    int j = word[t];
    if (i < j) {
      prefix.push_back(j - 1);
    } else if (i == j || i == j + 1) {
      rest.assign(word.begin() + static_cast<long>(t) + 1, word.end());
      return -1;
    } else {
      prefix.push_back(j);
      --i;
    }
  }
  return i;
}

std::string degenerate_name(const std::vector<int>& word, const std::string& base) {
  if (word.empty()) return base;
  std::string s;
  for (int j : word) s += "s" + std::to_string(j);
  return s + "(" + base + ")";
}

namespace {

std::string face_key(const int* faces, int n) {
  return std::string(reinterpret_cast<const char*>(faces), sizeof(int) * static_cast<std::size_t>(n));
}

const std::vector<int> kEmpty;

}  // namespace

// Largest admissible index per position so that the word applies to a
// simplex at `base_level`.
bool word_valid(const std::vector<int>& w, int base_level) {
  for (std::size_t t = 0; t < w.size(); ++t) {
    int applies_to = base_level + static_cast<int>(w.size() - 1 - t);
    if (w[t] < 0 || w[t] > applies_to) return false;
    if (t + 1 < w.size() && w[t] <= w[t + 1]) return false;
  }
  return true;
}

namespace {

void words_rec(int len, int maxv, std::vector<int>& cur, std::vector<std::vector<int>>& out, int base_level) {
  if (static_cast<int>(cur.size()) == len) {
    if (word_valid(cur, base_level)) out.push_back(cur);
    return;
  }
  for (int v = maxv; v >= 0; --v) {
    if (!cur.empty() && v >= cur.back()) continue;
    cur.push_back(v);
    words_rec(len, maxv, cur, out, base_level);
    cur.pop_back();
  }
}

}  // namespace

std::vector<std::vector<int>> degeneracy_words(int len, int base_level) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  words_rec(len, base_level + len - 1, cur, out, base_level);
  return out;
}

int TruncSSet::find(int k, const std::string& name) const {
  if (k < 0 || k > dim_) return -1;
  auto it = lookup_[k].find(name);
  return it == lookup_[k].end() ? -1 : it->second;
}

const std::vector<int>& TruncSSet::with_faces(int k, const int* faces) const {
  auto it = face_index_[k].find(face_key(faces, k + 1));
  return it == face_index_[k].end() ? kEmpty : it->second;
}

int TruncSSet::vertex(int k, int s, int i) const {
  int lev = k, idx = i;
  while (lev > 0) {
    if (idx < lev) {
      s = face(lev, s, lev);
    } else {
      s = face(lev, s, 0);
      --idx;
    }
    --lev;
  }
  return s;
}

int TruncSSet::apply_degeneracies(int k, int s, const std::vector<int>& word) const {
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    if (k >= dim_) throw WindowError("degeneracy leaves the truncation", "dim > " + std::to_string(dim_));
    s = degen(k, s, *it);
    ++k;
  }
  return s;
}

DegenerateExpr TruncSSet::expr(int k, int s) const {
  int bl = k - static_cast<int>(word_[k][s].size());
  return DegenerateExpr{word_[k][s], name_[bl][base_[k][s]]};
}

std::vector<int> TruncSSet::counts() const {
  std::vector<int> c;
  for (int k = 0; k <= dim_; ++k) c.push_back(static_cast<int>(gens_[k].size()));
  return c;
}

Verdict TruncSSet::check_identities() const {
  auto fail = [&](int k, int s, const std::string& what) {
    return Verdict{false, "identity " + what + " fails on " + name_[k][s] + " at level " + std::to_string(k)};
  };
  for (int k = 2; k <= dim_; ++k)
    for (int s = 0; s < size(k); ++s)
      for (int j = 1; j <= k; ++j)
        for (int i = 0; i < j; ++i)
          if (face(k - 1, face(k, s, j), i) != face(k - 1, face(k, s, i), j - 1))
            return fail(k, s, "d" + std::to_string(i) + "d" + std::to_string(j));
  for (int k = 0; k < dim_; ++k)
    for (int s = 0; s < size(k); ++s)
      for (int j = 0; j <= k; ++j) {
        int t = degen(k, s, j);
        for (int i = 0; i <= k + 1; ++i) {
          int lhs = face(k + 1, t, i);
          int rhs;
          if (i < j)
            rhs = degen(k - 1, face(k, s, i), j - 1);
          else if (i == j || i == j + 1)
            rhs = s;
          else
            rhs = degen(k - 1, face(k, s, i - 1), j);
          if (lhs != rhs) return fail(k, s, "d" + std::to_string(i) + "s" + std::to_string(j));
        }
        if (k + 1 < dim_)
          for (int i = 0; i <= j; ++i)
            if (degen(k + 1, t, i) != degen(k + 1, degen(k, s, i), j + 1))
              return fail(k, s, "s" + std::to_string(i) + "s" + std::to_string(j));
      }
  return {true, ""};
}

void TruncSSet::finalize() {
  gens_.assign(dim_ + 1, {});
  genpos_.assign(dim_ + 1, {});
  lookup_.assign(dim_ + 1, {});
  face_index_.assign(dim_ + 1, {});
  gen_offset_.assign(dim_ + 2, 0);
  for (int k = 0; k <= dim_; ++k) {
    genpos_[k].assign(size(k), -1);
    for (int s = 0; s < size(k); ++s) {
      if (word_[k][s].empty()) {
        genpos_[k][s] = static_cast<int>(gens_[k].size());
        gens_[k].push_back(s);
      }
      lookup_[k].emplace(name_[k][s], s);
    }
    gen_offset_[k + 1] = gen_offset_[k] + static_cast<int>(gens_[k].size());
    if (k >= 1) {
      auto& idx = face_index_[k];
      idx.reserve(static_cast<std::size_t>(size(k)));
      for (int s = 0; s < size(k); ++s)
        idx[face_key(&face_[k][static_cast<std::size_t>(s) * (k + 1)], k + 1)].push_back(s);
    }
  }
}

TruncSSet TruncSSet::from_model(int dim, const std::vector<int>& sizes, const std::function<int(int, int, int)>& face,
                                const std::function<int(int, int, int)>& degen,
                                const std::function<std::string(int, int)>& name) {
  TruncSSet x;
  x.dim_ = dim;
  x.face_.assign(dim + 1, {});
  x.degen_.assign(dim + 1, {});
  x.word_.assign(dim + 1, {});
  x.base_.assign(dim + 1, {});
  x.name_.assign(dim + 1, {});
  for (int k = 0; k <= dim; ++k) {
    const int n = sizes[k];
    x.word_[k].assign(n, {});
    x.base_[k].assign(n, -1);
    x.name_[k].assign(n, {});
    if (k >= 1) {
      x.face_[k].resize(static_cast<std::size_t>(n) * (k + 1));
      for (int s = 0; s < n; ++s)
        for (int i = 0; i <= k; ++i) x.face_[k][static_cast<std::size_t>(s) * (k + 1) + i] = face(k, s, i);
    }
    if (k < dim) {
      x.degen_[k].resize(static_cast<std::size_t>(n) * (k + 1));
      for (int s = 0; s < n; ++s)
        for (int j = 0; j <= k; ++j) x.degen_[k][static_cast<std::size_t>(s) * (k + 1) + j] = degen(k, s, j);
    }
  }
  // Eilenberg–Zilber decomposition, level by level.
  for (int k = 0; k <= dim; ++k) {
    const int n = sizes[k];
    std::vector<int> from(n, -1), via(n, -1);
    if (k >= 1)
      for (int t = 0; t < sizes[k - 1]; ++t)
        for (int j = 0; j < k; ++j) {
          int s = x.degen_[k - 1][static_cast<std::size_t>(t) * k + j];
          if (from[s] < 0) {
            from[s] = t;
            via[s] = j;
          }
        }
    for (int s = 0; s < n; ++s) {
      if (from[s] < 0) {
        x.base_[k][s] = s;
        x.name_[k][s] = name(k, s);
      } else {
        int t = from[s];
        std::vector<int> w{via[s]};
        const auto& wt = x.word_[k - 1][t];
        w.insert(w.end(), wt.begin(), wt.end());
        x.word_[k][s] = normalize_degeneracies(w);
        x.base_[k][s] = x.base_[k - 1][t];
      }
    }
    for (int s = 0; s < n; ++s)
      if (from[s] >= 0) {
        int bl = k - static_cast<int>(x.word_[k][s].size());
        x.name_[k][s] = degenerate_name(x.word_[k][s], x.name_[bl][x.base_[k][s]]);
      }
  }
  x.finalize();
  return x;
}

TruncSSet from_presentation(const Presentation& p, int dim) {
  if (dim < 0) dim = p.dim;
  const int pd = p.dim;
  if (static_cast<int>(p.gens.size()) != pd + 1) throw Error("presentation must list generators for levels 0.." + std::to_string(pd));
  std::map<std::string, std::pair<int, int>> gen_at;  // name -> (level, position)
  for (int k = 0; k <= pd; ++k)
    for (int i = 0; i < static_cast<int>(p.gens[k].size()); ++i) {
      const auto& g = p.gens[k][i];
      if (!gen_at.emplace(g, std::make_pair(k, i)).second) throw Error("duplicate generator " + g);
    }
  // Validate face expressions.
  for (int k = 1; k <= pd; ++k)
    for (const auto& g : p.gens[k]) {
      auto it = p.faces.find(g);
      if (it == p.faces.end() || it->second.size() != static_cast<std::size_t>(k + 1)) {
        int have = it == p.faces.end() ? 0 : static_cast<int>(it->second.size());
        throw Error("generator " + g + " is missing face " + std::to_string(have));
      }
      for (int i = 0; i <= k; ++i) {
        const auto& e = it->second[i];
        auto b = gen_at.find(e.base);
        if (b == gen_at.end()) throw Error("face " + std::to_string(i) + " of " + g + " names unknown generator " + e.base);
        int bl = b->second.first;
        if (bl + static_cast<int>(e.word.size()) != k - 1)
          throw Error("face " + std::to_string(i) + " of " + g + " has the wrong level");
        if (!word_valid(e.word, bl))
          throw Error("face " + std::to_string(i) + " of " + g + " is not in normal form");
      }
    }
  for (const auto& [g, fs] : p.faces)
    if (!gen_at.count(g) || gen_at[g].first == 0) throw Error("faces given for unknown or vertex generator " + g);

  // Enumerate all simplices as (word, generator).
  struct Simplex {
    std::vector<int> word;
    int gl, gi;
  };
  std::vector<std::vector<Simplex>> levels(dim + 1);
  std::vector<std::unordered_map<std::string, int>> index(dim + 1);
  auto gname = [&](int gl, int gi) -> const std::string& { return p.gens[gl][gi]; };
  for (int k = 0; k <= dim; ++k) {
    if (k <= pd)
      for (int i = 0; i < static_cast<int>(p.gens[k].size()); ++i) levels[k].push_back({{}, k, i});
    for (int l = std::min(k - 1, pd); l >= 0; --l)
      for (auto& w : degeneracy_words(k - l, l))
        for (int i = 0; i < static_cast<int>(p.gens[l].size()); ++i) levels[k].push_back({w, l, i});
    for (int s = 0; s < static_cast<int>(levels[k].size()); ++s)
      index[k][degenerate_name(levels[k][s].word, gname(levels[k][s].gl, levels[k][s].gi))] = s;
  }
  auto locate = [&](int k, const std::vector<int>& w, const std::string& base) {
    auto it = index[k].find(degenerate_name(w, base));
    if (it == index[k].end()) throw Error("internal: simplex " + degenerate_name(w, base) + " not enumerated");
    return it->second;
  };
  auto face_of = [&](int k, int s, int i) {
    const auto& sx = levels[k][s];
    std::vector<int> prefix, rest;
    int fi = push_face(i, sx.word, prefix, rest);
    if (fi < 0) {
      prefix.insert(prefix.end(), rest.begin(), rest.end());
      return locate(k - 1, normalize_degeneracies(prefix), gname(sx.gl, sx.gi));
    }
    const auto& e = p.faces.at(gname(sx.gl, sx.gi))[fi];
    prefix.insert(prefix.end(), e.word.begin(), e.word.end());
    return locate(k - 1, normalize_degeneracies(prefix), e.base);
  };
  auto degen_of = [&](int k, int s, int j) {
    const auto& sx = levels[k][s];
    std::vector<int> w{j};
    w.insert(w.end(), sx.word.begin(), sx.word.end());
    return locate(k + 1, normalize_degeneracies(w), gname(sx.gl, sx.gi));
  };
  std::vector<int> sizes;
  for (auto& l : levels) sizes.push_back(static_cast<int>(l.size()));
  TruncSSet x = TruncSSet::from_model(dim, sizes, face_of, degen_of,
                                      [&](int k, int s) { return gname(levels[k][s].gl, levels[k][s].gi); });
  // Simplicial identities d_i d_j = d_{j-1} d_i on generators.
  for (int k = 2; k <= std::min(dim, pd); ++k)
    for (int s : x.generators(k))
      for (int j = 1; j <= k; ++j)
        for (int i = 0; i < j; ++i)
          if (x.face(k - 1, x.face(k, s, j), i) != x.face(k - 1, x.face(k, s, i), j - 1))
            throw Error("simplicial identity d" + std::to_string(i) + "d" + std::to_string(j) + " = d" +
                        std::to_string(j - 1) + "d" + std::to_string(i) + " fails on generator " + x.name(k, s));
  return x;
}

Presentation presentation_of(const TruncSSet& x) {
  Presentation p;
  p.dim = x.dim();
  p.gens.assign(x.dim() + 1, {});
  for (int k = 0; k <= x.dim(); ++k)
    for (int s : x.generators(k)) {
      p.gens[k].push_back(x.name(k, s));
      if (k >= 1) {
        auto& fs = p.faces[x.name(k, s)];
        for (int i = 0; i <= k; ++i) fs.push_back(x.expr(k - 1, x.face(k, s, i)));
      }
    }
  return p;
}

std::string write_sset(const TruncSSet& x) {
  std::ostringstream out;
  out << "dim " << x.dim() << '\n';
  for (int k = 0; k <= x.dim(); ++k)
    for (int s : x.generators(k)) out << "gen " << k << ' ' << x.name(k, s) << '\n';
  for (int k = 1; k <= x.dim(); ++k)
    for (int s : x.generators(k))
      for (int i = 0; i <= k; ++i) {
        auto e = x.expr(k - 1, x.face(k, s, i));
        out << "face " << x.name(k, s) << ' ' << i << " = [";
        for (std::size_t t = 0; t < e.word.size(); ++t) out << (t ? " " : "") << 's' << e.word[t];
        out << "] " << e.base << '\n';
      }
  return out.str();
}

TruncSSet truncate(const TruncSSet& x, int dim) {
  if (dim > x.dim() || dim < 0) throw Error("cannot truncate to level " + std::to_string(dim));
  std::vector<int> sizes;
  for (int k = 0; k <= dim; ++k) sizes.push_back(x.size(k));
  TruncSSet t = TruncSSet::from_model(
      dim, sizes, [&](int k, int s, int i) { return x.face(k, s, i); },
      [&](int k, int s, int j) { return x.degen(k, s, j); }, [&](int k, int s) { return x.name(k, s); });
  t.set_coskeletal(x.coskeletal_level(), x.determined_level());
  return t;
}

TruncSSet skeletal_extension(const TruncSSet& x, int dim) {
  if (dim < x.dim()) throw Error("skeletal extension must not lower the dimension");
  TruncSSet e = from_presentation(presentation_of(x), dim);
  // Keep the simplex order of x on its own levels.
  std::vector<std::vector<int>> to_new(dim + 1), to_old(dim + 1);
  for (int k = 0; k <= dim; ++k) {
    to_new[k].resize(e.size(k));
    to_old[k].resize(e.size(k));
    for (int s = 0; s < e.size(k); ++s) {
      int t = k <= x.dim() ? x.find(k, e.name(k, s)) : s;
      if (t < 0) throw Error("internal: skeletal extension lost simplex " + e.name(k, s));
      to_new[k][s] = t;
      to_old[k][t] = s;
    }
  }
  std::vector<int> sizes;
  for (int k = 0; k <= dim; ++k) sizes.push_back(e.size(k));
  return TruncSSet::from_model(
      dim, sizes, [&](int k, int s, int i) { return to_new[k - 1][e.face(k, to_old[k][s], i)]; },
      [&](int k, int s, int j) { return to_new[k + 1][e.degen(k, to_old[k][s], j)]; },
      [&](int k, int s) { return e.name(k, to_old[k][s]); });
}

TruncSSet fit_to(const TruncSSet& x, int level) {
  if (level == x.dim()) return x;
  if (level < x.dim()) return truncate(x, level);
  return skeletal_extension(x, level);
}

}  // namespace segal::sset
