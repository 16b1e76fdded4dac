#include <algorithm>
#include <unordered_map>

#include "segal/sset.hpp"

namespace segal::sset {

namespace {

std::string seq_key(const std::vector<int>& v) {
  return std::string(reinterpret_cast<const char*>(v.data()), sizeof(int) * v.size());
}

std::string vertex_name(const std::vector<int>& seq, int n) {
  std::string s;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (n >= 10 && i) s += ",";
    s += std::to_string(seq[i]);
  }
  return s;
}

void nondecreasing(int n, int len, std::vector<int>& cur, std::vector<std::vector<int>>& out,
                   const std::function<bool(const std::vector<int>&)>& keep) {
  if (static_cast<int>(cur.size()) == len) {
    if (keep(cur)) out.push_back(cur);
    return;
  }
  for (int v = cur.empty() ? 0 : cur.back(); v <= n; ++v) {
    cur.push_back(v);
    nondecreasing(n, len, cur, out, keep);
    cur.pop_back();
  }
}

// Simplicial subset of Δⁿ given by a predicate on vertex sets (monotone sequences).
TruncSSet delta_subobject(int n, int d, const std::function<bool(const std::vector<int>&)>& keep) {
  if (n < 0 || d < 0) throw Error("invalid simplex parameters");
  std::vector<std::vector<std::vector<int>>> seqs(d + 1);
  std::vector<std::unordered_map<std::string, int>> index(d + 1);
  for (int k = 0; k <= d; ++k) {
    std::vector<int> cur;
    nondecreasing(n, k + 1, cur, seqs[k], keep);
    for (int s = 0; s < static_cast<int>(seqs[k].size()); ++s) index[k][seq_key(seqs[k][s])] = s;
  }
  std::vector<int> sizes;
  for (auto& l : seqs) sizes.push_back(static_cast<int>(l.size()));
  auto face = [&](int k, int s, int i) {
    auto v = seqs[k][s];
    v.erase(v.begin() + i);
    return index[k - 1].at(seq_key(v));
  };
  auto degen = [&](int k, int s, int j) {
    auto v = seqs[k][s];
    v.insert(v.begin() + j, v[j]);
    return index[k + 1].at(seq_key(v));
  };
  return TruncSSet::from_model(d, sizes, face, degen, [&](int k, int s) { return vertex_name(seqs[k][s], n); });
}

std::vector<int> support(const std::vector<int>& seq) {
  std::vector<int> s = seq;
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

bool subset_of(const std::vector<int>& a, const std::vector<int>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace

TruncSSet standard_simplex(int n, int d) {
  TruncSSet x = delta_subobject(n, d, [](const std::vector<int>&) { return true; });
  x.set_coskeletal(2, 1);
  return x;
}

TruncSSet point(int d) { return standard_simplex(0, d); }

TruncSSet simplex_subobject(int n, const std::vector<std::vector<int>>& maximal, int d) {
  std::vector<std::vector<int>> faces;
  for (auto f : maximal) {
    std::sort(f.begin(), f.end());
    for (int v : f)
      if (v < 0 || v > n) throw Error("vertex out of range in simplex subobject");
    faces.push_back(f);
  }
  return delta_subobject(n, d, [&](const std::vector<int>& seq) {
    auto sup = support(seq);
    for (auto& f : faces)
      if (subset_of(sup, f)) return true;
    return false;
  });
}

TruncSSet boundary(int n, int d) {
  if (n < 0) throw Error("boundary needs n >= 0");
  std::vector<std::vector<int>> faces;
  for (int i = 0; i <= n; ++i) {
    std::vector<int> f;
    for (int v = 0; v <= n; ++v)
      if (v != i) f.push_back(v);
    faces.push_back(f);
  }
  return simplex_subobject(n, faces, d);
}

TruncSSet horn(int n, int i, int d) {
  if (n < 1 || i < 0 || i > n) throw Error("horn index out of range");
  std::vector<std::vector<int>> faces;
  for (int j = 0; j <= n; ++j) {
    if (j == i) continue;
    std::vector<int> f;
    for (int v = 0; v <= n; ++v)
      if (v != j) f.push_back(v);
    faces.push_back(f);
  }
  return simplex_subobject(n, faces, d);
}

TruncSSet spine(int n, int d) {
  if (n < 0) throw Error("spine needs n >= 0");
  std::vector<std::vector<int>> faces;
  if (n == 0) faces.push_back({0});
  for (int i = 0; i < n; ++i) faces.push_back({i, i + 1});
  return simplex_subobject(n, faces, d);
}

TruncSSet nerve(const fincat::FinCat& c, int d) {
  if (d < 0) throw Error("nerve needs d >= 0");
  // Level k simplices: composable strings (m_1, ..., m_k); level 0: objects.
  std::vector<std::vector<std::vector<int>>> strings(d + 1);
  std::vector<std::unordered_map<std::string, int>> index(d + 1);
  for (int x = 0; x < c.num_objects(); ++x) strings[0].push_back({x});
  for (int k = 1; k <= d; ++k) {
    for (auto& prev : strings[k - 1]) {
      if (k == 1) {
        for (int f = 0; f < c.num_morphisms(); ++f)
          if (c.morphism(f).src == prev[0]) strings[1].push_back({f});
      } else {
        int end = c.morphism(prev.back()).tgt;
        for (int f = 0; f < c.num_morphisms(); ++f)
          if (c.morphism(f).src == end) {
            auto s = prev;
            s.push_back(f);
            strings[k].push_back(s);
          }
      }
    }
  }
  for (int k = 0; k <= d; ++k)
    for (int s = 0; s < static_cast<int>(strings[k].size()); ++s) index[k][seq_key(strings[k][s])] = s;
  std::vector<int> sizes;
  for (auto& l : strings) sizes.push_back(static_cast<int>(l.size()));
  auto face = [&](int k, int s, int i) {
    const auto& v = strings[k][s];
    std::vector<int> w;
    if (k == 1) {
      w = {i == 0 ? c.morphism(v[0]).tgt : c.morphism(v[0]).src};
    } else if (i == 0) {
      w.assign(v.begin() + 1, v.end());
    } else if (i == k) {
      w.assign(v.begin(), v.end() - 1);
    } else {
      w = v;
      w[i - 1] = c.compose(v[i], v[i - 1]);
      w.erase(w.begin() + i);
    }
    return index[k - 1].at(seq_key(w));
  };
  auto degen = [&](int k, int s, int j) {
    const auto& v = strings[k][s];
    std::vector<int> w;
    if (k == 0) {
      w = {c.identity(v[0])};
    } else {
      int obj = j == 0 ? c.morphism(v[0]).src : c.morphism(v[j - 1]).tgt;
      w = v;
      w.insert(w.begin() + j, c.identity(obj));
    }
    return index[k + 1].at(seq_key(w));
  };
  auto name = [&](int k, int s) {
    const auto& v = strings[k][s];
    if (k == 0) return c.object(v[0]);
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "|" : "") + c.morphism(v[i]).id;
    return out;
  };
  TruncSSet x = TruncSSet::from_model(d, sizes, face, degen, name);
  x.set_coskeletal(2, 1);
  return x;
}

TruncSSet j_space(int m, int d) { return nerve(fincat::groupoid_interval(m), d); }

int product_index(const TruncSSet& /*x*/, const TruncSSet& y, int k, int a, int b) { return a * y.size(k) + b; }

TruncSSet product(const TruncSSet& x, const TruncSSet& y) {
  if (x.dim() != y.dim()) throw Error("product needs equal dimensions (" + std::to_string(x.dim()) + " vs " +
                                      std::to_string(y.dim()) + ")");
  const int d = x.dim();
  std::vector<int> sizes;
  for (int k = 0; k <= d; ++k) sizes.push_back(x.size(k) * y.size(k));
  auto face = [&](int k, int s, int i) {
    int a = s / y.size(k), b = s % y.size(k);
    return x.face(k, a, i) * y.size(k - 1) + y.face(k, b, i);
  };
  auto degen = [&](int k, int s, int j) {
    int a = s / y.size(k), b = s % y.size(k);
    return x.degen(k, a, j) * y.size(k + 1) + y.degen(k, b, j);
  };
  auto name = [&](int k, int s) { return "(" + x.name(k, s / y.size(k)) + "," + y.name(k, s % y.size(k)) + ")"; };
  TruncSSet p = TruncSSet::from_model(d, sizes, face, degen, name);
  if (x.coskeletal_level() >= 0 && y.coskeletal_level() >= 0)
    p.set_coskeletal(std::max(x.coskeletal_level(), y.coskeletal_level()),
                     std::max(x.determined_level(), y.determined_level()));
  return p;
}

}  // namespace segal::sset
