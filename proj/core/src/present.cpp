#include "segal/present.hpp"

#include <deque>
#include <functional>

namespace segal::present {

namespace {

class Enumerator {
 public:
  Enumerator(const Presentation& p, long bound) : p_(p), bound_(bound) {
    const int no = static_cast<int>(p.objects.size());
    out_.assign(no, {});
    local_.assign(p.gens.size(), -1);
    for (int g = 0; g < static_cast<int>(p.gens.size()); ++g) {
      const auto& gen = p.gens[g];
      if (gen.src < 0 || gen.src >= no || gen.tgt < 0 || gen.tgt >= no)
        throw Error("generator " + gen.name + " has dangling endpoints");
      local_[g] = static_cast<int>(out_[gen.src].size());
      out_[gen.src].push_back(g);
    }
    rels_from_.assign(no, {});
    for (int r = 0; r < static_cast<int>(p.rels.size()); ++r) {
      const auto& rel = p.rels[r];
      if (end_object(rel.src, rel.lhs) != end_object(rel.src, rel.rhs))
        throw Error("relation " + std::to_string(r) + " relates paths with different targets");
      rels_from_[rel.src].push_back(r);
    }
  }

  void run() {
    const int no = static_cast<int>(p_.objects.size());
    for (int x = 0; x < no; ++x) roots_.push_back(new_node(x, x, -1, -1));
    for (std::size_t u = 0; u < src_.size(); ++u) {
      if (find(static_cast<int>(u)) != static_cast<int>(u)) continue;
      for (int r : rels_from_[tgt_[u]]) {
        if (find(static_cast<int>(u)) != static_cast<int>(u)) break;
        const auto& rel = p_.rels[r];
        int a = trace(static_cast<int>(u), rel.lhs);
        int b = trace(static_cast<int>(u), rel.rhs);
        coincide(a, b);
      }
      if (find(static_cast<int>(u)) != static_cast<int>(u)) continue;
      for (std::size_t k = 0; k < out_[tgt_[u]].size(); ++k) {
        if (find(static_cast<int>(u)) != static_cast<int>(u)) break;
        if (table_[u][k] < 0) define(static_cast<int>(u), static_cast<int>(k));
      }
    }
  }

  Presented result() {
    Presented res;
    std::vector<int> live;
    std::vector<int> live_index(src_.size(), -1);
    for (int u = 0; u < static_cast<int>(src_.size()); ++u)
      if (find(u) == u) {
        live_index[u] = static_cast<int>(live.size());
        live.push_back(u);
      }
    std::vector<Word> words(live.size());
    for (std::size_t i = 0; i < live.size(); ++i) words[i] = word_of(live[i]);

    std::vector<fincat::Morphism> mors;
    std::vector<int> identity(p_.objects.size());
    for (int x = 0; x < static_cast<int>(p_.objects.size()); ++x) identity[x] = live_index[find(roots_[x])];
    for (std::size_t i = 0; i < live.size(); ++i) {
      int u = live[i];
      std::string name;
      if (words[i].empty()) {
        name = "id_" + p_.objects[src_[u]];
      } else {
        for (auto it = words[i].rbegin(); it != words[i].rend(); ++it) {
          if (!name.empty()) name += ".";
          name += p_.gens[*it].name;
        }
      }
      mors.push_back({name, src_[u], tgt_[u]});
    }
    const int nm = static_cast<int>(live.size());
    std::vector<int> comp(static_cast<std::size_t>(nm) * nm, -1);
    for (int f = 0; f < nm; ++f)
      for (int g = 0; g < nm; ++g) {
        if (tgt_[live[f]] != src_[live[g]]) continue;
        int end = trace_closed(live[f], words[g]);
        comp[static_cast<std::size_t>(g) * nm + f] = live_index[end];
      }
    res.cat = fincat::FinCat::build(p_.objects, mors, identity, comp);
    res.representative.assign(nm, {});
    for (int i = 0; i < nm; ++i) res.representative[res.cat.morphism_index(mors[i].id)] = words[i];
    for (int g = 0; g < static_cast<int>(p_.gens.size()); ++g) {
      int end = trace_closed(roots_[p_.gens[g].src], Word{g});
      res.gen_morphism.push_back(res.cat.morphism_index(mors[live_index[end]].id));
    }
    for (auto& o : p_.objects) res.object_of.push_back(res.cat.object_index(o));
    return res;
  }

 private:
  int end_object(int src, const Word& w) const {
    int at = src;
    for (int g : w) {
      if (g < 0 || g >= static_cast<int>(p_.gens.size())) throw Error("relation uses an unknown generator");
      if (p_.gens[g].src != at) throw Error("relation path is not composable at generator " + p_.gens[g].name);
      at = p_.gens[g].tgt;
    }
    return at;
  }

  int new_node(int src, int tgt, int parent, int gen) {
    if (static_cast<long>(src_.size()) >= bound_)
      throw Error("path-class enumeration exceeded the bound of " + std::to_string(bound_) + " definitions");
    int v = static_cast<int>(src_.size());
    src_.push_back(src);
    tgt_.push_back(tgt);
    uf_.push_back(v);
    def_parent_.push_back(parent);
    def_gen_.push_back(gen);
    table_.emplace_back(out_[tgt].size(), -1);
    return v;
  }

  int define(int u, int k) {
    int g = out_[tgt_[u]][k];
    int v = new_node(src_[u], p_.gens[g].tgt, u, g);
    table_[u][k] = v;
    return v;
  }

  int find(int u) {
    while (uf_[u] != u) {
      uf_[u] = uf_[uf_[u]];
      u = uf_[u];
    }
    return u;
  }

  int trace(int u, const Word& w) {
    u = find(u);
    for (int g : w) {
      int k = local_[g];
      int v = table_[u][k];
      if (v < 0) v = define(u, k);
      u = find(v);
    }
    return u;
  }

  int trace_closed(int u, const Word& w) {
    u = find(u);
    for (int g : w) {
      int v = table_[u][local_[g]];
      if (v < 0) throw Error("internal: enumeration did not close");
      u = find(v);
    }
    return u;
  }

  void coincide(int a, int b) {
    std::deque<std::pair<int, int>> queue{{a, b}};
    while (!queue.empty()) {
      auto [x, y] = queue.front();
      queue.pop_front();
      x = find(x);
      y = find(y);
      if (x == y) continue;
      if (x > y) std::swap(x, y);
      uf_[y] = x;
      for (std::size_t k = 0; k < table_[y].size(); ++k) {
        int t = table_[y][k];
        if (t < 0) continue;
        if (table_[x][k] < 0)
          table_[x][k] = t;
        else
          queue.emplace_back(table_[x][k], t);
      }
    }
  }

  Word word_of(int u) const {
    Word w;
    while (def_parent_[u] >= 0) {
      w.push_back(def_gen_[u]);
      u = def_parent_[u];
    }
    return Word(w.rbegin(), w.rend());
  }

  const Presentation& p_;
  long bound_;
  std::vector<std::vector<int>> out_;
  std::vector<int> local_;
  std::vector<std::vector<int>> rels_from_;
  std::vector<int> roots_;
  std::vector<int> src_, tgt_, uf_, def_parent_, def_gen_;
  std::vector<std::vector<int>> table_;
};

}  // namespace

int Presented::evaluate(int src, const Word& w) const {
  int m = cat.identity(object_of[src]);
  for (int g : w) {
    m = cat.compose(gen_morphism[g], m);
    if (m < 0) throw Error("path is not composable");
  }
  return m;
}

Presented present(const Presentation& p, long bound) {
  Enumerator e(p, bound);
  e.run();
  return e.result();
}

}  // namespace segal::present
