#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "segal/common.hpp"
#include "segal/fincat.hpp"
#include "segal/sset.hpp"

namespace segal::bisset {

/// s^h_{hword} s^v_{vword} applied to a generator; both words strictly decreasing.
struct BiExpr {
  std::vector<int> hword, vword;
  std::string base;
  bool operator==(const BiExpr&) const = default;
};

/// Name of a degenerate bisimplex, e.g. "sh0sv1(x)".
std::string bi_degenerate_name(const std::vector<int>& hword, const std::vector<int>& vword, const std::string& base);

/// Bidegrees (n, m) of a window sorted by total degree, then by n. Flat
/// generator layouts of maps follow this order.
std::vector<std::pair<int, int>> bidegree_order(int p, int q);

/// A (p,q)-truncated bisimplicial set with every bisimplex materialized.
/// The first index n is the horizontal degree, the second m the vertical one.
class TruncBiSSet {
 public:
  int p() const { return p_; }
  int q() const { return q_; }
  bool in_window(int n, int m) const { return n >= 0 && m >= 0 && n <= p_ && m <= q_; }
  int size(int n, int m) const { return static_cast<int>(base_[id(n, m)].size()); }

  int hface(int n, int m, int s, int i) const { return hface_[id(n, m)][static_cast<std::size_t>(s) * (n + 1) + i]; }
  int vface(int n, int m, int s, int i) const { return vface_[id(n, m)][static_cast<std::size_t>(s) * (m + 1) + i]; }
  int hdegen(int n, int m, int s, int j) const { return hdegen_[id(n, m)][static_cast<std::size_t>(s) * (n + 1) + j]; }
  int vdegen(int n, int m, int s, int j) const { return vdegen_[id(n, m)][static_cast<std::size_t>(s) * (m + 1) + j]; }

  const std::vector<int>& generators(int n, int m) const { return gens_[id(n, m)]; }
  bool is_degenerate(int n, int m, int s) const { return !hword(n, m, s).empty() || !vword(n, m, s).empty(); }
  const std::vector<int>& hword(int n, int m, int s) const { return hword_[id(n, m)][s]; }
  const std::vector<int>& vword(int n, int m, int s) const { return vword_[id(n, m)][s]; }
  int base(int n, int m, int s) const { return base_[id(n, m)][s]; }
  const std::string& name(int n, int m, int s) const { return name_[id(n, m)][s]; }
  int find(int n, int m, const std::string& name) const;
  int generator_position(int n, int m, int s) const { return genpos_[id(n, m)][s]; }

  /// Offset of bidegree (n, m) in the flat generator layout.
  int flat_offset(int n, int m) const { return flat_offset_[id(n, m)]; }
  /// Number of generators of total degree <= t.
  int flat_length(int total) const;

  /// Bisimplices at (n, m) with the given horizontal faces (n+1 entries when
  /// n >= 1) followed by vertical faces (m+1 entries when m >= 1).
  const std::vector<int>& with_faces(int n, int m, const int* faces) const;

  /// Applies s^h_{hword} s^v_{vword}; throws WindowError past the window.
  int apply_degeneracies(int n, int m, int s, const std::vector<int>& hword, const std::vector<int>& vword) const;
  /// Horizontal vertex i (lands in (0, m)) and vertical vertex j (lands in (n, 0)).
  int h_vertex(int n, int m, int s, int i) const;
  int v_vertex(int n, int m, int s, int j) const;

  /// Coskeletality in total degree: every compatible boundary of total
  /// degree above this level has exactly one filler (-1: unknown).
  int coskeletal_level() const { return cosk_; }
  /// Above this total degree bisimplices are determined by their faces.
  int determined_level() const { return det_; }
  void set_coskeletal(int cosk, int det) {
    cosk_ = cosk < 0 ? -1 : cosk;
    det_ = det < 0 ? -1 : (cosk_ < 0 ? det : std::min(det, cosk_));
  }

  /// Exhaustive check of the simplicial identities in both directions and
  /// of the mixed identities between horizontal and vertical operators.
  Verdict check_identities() const;

  BiExpr expr(int n, int m, int s) const;
  std::map<std::pair<int, int>, int> counts() const;  // nondegenerate counts per bidegree

  using SizeFn = std::function<int(int, int)>;
  using OpFn = std::function<int(int, int, int, int)>;
  /// Builds from all bisimplices; `name(n, m, s)` is consulted for
  /// generators only.
  static TruncBiSSet from_model(int p, int q, const SizeFn& size, const OpFn& hface, const OpFn& vface,
                                const OpFn& hdegen, const OpFn& vdegen,
                                const std::function<std::string(int, int, int)>& name);

 private:
  int id(int n, int m) const { return n * (q_ + 1) + m; }
  void finalize();

  int p_ = 0, q_ = 0;
  int cosk_ = -1, det_ = -1;
  std::vector<std::vector<int>> hface_, vface_, hdegen_, vdegen_;
  std::vector<std::vector<std::vector<int>>> hword_, vword_;
  std::vector<std::vector<int>> base_;
  std::vector<std::vector<std::string>> name_;
  std::vector<std::vector<int>> gens_, genpos_;
  std::vector<int> flat_offset_, total_length_;
  std::vector<std::unordered_map<std::string, int>> lookup_;
  std::vector<std::unordered_map<std::string, std::vector<int>>> face_index_;
};

using BiSSetPtr = std::shared_ptr<const TruncBiSSet>;
inline BiSSetPtr share(TruncBiSSet x) { return std::make_shared<const TruncBiSSet>(std::move(x)); }

/// Generator-and-face presentation (the `.bisset` data model).
struct Presentation {
  int p = 0, q = 0;
  std::map<std::pair<int, int>, std::vector<std::string>> gens;
  std::map<std::string, std::vector<BiExpr>> hfaces, vfaces;
};

/// Expands a presentation to all bisimplices inside the window (p, q), which
/// may exceed the presentation's own window (skeletal extension). Validates
/// every identity on generators and throws naming the operators involved.
TruncBiSSet from_presentation(const Presentation& pr, int p = -1, int q = -1);
Presentation presentation_of(const TruncBiSSet& x);
std::string write_bisset(const TruncBiSSet& x);

TruncBiSSet truncate(const TruncBiSSet& x, int p, int q);
/// Restricts or skeletally extends to the window (p, q).
TruncBiSSet fit_to(const TruncBiSSet& x, int p, int q);

TruncBiSSet terminal(int p, int q);
/// External product: (X ⊠ Y)_{n,m} = X_n × Y_m, indexed a * |Y_m| + b.
TruncBiSSet box(const sset::TruncSSet& x, const sset::TruncSSet& y);
/// Product in bidegrees, indexed a * |Y_{n,m}| + b; windows must agree.
TruncBiSSet product(const TruncBiSSet& x, const TruncBiSSet& y);
sset::TruncSSet column(const TruncBiSSet& x, int n);
sset::TruncSSet row(const TruncBiSSet& x, int m);

struct BiSSetMap {
  BiSSetPtr src, tgt;
  std::vector<std::vector<int>> img;  // indexed by n * (src->q() + 1) + m, then simplex

  int operator()(int n, int m, int s) const { return img[static_cast<std::size_t>(n) * (src->q() + 1) + m][s]; }
  Verdict validate() const;
  std::map<std::string, BiExpr> assignment() const;
  /// Restriction to column n (a map of simplicial sets).
  sset::SSetMap column_map(int n, const sset::SSetPtr& src_col, const sset::SSetPtr& tgt_col) const;
};

BiSSetMap identity_map(const BiSSetPtr& x);
BiSSetMap compose(const BiSSetMap& g, const BiSSetMap& f);  // g∘f
BiSSetMap map_from_assignment(const BiSSetPtr& src, const BiSSetPtr& tgt, const std::map<std::string, BiExpr>& assignment);
/// Builds a map from a per-bisimplex image function and validates it.
BiSSetMap map_from_function(const BiSSetPtr& src, const BiSSetPtr& tgt, const std::function<int(int, int, int)>& f);

/// Maps X -> Y stored by generator images of total degree <= level.
class BiMapSet {
 public:
  BiMapSet() = default;
  BiMapSet(BiSSetPtr src, BiSSetPtr tgt, int level, int search);

  BiSSetPtr src, tgt;
  int level = 0, search = 0;

  int size() const { return keys_.size(); }
  int key_length() const { return keys_.length(); }
  std::vector<int> images(int i) const { return keys_.get(i); }
  int find(const std::vector<int>& flat) const { return keys_.find(flat.data()); }
  int add(const std::vector<int>& flat) { return keys_.add(flat.data()); }
  int image(const std::vector<int>& flat, int n, int m, int s) const;
  BiSSetMap materialize(int i) const;

 private:
  PackedKeys keys_;
};

struct BiPrecomposePlan {
  struct Entry {
    int n, m, simplex;
    int base_n, base_m, base_pos;  // base_pos < 0: generic path
    std::vector<int> hword, vword;
  };
  std::vector<Entry> entries;
};
BiPrecomposePlan make_precompose_plan(const BiMapSet& from, const BiMapSet& to,
                                      const std::function<int(int, int, int)>& phi);
int precompose(const BiMapSet& from, int i, const BiMapSet& to, const BiPrecomposePlan& plan);

/// Total degree up to which the map search must inspect X, or WindowError.
int search_level(const TruncBiSSet& x, const TruncBiSSet& y);
void search_maps(const TruncBiSSet& x, const TruncBiSSet& y, int levels, const sset::MapSearchOptions& opts,
                 const std::function<bool(const std::vector<int>&)>& visit);
BiMapSet map_set(const BiSSetPtr& x, const BiSSetPtr& y);
std::vector<BiSSetMap> enumerate_maps(const BiSSetPtr& x, const BiSSetPtr& y);
std::size_t count_maps(const TruncBiSSet& x, const TruncBiSSet& y);
std::optional<BiSSetMap> find_isomorphism(const BiSSetPtr& x, const BiSSetPtr& y);
bool isomorphic(const TruncBiSSet& x, const TruncBiSSet& y);

/// (M_v(A, Z))_m = maps(A, Z_{•,m}); vertical operators of Z act by postcomposition.
struct MappingSpace {
  sset::TruncSSet object;
  std::vector<sset::SSetPtr> rows;
  std::vector<sset::MapSet> maps;  // per level m
};
MappingSpace mv_data(const sset::SSetPtr& a, const TruncBiSSet& z);
sset::TruncSSet mv(const sset::SSetPtr& a, const TruncBiSSet& z);
sset::TruncSSet mh(const sset::SSetPtr& a, const TruncBiSSet& z);
TruncBiSSet transpose(const TruncBiSSet& x);

/// N C_{n,m} = functors [n] × I[m] -> C. Each bisimplex is recorded by its
/// object grid, horizontal generator images (i -> i+1 at level a) and
/// vertical generator images (a -> a+1 at column i).
struct Classifying {
  TruncBiSSet object;
  fincat::CatPtr cat;
  std::vector<PackedKeys> keys;  // per bidegree id n * (q + 1) + m, index = bisimplex
  int key_of(int n, int m, const std::vector<int>& grid) const;  // -1 if absent
  std::vector<int> grid(int n, int m, int s) const { return keys[static_cast<std::size_t>(n) * (object.q() + 1) + m].get(s); }
};
Classifying classifying_data(const fincat::CatPtr& c, int p, int q);
TruncBiSSet classifying_diagram(const fincat::FinCat& c, int p, int q);
/// Grid layout helpers shared with the canonical comparisons.
int grid_length(int n, int m);
/// The functor [n] × I[m] -> C described by a grid.
fincat::FunctorData grid_functor(const fincat::FinCat& c, int n, int m, const std::vector<int>& grid);
/// N F : N C -> N D by postcomposition.
BiSSetMap classifying_map(const fincat::Functor& f, const Classifying& src, const Classifying& dst,
                          const BiSSetPtr& src_ptr, const BiSSetPtr& dst_ptr);

/// Exponential: (n, m) entry = maps (Δⁿ ⊠ Δᵐ) × X -> Y.
struct BiExponential {
  TruncBiSSet object;
  std::vector<BiSSetPtr> sources;  // per bidegree id of the output window
  std::vector<BiMapSet> maps;
  BiSSetPtr x, y;
  int p = 0, q = 0;
  const BiMapSet& at(int n, int m) const { return maps[static_cast<std::size_t>(n) * (q + 1) + m]; }
};
BiExponential exponential_data(const BiSSetPtr& x, const BiSSetPtr& y, int p, int q);
TruncBiSSet exponential_bisset(const BiSSetPtr& x, const BiSSetPtr& y, int p, int q);

/// Fundamental category: horizontal edges as arrows, vertical edges as
/// invertible arrows, relations from (2,0), (0,2) and (1,1) generators.
struct BiTau1 {
  present::Presented presented;
  std::vector<int> h_generator;  // per (1,0) bisimplex, -1 if degenerate
  std::vector<int> v_generator;  // per (0,1) bisimplex, -1 if degenerate
  std::vector<int> v_inverse;    // generator index of the formal inverse
  const fincat::FinCat& cat() const { return presented.cat; }
  int h_morphism(const TruncBiSSet& x, int e) const;
  int v_morphism(const TruncBiSSet& x, int e) const;
};
BiTau1 tau1_bisset_presented(const TruncBiSSet& x, long bound = present::kDefaultRewriteBound);
fincat::FinCat tau1_bisset(const TruncBiSSet& x, long bound = present::kDefaultRewriteBound);
fincat::Functor tau1_bisset_map(const BiSSetMap& f, const BiTau1& src, const BiTau1& tgt);

struct SegalReport {
  bool ok = true;
  std::string witness;
  std::vector<int> levels_checked;  // n values
};
/// Spine comparison X_{n,m} -> (composable principal-edge tuples) is a
/// bijection for 1 <= n <= p and every m <= q.
SegalReport segal_check_strict(const TruncBiSSet& x);
/// Principal horizontal edge i -> i+1 of a bisimplex at (n, m).
int principal_edge(const TruncBiSSet& x, int n, int m, int s, int i);

struct ReedyReport {
  bool ok = true;
  std::string witness;
  std::vector<std::pair<int, int>> certified;  // (n, level) pairs checked
};
/// Relative horn filling for X_{n,•} -> M_v(∂Δⁿ, X) for n <= p, levels 1..up_to.
ReedyReport reedy_fibrancy_check(const TruncBiSSet& x, int up_to);

struct HomSpace {
  std::vector<int> tuple;                // vertices in X_{0,0}
  sset::TruncSSet carrier;               // the fiber, a simplicial set of dim q
  std::vector<std::vector<int>> member;  // carrier simplex -> bisimplex of column n
};
HomSpace hom_space(const TruncBiSSet& x, const std::vector<int>& tuple);
/// The comparison X(x₀,…,xₙ) -> X(x₀,x₁) × … × X(x_{n−1},xₙ) is bijective levelwise.
Verdict hom_space_comparison(const TruncBiSSet& x, const HomSpace& h);

/// Homotopy category with the data tying it back to X.
struct Ho {
  fincat::FinCat cat;
  std::vector<int> object_of;     // X_{0,0} vertex -> object
  std::vector<int> morphism_of;   // X_{1,0} vertex -> morphism
  std::vector<int> representative;  // morphism -> X_{1,0} vertex
};
Ho ho_data(const TruncBiSSet& x);
fincat::FinCat ho(const TruncBiSSet& x);
fincat::Functor ho_map(const BiSSetMap& f, const Ho& src, const Ho& tgt);

/// j_X : τ₁(X_{0,•}) -> Ho X.
fincat::Functor j_functor(const TruncBiSSet& x);

struct Equivalences {
  sset::TruncSSet object;                  // X_eq
  std::vector<std::vector<int>> member;    // X_eq simplex -> simplex of column 1
  std::vector<int> equivalence_vertices;   // X_{1,0} vertices that are equivalences
};
Equivalences equivalences(const TruncBiSSet& x);
/// X_{0,•} -> X_eq through s^h_0 is a weak equivalence (1-truncated test).
Verdict is_complete_1trunc(const TruncBiSSet& x);
/// Dwyer–Kan test: Ho F is an equivalence and every hom-space map is a
/// weak equivalence (1-truncated test).
Verdict is_dk_equivalence(const BiSSetMap& f);

}  // namespace segal::bisset
