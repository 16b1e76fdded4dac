#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "segal/common.hpp"
#include "segal/fincat.hpp"
#include "segal/present.hpp"

namespace segal::sset {

/// s_{w[0]} s_{w[1]} ... applied to a generator; normal form has w strictly decreasing.
struct DegenerateExpr {
  std::vector<int> word;
  std::string base;
  bool operator==(const DegenerateExpr&) const = default;
};

/// Rewrites a degeneracy word (outermost operator first) into strictly
/// decreasing normal form using s_i s_j = s_{j+1} s_i for i <= j.
std::vector<int> normalize_degeneracies(std::vector<int> word);

/// Image of d_i on s_{word} x: either a shorter word on x (when d_i cancels a
/// degeneracy) or a word to prepend to d_{i'} x. Returns the index i' or -1.
int push_face(int i, const std::vector<int>& word, std::vector<int>& prefix, std::vector<int>& rest);

/// Whether a strictly decreasing word applies to a simplex at base_level.
bool word_valid(const std::vector<int>& word, int base_level);
/// All normal-form degeneracy words of a given length applicable at base_level.
std::vector<std::vector<int>> degeneracy_words(int len, int base_level);

/// Name used for degenerate simplices, e.g. "s1s0(x)".
std::string degenerate_name(const std::vector<int>& word, const std::string& base);

/// A d-truncated simplicial set with every simplex materialized.
///
/// Simplices at each level are indexed; nondegenerate ones are the
/// generators. Each simplex records its Eilenberg–Zilber decomposition.
/// Face and degeneracy operators are stored as tables.
class TruncSSet {
 public:
  int dim() const { return dim_; }
  int size(int k) const { return static_cast<int>(word_[k].size()); }
  int face(int k, int s, int i) const { return face_[k][static_cast<std::size_t>(s) * (k + 1) + i]; }
  int degen(int k, int s, int j) const { return degen_[k][static_cast<std::size_t>(s) * (k + 1) + j]; }
  const std::vector<int>& generators(int k) const { return gens_[k]; }
  bool is_degenerate(int k, int s) const { return !word_[k][s].empty(); }
  const std::vector<int>& word(int k, int s) const { return word_[k][s]; }
  int base(int k, int s) const { return base_[k][s]; }  // index at level k - |word|
  const std::string& name(int k, int s) const { return name_[k][s]; }
  int find(int k, const std::string& name) const;  // -1 if absent
  /// Position of a generator within generators(k), or -1.
  int generator_position(int k, int s) const { return genpos_[k][s]; }
  /// Number of generators at levels below k (flat image layout offset).
  int gen_offset(int k) const { return gen_offset_[k]; }
  int num_generators() const { return gen_offset_.back(); }

  /// Simplices at level k >= 1 whose faces are exactly faces[0..k].
  const std::vector<int>& with_faces(int k, const int* faces) const;

  /// Vertex i of simplex s (image of the i-th vertex inclusion).
  int vertex(int k, int s, int i) const;
  /// Applies s_{word} (outermost first) to simplex s at level k.
  int apply_degeneracies(int k, int s, const std::vector<int>& word) const;

  /// The stored levels are the truncation of an object in which every
  /// compatible boundary above this level has exactly one filler (-1: no
  /// such knowledge, the truncation is taken at face value).
  int coskeletal_level() const { return cosk_; }
  /// Above this level simplices are determined by their faces (-1: unknown).
  int determined_level() const { return det_; }
  void set_coskeletal(int cosk, int det) {
    cosk_ = cosk < 0 ? -1 : cosk;
    det_ = det < 0 ? -1 : (cosk_ < 0 ? det : std::min(det, cosk_));
  }

  /// Exhaustive check of all simplicial identities on the stored tables.
  Verdict check_identities() const;

  DegenerateExpr expr(int k, int s) const;
  std::vector<int> counts() const;  // nondegenerate counts per level

  /// Builds from all simplices. `face(k,s,i)` / `degen(k,s,j)` give indices;
  /// `name(k,s)` is consulted for nondegenerate simplices only.
  static TruncSSet from_model(int dim, const std::vector<int>& sizes,
                              const std::function<int(int, int, int)>& face,
                              const std::function<int(int, int, int)>& degen,
                              const std::function<std::string(int, int)>& name);

  friend class Builder;

 private:
  void finalize();

  int dim_ = 0;
  int cosk_ = -1;
  int det_ = -1;
  std::vector<int> gen_offset_;
  std::vector<std::vector<int>> face_, degen_;
  std::vector<std::vector<std::vector<int>>> word_;
  std::vector<std::vector<int>> base_;
  std::vector<std::vector<std::string>> name_;
  std::vector<std::vector<int>> gens_, genpos_;
  std::vector<std::unordered_map<std::string, int>> lookup_;
  std::vector<std::unordered_map<std::string, std::vector<int>>> face_index_;
};

using SSetPtr = std::shared_ptr<const TruncSSet>;
inline SSetPtr share(TruncSSet x) { return std::make_shared<const TruncSSet>(std::move(x)); }

/// Generator-and-face presentation (the `.sset` data model).
struct Presentation {
  int dim = 0;
  std::vector<std::vector<std::string>> gens;  // per level
  std::map<std::string, std::vector<DegenerateExpr>> faces;
};

/// Expands a presentation to all simplices up to `dim` (which may exceed the
/// presentation's own dim: the extension is skeletal). Validates the
/// simplicial identities on generators and throws naming the offender.
TruncSSet from_presentation(const Presentation& p, int dim = -1);
Presentation presentation_of(const TruncSSet& x);
std::string write_sset(const TruncSSet& x);

TruncSSet truncate(const TruncSSet& x, int dim);
TruncSSet skeletal_extension(const TruncSSet& x, int dim);

// Standard objects. Generators are named by vertex strings such as "012".
TruncSSet standard_simplex(int n, int d);
TruncSSet boundary(int n, int d);
TruncSSet horn(int n, int i, int d);
TruncSSet spine(int n, int d);
TruncSSet point(int d);  // Δ⁰
/// Subobject of Δⁿ generated by the given vertex sets.
TruncSSet simplex_subobject(int n, const std::vector<std::vector<int>>& maximal, int d);

TruncSSet nerve(const fincat::FinCat& c, int d);
TruncSSet j_space(int m, int d);
TruncSSet product(const TruncSSet& x, const TruncSSet& y);
/// Simplex (a, b) of product(x, y) at level k.
int product_index(const TruncSSet& x, const TruncSSet& y, int k, int a, int b);

struct SSetMap {
  SSetPtr src, tgt;
  std::vector<std::vector<int>> img;  // img[k][s] for k <= src->dim()

  int operator()(int k, int s) const { return img[k][s]; }
  Verdict validate() const;
  std::map<std::string, DegenerateExpr> assignment() const;
};

SSetMap identity_map(const SSetPtr& x);
SSetMap compose(const SSetMap& g, const SSetMap& f);  // g∘f
/// Builds a map from generator assignments, filling degenerate simplices.
/// N F : N C -> N D for nerves built by `nerve`.
SSetMap nerve_map(const fincat::Functor& f, const SSetPtr& nc, const SSetPtr& nd);

SSetMap map_from_assignment(const SSetPtr& src, const SSetPtr& tgt,
                            const std::map<std::string, DegenerateExpr>& assignment);

/// A set of maps X -> Y stored compactly by their images on the generators
/// of X up to `level` (flat layout: X.gen_offset(k) + position), which is
/// enough to determine each map.
class MapSet {
 public:
  MapSet() = default;
  MapSet(SSetPtr src, SSetPtr tgt, int level, int search);

  SSetPtr src, tgt;
  int level = 0;   // generator images stored for levels <= level
  int search = 0;  // levels inspected by the search

  int size() const { return keys_.size(); }
  int key_length() const { return keys_.length(); }
  std::vector<int> images(int i) const;
  int find(const std::vector<int>& flat) const;  // -1 if absent
  /// Adds a map (first key_length() entries are used); returns its index.
  int add(const std::vector<int>& flat);
  /// Image of any simplex of src (degenerate ones through their base,
  /// nondegenerate ones above `level` by the unique filler in tgt).
  int image(const std::vector<int>& flat, int k, int s) const;
  SSetMap materialize(int i) const;

 private:
  PackedKeys keys_;
};

/// For precomposition along phi: S' -> S. Entry per generator of S' up to
/// the key level of `to`: where its image lives in S.
struct PrecomposePlan {
  struct Entry {
    int level, base_level, base_pos;  // base_pos < 0: needs the generic path
    int simplex;                      // phi(generator) at `level`
    std::vector<int> word;
  };
  std::vector<Entry> entries;
};
PrecomposePlan make_precompose_plan(const MapSet& from, const MapSet& to,
                                    const std::function<int(int, int)>& phi);
/// Index in `to` of (map i of `from`)∘phi; throws if absent.
int precompose(const MapSet& from, int i, const MapSet& to, const PrecomposePlan& plan);

/// Levels of X the search must inspect for maps into Y, or throws WindowError.
int search_level(const TruncSSet& x, const TruncSSet& y);

struct MapSearchOptions {
  bool generators_to_generators = false;
  bool injective = false;
};
/// Backtracking over generator images of X at levels <= `levels`; the
/// callback receives flat generator images and returns false to stop.
void search_maps(const TruncSSet& x, const TruncSSet& y, int levels, const MapSearchOptions& opts,
                 const std::function<bool(const std::vector<int>&)>& visit);

MapSet map_set(const SSetPtr& x, const SSetPtr& y);
std::vector<SSetMap> enumerate_maps(const SSetPtr& x, const SSetPtr& y);
std::size_t count_maps(const TruncSSet& x, const TruncSSet& y);

std::optional<SSetMap> find_isomorphism(const SSetPtr& x, const SSetPtr& y);
bool isomorphic(const TruncSSet& x, const TruncSSet& y);

/// Fundamental category with the data needed to push maps through it.
struct Tau1 {
  present::Presented presented;
  std::vector<int> edge_generator;  // generator index per level-1 simplex, -1 if degenerate
  const fincat::FinCat& cat() const { return presented.cat; }
  /// Morphism denoted by a level-1 simplex.
  int edge_morphism(const TruncSSet& x, int e) const;
};
Tau1 tau1_presented(const TruncSSet& x, long bound = present::kDefaultRewriteBound);
fincat::FinCat tau1(const TruncSSet& x, long bound = present::kDefaultRewriteBound);
/// Functor induced on fundamental categories.
fincat::Functor tau1_map(const SSetMap& f, const Tau1& src, const Tau1& tgt);

/// Vertex classes under the equivalence generated by edges.
std::vector<std::vector<int>> pi0(const TruncSSet& x);

struct HornWitness {
  int n = 0, k = 0;
  std::vector<int> faces;  // images of the faces d_i, i != k (entry k is -1)
  std::string describe(const TruncSSet& x) const;
};
struct HornReport {
  bool ok = true;
  std::optional<HornWitness> witness;
  bool unique_fillers = true;
  long horns_checked = 0;
};
HornReport check_horns(const TruncSSet& x, int up_to, bool inner_only);
inline HornReport is_quasicategory(const TruncSSet& x, int up_to) { return check_horns(x, up_to, true); }
inline HornReport is_kan(const TruncSSet& x, int up_to) { return check_horns(x, up_to, false); }

/// Δⁿ × X family exponential: level n holds maps(Δⁿ × X, Y).
struct Exponential {
  TruncSSet object;
  std::vector<SSetPtr> sources;  // Δⁿ × X (truncated as needed)
  std::vector<MapSet> maps;      // per level n
  SSetPtr x, y;
};
Exponential exponential_data(const SSetPtr& x, const SSetPtr& y, int out_dim);
TruncSSet exponential(const SSetPtr& x, const SSetPtr& y, int out_dim);

/// Weak-equivalence test exact for homotopy 1-types: π₀ bijection plus
/// equivalence of fundamental groupoids. Both sides must pass is_kan.
Verdict is_whe_1trunc(const SSetMap& f);

/// Truncates or skeletally extends to `level`, keeping the simplex order of x.
TruncSSet fit_to(const TruncSSet& x, int level);

/// Lookup of simplices by vertex sequence, for objects (standard simplices,
/// nerves of chaotic categories) whose simplices are determined by vertices.
class VertexIndex {
 public:
  explicit VertexIndex(const TruncSSet& x);
  std::vector<int> vertices(int k, int s) const;
  int find(const std::vector<int>& v) const;  // throws if absent

 private:
  const TruncSSet* x_;
  std::vector<std::unordered_map<std::string, int>> index_;
};

}  // namespace segal::sset
