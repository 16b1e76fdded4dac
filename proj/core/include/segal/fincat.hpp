#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "segal/common.hpp"

namespace segal::fincat {

struct Morphism {
  std::string id;
  int src = 0;
  int tgt = 0;
};

/// A finite category with a total composition table.
///
/// Objects and morphisms are kept sorted by identifier, so index order is the
/// canonical (lexicographic) order used by every enumeration in the library.
/// Instances are immutable once built.
class FinCat {
 public:
  FinCat() = default;

  /// Validates and canonicalizes. `comp` is indexed [g * |mor| + f] and holds
  /// g∘f for composable (g, f) and -1 elsewhere. Throws segal::Error naming
  /// the offending morphisms on any violated law.
  static FinCat build(std::vector<std::string> objects, std::vector<Morphism> morphisms,
                      std::vector<int> identity, std::vector<int> comp);

  int num_objects() const { return static_cast<int>(objects_.size()); }
  int num_morphisms() const { return static_cast<int>(morphisms_.size()); }
  const std::string& object(int x) const { return objects_[x]; }
  const Morphism& morphism(int f) const { return morphisms_[f]; }
  const std::vector<std::string>& objects() const { return objects_; }
  const std::vector<Morphism>& morphisms() const { return morphisms_; }
  int identity(int x) const { return identity_[x]; }
  bool is_identity(int f) const { return identity_[morphisms_[f].src] == f; }

  /// g∘f, or -1 when tgt(f) != src(g).
  int compose(int g, int f) const { return comp_[static_cast<std::size_t>(g) * morphisms_.size() + f]; }
  const std::vector<int>& hom(int x, int y) const { return hom_[static_cast<std::size_t>(x) * objects_.size() + y]; }

  int object_index(const std::string& id) const;    // -1 if absent
  int morphism_index(const std::string& id) const;  // -1 if absent

  /// Two-sided inverse of f, or -1.
  int inverse(int f) const { return inverse_[f]; }
  bool is_iso(int f) const { return inverse_[f] >= 0; }
  bool is_groupoid() const;

 private:
  std::vector<std::string> objects_;
  std::vector<Morphism> morphisms_;
  std::vector<int> identity_;
  std::vector<int> comp_;
  std::vector<std::vector<int>> hom_;
  std::vector<int> inverse_;
  std::unordered_map<std::string, int> object_lookup_;
  std::unordered_map<std::string, int> morphism_lookup_;
};

using CatPtr = std::shared_ptr<const FinCat>;

inline CatPtr share(FinCat c) { return std::make_shared<const FinCat>(std::move(c)); }

/// Textual description accepted by make_category. Identities are implicit and
/// named `id_<obj>`; composites with identities need not be listed.
struct CategorySpec {
  std::vector<std::string> objects;
  struct Arrow {
    std::string id, src, tgt;
  };
  std::vector<Arrow> arrows;
  struct Comp {
    std::string g, f, h;  // g . f = h
  };
  std::vector<Comp> comps;
};

FinCat make_category(const CategorySpec& spec);

FinCat interval(int n);           // [n]
FinCat groupoid_interval(int m);  // I[m]
FinCat walking_idempotent();
FinCat iso_subcategory(const FinCat& c);
FinCat product(const FinCat& c, const FinCat& d);

/// Index of object (x, y) / morphism (f, g) inside product(c, d).
int product_object(const FinCat& p, const FinCat& c, const FinCat& d, int x, int y);
int product_morphism(const FinCat& p, const FinCat& c, const FinCat& d, int f, int g);

/// Bare functor data between two categories known from context.
struct FunctorData {
  std::vector<int> obj;
  std::vector<int> mor;
  bool operator==(const FunctorData&) const = default;
  auto operator<=>(const FunctorData&) const = default;
};

struct Functor {
  CatPtr src, tgt;
  FunctorData data;

  int obj(int x) const { return data.obj[x]; }
  int mor(int f) const { return data.mor[f]; }
  /// Exhaustive check of endpoint, identity and composition preservation.
  Verdict validate() const;
};

Functor identity_functor(const CatPtr& c);
Functor compose(const Functor& g, const Functor& f);  // g∘f

struct NatTrans {
  Functor source, target;
  std::vector<int> component;  // object of C -> morphism of D
  Verdict validate() const;
};

struct SearchOptions {
  bool injective = false;  // injective on objects and morphisms
  // Optional per-object candidate filter (target objects allowed for x).
  std::function<bool(int x, int y)> object_filter;
};

/// Backtracking enumeration of functors C -> D in deterministic search order.
/// The callback returns false to stop early.
void search_functors(const FinCat& c, const FinCat& d, const SearchOptions& opts,
                     const std::function<bool(const FunctorData&)>& visit);

/// All functors C -> D sorted lexicographically by (object images, morphism images).
std::vector<FunctorData> enumerate_functor_data(const FinCat& c, const FinCat& d);
std::vector<Functor> enumerate_functors(const CatPtr& c, const CatPtr& d);
std::vector<NatTrans> enumerate_nat_trans(const Functor& f, const Functor& g);

/// Fun(C, D). Objects are named by functor_name.
FinCat functor_category(const FinCat& c, const FinCat& d);
std::string functor_name(const FinCat& c, const FinCat& d, const FunctorData& f);

/// Isomorphism classes of objects, each sorted, ordered by least member.
std::vector<std::vector<int>> tau0(const FinCat& c);

Verdict is_categorical_equivalence(const Functor& f);
Verdict is_isofibration(const Functor& f);

/// Backtracking search for an isomorphism of categories.
std::optional<FunctorData> find_isomorphism(const FinCat& c, const FinCat& d);
inline bool isomorphic(const FinCat& c, const FinCat& d) { return find_isomorphism(c, d).has_value(); }

/// `.fincat` serialization (identities written implicitly as id_<obj>).
std::string write_fincat(const FinCat& c);

}  // namespace segal::fincat
