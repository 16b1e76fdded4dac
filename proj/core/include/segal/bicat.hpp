#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "segal/bisset.hpp"
#include "segal/sset.hpp"
#include "segal/totalize.hpp"

namespace segal::bicat {

enum class Side { qcat, css };

/// Hom-category τ₁ of an exponential: objects are the maps X -> Y, morphisms
/// are classes of homotopies.
///
/// A 1-cell is a 1-simplex of the exponential on the quasicategory side. On
/// the Segal-space side cells number the (1,0) bisimplices first, then the
/// (0,1) bisimplices.
struct HomCat2 {
  Side side = Side::qcat;
  fincat::CatPtr carrier;
  int p = 0, q = 0;  // exponential window (q is 0 on the quasicategory side)
  std::shared_ptr<const sset::Exponential> sexp;
  std::shared_ptr<const sset::Tau1> stau;
  std::shared_ptr<const bisset::BiExponential> bexp;
  std::shared_ptr<const bisset::BiTau1> btau;
  std::vector<int> object_of_map;   // map index -> carrier object
  std::vector<int> map_of_object;
  std::vector<int> representative;  // carrier morphism -> a horizontal 1-cell denoting it

  int num_maps() const { return static_cast<int>(object_of_map.size()); }
  int num_cells() const;
  int cell_morphism(int cell) const;
  int object_of(const sset::SSetMap& f) const;
  int object_of(const bisset::BiSSetMap& f) const;
  sset::SSetMap sset_map(int object) const;
  bisset::BiSSetMap bisset_map(int object) const;
};

/// Throws UncertifiedError unless Y passes the inner horn check up to its dimension.
HomCat2 hom_category_qcat(const sset::SSetPtr& x, const sset::SSetPtr& y, int out_dim = 2);
/// Throws UncertifiedError unless Y is strict Segal and complete (1-truncated test).
HomCat2 hom_category_css(const bisset::BiSSetPtr& x, const bisset::BiSSetPtr& y, int p = 2, int q = 2);

/// Whiskering of a carrier morphism of H(X,Y) by an object g of H(Y,Z): g·α.
int whisker_post(const HomCat2& xy, int alpha, const HomCat2& yz, int g, const HomCat2& xz);
/// Whiskering of a carrier morphism of H(Y,Z) by an object f of H(X,Y): β·f.
int whisker_pre(const HomCat2& xy, int f, const HomCat2& yz, int beta, const HomCat2& xz);

/// H(X,Y) × H(Y,Z) -> H(X,Z), with β∗α = (g'·α)∘(β·f). Throws if whiskering
/// does not descend to classes or the result is not a functor.
fincat::Functor horizontal_compose(const HomCat2& xy, const HomCat2& yz, const HomCat2& xz);

struct AxiomReport {
  bool ok = true;
  std::string witness;
  long checked = 0;
};

/// The full sub-2-category on a list of objects, hom-categories built on demand.
class Sub2Category {
 public:
  static Sub2Category qcat(std::vector<sset::SSetPtr> objects, int out_dim = 2);
  static Sub2Category css(std::vector<bisset::BiSSetPtr> objects, int p = 2, int q = 2);

  Side side() const { return side_; }
  int size() const;
  const HomCat2& hom(int a, int b) const;
  /// H(a,b) × H(b,c) -> H(a,c); domain objects are indexed via fincat::product_object.
  const fincat::Functor& composition(int a, int b, int c) const;
  /// β∗α for morphisms α of H(a,b) and β of H(b,c).
  int compose(int a, int b, int c, int alpha, int beta) const;
  int identity_object(int a) const;

  AxiomReport check_units() const;
  AxiomReport check_associativity() const;
  /// Both whiskering orders of every 2-cell square agree, and vertical
  /// composition commutes with horizontal composition.
  AxiomReport check_interchange() const;

 private:
  Side side_ = Side::qcat;
  int p_ = 2, q_ = 2;
  std::vector<sset::SSetPtr> sobjects_;
  std::vector<bisset::BiSSetPtr> bobjects_;
  mutable std::map<std::pair<int, int>, std::shared_ptr<const HomCat2>> homs_;
  mutable std::map<std::tuple<int, int, int>, std::shared_ptr<const fincat::Functor>> comps_;
};

struct EquivalenceReport {
  bool ok = false;
  std::string witness;         // inverse and 2-cells, or the exhaustion summary
  int inverse = -1;            // index of g among the maps Y -> X
  int unit = -1, counit = -1;  // invertible 2-cells g∘f ≅ id and f∘g ≅ id
  int candidates = 0;
};
/// Searches every g : Y -> X for invertible 2-cells g∘f ≅ id and f∘g ≅ id.
EquivalenceReport is_equivalence_2cat(const sset::SSetMap& f, int out_dim = 2);
EquivalenceReport is_equivalence_2cat(const bisset::BiSSetMap& f, int p = 2, int q = 2);

/// The canonical map t^!⟨X,Y⟩ -> ⟨t^!X, t^!Y⟩.
struct Bridge {
  std::shared_ptr<const sset::Exponential> e;
  totalize::TUpper tx, ty, te;
  bisset::BiSSetPtr tx_ptr, ty_ptr, te_ptr;
  std::shared_ptr<const bisset::BiExponential> b;
  bisset::BiSSetPtr b_ptr;
  bisset::BiSSetMap map;
};
Bridge bridge_map(const sset::SSetPtr& x, const sset::SSetPtr& y, int p = 2, int q = 2);

struct BridgeReport {
  Verdict dk;            // Dwyer–Kan test on the canonical map
  bool isomorphism = false;
  Verdict hom_level;     // τ₁⟨X,Y⟩ ≅ Ho of both sides, with Ho of the map an isomorphism
  int p = 0, q = 0;
};
BridgeReport bridge_check(const sset::SSetPtr& x, const sset::SSetPtr& y, int p = 2, int q = 2);

}  // namespace segal::bicat
