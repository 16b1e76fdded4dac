#pragma once

#include <optional>
#include <string>
#include <vector>

#include "segal/bisset.hpp"
#include "segal/sset.hpp"

namespace segal::totalize {

/// Δⁿ × Jᵐ truncated at level d; vertex (i, a) has index i * (m + 1) + a.
sset::TruncSSet representable(int n, int m, int d);

/// (t^! X)_{n,m} = maps(Δⁿ × Jᵐ, X) with the data needed to evaluate them.
struct TUpper {
  bisset::TruncBiSSet object;
  sset::SSetPtr x;
  int p = 0, q = 0;
  int level = 0;                     // truncation of the sources Δⁿ × Jᵐ
  std::vector<sset::SSetPtr> sources;  // per bidegree id n * (q + 1) + m
  std::vector<sset::MapSet> maps;
  const sset::MapSet& at(int n, int m) const { return maps[static_cast<std::size_t>(n) * (q + 1) + m]; }
  const sset::SSetPtr& source(int n, int m) const { return sources[static_cast<std::size_t>(n) * (q + 1) + m]; }
};

/// X without a coskeletality flag is read as the coskeleton of its truncation.
TUpper t_upper_data(const sset::SSetPtr& x, int p, int q);
bisset::TruncBiSSet t_upper(const sset::TruncSSet& x, int p, int q);

/// Category of elements of Y restricted to its generators, with the face
/// relations used to glue the pieces Δⁿ × Jᵐ.
struct ElementsDiagram {
  struct Element {
    int n, m, simplex;
  };
  struct Link {
    int element;        // the generator whose face this is
    bool horizontal;
    int index;          // face index
    int target;         // element carrying the face's nondegenerate base
    std::vector<int> hword, vword;  // degeneracies from the base to the face
  };
  std::vector<Element> elements;
  std::vector<Link> links;
};
ElementsDiagram elements_diagram(const bisset::TruncBiSSet& y);

struct TLower {
  sset::TruncSSet object;
  ElementsDiagram diagram;
  int out_dim = 0;
  std::vector<sset::SSetPtr> pieces;           // per element, Δⁿ × Jᵐ at out_dim
  std::vector<std::vector<int>> offset;        // [level][element] -> first instance
  std::vector<std::vector<int>> class_of;      // [level][instance] -> simplex of object
  std::vector<std::vector<int>> origin;        // [level][simplex] -> least instance
  int instance(int level, int element, int s) const { return offset[level][element] + s; }
};
/// Colimit of the pieces over the elements of Y, truncated at out_dim. Exact
/// for skeletally generated Y inside its window.
TLower t_lower_data(const bisset::TruncBiSSet& y, int out_dim);
sset::TruncSSet t_lower(const bisset::TruncBiSSet& y, int out_dim);

/// Image table of a representable piece (at any truncation) under map f of
/// (t^! X)_{n,m}: [level][simplex of piece] -> simplex of X.
std::vector<std::vector<int>> evaluate(const TUpper& t, int n, int m, int f, const sset::TruncSSet& piece);

/// Transposes a bisimplicial map Y -> t^! X to t_! Y -> X.
sset::SSetMap transpose_map(const TLower& low, const sset::SSetPtr& low_ptr, const TUpper& up, const bisset::BiSSetMap& g);

struct Counit {
  TUpper upper;
  TLower lower;
  sset::SSetMap map;  // t_! t^! X -> X
};
Counit counit(const sset::SSetPtr& x, int out_dim, int p, int q);

struct AdjunctionReport {
  bool ok = false;
  std::size_t lower_count = 0, upper_count = 0;
  std::string witness;
};
/// |maps(t_! Y, X)| = |maps(Y, t^! X)| with the bijection given by transposition.
AdjunctionReport adjunction_count_check(const bisset::BiSSetPtr& y, const sset::SSetPtr& x);

struct Comparison {
  Verdict verdict;
  std::optional<bisset::BiSSetMap> iso;
};
/// Canonical comparison t^!(N C) -> N C reading a functor grid off each map.
Comparison compare_with_classifying(const TUpper& t, const fincat::FinCat& c, const bisset::Classifying& nc,
                                    const bisset::BiSSetPtr& t_ptr, const bisset::BiSSetPtr& nc_ptr);

}  // namespace segal::totalize
