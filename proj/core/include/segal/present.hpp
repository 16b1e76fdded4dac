#pragma once

#include <string>
#include <vector>

#include "segal/fincat.hpp"

namespace segal::present {

/// A path of generators listed in the order they are traversed.
using Word = std::vector<int>;

struct Generator {
  std::string name;
  int src = 0;
  int tgt = 0;
};

struct Relation {
  int src = 0;  // start object, needed when a side is the empty path
  Word lhs, rhs;
};

/// Category presented by a graph and path relations.
struct Presentation {
  std::vector<std::string> objects;
  std::vector<Generator> gens;
  std::vector<Relation> rels;
};

/// The presented category together with the data needed to evaluate paths.
struct Presented {
  fincat::FinCat cat;
  std::vector<int> gen_morphism;      // generator -> morphism of cat
  std::vector<Word> representative;   // morphism of cat -> a path denoting it
  std::vector<int> object_of;         // presentation object -> object of cat

  int evaluate(int src, const Word& w) const;
};

constexpr long kDefaultRewriteBound = 1000000;

/// Closes the presentation to a finite composition table by coset enumeration
/// over path classes. Throws segal::Error when more than `bound` path classes
/// would have to be defined; the result is never silently truncated.
Presented present(const Presentation& p, long bound = kDefaultRewriteBound);

}  // namespace segal::present
