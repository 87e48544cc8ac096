#pragma once

#include <functional>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "dcfl/dfa.hpp"
#include "dcfl/dpda.hpp"

namespace dcfl {

class LanguageSpec;
using LanguagePtr = std::shared_ptr<const LanguageSpec>;

struct DpdaLeaf {
  Dpda machine;
};
struct DfaLeaf {
  Dfa machine;
};
struct PredicateLeaf {
  std::string name;
  std::function<bool(const Word&)> fn;
};
struct UnionNode {
  std::vector<LanguagePtr> parts;
};
struct IntersectionNode {
  std::vector<LanguagePtr> parts;
};
struct ComplementNode {
  LanguagePtr part;
};

// Immutable expression tree over machines and predicates, shared by pointer.
class LanguageSpec {
 public:
  using Node =
      std::variant<DpdaLeaf, DfaLeaf, PredicateLeaf, UnionNode, IntersectionNode, ComplementNode>;

  explicit LanguageSpec(Node n) : node_(std::move(n)) {}
  const Node& node() const { return node_; }

  // Budget is forwarded to every pushdown leaf; 0 means each leaf's default.
  bool member(const Word& w, std::size_t budget = 0) const;

  static LanguagePtr dpda(Dpda m);
  static LanguagePtr dfa(Dfa m);
  static LanguagePtr predicate(std::string name, std::function<bool(const Word&)> fn);
  static LanguagePtr union_of(std::vector<LanguagePtr> parts);
  static LanguagePtr intersection_of(std::vector<LanguagePtr> parts);
  static LanguagePtr complement_of(LanguagePtr part);

 private:
  Node node_;
};

enum class CompositionKind {
  Regular,        // no pushdown leaves
  Component,      // one pushdown language, possibly complemented or combined with regular sets
  DUnion,         // union of `degree` components
  DIntersection,  // intersection of `degree` components
  Unknown,        // predicates, or shapes outside the hierarchy
};

struct Composition {
  CompositionKind kind = CompositionKind::Unknown;
  std::size_t degree = 0;  // components counted; 0 for Regular, meaningless for Unknown
  bool operator==(const Composition&) const = default;
};

// How the expression sits in the union/intersection hierarchy over
// deterministic context-free components. Regular parts are absorbed into
// neighbouring components; complement swaps the two flavours. Expressions
// mixing both flavours at one level, or containing predicates, are Unknown.
Composition classify(const LanguageSpec& spec);

enum class RestrictMode { Intersect, Union };

// Combines the expression with a regular language without changing how it
// classifies: the DFA is attached inside unions and intersections part by
// part, which the distributive laws keep equivalent to one outer combination.
// Throws Error(ArityUnknown) when the expression does not classify.
LanguagePtr restrict_regular(const LanguagePtr& spec, const Dfa& dfa, RestrictMode mode);

}  // namespace dcfl
