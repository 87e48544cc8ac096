#include "dcfl/language.hpp"

#include "dcfl/errors.hpp"

namespace dcfl {

bool LanguageSpec::member(const Word& w, std::size_t budget) const {
  struct Visitor {
    const Word& w;
    std::size_t budget;
    bool operator()(const DpdaLeaf& n) const { return accepts(n.machine, w, budget); }
    bool operator()(const DfaLeaf& n) const { return n.machine.accepts(w); }
    bool operator()(const PredicateLeaf& n) const { return n.fn(w); }
    bool operator()(const UnionNode& n) const {
      for (const auto& p : n.parts)
        if (p->member(w, budget)) return true;
      return false;
    }
    bool operator()(const IntersectionNode& n) const {
      for (const auto& p : n.parts)
        if (!p->member(w, budget)) return false;
      return true;
    }
    bool operator()(const ComplementNode& n) const { return !n.part->member(w, budget); }
  };
  return std::visit(Visitor{w, budget}, node_);
}

LanguagePtr LanguageSpec::dpda(Dpda m) {
  return std::make_shared<LanguageSpec>(DpdaLeaf{std::move(m)});
}
LanguagePtr LanguageSpec::dfa(Dfa m) {
  return std::make_shared<LanguageSpec>(DfaLeaf{std::move(m)});
}
LanguagePtr LanguageSpec::predicate(std::string name, std::function<bool(const Word&)> fn) {
  return std::make_shared<LanguageSpec>(PredicateLeaf{std::move(name), std::move(fn)});
}
LanguagePtr LanguageSpec::union_of(std::vector<LanguagePtr> parts) {
  if (parts.empty()) throw Error(ErrorKind::BadParameter, "union of nothing");
  return std::make_shared<LanguageSpec>(UnionNode{std::move(parts)});
}
LanguagePtr LanguageSpec::intersection_of(std::vector<LanguagePtr> parts) {
  if (parts.empty()) throw Error(ErrorKind::BadParameter, "intersection of nothing");
  return std::make_shared<LanguageSpec>(IntersectionNode{std::move(parts)});
}
LanguagePtr LanguageSpec::complement_of(LanguagePtr part) {
  return std::make_shared<LanguageSpec>(ComplementNode{std::move(part)});
}

namespace {

Composition classify_parts(const std::vector<LanguagePtr>& parts, CompositionKind own_flavor) {
  std::vector<Composition> kids;
  for (const auto& p : parts) {
    Composition c = classify(*p);
    if (c.kind == CompositionKind::Unknown) return {CompositionKind::Unknown, 0};
    if (c.kind != CompositionKind::Regular) kids.push_back(c);
  }
  if (kids.empty()) return {CompositionKind::Regular, 0};
  if (kids.size() == 1) {
    // Regular siblings are absorbed: a single component stays a component,
    // and one composite distributes the regular parts over its members.
    return kids.front();
  }
  std::size_t degree = 0;
  for (const Composition& c : kids) {
    if (c.kind == CompositionKind::Component) {
      degree += 1;
    } else if (c.kind == own_flavor) {
      degree += c.degree;
    } else {
      return {CompositionKind::Unknown, 0};  // both flavours at one level
    }
  }
  return {own_flavor, degree};
}

}  // namespace

Composition classify(const LanguageSpec& spec) {
  struct Visitor {
    Composition operator()(const DpdaLeaf&) const { return {CompositionKind::Component, 1}; }
    Composition operator()(const DfaLeaf&) const { return {CompositionKind::Regular, 0}; }
    Composition operator()(const PredicateLeaf&) const { return {CompositionKind::Unknown, 0}; }
    Composition operator()(const UnionNode& n) const {
      return classify_parts(n.parts, CompositionKind::DUnion);
    }
    Composition operator()(const IntersectionNode& n) const {
      return classify_parts(n.parts, CompositionKind::DIntersection);
    }
    Composition operator()(const ComplementNode& n) const {
      Composition c = classify(*n.part);
      if (c.kind == CompositionKind::DUnion) return {CompositionKind::DIntersection, c.degree};
      if (c.kind == CompositionKind::DIntersection) return {CompositionKind::DUnion, c.degree};
      return c;
    }
  };
  return std::visit(Visitor{}, spec.node());
}

namespace {

LanguagePtr wrap(const LanguagePtr& spec, const Dfa& dfa, RestrictMode mode) {
  LanguagePtr reg = LanguageSpec::dfa(dfa);
  if (mode == RestrictMode::Intersect) return LanguageSpec::intersection_of({spec, reg});
  return LanguageSpec::union_of({spec, reg});
}

LanguagePtr restrict_inner(const LanguagePtr& spec, const Dfa& dfa, RestrictMode mode) {
  if (const auto* u = std::get_if<UnionNode>(&spec->node())) {
    std::vector<LanguagePtr> parts;
    for (const auto& p : u->parts) parts.push_back(restrict_inner(p, dfa, mode));
    return LanguageSpec::union_of(std::move(parts));
  }
  if (const auto* i = std::get_if<IntersectionNode>(&spec->node())) {
    std::vector<LanguagePtr> parts;
    for (const auto& p : i->parts) parts.push_back(restrict_inner(p, dfa, mode));
    return LanguageSpec::intersection_of(std::move(parts));
  }
  return wrap(spec, dfa, mode);
}

}  // namespace

LanguagePtr restrict_regular(const LanguagePtr& spec, const Dfa& dfa, RestrictMode mode) {
  if (classify(*spec).kind == CompositionKind::Unknown)
    throw Error(ErrorKind::ArityUnknown, "expression does not classify in the hierarchy");
  return restrict_inner(spec, dfa, mode);
}

}  // namespace dcfl
