#ifndef PCX_CSET_HPP
#define PCX_CSET_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pcx/agents.hpp"

namespace pcx {

using SimplexId = std::int32_t;

class CsetBuilder;

/// A finite chromatic augmented semi-simplicial set: for every subset U of
/// the agent set (the empty set included) a finite list of U-simplices, and
/// for every T <= U a total face map from U-simplices to T-simplices.
/// Immutable after construction; cheap to share.
///
/// Simplex identifiers are opaque dense integers, unique across all levels.
/// Each simplex carries a payload string kept for debugging, deduplication
/// and deterministic ordering; payloads need not be unique.
class Cset {
public:
  const AgentSetPtr& agents_ptr() const { return agents_; }
  const AgentSet& agents() const { return *agents_; }

  int size() const { return static_cast<int>(simplices_.size()); }
  AgentMask level_of(SimplexId s) const { return simplices_.at(s).level; }
  const std::string& payload(SimplexId s) const { return simplices_.at(s).payload; }

  /// The T-face of s, for T a subset of level_of(s). face(s, level_of(s)) == s.
  SimplexId face(SimplexId s, AgentMask t) const;

  /// Simplices at one level, ascending by id.
  std::span<const SimplexId> simplices(AgentMask level) const;

  /// All levels with at least one simplex, ascending by (popcount, mask).
  std::vector<AgentMask> occupied_levels() const;

  int dimension() const;  // max |level| - 1 over non-empty levels; -1 if only the empty level

  /// Vertex of color `agent` inside s; requires agent in level_of(s).
  SimplexId vertex(SimplexId s, int agent) const { return face(s, bit(agent)); }

private:
  friend class CsetBuilder;
  struct Simplex {
    AgentMask level = 0;
    std::string payload;
    // All faces incl. identity, keyed by submask, sorted by mask value.
    std::vector<std::pair<AgentMask, SimplexId>> faces;
  };
  AgentSetPtr agents_;
  std::vector<Simplex> simplices_;
  std::vector<std::vector<SimplexId>> by_level_;  // indexed by mask
};

using CsetPtr = std::shared_ptr<const Cset>;

/// Incremental construction. Faces for all proper subsets must be provided
/// before build(); the identity face is filled in automatically. build()
/// checks totality and level-compatibility of face targets, but not the
/// composition law -- that is validate()'s job, so that deliberately broken
/// tables can be constructed and reported.
class CsetBuilder {
public:
  explicit CsetBuilder(AgentSetPtr agents);

  SimplexId add_simplex(AgentMask level, std::string payload);
  void set_face(SimplexId s, AgentMask t, SimplexId target);
  int count() const { return static_cast<int>(work_.size()); }

  CsetPtr build();

private:
  AgentSetPtr agents_;
  struct Pending {
    AgentMask level;
    std::string payload;
    std::vector<std::pair<AgentMask, SimplexId>> faces;
  };
  std::vector<Pending> work_;
};

/// Level-preserving map of simplices between two csets.
struct CsetMorphism {
  CsetPtr source;
  CsetPtr target;
  std::vector<SimplexId> map;  // indexed by source simplex id

  SimplexId operator()(SimplexId s) const { return map.at(s); }
};

CsetMorphism identity_morphism(CsetPtr x);
CsetMorphism compose(const CsetMorphism& second, const CsetMorphism& first);  // second after first

/// Checks color preservation and naturality (commutation with every face map).
/// Returns human-readable violations; empty means valid.
std::vector<std::string> morphism_violations(const CsetMorphism& f);
bool is_valid_morphism(const CsetMorphism& f);
bool is_levelwise_injective(const CsetMorphism& f);

struct ValidationReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

/// Exhaustive check of the presheaf laws: identity faces and the full
/// composite equation face(T) = face(T) o face(V) for all T <= V <= level.
ValidationReport validate(const Cset& x);

/// The representable presheaf on U: exactly one T-simplex per T <= U.
CsetPtr standard_simplex(AgentSetPtr agents, AgentMask u);

/// Simplices maximal under the face relation, ascending by id. Simplices at
/// the empty level are never reported: they act as generalized connected
/// components, not geometric cells.
std::vector<SimplexId> facets(const Cset& x);

struct ProductResult {
  CsetPtr cset;
  CsetMorphism to_first;
  CsetMorphism to_second;
  /// id in the product for a given pair of factor ids (same level)
  SimplexId pair_id(SimplexId a, SimplexId b) const;
  std::vector<std::pair<SimplexId, SimplexId>> pairs;  // indexed by product id
};

/// Levelwise product: U-simplices are pairs of U-simplices, faces act
/// componentwise. Requires equal agent sets.
ProductResult product(CsetPtr x, CsetPtr y);

/// Finite diagram of csets over one agent set.
struct Diagram {
  std::vector<CsetPtr> nodes;
  struct Edge {
    int from = 0, to = 0;
    std::vector<SimplexId> map;  // by simplex id of nodes[from]
  };
  std::vector<Edge> edges;
};

struct ColimitResult {
  CsetPtr cset;
  std::vector<std::vector<SimplexId>> injections;  // per node, by node-local id
};

/// Disjoint union of all node simplices, quotiented by the smallest
/// equivalence identifying x with f(x) for every diagram edge f, with face
/// maps induced on classes (union-find). Classes are numbered ascending by
/// (level size, level, first occurrence), so output ids are deterministic
/// given the diagram order. Throws ValidationError when the induced face
/// maps are ill-defined, which signals a non-functorial diagram.
ColimitResult colimit(const Diagram& d);

/// Coproduct = colimit with no edges.
ColimitResult coproduct(CsetPtr x, CsetPtr y);

/// Keeps exactly the simplices with keep[id] true. The kept set must be
/// closed under faces (throws ValidationError otherwise). Returns the
/// sub-cset and the inclusion morphism into x.
struct SubCsetResult {
  CsetPtr cset;
  CsetMorphism inclusion;                 // sub -> x
  std::vector<SimplexId> old_of_new;      // sub id -> x id
  std::vector<SimplexId> new_of_old;      // x id -> sub id or -1
};
SubCsetResult sub_cset(CsetPtr x, const std::vector<bool>& keep);

/// Searches for an isomorphism (bijective levelwise, commuting with faces).
/// With payload_preserving, images must carry equal payloads; this is the
/// equality notion used for canonical comparisons, since colimits renumber
/// identifiers. Returns the mapping X -> Y if one exists.
std::optional<std::vector<SimplexId>> find_isomorphism(const Cset& x, const Cset& y,
                                                       bool payload_preserving);

inline bool isomorphic(const Cset& x, const Cset& y) {
  return find_isomorphism(x, y, false).has_value();
}
/// Structural equality: payload-preserving isomorphism.
inline bool structurally_equal(const Cset& x, const Cset& y) {
  return find_isomorphism(x, y, true).has_value();
}

}  // namespace pcx

#endif
