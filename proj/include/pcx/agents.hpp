#ifndef PCX_AGENTS_HPP
#define PCX_AGENTS_HPP

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace pcx {

/// Subset of agents encoded as a bitmask over the agent set's fixed order.
using AgentMask = std::uint32_t;

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: bad JSON, bad formula syntax, bad CLI shorthand.
class ParseError : public Error {
public:
  using Error::Error;
};

/// A construction exceeded the configured simplex budget.
class BudgetError : public Error {
public:
  BudgetError(const std::string& msg, std::string size_report)
      : Error(msg), report(std::move(size_report)) {}
  std::string report;
};

/// A structural invariant failed (non-functorial diagram, broken oracle, ...).
class ValidationError : public Error {
public:
  using Error::Error;
};

/// Fixed, totally ordered set of agent names. The order never changes once
/// constructed; masks, face tables and the GF(2) boundary all depend on it.
class AgentSet {
public:
  explicit AgentSet(std::vector<std::string> names);

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(int i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }

  /// Index of a name; throws ParseError for unknown agents.
  int index(const std::string& name) const;
  bool contains(const std::string& name) const;

  AgentMask full_mask() const { return (size() == 32) ? ~AgentMask{0} : ((AgentMask{1} << size()) - 1); }
  AgentMask mask_of(const std::vector<std::string>& subset) const;

  /// Renders a mask as "{a,b}" in agent order.
  std::string set_string(AgentMask m) const;
  /// Renders a mask as comma-joined names ("" for the empty set); used as
  /// the JSON level key.
  std::string level_key(AgentMask m) const;
  /// Inverse of level_key.
  AgentMask parse_level_key(const std::string& key) const;

  bool operator==(const AgentSet& other) const { return names_ == other.names_; }

private:
  std::vector<std::string> names_;
};

using AgentSetPtr = std::shared_ptr<const AgentSet>;

inline int popcount(AgentMask m) { return __builtin_popcount(m); }
inline bool subset_of(AgentMask a, AgentMask b) { return (a & ~b) == 0; }
inline AgentMask bit(int agent) { return AgentMask{1} << agent; }
inline bool has_bit(AgentMask m, int agent) { return (m >> agent) & 1; }

/// All submasks of m, ascending by (popcount, value). Includes 0 and m.
std::vector<AgentMask> submasks_sorted(AgentMask m);

/// All agent indices present in m, ascending.
std::vector<int> mask_members(AgentMask m);

}  // namespace pcx

#endif
