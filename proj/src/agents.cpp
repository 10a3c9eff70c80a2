#include "pcx/agents.hpp"

#include <algorithm>
#include <set>

namespace pcx {

AgentSet::AgentSet(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.size() > 20)
    throw ParseError("agent sets above 20 agents are not supported");
  std::set<std::string> seen;
  for (const auto& n : names_) {
    if (n.empty()) throw ParseError("empty agent name");
    if (n.find(',') != std::string::npos || n.find('{') != std::string::npos ||
        n.find('}') != std::string::npos || n.find('@') != std::string::npos ||
        n.find(':') != std::string::npos || n.find('|') != std::string::npos)
      throw ParseError("agent name '" + n + "' contains a reserved character");
    if (!seen.insert(n).second)
      throw ParseError("duplicate agent name '" + n + "'");
  }
}

int AgentSet::index(const std::string& name) const {
  for (int i = 0; i < size(); ++i)
    if (names_[i] == name) return i;
  throw ParseError("unknown agent name '" + name + "'");
}

bool AgentSet::contains(const std::string& name) const {
  return std::find(names_.begin(), names_.end(), name) != names_.end();
}

AgentMask AgentSet::mask_of(const std::vector<std::string>& subset) const {
  AgentMask m = 0;
  for (const auto& n : subset) m |= bit(index(n));
  return m;
}

std::string AgentSet::set_string(AgentMask m) const {
  std::string out = "{";
  bool first = true;
  for (int i = 0; i < size(); ++i) {
    if (!has_bit(m, i)) continue;
    if (!first) out += ",";
    out += names_[i];
    first = false;
  }
  out += "}";
  return out;
}

std::string AgentSet::level_key(AgentMask m) const {
  std::string out;
  bool first = true;
  for (int i = 0; i < size(); ++i) {
    if (!has_bit(m, i)) continue;
    if (!first) out += ",";
    out += names_[i];
    first = false;
  }
  return out;
}

AgentMask AgentSet::parse_level_key(const std::string& key) const {
  if (key.empty()) return 0;
  AgentMask m = 0;
  std::size_t pos = 0;
  while (pos <= key.size()) {
    auto comma = key.find(',', pos);
    std::string part = key.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    m |= bit(index(part));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return m;
}

std::vector<AgentMask> submasks_sorted(AgentMask m) {
  std::vector<AgentMask> subs;
  AgentMask t = m;
  for (;;) {
    subs.push_back(t);
    if (t == 0) break;
    t = (t - 1) & m;
  }
  std::sort(subs.begin(), subs.end(), [](AgentMask a, AgentMask b) {
    if (popcount(a) != popcount(b)) return popcount(a) < popcount(b);
    return a < b;
  });
  return subs;
}

std::vector<int> mask_members(AgentMask m) {
  std::vector<int> out;
  for (int i = 0; i < 32; ++i)
    if (has_bit(m, i)) out.push_back(i);
  return out;
}

}  // namespace pcx
