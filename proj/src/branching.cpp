#include "akspecht/branching.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace ak {

std::string to_string(NodeConvention c) { return c == NodeConvention::above ? "above" : "below"; }

std::string to_string(NodeStatus s) {
  switch (s) {
    case NodeStatus::removable:
      return "removable";
    case NodeStatus::normal:
      return "normal";
    case NodeStatus::good:
      return "good";
  }
  return "?";
}

namespace {

// Good = lowest normal node within each residue class.
void mark_good(std::vector<NodeClassification>& out) {
  std::map<Residue, std::size_t> lowest;
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (out[i].status != NodeStatus::normal) continue;
    auto it = lowest.find(out[i].residue);
    if (it == lowest.end() || is_lower(out[i].node, out[it->second].node)) lowest[out[i].residue] = i;
  }
  for (const auto& [res, i] : lowest) out[i].status = NodeStatus::good;
}

}  // namespace

std::vector<NodeClassification> classify_nodes(const Multipartition& L, QuantumChar l, NodeConvention convention) {
  std::vector<NodeClassification> out;
  for (const auto& n : removable_nodes(L)) out.push_back({n, canonical_residue(n, l), NodeStatus::removable});

  // Per residue, the addable (+1) and removable (-1) nodes read from top to bottom.
  struct Entry {
    Node node;
    bool addable;
    std::size_t slot;
  };
  std::map<Residue, std::vector<Entry>> word;
  for (std::size_t i = 0; i < out.size(); ++i) word[out[i].residue].push_back({out[i].node, false, i});
  for (const auto& a : addable_nodes(L)) {
    Residue res = canonical_residue(a, l);
    if (word.count(res)) word[res].push_back({a, true, 0});
  }
  for (auto& [res, entries] : word) {
    std::sort(entries.begin(), entries.end(), [](const Entry& x, const Entry& y) { return is_lower(y.node, x.node); });
    if (convention == NodeConvention::below) std::reverse(entries.begin(), entries.end());
    int open = 0;
    for (const auto& e : entries) {
      if (e.addable) {
        ++open;
      } else if (open > 0) {
        --open;
      } else {
        out[e.slot].status = NodeStatus::normal;
      }
    }
  }
  mark_good(out);
  return out;
}

std::vector<NodeClassification> classify_nodes_by_matching(const Multipartition& L, QuantumChar l, NodeConvention convention) {
  std::vector<NodeClassification> out;
  const auto removable = removable_nodes(L);
  const auto addable = addable_nodes(L);
  // "x is on the chosen side of n": above means n lies lower than x.
  auto beyond = [&](const Node& x, const Node& n) { return convention == NodeConvention::above ? is_lower(n, x) : is_lower(x, n); };
  for (const auto& n : removable) {
    Residue res = canonical_residue(n, l);
    std::vector<Node> left;
    for (const auto& a : addable)
      if (canonical_residue(a, l) == res && beyond(a, n)) left.push_back(a);
    std::vector<Node> right;
    for (const auto& x : removable)
      if (canonical_residue(x, l) == res && !(x == n)) right.push_back(x);
    // Kuhn's augmenting paths: a may use x when x lies strictly between a and n.
    std::vector<int> owner(right.size(), -1);
    std::function<bool(std::size_t, std::vector<bool>&)> augment = [&](std::size_t a, std::vector<bool>& seen) {
      for (std::size_t x = 0; x < right.size(); ++x) {
        if (seen[x] || !beyond(left[a], right[x]) || !beyond(right[x], n)) continue;
        seen[x] = true;
        if (owner[x] < 0 || augment(static_cast<std::size_t>(owner[x]), seen)) {
          owner[x] = static_cast<int>(a);
          return true;
        }
      }
      return false;
    };
    std::size_t matched = 0;
    for (std::size_t a = 0; a < left.size(); ++a) {
      std::vector<bool> seen(right.size(), false);
      if (augment(a, seen)) ++matched;
    }
    out.push_back({n, res, matched == left.size() ? NodeStatus::normal : NodeStatus::removable});
  }
  mark_good(out);
  return out;
}

}  // namespace ak
