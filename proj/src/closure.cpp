#include "closure.hpp"

#include <algorithm>
#include <limits>

namespace kaninj::detail {

Condensed condense(std::size_t n, const std::vector<std::vector<std::size_t>>& adjacency) {
  constexpr std::size_t unvisited = std::numeric_limits<std::size_t>::max();

  // Iterative Tarjan. Components are emitted in reverse topological order,
  // so reachability can be accumulated as they are popped.
  std::vector<std::size_t> index(n, unvisited), lowlink(n, 0), tarjan_id(n, unvisited);
  std::vector<bool> on_stack(n, false);
  std::vector<std::size_t> stack;
  std::vector<std::pair<std::size_t, std::size_t>> call;  // node, next edge
  std::vector<std::vector<std::size_t>> members;
  std::size_t counter = 0;

  for (std::size_t root = 0; root < n; ++root) {
    if (index[root] != unvisited) continue;
    call.emplace_back(root, 0);
    index[root] = lowlink[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!call.empty()) {
      auto& [v, edge] = call.back();
      if (edge < adjacency[v].size()) {
        std::size_t w = adjacency[v][edge++];
        if (index[w] == unvisited) {
          index[w] = lowlink[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          call.emplace_back(w, 0);
        } else if (on_stack[w]) {
          lowlink[v] = std::min(lowlink[v], index[w]);
        }
        continue;
      }
      std::size_t done = v;
      call.pop_back();
      if (!call.empty()) {
        std::size_t parent = call.back().first;
        lowlink[parent] = std::min(lowlink[parent], lowlink[done]);
      }
      if (lowlink[done] == index[done]) {
        std::vector<std::size_t> comp;
        std::size_t w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          tarjan_id[w] = members.size();
          comp.push_back(w);
        } while (w != done);
        members.push_back(std::move(comp));
      }
    }
  }

  const std::size_t count = members.size();
  std::vector<Bitset> tarjan_reach(count, Bitset(count));
  for (std::size_t c = 0; c < count; ++c) {
    tarjan_reach[c].set(c);
    for (std::size_t v : members[c]) {
      for (std::size_t w : adjacency[v]) {
        std::size_t d = tarjan_id[w];
        if (d != c) tarjan_reach[c] |= tarjan_reach[d];
      }
    }
  }

  // Renumber by smallest member so ids are stable under edge order.
  std::vector<std::size_t> renumber(count, unvisited);
  std::size_t next = 0;
  for (std::size_t v = 0; v < n; ++v) {
    std::size_t c = tarjan_id[v];
    if (renumber[c] == unvisited) renumber[c] = next++;
  }

  Condensed out;
  out.count = count;
  out.component.resize(n);
  for (std::size_t v = 0; v < n; ++v) out.component[v] = renumber[tarjan_id[v]];
  out.reach.assign(count, Bitset(count));
  for (std::size_t c = 0; c < count; ++c) {
    Bitset& target = out.reach[renumber[c]];
    for (std::size_t d = tarjan_reach[c].find_first(); d != Bitset::npos; d = tarjan_reach[c].find_next(d)) {
      target.set(renumber[d]);
    }
  }
  return out;
}

}  // namespace kaninj::detail
