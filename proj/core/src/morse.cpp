#include "orbitspace/morse.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "orbitspace/error.hpp"

namespace orbitspace {

bool MorseGraph::has_edge(std::size_t from, std::size_t to) const {
  return std::any_of(edges.begin(), edges.end(),
                     [&](const Edge& e) { return e.from == from && e.to == to; });
}

std::vector<IndexSet> MorseGraph::reachability() const {
  const std::size_t n = size();
  std::vector<IndexSet> reach(n, IndexSet(n));
  for (std::size_t i = 0; i < n; ++i) reach[i].insert(i);
  for (const auto& e : edges) reach[e.from].insert(e.to);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (reach[i].contains(k)) reach[i] |= reach[k];
  return reach;
}

SccResult strongly_connected_components(const std::vector<std::vector<std::size_t>>& succ) {
  // Iterative Tarjan; grid graphs are too deep for recursion.
  const std::size_t n = succ.size();
  constexpr std::size_t kUnvisited = static_cast<std::size_t>(-1);
  SccResult result;
  result.component.assign(n, kUnvisited);
  std::vector<std::size_t> index(n, kUnvisited), low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<std::size_t> stack;
  std::vector<std::pair<std::size_t, std::size_t>> call;  // (vertex, next successor slot)
  std::size_t counter = 0;
  for (std::size_t root = 0; root < n; ++root) {
    if (index[root] != kUnvisited) continue;
    call.emplace_back(root, 0);
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!call.empty()) {
      auto& [v, slot] = call.back();
      if (slot < succ[v].size()) {
        const auto w = succ[v][slot++];
        if (index[w] == kUnvisited) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          call.emplace_back(w, 0);
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      const auto done = v;
      call.pop_back();
      if (!call.empty()) low[call.back().first] = std::min(low[call.back().first], low[done]);
      if (low[done] == index[done]) {
        std::size_t w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          result.component[w] = result.count;
        } while (w != done);
        ++result.count;
      }
    }
  }
  return result;
}

ChainDigraph chain_digraph(const IndexedModel& m) {
  ChainDigraph g;
  g.size = m.size();
  for (std::size_t x = 0; x < m.size(); ++x) {
    for (auto a : m.alpha(x).members()) g.arcs.emplace_back(a, x);
    for (auto w : m.omega(x).members()) g.arcs.emplace_back(x, w);
    if (m.kind(x) != OrbitKind::Nonrecurrent) g.arcs.emplace_back(x, x);
  }
  std::sort(g.arcs.begin(), g.arcs.end());
  g.arcs.erase(std::unique(g.arcs.begin(), g.arcs.end()), g.arcs.end());
  return g;
}

namespace {

std::vector<std::vector<std::size_t>> successor_lists(const ChainDigraph& g) {
  std::vector<std::vector<std::size_t>> succ(g.size);
  for (auto [a, b] : g.arcs) succ[a].push_back(b);
  return succ;
}

struct UnionFind {
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<std::size_t> parent;
};

}  // namespace

IndexSet chain_recurrent_nodes(const IndexedModel& m) {
  const auto g = chain_digraph(m);
  const auto succ = successor_lists(g);
  const auto scc = strongly_connected_components(succ);
  std::vector<std::size_t> comp_size(scc.count, 0);
  for (auto c : scc.component) ++comp_size[c];
  IndexSet cr(m.size());
  for (std::size_t v = 0; v < m.size(); ++v) {
    const bool loop = std::find(succ[v].begin(), succ[v].end(), v) != succ[v].end();
    if (loop || comp_size[scc.component[v]] > 1) cr.insert(v);
  }
  return cr;
}

MorseGraph morse_graph(const IndexedModel& m) {
  if (!m.model().flags().compact) throw PreconditionError("Morse graph requires a compact model");
  const std::size_t n = m.size();
  const auto g = chain_digraph(m);
  const auto succ = successor_lists(g);
  const auto scc = strongly_connected_components(succ);
  // Limit sets of a compact flow are internally chain transitive, so their
  // members are chain recurrent even when the digraph misses the cycle.
  IndexSet recurrent = chain_recurrent_nodes(m);
  for (std::size_t x = 0; x < n; ++x) recurrent |= m.alpha(x) | m.omega(x);

  // Group chain-recurrent nodes: same SCC, adjacency, or closure links.
  UnionFind uf(n);
  std::vector<std::size_t> scc_rep(scc.count, n);
  for (auto v : recurrent.members()) {
    for (auto w : (m.neighbours(v) & recurrent).members()) uf.unite(v, w);
    for (auto w : (m.closure(v) & recurrent).members()) uf.unite(v, w);
    auto& rep = scc_rep[scc.component[v]];
    if (rep == n) rep = v;
    else uf.unite(rep, v);
  }

  // Iterate: absorb connecting nodes whose ends coincide, and merge cycles
  // among Morse sets, until nothing changes.
  for (bool changed = true; changed;) {
    changed = false;
    std::vector<std::size_t> set_of(n, n);
    for (auto v : recurrent.members()) set_of[v] = uf.find(v);

    auto limit_set_id = [&](std::size_t x, const IndexSet& limit, const char* which) {
      std::size_t id = n;
      for (auto a : limit.members()) {
        if (set_of[a] == n)
          throw ModelInconsistency("node '" + m.id(x) + "': " + which +
                                   "-limit meets non-recurrent node '" + m.id(a) + "'");
        if (id != n && set_of[a] != id)
          throw ModelInconsistency("node '" + m.id(x) + "': " + which +
                                   "-limit straddles two Morse sets");
        id = set_of[a];
      }
      if (id == n)
        throw ModelInconsistency("node '" + m.id(x) + "': empty " + which + "-limit");
      return id;
    };

    std::vector<std::vector<std::size_t>> set_succ(n);
    for (std::size_t x = 0; x < n; ++x) {
      if (recurrent.contains(x)) continue;
      const auto from = limit_set_id(x, m.alpha(x), "alpha");
      const auto to = limit_set_id(x, m.omega(x), "omega");
      if (from == to) {
        recurrent.insert(x);
        uf.unite(x, from);
        changed = true;
      } else {
        set_succ[from].push_back(to);
      }
    }
    if (changed) continue;
    const auto cond = strongly_connected_components(set_succ);
    std::vector<std::size_t> first(cond.count, n);
    for (auto v : recurrent.members()) {
      const auto root = uf.find(v);
      const auto c = cond.component[root];
      if (first[c] == n) first[c] = root;
      else if (uf.find(first[c]) != root) {
        uf.unite(first[c], root);
        changed = true;
      }
    }
  }

  MorseGraph graph;
  for (std::size_t i = 0; i < n; ++i) graph.atom_labels.push_back(m.id(i));
  std::vector<std::size_t> set_index(n, n);
  for (auto v : recurrent.members()) {
    const auto root = uf.find(v);
    if (set_index[root] == n) {
      set_index[root] = graph.morse_sets.size();
      graph.morse_sets.emplace_back(n);
    }
    graph.morse_sets[set_index[root]].insert(v);
  }
  // Sets were created in order of smallest member, so numbering is stable.
  for (std::size_t x = 0; x < n; ++x) {
    if (recurrent.contains(x)) continue;
    const auto from = set_index[uf.find(m.alpha(x).first())];
    const auto to = set_index[uf.find(m.omega(x).first())];
    auto it = std::find_if(graph.edges.begin(), graph.edges.end(), [&](const auto& e) {
      return e.from == from && e.to == to;
    });
    if (it == graph.edges.end()) {
      graph.edges.push_back({from, to, IndexSet(n)});
      it = std::prev(graph.edges.end());
    }
    it->connecting.insert(x);
  }
  std::sort(graph.edges.begin(), graph.edges.end(),
            [](const auto& a, const auto& b) { return std::tie(a.from, a.to) < std::tie(b.from, b.to); });
  return graph;
}

MorseGraph morse_graph(const FlowModel& model) { return morse_graph(IndexedModel(model)); }

QuotientSpace morse_quotient(const IndexedModel& m) {
  const auto g = morse_graph(m);
  Partition blocks = g.morse_sets;
  for (const auto& e : g.edges) blocks.push_back(e.connecting);
  return make_quotient(m, QuotientLevel::Morse, std::move(blocks));
}

MorseQuotientReport verify_morse_quotient(const IndexedModel& m) {
  MorseQuotientReport report;
  const auto g = morse_graph(m);
  const auto ao = abstract_orbit_space(m);
  for (std::size_t b = 0; b < ao.size(); ++b) {
    const auto& block = ao.blocks[b];
    std::size_t homes = 0;
    for (const auto& s : g.morse_sets) homes += block.is_subset_of(s) ? 1 : 0;
    for (const auto& e : g.edges) {
      if (!block.is_subset_of(e.connecting)) continue;
      ++homes;
      if (!m.alpha(block).is_subset_of(g.morse_sets[e.from]))
        report.violations.push_back("block '" + ao.labels[b] +
                                    "': alpha-limit not in the source Morse set");
      if (!m.omega(block).is_subset_of(g.morse_sets[e.to]))
        report.violations.push_back("block '" + ao.labels[b] +
                                    "': omega-limit not in the target Morse set");
    }
    if (homes != 1)
      report.violations.push_back("block '" + ao.labels[b] + "' lies in " +
                                  std::to_string(homes) + " Morse/connecting sets");
  }
  // The Morse-set digraph must be acyclic.
  std::vector<std::vector<std::size_t>> succ(g.size());
  for (const auto& e : g.edges) succ[e.from].push_back(e.to);
  if (strongly_connected_components(succ).count != g.size())
    report.violations.push_back("Morse graph has a cycle");
  return report;
}

UnstableDecomposition unstable_decomposition(const IndexedModel& m) {
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m.kind(i) == OrbitKind::Periodic || m.kind(i) == OrbitKind::RecurrentNonclosed)
      throw PreconditionError("unstable decomposition: node '" + m.id(i) +
                              "' is periodic or recurrent");
  }
  const auto awo = abstract_weak_orbit_space(m);
  const auto singular = m.nodes_of_kind(OrbitKind::Singular);
  const auto nonrec = m.nodes_of_kind(OrbitKind::Nonrecurrent);

  auto block_containing = [&](std::size_t x, const IndexSet& limit, const char* which) {
    if (limit.empty() || !limit.is_subset_of(singular))
      throw PreconditionError("unstable decomposition: " + std::string(which) + "-limit of '" +
                              m.id(x) + "' is not inside a singular block");
    const auto b = awo.block_of[limit.first()];
    if (!limit.is_subset_of(awo.blocks[b]))
      throw PreconditionError("unstable decomposition: " + std::string(which) + "-limit of '" +
                              m.id(x) + "' spans several singular blocks");
    return b;
  };

  std::vector<IndexSet> cells;
  std::vector<std::size_t> cell_of_block(awo.size(), awo.size());
  for (std::size_t b = 0; b < awo.size(); ++b) {
    if (!awo.blocks[b].is_subset_of(singular)) continue;
    cell_of_block[b] = cells.size();
    cells.push_back(awo.blocks[b]);
  }
  for (auto x : nonrec.members()) {
    const auto b = block_containing(x, m.alpha(x), "alpha");
    block_containing(x, m.omega(x), "omega");
    cells[cell_of_block[b]].insert(x);
  }

  UnstableDecomposition out;
  out.partitions_nodes = is_partition(cells, m.size());
  out.cells_are_awo_unions = std::all_of(cells.begin(), cells.end(), [&](const IndexSet& c) {
    for (auto i : c.members())
      if (!awo.blocks[awo.block_of[i]].is_subset_of(c)) return false;
    return true;
  });
  for (const auto& c : cells) out.cells.push_back(m.ids(c));
  return out;
}

}  // namespace orbitspace
