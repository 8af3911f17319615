#include "orbitspace/dot.hpp"

#include <sstream>

namespace orbitspace {

namespace {

std::string join(const IdSet& ids, std::size_t limit = 8) {
  std::string out;
  std::size_t n = 0;
  for (const auto& id : ids) {
    if (n == limit) return out + ", ... (" + std::to_string(ids.size()) + ")";
    if (n++) out += ", ";
    out += id;
  }
  return out;
}

IdSet atom_ids(const MorseGraph& g, const IndexSet& atoms) {
  IdSet out;
  for (auto i : atoms.members()) out.insert(g.atom_labels[i]);
  return out;
}

}  // namespace

std::string dot_quote(std::string_view text) {
  std::string out = "\"";
  for (char c : text) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

std::string relation_to_dot(const RelationMatrix& r) {
  std::ostringstream os;
  os << "digraph " << dot_quote(to_string(r.name)) << " {\n";
  os << "  label=" << dot_quote(to_string(r.name)) << ";\n";
  for (const auto& e : r.elements) os << "  " << dot_quote(e) << ";\n";
  for (std::size_t i = 0; i < r.size(); ++i)
    for (auto j : r.holds[i].members())
      if (i != j) os << "  " << dot_quote(r.elements[i]) << " -> " << dot_quote(r.elements[j]) << ";\n";
  os << "}\n";
  return os.str();
}

std::string preorder_to_dot(const FinitePreorder& p, std::string_view name) {
  std::ostringstream os;
  os << "digraph " << dot_quote(name) << " {\n";
  os << "  rankdir=BT;\n";
  for (const auto& l : p.labels()) os << "  " << dot_quote(l) << ";\n";
  for (const auto& [a, b] : p.covering_pairs())
    os << "  " << dot_quote(p.label(a)) << " -> " << dot_quote(p.label(b)) << ";\n";
  os << "}\n";
  return os.str();
}

std::string quotient_to_dot(const QuotientSpace& q) {
  std::ostringstream os;
  os << "digraph " << dot_quote(to_string(q.level)) << " {\n";
  os << "  rankdir=BT;\n";
  for (std::size_t b = 0; b < q.size(); ++b)
    os << "  " << dot_quote(q.labels[b]) << " [label=" << dot_quote("{" + join(q.members[b]) + "}")
       << "];\n";
  for (const auto& [a, b] : q.order.covering_pairs())
    os << "  " << dot_quote(q.labels[a]) << " -> " << dot_quote(q.labels[b]) << ";\n";
  os << "}\n";
  return os.str();
}

std::string morse_graph_to_dot(const MorseGraph& g) {
  std::ostringstream os;
  os << "digraph \"morse\" {\n";
  for (std::size_t m = 0; m < g.size(); ++m)
    os << "  " << dot_quote("M" + std::to_string(m)) << " [label="
       << dot_quote("M" + std::to_string(m) + ": {" + join(atom_ids(g, g.morse_sets[m])) + "}")
       << "];\n";
  for (const auto& e : g.edges)
    os << "  " << dot_quote("M" + std::to_string(e.from)) << " -> "
       << dot_quote("M" + std::to_string(e.to)) << " [label="
       << dot_quote(std::to_string(e.connecting.count())) << "];\n";
  os << "}\n";
  return os.str();
}

std::string reeb_graph_to_dot(const ReebGraph& reeb) {
  const auto& labels = reeb.extended.labels;
  std::ostringstream os;
  os << "graph \"reeb\" {\n";
  for (auto v : reeb.graph.vertices)
    os << "  " << dot_quote(labels[v]) << " [label="
       << dot_quote("{" + join(reeb.extended.members[v]) + "}") << "];\n";
  for (const auto& e : reeb.graph.edges) {
    const auto u = e.ends.front();
    const auto w = e.ends.back();
    os << "  " << dot_quote(labels[u]) << " -- " << dot_quote(labels[w])
       << " [label=" << dot_quote(labels[e.element]) << "];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace orbitspace
