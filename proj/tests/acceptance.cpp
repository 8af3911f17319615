// Acceptance suite: one PASS/FAIL line per criterion.
//
//   acceptance                 run all criteria
//   acceptance --criterion N   run criterion N only
//
// Exit status is 0 when every selected criterion passes.

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "orbitspace/corpus.hpp"
#include "orbitspace/grid_dynamics.hpp"
#include "orbitspace/isomorphism.hpp"
#include "orbitspace/morse.hpp"
#include "orbitspace/random_model.hpp"
#include "orbitspace/relations.hpp"
#include "orbitspace/surface.hpp"
#include "orbitspace/suspension.hpp"

using namespace orbitspace;

namespace {

constexpr std::uint64_t kSeed = 20240;
constexpr std::size_t kRandomModels = 200;

/// Collects failed checks of one criterion.
struct Check {
  std::vector<std::string> failures;
  std::string info;

  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

FlowModel corpus(const std::string& id) { return corpus_model(id).value(); }

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& p : parts) out += (out.empty() ? "" : ", ") + p;
  return out;
}

std::string show(const std::optional<int>& v) { return v ? std::to_string(*v) : "non-integer"; }

std::vector<FlowModel> random_suite() {
  RandomModelOptions opts;
  opts.max_nodes = 8;
  return random_models(kSeed, kRandomModels, opts);
}

void criterion1(Check& c) {
  const IndexedModel m(corpus("fig1"));
  for (auto name : {RelationName::LeqPartial, RelationName::LeqPitchfork}) {
    const auto r = compute_relation(m, name, QuotientLevel::Awo);
    const std::string n(to_string(name));
    c.expect(r.at("D1", "D2") && r.at("D2", "D1"), n + " lacks (D1,D2) or (D2,D1)");
    const auto p = check_properties(r);
    c.expect(!p.antisymmetric, n + " is antisymmetric");
    c.expect(p.antisymmetric_witness &&
                 *p.antisymmetric_witness == std::array<std::string, 2>{"D1", "D2"},
             n + " witness is not (D1, D2)");
  }
}

void criterion2(Check& c) {
  const auto r = compute_relation(IndexedModel(corpus("fig2")), RelationName::LeqPartial,
                                  QuotientLevel::Awo);
  c.expect(r.at("D1", "D2") && r.at("D2", "D3") && r.at("D3", "D1"), "cycle D1, D2, D3 missing");
  c.expect(!r.at("D1", "D3"), "(D1, D3) holds");
  const auto p = check_properties(r);
  c.expect(!p.transitive, "relation is transitive");
  c.expect(p.transitive_witness &&
               *p.transitive_witness == std::array<std::string, 3>{"D1", "D2", "D3"},
           "witness is not (D1, D2, D3)");
}

void criterion3(Check& c) {
  const IndexedModel m(corpus("ham-disk"));
  const auto awo = abstract_weak_orbit_space(m);
  std::set<IdSet> blocks;
  for (const auto& b : awo.blocks) blocks.insert(m.ids(b));
  c.expect(blocks == std::set<IdSet>{{"c1"}, {"c2"}, {"s"}, {"O1"}, {"O2"}, {"A1"}, {"A2"}, {"A3"}},
           "AWO blocks differ");

  const auto ext = extended_weak_orbit_space(m).space;
  std::set<IdSet> ext_blocks;
  for (const auto& b : ext.blocks) ext_blocks.insert(m.ids(b));
  c.expect(ext.size() == 6, "extended space has " + std::to_string(ext.size()) + " blocks");
  c.expect(ext_blocks.count({"O1", "O2", "s"}) == 1, "{s, O1, O2} not merged");

  const auto reeb = reeb_abstract_graph(m);
  c.expect(reeb.graph.vertices.size() == 3 && reeb.graph.edges.size() == 3,
           "Reeb graph has " + std::to_string(reeb.graph.vertices.size()) + " vertices and " +
               std::to_string(reeb.graph.edges.size()) + " edges");
  std::map<std::string, std::multiset<std::string>> ends;
  for (const auto& e : reeb.graph.edges)
    for (auto v : e.ends) ends[reeb.extended.labels[e.element]].insert(reeb.extended.labels[v]);
  const std::map<std::string, std::multiset<std::string>> expected = {
      {"A1", {"O1", "c1"}}, {"A2", {"O1", "c2"}}, {"A3", {"O1"}}};
  c.expect(ends == expected, "Reeb incidences differ");
}

void criterion4(Check& c) {
  const std::vector<std::pair<std::string, std::size_t>> expected = {
      {"sphere-grad", 3}, {"disk-grad", 3}, {"ham-trivial-annulus", 1},
      {"ham-trivial-disk", 2}, {"ham-trivial-sphere", 3}};
  std::vector<std::string> got;
  for (const auto& [id, n] : expected) {
    const auto size = abstract_weak_orbit_space(IndexedModel(corpus(id))).size();
    got.push_back(id + "=" + std::to_string(size));
    c.expect(size == n, id + " has " + std::to_string(size) + " blocks, expected " +
                            std::to_string(n));
  }
  c.info = join(got);
}

void criterion5(Check& c) {
  auto models = random_suite();
  for (const auto& id : corpus_ids()) models.push_back(corpus(id));
  std::size_t violations = 0;
  for (std::size_t k = 0; k < models.size(); ++k) {
    const IndexedModel m(models[k]);
    try {
      const auto g = morse_graph(m);
      std::vector<IndexSet> pieces = g.morse_sets;
      for (const auto& e : g.edges) pieces.push_back(e.connecting);
      for (const auto& block : abstract_orbit_space(m).blocks) {
        int containing = 0;
        for (const auto& p : pieces) containing += block.is_subset_of(p);
        if (containing != 1) ++violations;
      }
      if (!verify_morse_quotient(m).ok()) ++violations;
      const auto chain = refinement_chain_check(m);
      if (!chain.ok() || !chain.notes.empty()) ++violations;
    } catch (const std::exception& e) {
      ++violations;
      c.expect(false, "model " + std::to_string(k) + ": " + e.what());
    }
  }
  c.expect(violations == 0, std::to_string(violations) + " violations");
  c.info = std::to_string(models.size()) + " models";
}

void criterion6(Check& c) {
  std::size_t violations = 0;
  auto matrix_eq_union = [](const RelationMatrix& u, const RelationMatrix& a,
                            const RelationMatrix& b) {
    for (std::size_t i = 0; i < u.size(); ++i)
      for (std::size_t j = 0; j < u.size(); ++j)
        if (u.at(i, j) != (a.at(i, j) || b.at(i, j))) return false;
    return true;
  };
  for (const auto& fm : random_suite()) {
    const IndexedModel m(fm);
    for (auto level : {QuotientLevel::Awo, QuotientLevel::Ao}) {
      const auto q = quotient_at_level(m, level);
      const auto a = compute_relation(m, RelationName::LeqAlpha, q);
      const auto w = compute_relation(m, RelationName::LeqOmega, q);
      const auto v = compute_relation(m, RelationName::LeqV, q);
      const auto t = compute_relation(m, RelationName::LeqPitchfork, q);
      const auto p = compute_relation(m, RelationName::LeqPartial, q);
      violations += !check_properties(a).is_preorder();
      violations += !check_properties(w).is_preorder();
      violations += !matrix_eq_union(v, a, w);
      violations += !matrix_eq_union(p, v, t);
      if (level == QuotientLevel::Awo) violations += !check_properties(v).is_preorder();
      else violations += !check_properties(v).antisymmetric;
    }
  }
  c.expect(violations == 0, std::to_string(violations) + " violations");
  c.info = std::to_string(kRandomModels) + " models";
}

void criterion7(Check& c) {
  const auto torus = corpus("ms-torus-a");
  const IndexedModel m(torus);
  auto annotate = [&](PeriodType t) {
    PeriodAnnotation out;
    for (const auto& n : torus.nodes())
      if (n.kind == OrbitKind::Periodic) out[n.id] = t;
    return out;
  };
  const auto irr = time_one_awo_space(m, annotate(PeriodType::Irrational));
  c.expect(irr.level1_equal, "IRRATIONAL: level 1 differs from the flow space");
  const auto rat = time_one_awo_space(m, annotate(PeriodType::Rational));
  c.expect(!rat.level1_equal, "RATIONAL: level 1 equals the flow space");
  c.expect(rat.level2_equal, "RATIONAL: level 2 differs from the flow space");
  const auto morse = time_one_awo_space(IndexedModel(corpus("morse-sphere")), {});
  c.expect(morse.level1_equal, "morse-sphere: level 1 differs from the flow space");
}

void criterion8(Check& c) {
  struct Pair {
    std::string a, b;
    QuotientLevel level;
  };
  for (const auto& [a, b, level] : {Pair{"ms-torus-a", "ms-torus-b", QuotientLevel::Awo},
                                    Pair{"fig05-a", "fig05-b", QuotientLevel::Extended}}) {
    const auto ma = corpus(a);
    const auto mb = corpus(b);
    const auto pa = labeled_quotient(IndexedModel(ma), level, RelationName::LeqPartial);
    const auto pb = labeled_quotient(IndexedModel(mb), level, RelationName::LeqPartial);
    const auto r = are_isomorphic(pa, pb);
    c.expect(r.verdict == IsoVerdict::Isomorphic, a + "/" + b + ": " + std::string(to_string(r.verdict)));
    c.expect(r.witness && verify_witness(pa, pb, *r.witness), a + "/" + b + ": witness fails");
    bool differ = false;
    for (std::size_t i = 0; i < ma.size(); ++i) differ |= ma.node(i).embedding != mb.node(i).embedding;
    c.expect(differ, a + "/" + b + ": embeddings are equal");
  }
}

void criterion9(Check& c) {
  const auto sphere = euler_check(IndexedModel(corpus("sphere-grad")));
  c.expect(sphere.index_sum == 2 && sphere.matches,
           "sphere-grad index sum " + show(sphere.index_sum));
  const auto disk = euler_check(IndexedModel(corpus("ham-disk")));
  c.expect(disk.index_sum == 1 && disk.matches,
           "ham-disk index sum " + show(disk.index_sum));

  // A closed sphere with a source, a sink and two 4-sector saddles.
  std::vector<NodeSpec> nodes;
  auto singular = [&](const std::string& id, SurfaceTagKind k, int sectors) {
    NodeSpec n;
    n.id = id;
    n.tag = SurfaceTag{k, sectors};
    nodes.push_back(n);
  };
  singular("src", SurfaceTagKind::Source, 0);
  singular("k", SurfaceTagKind::Sink, 0);
  singular("s1", SurfaceTagKind::Saddle, 4);
  singular("s2", SurfaceTagKind::Saddle, 4);
  ModelFlags flags;
  flags.surface = SurfaceFlags{true, 2, false};
  const auto fake = euler_check(IndexedModel(build_model(flags, nodes)));
  c.expect(!fake.matches, "two-saddle sphere matches");
  c.info = "sums 2, 1, " + show(fake.index_sum) + " (declared 2)";
}

void criterion10(Check& c) {
  using clock = std::chrono::steady_clock;
  auto run = [&](const std::string& name, int res) {
    BoxGrid grid{builtin_domain(name), res, res};
    const auto start = clock::now();
    const auto map = build_box_map(*builtin_field(name), grid, BoxMapParams{1.0, -1.0, 0.0});
    auto g = grid_morse_graph(map);
    const double secs = std::chrono::duration<double>(clock::now() - start).count();
    c.expect(secs < 10.0, name + " took " + std::to_string(secs) + " s");
    return std::make_pair(std::move(g), grid);
  };
  std::vector<std::string> counts;
  for (const auto* name : {"linear-sink", "linear-saddle", "center"}) {
    const auto [g, grid] = run(name, 32);
    counts.push_back(std::string(name) + "=" + std::to_string(g.size()));
    c.expect(g.size() == 1, std::string(name) + ": " + std::to_string(g.size()) + " Morse sets");
  }
  const auto [g, grid] = run("double-well", 64);
  counts.push_back("double-well=" + std::to_string(g.size()) + "/" + std::to_string(g.edges.size()));
  c.expect(g.size() == 3, "double-well: " + std::to_string(g.size()) + " Morse sets");
  c.expect(g.edges.size() == 2, "double-well: " + std::to_string(g.edges.size()) + " edges");
  const auto ref = builtin_reference("double-well").value();
  try {
    const auto report = cross_check(g, ref.graph, correspond_by_anchor(g, grid, ref));
    c.expect(report.ok(), "double-well: cross-check mismatch");
  } catch (const std::exception& e) {
    c.expect(false, std::string("double-well: cross-check: ") + e.what());
  }
  c.info = join(counts);
}

void criterion11(Check& c) {
  const auto s = stratification(IndexedModel(corpus("ham-disk")));
  std::multiset<int> heights;
  for (const auto& [id, h] : s.heights) heights.insert(h);
  c.expect(heights == std::multiset<int>{0, 0, 0, 1, 1, 2, 2, 2}, "ham-disk heights differ");
  int worst = 0;
  for (const auto& id : corpus_ids()) {
    const auto fm = corpus(id);
    if (!fm.flags().surface) continue;
    const IndexedModel m(fm);
    if (!classify_awos(m).is_finite_type) continue;
    for (const auto& [label, h] : stratification(m).heights) {
      worst = std::max(worst, h);
      c.expect(h <= 3, id + ": " + label + " has height " + std::to_string(h));
    }
  }
  c.info = "max height " + std::to_string(worst);
}

struct Criterion {
  const char* title;
  std::function<void(Check&)> run;
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all = {
      {"fig1 transverse relations not antisymmetric", criterion1},
      {"fig2 partial relation not transitive", criterion2},
      {"ham-disk AWO, extended space and Reeb graph", criterion3},
      {"three-point and trivial Hamiltonian block counts", criterion4},
      {"Morse reduction and refinement chain", criterion5},
      {"order properties on random models", criterion6},
      {"time-one spaces of Morse-Smale flows", criterion7},
      {"non-completeness pairs are isomorphic", criterion8},
      {"index sums against Euler characteristic", criterion9},
      {"grid Morse graphs of built-in fields", criterion10},
      {"height bounds", criterion11},
  };
  return all;
}

bool run_one(std::size_t n) {
  const auto& crit = criteria()[n - 1];
  Check c;
  try {
    crit.run(c);
  } catch (const std::exception& e) {
    c.failures.push_back(std::string("exception: ") + e.what());
  }
  std::ostringstream line;
  line << (c.failures.empty() ? "PASS" : "FAIL") << " criterion " << n << ": " << crit.title;
  if (!c.info.empty()) line << " [" << c.info << "]";
  if (!c.failures.empty()) line << " -- " << join(c.failures);
  std::cout << line.str() << '\n';
  return c.failures.empty();
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::size_t> selected;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--criterion" && i + 1 < argc) {
      const auto n = std::strtoul(argv[++i], nullptr, 10);
      if (n < 1 || n > criteria().size()) {
        std::cerr << "criterion must be between 1 and " << criteria().size() << '\n';
        return 2;
      }
      selected.push_back(n);
    } else {
      std::cerr << "usage: acceptance [--criterion N]\n";
      return 2;
    }
  }
  if (selected.empty())
    for (std::size_t n = 1; n <= criteria().size(); ++n) selected.push_back(n);
  bool ok = true;
  for (auto n : selected) ok &= run_one(n);
  return ok ? 0 : 1;
}
