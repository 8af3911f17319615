#include "doctest.h"

#include <algorithm>
#include <random>

#include "fixtures.hpp"
#include "json.hpp"
#include "oracles.hpp"
#include "orbitspace/error.hpp"
#include "orbitspace/quotients.hpp"
#include "orbitspace/random_model.hpp"
#include "orbitspace/surface.hpp"

using namespace orbitspace;

namespace {

oracle::Blocks blocks_of(const QuotientSpace& q) { return oracle::as_blocks(q); }

std::vector<FlowModel> test_models(std::uint64_t seed, std::size_t n) {
  auto models = random_models(seed, n);
  for (const auto& id : corpus_ids()) models.push_back(fixtures::corpus(id));
  models.push_back(fixtures::shared_closure_r_model());
  models.push_back(fixtures::minimal_flow());
  models.push_back(fixtures::split_limit_model());
  models.push_back(fixtures::equal_limit_pair());
  return models;
}

/// Same model with every id renamed through `rename` and the node and
/// adjacency lists shuffled.
FlowModel relabel(const FlowModel& m, const std::map<std::string, std::string>& rename,
                  std::mt19937_64& rng) {
  auto map_set = [&](const IdSet& s) {
    IdSet out;
    for (const auto& x : s) out.insert(rename.at(x));
    return out;
  };
  std::vector<OrbitNode> nodes;
  for (const auto& n : m.nodes()) {
    auto c = n;
    c.id = rename.at(n.id);
    c.alpha = map_set(n.alpha);
    c.omega = map_set(n.omega);
    c.transverse_boundary = map_set(n.transverse_boundary);
    nodes.push_back(c);
  }
  std::vector<IdPair> adj;
  for (const auto& [a, b] : m.adjacency()) adj.emplace_back(rename.at(b), rename.at(a));
  std::shuffle(nodes.begin(), nodes.end(), rng);
  std::shuffle(adj.begin(), adj.end(), rng);
  return FlowModel(m.flags(), nodes, adj);
}

}  // namespace

TEST_CASE("ham-disk abstract weak orbits") {
  const IndexedModel m(fixtures::corpus("ham-disk"));
  const auto q = abstract_weak_orbit_space(m);
  CHECK(blocks_of(q) == oracle::Blocks{{"A1"}, {"A2"}, {"A3"}, {"O1"}, {"O2"}, {"c1"}, {"c2"}, {"s"}});
}

TEST_CASE("sphere gradient flow has three abstract weak orbits") {
  CHECK(abstract_weak_orbit_space(IndexedModel(fixtures::corpus("sphere-grad"))).size() == 3);
}

TEST_CASE("equal-limit adjacent orbits form one block") {
  const auto fm = fixtures::equal_limit_pair();
  const auto q = abstract_weak_orbit_space(IndexedModel(fm));
  CHECK(blocks_of(q) == oracle::awo(fm));
  CHECK(blocks_of(q) == oracle::Blocks{{"a"}, {"b"}, {"o1", "o2"}});
}

TEST_CASE("AWO and AO agree with the grouping oracles") {
  for (const auto& fm : test_models(201, 150)) {
    const IndexedModel m(fm);
    CHECK(blocks_of(abstract_weak_orbit_space(m)) == oracle::awo(fm));
    CHECK(blocks_of(abstract_orbit_space(m)) == oracle::ao(fm));
  }
}

TEST_CASE("without recurrence AO equals AWO") {
  RandomModelOptions opts;
  opts.recurrent = false;
  auto models = random_models(202, 80, opts);
  for (const auto& id : corpus_ids()) models.push_back(fixtures::corpus(id));
  for (const auto& fm : models) {
    const IndexedModel m(fm);
    CHECK(blocks_of(abstract_orbit_space(m)) == blocks_of(abstract_weak_orbit_space(m)));
  }
}

TEST_CASE("minimal flow is a single abstract orbit and a single class") {
  const auto fm = fixtures::minimal_flow();
  REQUIRE(validate_model(fm).valid());
  const IndexedModel m(fm);
  CHECK(abstract_orbit_space(m).size() == 1);
  CHECK(orbit_class_space(m).size() == 1);
  CHECK(abstract_orbit_space(IndexedModel(fixtures::single_r_node())).size() == 1);
}

TEST_CASE("shared closure: AO and CLASS merge what AWO and WEAK_CLASS keep apart") {
  const auto fm = fixtures::shared_closure_r_model();
  REQUIRE(validate_model(fm).valid());
  const IndexedModel m(fm);
  // Oracle: r1 and r2 have equal closures but different limit sets.
  CHECK(oracle::closure(fm, "r1") == oracle::closure(fm, "r2"));
  CHECK(fm.node("r1").alpha != fm.node("r2").alpha);

  CHECK(blocks_of(abstract_weak_orbit_space(m)) == oracle::Blocks{{"p"}, {"r1"}, {"r2"}});
  CHECK(blocks_of(abstract_orbit_space(m)) == oracle::Blocks{{"p"}, {"r1", "r2"}});
  const auto cls = orbit_class_space(m);
  const auto weak = weak_orbit_class_space(m);
  CHECK(cls.size() < weak.size());
  CHECK(refines(weak.blocks, cls.blocks));
}

TEST_CASE("orbit classes are trivial off recurrence") {
  const IndexedModel m(fixtures::corpus("ham-disk"));
  CHECK(orbit_class_space(m).size() == 8);
  CHECK(weak_orbit_class_space(m).size() == 8);
}

TEST_CASE("k-th spaces") {
  SUBCASE("Morse-Smale model: every k gives the AWO space") {
    for (const auto* id : {"morse-sphere", "ms-torus-a", "sphere-grad"}) {
      const IndexedModel m(fixtures::corpus(id));
      const auto awo = blocks_of(abstract_weak_orbit_space(m));
      for (int k = 1; k <= 4; ++k) CHECK(blocks_of(kth_space(m, k).space) == awo);
      CHECK(blocks_of(kth_space(m, 2, true).space) == blocks_of(abstract_orbit_space(m)));
    }
  }
  SUBCASE("finite-type surface models settle at k = 1") {
    for (const auto& id : corpus_ids()) {
      const IndexedModel m(fixtures::corpus(id));
      if (!m.model().flags().surface) continue;
      if (!classify_awos(m).is_finite_type) continue;
      CAPTURE(id);
      CHECK(kth_space(m, 1).stabilization_index == 1);
    }
  }
  SUBCASE("limit set split across blocks: the second refinement is coarser") {
    const auto fm = fixtures::split_limit_model();
    REQUIRE(validate_model(fm).valid());
    const IndexedModel m(fm);
    const auto k1 = kth_space(m, 1).space;
    const auto k2 = kth_space(m, 2);
    // Two-step oracle: k1 keeps p1, p2 apart (different node limits); at
    // step two both limits are the block {k1, k2}.
    CHECK(blocks_of(k1) == oracle::Blocks{{"k1", "k2"}, {"p1"}, {"p2"}, {"src"}});
    CHECK(blocks_of(k2.space) == oracle::Blocks{{"k1", "k2"}, {"p1", "p2"}, {"src"}});
    CHECK(refines(k1.blocks, k2.space.blocks));
    CHECK(k2.stabilization_index == 2);
  }
  SUBCASE("k below one is rejected") {
    const IndexedModel m(fixtures::corpus("ham-disk"));
    CHECK_THROWS_AS(kth_space(m, 0), PreconditionError);
  }
}

TEST_CASE("extended weak orbit space") {
  SUBCASE("ham-disk collapses the homoclinic connection") {
    const IndexedModel m(fixtures::corpus("ham-disk"));
    const auto ex = extended_weak_orbit_space(m);
    CHECK(blocks_of(ex.space) ==
          oracle::Blocks{{"A1"}, {"A2"}, {"A3"}, {"O1", "O2", "s"}, {"c1"}, {"c2"}});
    CHECK_FALSE(ex.budget_exhausted);
  }
  SUBCASE("no quasi-saddles: nothing changes") {
    for (const auto* id : {"sphere-grad", "disk-grad", "ham-trivial-sphere"}) {
      const IndexedModel m(fixtures::corpus(id));
      const auto ex = extended_weak_orbit_space(m);
      CHECK(ex.quasi_saddles.empty());
      CHECK(blocks_of(ex.space) == blocks_of(abstract_weak_orbit_space(m)));
    }
  }
  SUBCASE("Hamiltonian models: block count is the Reeb graph's size") {
    for (const auto& id : corpus_ids()) {
      const IndexedModel m(fixtures::corpus(id));
      if (!m.model().flags().surface || !is_hamiltonian_shaped(m)) continue;
      CAPTURE(id);
      const auto reeb = reeb_abstract_graph(m);
      CHECK(extended_weak_orbit_space(m).space.size() ==
            reeb.graph.vertices.size() + reeb.graph.edges.size());
    }
  }
  SUBCASE("always a coarsening of AWO") {
    for (const auto& fm : test_models(203, 100)) {
      const IndexedModel m(fm);
      CHECK(refines(abstract_weak_orbit_space(m).blocks, extended_weak_orbit_space(m).space.blocks));
    }
  }
}

TEST_CASE("refinement chain") {
  CHECK(refinement_chain_check(IndexedModel(fixtures::corpus("ham-disk"))).ok());
  CHECK(refinement_chain_check(IndexedModel(fixtures::corpus("sphere-grad"))).ok());
  for (const auto& fm : test_models(204, 150)) {
    const IndexedModel m(fm);
    const auto r = refinement_chain_check(m);
    CHECK(r.ok());
    // Independent partition-refinement oracle for the same rungs.
    const auto orbit = blocks_of(orbit_space(m));
    const auto weak = blocks_of(weak_orbit_class_space(m));
    const auto cls = blocks_of(orbit_class_space(m));
    const auto awo = blocks_of(abstract_weak_orbit_space(m));
    const auto ao = blocks_of(abstract_orbit_space(m));
    CHECK(oracle::refines(orbit, weak));
    CHECK(oracle::refines(weak, cls));
    CHECK(oracle::refines(weak, awo));
    CHECK(oracle::refines(cls, ao));
    CHECK(oracle::refines(awo, ao));
  }
}

TEST_CASE("block invariants") {
  for (const auto& fm : test_models(205, 120)) {
    const IndexedModel m(fm);
    for (auto level : {QuotientLevel::Orbit, QuotientLevel::WeakClass, QuotientLevel::Class,
                       QuotientLevel::Awo, QuotientLevel::Ao}) {
      const auto q = quotient_at_level(m, level);
      CHECK(is_partition(q.blocks, m.size()));
      for (const auto& b : q.blocks) {
        const auto members = b.members();
        for (auto i : members) CHECK(m.kind(i) == m.kind(members.front()));
      }
    }
    const auto ao = abstract_orbit_space(m);
    for (std::size_t b = 0; b < ao.size(); ++b) {
      const auto members = ao.blocks[b].members();
      if (m.kind(members.front()) != OrbitKind::RecurrentNonclosed) continue;
      for (auto i : members) CHECK(ao.closure(m, b) == m.closure(i));
    }
  }
}

TEST_CASE("abstract weak orbits do not depend on node order or names") {
  std::mt19937_64 rng(206);
  for (const auto& fm : test_models(206, 60)) {
    std::vector<std::string> ids;
    for (const auto& n : fm.nodes()) ids.push_back(n.id);
    auto shuffled = ids;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    std::map<std::string, std::string> rename, back;
    for (std::size_t i = 0; i < ids.size(); ++i) {
      rename[ids[i]] = "n_" + shuffled[i];
      back["n_" + shuffled[i]] = ids[i];
    }
    const auto other = relabel(fm, rename, rng);
    oracle::Blocks mapped;
    for (const auto& b : abstract_weak_orbit_space(IndexedModel(other)).members) {
      IdSet s;
      for (const auto& x : b) s.insert(back.at(x));
      mapped.push_back(s);
    }
    CHECK(oracle::sorted_blocks(mapped) == blocks_of(abstract_weak_orbit_space(IndexedModel(fm))));
  }
}

TEST_CASE("labels are smallest members and serialization is well formed") {
  const IndexedModel m(fixtures::corpus("ham-disk"));
  const auto ex = extended_weak_orbit_space(m).space;
  CHECK(ex.labels[ex.index_of_label("O1")] == "O1");
  CHECK_THROWS_AS(ex.index_of_label("s"), PreconditionError);
  const auto j = nlohmann::json::parse(quotient_to_json(ex));
  CHECK(j["level"] == "EXTENDED");
  CHECK(j["blocks"].size() == 6);
  CHECK(j["order"].size() == 6);
}

TEST_CASE("level names") {
  CHECK(parse_quotient_level("awo") == QuotientLevel::Awo);
  CHECK(parse_quotient_level("WEAK_CLASS") == QuotientLevel::WeakClass);
  CHECK(parse_quotient_level("weak-class") == QuotientLevel::WeakClass);
  CHECK_FALSE(parse_quotient_level("awol"));
  const IndexedModel m(fixtures::corpus("ham-disk"));
  CHECK_THROWS_AS(quotient_at_level(m, QuotientLevel::AwoK), PreconditionError);
}
