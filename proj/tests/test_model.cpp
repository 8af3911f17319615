#include "doctest.h"

#include "fixtures.hpp"
#include "orbitspace/corpus.hpp"
#include "orbitspace/error.hpp"
#include "orbitspace/model.hpp"
#include "orbitspace/model_json.hpp"
#include "orbitspace/random_model.hpp"

using namespace orbitspace;
using fixtures::node;

TEST_CASE("sphere gradient model is valid") {
  const auto m = fixtures::corpus("sphere-grad");
  CHECK(m.size() == 3);
  CHECK(validate_model(m).valid());
}

TEST_CASE("every bundled model validates") {
  for (const auto& id : corpus_ids()) {
    CAPTURE(id);
    CHECK(validate_model(fixtures::corpus(id)).valid());
  }
}

TEST_CASE("empty alpha on a compact model is a violation") {
  const FlowModel m(ModelFlags{},
                    {node("k", OrbitKind::Singular), node("o", OrbitKind::Nonrecurrent, {}, {"k"})},
                    {{"k", "o"}});
  const auto r = validate_model(m);
  CHECK_FALSE(r.valid());
  CHECK(r.has_rule(rules::kEmptyAlphaCompact));
  CHECK(r.violations.front().node == "o");

  ModelFlags open;
  open.compact = false;
  CHECK(validate_model(FlowModel(open, {m.nodes().begin(), m.nodes().end()}, m.adjacency())).valid());
}

TEST_CASE("non-recurrent node in its own omega is a recurrence contradiction") {
  const FlowModel m(ModelFlags{},
                    {node("k", OrbitKind::Singular),
                     node("o", OrbitKind::Nonrecurrent, {"k"}, {"o", "k"})},
                    {{"k", "o"}});
  CHECK(validate_model(m).has_rule(rules::kRecurrenceContradiction));
}

TEST_CASE("kind invariants") {
  SUBCASE("closed orbit with limit data") {
    const FlowModel m(ModelFlags{},
                      {node("a", OrbitKind::Singular), node("b", OrbitKind::Periodic, {"a"}, {})},
                      {{"a", "b"}});
    CHECK(validate_model(m).has_rule(rules::kClosedWithLimits));
  }
  SUBCASE("recurrent node missing itself") {
    const FlowModel m(ModelFlags{},
                      {node("a", OrbitKind::Singular),
                       node("r", OrbitKind::RecurrentNonclosed, {"a"}, {"a"})},
                      {{"a", "r"}});
    CHECK(validate_model(m).has_rule(rules::kMissingRecurrence));
  }
  SUBCASE("period type on a non-periodic node") {
    auto n = node("a", OrbitKind::Singular);
    n.period_type = PeriodType::Rational;
    CHECK(validate_model(FlowModel(ModelFlags{}, {n}, {})).has_rule(rules::kPeriodOnNonPeriodic));
  }
  SUBCASE("dangling reference") {
    const FlowModel m(ModelFlags{}, {node("o", OrbitKind::Nonrecurrent, {"ghost"}, {"ghost"})},
                      {});
    CHECK(validate_model(m).has_rule(rules::kUnknownReference));
    CHECK_THROWS_AS(IndexedModel{m}, PreconditionError);
  }
  SUBCASE("transverse boundary meeting a limit set") {
    const FlowModel m(ModelFlags{},
                      {node("a", OrbitKind::Singular), node("b", OrbitKind::Singular),
                       node("o", OrbitKind::Nonrecurrent, {"a"}, {"b"}, {"a"})},
                      {{"a", "o"}, {"b", "o"}});
    CHECK(validate_model(m).has_rule(rules::kTransverseMeetsLimit));
  }
  SUBCASE("disconnected limit set") {
    const FlowModel m(ModelFlags{},
                      {node("a", OrbitKind::Singular), node("b", OrbitKind::Singular),
                       node("c", OrbitKind::Singular),
                       node("o", OrbitKind::Nonrecurrent, {"a"}, {"b", "c"})},
                      {{"a", "o"}, {"b", "o"}, {"c", "o"}});
    CHECK(validate_model(m).has_rule(rules::kDisconnectedOmega));
  }
  SUBCASE("limit set that is not closed") {
    const FlowModel m(ModelFlags{},
                      {node("a", OrbitKind::Singular), node("b", OrbitKind::Singular),
                       node("o", OrbitKind::Nonrecurrent, {"a"}, {"b"}),
                       node("q", OrbitKind::Nonrecurrent, {"a"}, {"o"})},
                      {{"a", "o"}, {"b", "o"}, {"a", "q"}, {"o", "q"}});
    const auto r = validate_model(m);
    CHECK(r.has_rule(rules::kLimitNotClosed));
  }
}

TEST_CASE("malformed ids are structural errors") {
  CHECK_THROWS_AS(FlowModel(ModelFlags{}, {node("", OrbitKind::Singular)}, {}), ParseError);
  CHECK_THROWS_AS(FlowModel(ModelFlags{}, {node("a b", OrbitKind::Singular)}, {}), ParseError);
  CHECK_THROWS_AS(FlowModel(ModelFlags{}, {node("a", OrbitKind::Singular),
                                           node("a", OrbitKind::Singular)},
                            {}),
                  ParseError);
  CHECK_THROWS_AS(parse_model_json("{\"flags\": {}, \"nodes\": [{\"id\": \"\"}]}"), ParseError);
}

TEST_CASE("boundary decomposition") {
  const auto ham = fixtures::corpus("ham-disk");
  const auto o1 = boundary_decomposition(ham, "O1");
  CHECK(o1.perp == IdSet{"s"});
  CHECK(o1.pitchfork.empty());
  CHECK(o1.coborder == IdSet{"s"});

  const auto c1 = boundary_decomposition(ham, "c1");
  CHECK(c1.coborder.empty());

  const auto fig1 = fixtures::corpus("fig1");
  const auto d2 = boundary_decomposition(fig1, "D2");
  CHECK(d2.pitchfork.count("D1") == 1);

  CHECK_THROWS_AS(boundary_decomposition(ham, "nope"), PreconditionError);
}

TEST_CASE("boundary parts are disjoint and exclude the node on every corpus model") {
  for (const auto& id : corpus_ids()) {
    const auto m = fixtures::corpus(id);
    for (const auto& n : m.nodes()) {
      const auto bd = boundary_decomposition(m, n.id);
      CHECK(bd.coborder.count(n.id) == 0);
      for (const auto& x : bd.perp) CHECK(bd.pitchfork.count(x) == 0);
      IdSet both = bd.perp;
      both.insert(bd.pitchfork.begin(), bd.pitchfork.end());
      CHECK(both == bd.coborder);
    }
  }
}

TEST_CASE("kind partition") {
  const auto kp = kind_partition(fixtures::corpus("ham-disk"));
  CHECK(kp.singular == IdSet{"c1", "c2", "s"});
  CHECK(kp.periodic == IdSet{"A1", "A2", "A3"});
  CHECK(kp.nonrecurrent == IdSet{"O1", "O2"});
  CHECK(kp.recurrent.empty());
  CHECK(kp.closed() == IdSet{"A1", "A2", "A3", "c1", "c2", "s"});

  const FlowModel sing(ModelFlags{}, {node("a", OrbitKind::Singular), node("b", OrbitKind::Singular)},
                       {});
  const auto ks = kind_partition(sing);
  CHECK(ks.singular.size() == 2);
  CHECK(ks.periodic.empty());
  CHECK(ks.nonrecurrent.empty());
  CHECK(ks.recurrent.empty());

  const auto km = kind_partition(fixtures::single_r_node());
  CHECK(km.recurrent == IdSet{"m"});
}

TEST_CASE("kind partition covers nodes exactly") {
  for (const auto& m : random_models(7, 50)) {
    const auto kp = kind_partition(m);
    CHECK(kp.singular.size() + kp.periodic.size() + kp.nonrecurrent.size() + kp.recurrent.size() ==
          m.size());
  }
}

TEST_CASE("json round trip preserves the model and its report") {
  for (const auto& id : corpus_ids()) {
    const auto m = fixtures::corpus(id);
    const auto again = parse_model_json(model_to_json(m));
    CHECK(again == m);
    CHECK(validate_model(again) == validate_model(m));
  }
  const FlowModel bad(ModelFlags{},
                      {node("k", OrbitKind::Singular),
                       node("o", OrbitKind::Nonrecurrent, {"k"}, {"o", "k"})},
                      {{"k", "o"}});
  CHECK(validate_model(parse_model_json(model_to_json(bad))) == validate_model(bad));
}

TEST_CASE("json rejects unknown keys and bad enums") {
  CHECK_THROWS_AS(parse_model_json("{\"flags\": {}, \"nodes\": [], \"adjacency\": [], \"x\": 1}"),
                  ParseError);
  CHECK_THROWS_AS(
      parse_model_json(R"({"flags": {}, "nodes": [{"id": "a", "kind": "WOBBLY"}], "adjacency": []})"),
      ParseError);
  CHECK_THROWS_AS(parse_model_json("not json"), ParseError);
  const auto m = parse_model_json(
      R"json({"flags": {"hausdorff": true, "compact": true},
          "nodes": [{"id": "a", "kind": "SINGULAR", "surface_tag": "SADDLE(4)"}],
          "adjacency": []})json");
  REQUIRE(m.node("a").surface_tag);
  CHECK(m.node("a").surface_tag->sectors == 4);
}

TEST_CASE("surface tag spelling round trips") {
  for (const auto* text : {"CENTER", "SADDLE(6)", "BOUNDARY_SADDLE(3)", "SINK", "LIMIT_CYCLE"}) {
    const auto tag = parse_surface_tag(text);
    REQUIRE(tag);
    CHECK(to_string(*tag) == text);
  }
  CHECK_FALSE(parse_surface_tag("SADDLE"));
  CHECK_FALSE(parse_surface_tag("SADDLE(x)"));
}

TEST_CASE("adjacency is normalized") {
  const FlowModel m(ModelFlags{}, {node("b", OrbitKind::Singular), node("a", OrbitKind::Singular)},
                    {{"b", "a"}, {"a", "b"}});
  CHECK(m.adjacency().size() == 1);
  CHECK(m.adjacency().front() == IdPair{"a", "b"});
  CHECK(m.node(0).id == "a");
}
