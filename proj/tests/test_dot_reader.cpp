#include "doctest.h"

#include "dot_reader.hpp"
#include "fixtures.hpp"
#include "orbitspace/dot.hpp"

using namespace orbitspace;

TEST_CASE("reader: statements, ids and attributes") {
  const auto g = dot::parse(R"dot(
    strict digraph "G 1" {
      // comment
      rankdir=BT;
      node [shape=box];
      a [label="x \"y\""];
      a -> b -> c [color=red]
      # hash comment
      /* block
         comment */
      "quoted id" -> a;
    }
  )dot");
  CHECK(g.directed);
  CHECK(g.strict);
  CHECK(g.name == "G 1");
  CHECK(g.graph_attributes.at("rankdir") == "BT");
  CHECK(g.nodes == std::vector<std::string>{"a", "b", "c", "quoted id"});
  CHECK(g.node_attributes.at("a").at("label") == "x \"y\"");
  REQUIRE(g.edges.size() == 3);
  CHECK(g.has_edge("a", "b"));
  CHECK(g.has_edge("b", "c"));
  CHECK(g.edges[1].attributes.at("color") == "red");
  CHECK(g.has_edge("quoted id", "a"));
  CHECK_FALSE(g.has_edge("b", "a"));
}

TEST_CASE("reader: undirected graphs") {
  const auto g = dot::parse("graph { a -- b; b -- a; c }");
  CHECK_FALSE(g.directed);
  CHECK(g.edges.size() == 2);
  CHECK(g.has_node("c"));
}

TEST_CASE("reader: malformed input") {
  CHECK_THROWS_AS(dot::parse(""), dot::SyntaxError);
  CHECK_THROWS_AS(dot::parse("digraph { a -- b }"), dot::SyntaxError);
  CHECK_THROWS_AS(dot::parse("graph { a -> b }"), dot::SyntaxError);
  CHECK_THROWS_AS(dot::parse("digraph { a -> }"), dot::SyntaxError);
  CHECK_THROWS_AS(dot::parse("digraph { \"open }"), dot::SyntaxError);
  CHECK_THROWS_AS(dot::parse("digraph { subgraph s { a } }"), dot::SyntaxError);
  CHECK_THROWS_AS(dot::parse("digraph { a } extra"), dot::SyntaxError);
  CHECK_THROWS_AS(dot::parse("digraph { a [label=] }"), dot::SyntaxError);
}

TEST_CASE("quoting escapes quotes and backslashes") {
  const std::string id = "a\"b\\c";
  const auto g = dot::parse("digraph { " + dot_quote(id) + " }");
  CHECK(g.nodes == std::vector<std::string>{id});
}

TEST_CASE("library DOT output parses and matches its source") {
  for (const auto& id : corpus_ids()) {
    CAPTURE(id);
    const IndexedModel m(fixtures::corpus(id));
    const auto q = abstract_weak_orbit_space(m);

    const auto r = compute_relation(m, RelationName::LeqPartial, q);
    const auto rg = dot::parse(relation_to_dot(r));
    CHECK(rg.directed);
    std::size_t arcs = 0;
    for (std::size_t i = 0; i < r.size(); ++i)
      for (std::size_t j = 0; j < r.size(); ++j)
        if (i != j && r.at(i, j)) {
          ++arcs;
          CHECK(rg.has_edge(r.elements[i], r.elements[j]));
        }
    CHECK(rg.edges.size() == arcs);

    const auto qg = dot::parse(quotient_to_dot(q));
    CHECK(qg.node_attributes.size() == q.size());

    const auto pg = dot::parse(preorder_to_dot(q.order));
    CHECK(pg.node_attributes.size() == q.size());
    CHECK(pg.edges.size() == q.order.covering_pairs().size());

    if (fixtures::corpus(id).flags().compact) {
      const auto g = morse_graph(m);
      const auto mg = dot::parse(morse_graph_to_dot(g));
      CHECK(mg.node_attributes.size() == g.size());
      CHECK(mg.edges.size() == g.edges.size());
    }
    if (fixtures::corpus(id).flags().surface && is_hamiltonian_shaped(m)) {
      const auto reeb = reeb_abstract_graph(m);
      const auto g = dot::parse(reeb_graph_to_dot(reeb));
      CHECK_FALSE(g.directed);
      CHECK(g.node_attributes.size() == reeb.graph.vertices.size());
      CHECK(g.edges.size() == reeb.graph.edges.size());
    }
  }
}
