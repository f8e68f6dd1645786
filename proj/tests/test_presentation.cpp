#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "repscheme/presentation.hpp"

using namespace repscheme;

namespace {

LabeledGraph single_edge(int label) {
  LabeledGraph g;
  g.vertices = {"v", "w"};
  g.edges = {{0, 1, label}};
  return g;
}

}  // namespace

TEST_CASE("free reduction is idempotent and length-nonincreasing") {
  std::mt19937_64 gen(3);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Letter> letters;
    int n = static_cast<int>(gen() % 12);
    for (int i = 0; i < n; ++i)
      letters.push_back(Letter{static_cast<int>(gen() % 3), gen() % 2 ? 1 : -1});
    Word w(letters);
    Word r = w.reduced();
    CHECK(r.size() <= w.size());
    CHECK(r.reduced() == r);
  }
  Word cancel = Word::generator(0) * Word::generator(1) * Word::generator(1, -1) *
                Word::generator(0, -1);
  CHECK(cancel.reduced().empty());
}

TEST_CASE("build_coxeter on a single labeled edge") {
  Presentation p2 = build_coxeter(single_edge(2));
  CHECK(p2.generators == std::vector<std::string>{"v", "w"});
  REQUIRE(p2.relators.size() == 3);
  CHECK(p2.word_to_string(p2.relators[0]) == "v*v");
  CHECK(p2.word_to_string(p2.relators[2]) == "v*w*v^-1*w^-1");

  Presentation p4 = build_coxeter(single_edge(4));
  REQUIRE(p4.relators.size() == 3);
  CHECK(p4.word_to_string(p4.relators[2]) == "v*w*v*w*v^-1*w^-1*v^-1*w^-1");
}

TEST_CASE("rank one Coxeter group is Z2") {
  LabeledGraph g;
  g.vertices = {"v"};
  Presentation p = build_coxeter(g);
  CHECK(p.generators.size() == 1);
  REQUIRE(p.relators.size() == 1);
  CHECK(p.word_to_string(p.relators[0]) == "v*v");
}

TEST_CASE("odd labels and duplicate vertices are rejected") {
  CHECK_THROWS_AS(build_coxeter(single_edge(3)), ValidationError);
  LabeledGraph dup;
  dup.vertices = {"v", "v"};
  CHECK_THROWS_AS(build_coxeter(dup), ValidationError);
  LabeledGraph loop;
  loop.vertices = {"v"};
  loop.edges = {{0, 0, 2}};
  CHECK_THROWS_AS(build_coxeter(loop), ValidationError);
}

TEST_CASE("extended Coxeter presentation carries the twisted relators") {
  auto ext = build_extended_coxeter(single_edge(2));
  const Presentation& p = ext.presentation;
  CHECK(p.generators == std::vector<std::string>{"z", "v", "w"});
  // z^2, two commutators, two squares-with-z, one twisted edge relator
  REQUIRE(p.relators.size() == 6);
  CHECK(p.word_to_string(p.relators[0]) == "z*z");
  CHECK(p.word_to_string(p.relators[1]) == "v*z*v^-1*z^-1");
  CHECK(p.word_to_string(p.relators[2]) == "v*v*z^-1");
  CHECK(p.word_to_string(p.relators[5]) == "v*w*v^-1*w^-1*z^-1*z^-1*z^-1");

  // projection kills z and fixes the vertex generators
  CHECK(ext.projection.images[0].empty());
  CHECK(ext.projection.map_word(Word::generator(1)) == Word::generator(0));
}

TEST_CASE("extended Coxeter of a single vertex is Z4-shaped") {
  LabeledGraph g;
  g.vertices = {"g"};
  auto ext = build_extended_coxeter(g);
  CHECK(ext.presentation.generators == std::vector<std::string>{"z", "g"});
  REQUIRE(ext.presentation.relators.size() == 3);
}

TEST_CASE("z collides with a vertex name and is renamed") {
  LabeledGraph g;
  g.vertices = {"z", "w"};
  g.edges = {{0, 1, 2}};
  auto ext = build_extended_coxeter(g);
  CHECK(ext.presentation.generators[0] == "z_");
}

TEST_CASE("quotient_by_normal_closure adds relators and returns the projection") {
  auto ext = build_extended_coxeter(single_edge(2));
  auto quo = quotient_by_normal_closure(ext.presentation, {Word::generator(ext.z_index)});
  CHECK(quo.presentation.relators.size() == ext.presentation.relators.size() + 1);
  CHECK(quo.presentation.generators == ext.presentation.generators);
  CHECK(quo.projection.images.size() == 3);

  auto unchanged = quotient_by_normal_closure(ext.presentation, {});
  CHECK(unchanged.presentation.relators == ext.presentation.relators);
  for (std::size_t g = 0; g < unchanged.projection.images.size(); ++g)
    CHECK(unchanged.projection.images[g] == Word::generator(static_cast<int>(g)));
}

TEST_CASE("free_product_with_free adds generators only") {
  Presentation z2;
  z2.generators = {"g"};
  z2.relators = {Word::generator(0) * Word::generator(0)};

  auto fp0 = free_product_with_free(z2, 0);
  CHECK(fp0.presentation.generators == z2.generators);
  CHECK(fp0.presentation.relators == z2.relators);

  auto fp1 = free_product_with_free(z2, 1);
  CHECK(fp1.presentation.generators == std::vector<std::string>{"g", "t1"});
  CHECK(fp1.presentation.relators.size() == 1);
  CHECK(fp1.retraction.images[1].empty());

  // von Dyck with k=2: 5 generators, 3 relators
  Presentation vd = parse_presentation("gen a\ngen b\ngen c\nrel a*a*a\nrel b*b*b\nrel a*b*c\n");
  auto fp2 = free_product_with_free(vd, 2);
  CHECK(fp2.presentation.generators.size() == 5);
  CHECK(fp2.presentation.relators.size() == 3);
}

TEST_CASE("fresh free generators avoid collisions deterministically") {
  Presentation p;
  p.generators = {"t1"};
  auto fp = free_product_with_free(p, 1);
  CHECK(fp.presentation.generators == std::vector<std::string>{"t1", "t1_"});
}

TEST_CASE("presentation text format round-trips with errors located") {
  std::string text = "gen a\ngen b\nrel a*b^-1*a\n";
  Presentation p = parse_presentation(text);
  CHECK(presentation_to_text(p) == text);

  try {
    parse_presentation("gen a\nrel a*q\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line == 2);
  }
}

TEST_CASE("graph text format round-trips") {
  std::string text = "vertex v\nvertex w\nedge v w 4\n";
  LabeledGraph g = parse_graph(text);
  CHECK(graph_to_text(g) == text);
  CHECK(g.max_label() == 4);
  CHECK_THROWS_AS(parse_graph("vertex v\nedge v v 2\n"), ValidationError);
  CHECK_THROWS_AS(parse_graph("vertex v\nvertex w\nedge v w 3\n"), ValidationError);
}
