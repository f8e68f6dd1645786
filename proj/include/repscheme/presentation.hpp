#pragma once

#include <string>
#include <vector>

#include "repscheme/errors.hpp"

namespace repscheme {

/// One letter of a word: a generator index with exponent +1 or -1.
struct Letter {
  int gen;
  int exp;
  friend bool operator==(const Letter&, const Letter&) = default;
};

/// A word in the generators of an ambient presentation. Words are stored as
/// written; free reduction is on demand and idempotent.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}
  static Word generator(int gen, int exp = 1) { return Word({Letter{gen, exp}}); }

  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  Word& operator*=(const Word& rhs);
  friend Word operator*(Word a, const Word& b) { return a *= b; }
  Word inverse() const;
  Word power(int n) const;  // negative n uses the inverse
  Word reduced() const;

  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<Letter> letters_;
};

/// A finitely presented group: ordered generator names plus relator words.
struct Presentation {
  std::vector<std::string> generators;
  std::vector<Word> relators;

  int generator_index(const std::string& name) const;  // -1 when absent
  void validate() const;  // unique names, letters in range

  std::string word_to_string(const Word& w) const;
  Word parse_word(const std::string& text, int line = 0) const;
};

/// A homomorphism given on generators. Validity for infinite targets is
/// checked pointwise on every representation pulled back through it.
struct GroupHom {
  Presentation source;
  Presentation target;
  std::vector<Word> images;  // one target word per source generator

  Word map_word(const Word& w) const;
};

/// Finite simplicial graph with even edge labels: the data of a Coxeter
/// group. Vertices not joined by an edge contribute no relation.
struct LabeledGraph {
  struct Edge {
    int a;
    int b;
    int label;
  };
  std::vector<std::string> vertices;
  std::vector<Edge> edges;

  int vertex_index(const std::string& name) const;
  int rank() const { return static_cast<int>(vertices.size()); }
  int max_label() const;
  void validate() const;  // no loops/multi-edges, labels even and positive
};

/// The alternating product (g_a g_b ...) with `count` letters.
Word alternating_word(int a, int b, int count);

/// Coxeter presentation: one involution per vertex, one alternating-product
/// relator per edge, stored exactly in the (g_v g_w ...)_m (g_w g_v ...)_m^-1
/// form.
Presentation build_coxeter(const LabeledGraph& graph);

struct ExtendedCoxeterResult {
  Presentation presentation;  // generators: z, then one per vertex
  GroupHom projection;        // kill z
  int z_index = 0;
};

/// Canonical central extension: relators z^2, [g_v, z], g_v^2 z^-1 and the
/// z^{m+1}-twisted edge relators.
ExtendedCoxeterResult build_extended_coxeter(const LabeledGraph& graph);

struct QuotientResult {
  Presentation presentation;
  GroupHom projection;
};

/// Adds the words of theta as relators; the projection is the identity on
/// generators.
QuotientResult quotient_by_normal_closure(const Presentation& pres,
                                          const std::vector<Word>& theta);

struct FreeProductResult {
  Presentation presentation;
  GroupHom retraction;          // kill the fresh free generators
  std::vector<int> free_gens;   // indices of t_1..t_k in the new presentation
};

/// Gamma * F_k: k fresh generators, no new relators. Name collisions are
/// renamed deterministically, never rejected.
FreeProductResult free_product_with_free(const Presentation& pres, int k);

// Text formats (External Interfaces): `gen <name>` / `rel <word>` and
// `vertex <name>` / `edge <v> <w> <label>`; words are `*`-separated letters
// `name` or `name^-1`.
Presentation parse_presentation(const std::string& text);
std::string presentation_to_text(const Presentation& pres);
LabeledGraph parse_graph(const std::string& text);
std::string graph_to_text(const LabeledGraph& graph);

}  // namespace repscheme
