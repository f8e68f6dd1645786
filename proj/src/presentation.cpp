#include "repscheme/presentation.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <unordered_set>

namespace repscheme {

Word& Word::operator*=(const Word& rhs) {
  letters_.insert(letters_.end(), rhs.letters_.begin(), rhs.letters_.end());
  return *this;
}

Word Word::inverse() const {
  std::vector<Letter> out;
  out.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
    out.push_back(Letter{it->gen, -it->exp});
  return Word(std::move(out));
}

Word Word::power(int n) const {
  Word base = n >= 0 ? *this : inverse();
  Word out;
  for (int i = 0; i < std::abs(n); ++i) out *= base;
  return out;
}

Word Word::reduced() const {
  std::vector<Letter> stack;
  for (const Letter& l : letters_) {
    if (!stack.empty() && stack.back().gen == l.gen && stack.back().exp == -l.exp)
      stack.pop_back();
    else
      stack.push_back(l);
  }
  return Word(std::move(stack));
}

int Presentation::generator_index(const std::string& name) const {
  auto it = std::find(generators.begin(), generators.end(), name);
  return it == generators.end() ? -1 : static_cast<int>(it - generators.begin());
}

void Presentation::validate() const {
  std::unordered_set<std::string> seen;
  for (const auto& g : generators) {
    if (g.empty()) throw ValidationError("empty generator name", "presentation");
    if (!seen.insert(g).second)
      throw ValidationError("duplicate generator name '" + g + "'", g);
  }
  const int p = static_cast<int>(generators.size());
  for (std::size_t j = 0; j < relators.size(); ++j)
    for (const Letter& l : relators[j].letters()) {
      if (l.gen < 0 || l.gen >= p)
        throw ValidationError("relator " + std::to_string(j + 1) + " references generator index " +
                                  std::to_string(l.gen) + " out of range",
                              "relator " + std::to_string(j + 1));
      if (l.exp != 1 && l.exp != -1)
        throw ValidationError("letter exponent must be +1 or -1", "relator " + std::to_string(j + 1));
    }
}

std::string Presentation::word_to_string(const Word& w) const {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.letters().size(); ++i) {
    const Letter& l = w.letters()[i];
    if (i) out += "*";
    out += generators[static_cast<std::size_t>(l.gen)];
    if (l.exp < 0) out += "^-1";
  }
  return out;
}

Word Presentation::parse_word(const std::string& text, int line) const {
  std::vector<Letter> letters;
  if (text == "1") return Word{};
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t star = text.find('*', pos);
    std::string tok = text.substr(pos, star == std::string::npos ? star : star - pos);
    int column = static_cast<int>(pos) + 1;
    int exp = 1;
    if (tok.size() > 3 && tok.substr(tok.size() - 3) == "^-1") {
      exp = -1;
      tok = tok.substr(0, tok.size() - 3);
    }
    if (tok.empty()) throw ParseError("empty letter in word", line, column);
    int gen = generator_index(tok);
    if (gen < 0) throw ParseError("unknown generator '" + tok + "'", line, column);
    letters.push_back(Letter{gen, exp});
    if (star == std::string::npos) break;
    pos = star + 1;
    if (pos == text.size()) throw ParseError("trailing '*' in word", line, static_cast<int>(pos));
  }
  return Word(std::move(letters));
}

Word GroupHom::map_word(const Word& w) const {
  Word out;
  for (const Letter& l : w.letters()) {
    const Word& img = images[static_cast<std::size_t>(l.gen)];
    out *= l.exp > 0 ? img : img.inverse();
  }
  return out.reduced();
}

int LabeledGraph::vertex_index(const std::string& name) const {
  auto it = std::find(vertices.begin(), vertices.end(), name);
  return it == vertices.end() ? -1 : static_cast<int>(it - vertices.begin());
}

int LabeledGraph::max_label() const {
  int m = 0;
  for (const auto& e : edges) m = std::max(m, e.label);
  return m;
}

void LabeledGraph::validate() const {
  std::unordered_set<std::string> seen;
  for (const auto& v : vertices) {
    if (v.empty()) throw ValidationError("empty vertex name", "graph");
    if (!seen.insert(v).second) throw ValidationError("duplicate vertex name '" + v + "'", v);
  }
  std::set<std::pair<int, int>> pairs;
  const int n = rank();
  for (const auto& e : edges) {
    if (e.a < 0 || e.a >= n || e.b < 0 || e.b >= n)
      throw ValidationError("edge endpoint out of range", "graph");
    if (e.a == e.b)
      throw ValidationError("loop at vertex '" + vertices[static_cast<std::size_t>(e.a)] + "'",
                            vertices[static_cast<std::size_t>(e.a)]);
    auto key = std::minmax(e.a, e.b);
    if (!pairs.insert({key.first, key.second}).second)
      throw ValidationError("multi-edge between '" + vertices[static_cast<std::size_t>(e.a)] +
                                "' and '" + vertices[static_cast<std::size_t>(e.b)] + "'",
                            "graph");
    if (e.label <= 0 || e.label % 2 != 0)
      throw ValidationError(
          "edge [" + vertices[static_cast<std::size_t>(e.a)] + "," +
              vertices[static_cast<std::size_t>(e.b)] + "] has odd or non-positive label " +
              std::to_string(e.label),
          "edge [" + vertices[static_cast<std::size_t>(e.a)] + "," +
              vertices[static_cast<std::size_t>(e.b)] + "]");
  }
}

Word alternating_word(int a, int b, int count) {
  std::vector<Letter> letters;
  letters.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) letters.push_back(Letter{i % 2 == 0 ? a : b, 1});
  return Word(std::move(letters));
}

Presentation build_coxeter(const LabeledGraph& graph) {
  graph.validate();
  Presentation pres;
  pres.generators = graph.vertices;
  for (int v = 0; v < graph.rank(); ++v)
    pres.relators.push_back(Word::generator(v) * Word::generator(v));
  for (const auto& e : graph.edges)
    pres.relators.push_back(alternating_word(e.a, e.b, e.label) *
                            alternating_word(e.b, e.a, e.label).inverse());
  pres.validate();
  return pres;
}

namespace {

std::string fresh_name(std::string base, const std::vector<std::string>& taken) {
  while (std::find(taken.begin(), taken.end(), base) != taken.end()) base += "_";
  return base;
}

}  // namespace

ExtendedCoxeterResult build_extended_coxeter(const LabeledGraph& graph) {
  graph.validate();
  Presentation pres;
  pres.generators.push_back(fresh_name("z", graph.vertices));
  for (const auto& v : graph.vertices) pres.generators.push_back(v);
  const int z = 0;
  auto gv = [](int v) { return v + 1; };

  Word zz = Word::generator(z) * Word::generator(z);
  pres.relators.push_back(zz);
  for (int v = 0; v < graph.rank(); ++v) {
    // [g_v, z]
    pres.relators.push_back(Word::generator(gv(v)) * Word::generator(z) *
                            Word::generator(gv(v), -1) * Word::generator(z, -1));
    // g_v^2 z^-1
    pres.relators.push_back(Word::generator(gv(v)) * Word::generator(gv(v)) *
                            Word::generator(z, -1));
  }
  for (const auto& e : graph.edges) {
    // (g_v g_w ...)_m  [z^{m+1} (g_w g_v ...)_m]^-1
    Word lhs = alternating_word(gv(e.a), gv(e.b), e.label);
    Word rhs = Word::generator(z).power(e.label + 1) * alternating_word(gv(e.b), gv(e.a), e.label);
    pres.relators.push_back(lhs * rhs.inverse());
  }
  pres.validate();

  Presentation base = build_coxeter(graph);
  GroupHom projection;
  projection.source = pres;
  projection.target = base;
  projection.images.push_back(Word{});  // z dies
  for (int v = 0; v < graph.rank(); ++v) projection.images.push_back(Word::generator(v));
  return ExtendedCoxeterResult{std::move(pres), std::move(projection), z};
}

QuotientResult quotient_by_normal_closure(const Presentation& pres,
                                          const std::vector<Word>& theta) {
  pres.validate();
  Presentation quotient = pres;
  for (const auto& w : theta) {
    Presentation probe = pres;
    probe.relators.assign(1, w);
    probe.validate();  // rejects malformed words
    quotient.relators.push_back(w);
  }
  GroupHom projection;
  projection.source = pres;
  projection.target = quotient;
  for (std::size_t g = 0; g < pres.generators.size(); ++g)
    projection.images.push_back(Word::generator(static_cast<int>(g)));
  return QuotientResult{std::move(quotient), std::move(projection)};
}

FreeProductResult free_product_with_free(const Presentation& pres, int k) {
  pres.validate();
  if (k < 0) throw ValidationError("free rank must be non-negative", "free_product_with_free");
  Presentation product = pres;
  std::vector<int> free_gens;
  for (int i = 1; i <= k; ++i) {
    std::string name = fresh_name("t" + std::to_string(i), product.generators);
    free_gens.push_back(static_cast<int>(product.generators.size()));
    product.generators.push_back(name);
  }
  GroupHom retraction;
  retraction.source = product;
  retraction.target = pres;
  for (std::size_t g = 0; g < pres.generators.size(); ++g)
    retraction.images.push_back(Word::generator(static_cast<int>(g)));
  for (int i = 0; i < k; ++i) retraction.images.push_back(Word{});
  return FreeProductResult{std::move(product), std::move(retraction), std::move(free_gens)};
}

// ---------------------------------------------------------------------------
// Text formats

namespace {

std::vector<std::string> split_ws(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

}  // namespace

Presentation parse_presentation(const std::string& text) {
  Presentation pres;
  struct PendingRel {
    std::string word;
    int line;
  };
  std::vector<PendingRel> pending;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto toks = split_ws(line);
    if (toks.empty() || toks[0][0] == '#') continue;
    if (toks[0] == "gen") {
      if (toks.size() != 2) throw ParseError("expected 'gen <name>'", line_no, 1);
      pres.generators.push_back(toks[1]);
    } else if (toks[0] == "rel") {
      if (toks.size() != 2) throw ParseError("expected 'rel <word>'", line_no, 1);
      pending.push_back({toks[1], line_no});
    } else {
      throw ParseError("unknown directive '" + toks[0] + "'", line_no, 1);
    }
  }
  for (const auto& p : pending) pres.relators.push_back(pres.parse_word(p.word, p.line));
  pres.validate();
  return pres;
}

std::string presentation_to_text(const Presentation& pres) {
  std::string out;
  for (const auto& g : pres.generators) out += "gen " + g + "\n";
  for (const auto& r : pres.relators) out += "rel " + pres.word_to_string(r) + "\n";
  return out;
}

LabeledGraph parse_graph(const std::string& text) {
  LabeledGraph graph;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto toks = split_ws(line);
    if (toks.empty() || toks[0][0] == '#') continue;
    if (toks[0] == "vertex") {
      if (toks.size() != 2) throw ParseError("expected 'vertex <name>'", line_no, 1);
      graph.vertices.push_back(toks[1]);
    } else if (toks[0] == "edge") {
      if (toks.size() != 4) throw ParseError("expected 'edge <v> <w> <even label>'", line_no, 1);
      int a = graph.vertex_index(toks[1]);
      int b = graph.vertex_index(toks[2]);
      if (a < 0) throw ParseError("unknown vertex '" + toks[1] + "'", line_no, 6);
      if (b < 0) throw ParseError("unknown vertex '" + toks[2] + "'", line_no, 6);
      int label = 0;
      try {
        label = std::stoi(toks[3]);
      } catch (const std::exception&) {
        throw ParseError("bad label '" + toks[3] + "'", line_no, 6);
      }
      graph.edges.push_back(LabeledGraph::Edge{a, b, label});
    } else {
      throw ParseError("unknown directive '" + toks[0] + "'", line_no, 1);
    }
  }
  graph.validate();
  return graph;
}

std::string graph_to_text(const LabeledGraph& graph) {
  std::string out;
  for (const auto& v : graph.vertices) out += "vertex " + v + "\n";
  for (const auto& e : graph.edges)
    out += "edge " + graph.vertices[static_cast<std::size_t>(e.a)] + " " +
           graph.vertices[static_cast<std::size_t>(e.b)] + " " + std::to_string(e.label) + "\n";
  return out;
}

}  // namespace repscheme
