// dsl.cpp -- tokenizer, recursive-descent parser, printer, and builder.

#include "fock/dsl.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

namespace fock {

namespace {

struct Token {
  enum class Type { ident, number, punct, end };
  Type type = Type::end;
  std::string text;
  long value = 0;
  int line = 1, col = 1;
};

class Lexer {
 public:
  explicit Lexer(const std::string& text) : text_(text) {}

  Token next() {
    skip_ws();
    Token t;
    t.line = line_;
    t.col = col_;
    if (pos_ >= text_.size()) return t;
    char c = text_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      t.type = Token::Type::ident;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        t.text += take();
      return t;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      t.type = Token::Type::number;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
        t.text += take();
      t.value = std::stol(t.text);
      return t;
    }
    if (c == '-' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '>') {
      t.type = Token::Type::punct;
      t.text = "->";
      take();
      take();
      return t;
    }
    if (std::string("{};:=(),").find(c) != std::string::npos) {
      t.type = Token::Type::punct;
      t.text = std::string(1, take());
      return t;
    }
    t.type = Token::Type::punct;
    t.text = std::string(1, take());
    t.text = "?" + t.text;  // unknown character; parser reports it
    return t;
  }

 private:
  char take() {
    char c = text_[pos_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }
  void skip_ws() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') take();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        take();
      } else {
        break;
      }
    }
  }

  const std::string& text_;
  size_t pos_ = 0;
  int line_ = 1, col_ = 1;
};

class Parser {
 public:
  explicit Parser(const std::string& text) : lexer_(text) { advance(); }

  ParseResult run() {
    ParseResult result;
    StructureFile f;
    if (!parse_kind(f) || !expect_punct("{")) return fail(result);
    while (!at_punct("}") && current_.type != Token::Type::end) {
      if (!parse_decl(f)) return fail(result);
    }
    if (!expect_punct("}")) return fail(result);
    if (current_.type != Token::Type::end) {
      error("trailing input after closing brace");
      return fail(result);
    }
    result.file = std::move(f);
    return result;
  }

 private:
  ParseResult fail(ParseResult& result) {
    result.file.reset();
    result.diagnostics = diagnostics_;
    return std::move(result);
  }

  void advance() { current_ = lexer_.next(); }

  bool at_punct(const std::string& p) const {
    return current_.type == Token::Type::punct && current_.text == p;
  }

  bool expect_punct(const std::string& p) {
    if (!at_punct(p)) {
      error("expected '" + p + "'");
      return false;
    }
    advance();
    return true;
  }

  void error(const std::string& message) {
    std::string got = current_.type == Token::Type::end ? "end of input" : "'" + current_.text + "'";
    diagnostics_.push_back({current_.line, current_.col, message + ", got " + got});
  }

  bool parse_kind(StructureFile& f) {
    if (current_.type != Token::Type::ident) {
      error("expected 'graph', 'kgraph' or 'category'");
      return false;
    }
    std::string kind = current_.text;
    advance();
    if (kind == "graph") {
      f.kind = StructureFile::Kind::graph;
    } else if (kind == "kgraph") {
      f.kind = StructureFile::Kind::kgraph;
      if (current_.type != Token::Type::number || current_.value < 1) {
        error("expected a positive rank after 'kgraph'");
        return false;
      }
      f.rank = static_cast<int>(current_.value);
      advance();
    } else if (kind == "category") {
      f.kind = StructureFile::Kind::category;
    } else {
      error("unknown structure kind '" + kind + "'");
      return false;
    }
    return true;
  }

  bool parse_decl(StructureFile& f) {
    if (current_.type != Token::Type::ident) {
      error("expected a declaration");
      return false;
    }
    std::string keyword = current_.text;
    advance();
    if (keyword == "vertices") return parse_vertices(f);
    if (keyword == "edge") return parse_edge(f);
    if (keyword == "square" || keyword == "relation") return parse_identity(f, keyword == "square");
    if (keyword == "degree") return parse_degree(f);
    error("unknown declaration '" + keyword + "'");
    return false;
  }

  bool parse_vertices(StructureFile& f) {
    if (current_.type != Token::Type::ident) {
      error("expected at least one vertex id");
      return false;
    }
    while (current_.type == Token::Type::ident) {
      f.vertices.push_back(current_.text);
      advance();
    }
    return expect_punct(";");
  }

  bool parse_edge(StructureFile& f) {
    StructureFile::EdgeDecl e;
    if (current_.type != Token::Type::ident) {
      error("expected an edge id");
      return false;
    }
    e.id = current_.text;
    advance();
    if (!expect_punct(":")) return false;
    if (current_.type == Token::Type::number) {
      e.color = static_cast<int>(current_.value);
      advance();
      if (!expect_punct(":")) return false;
    }
    if (current_.type != Token::Type::ident) {
      error("expected a source vertex id");
      return false;
    }
    e.source = current_.text;
    advance();
    if (!expect_punct("->")) return false;
    if (current_.type != Token::Type::ident) {
      error("expected a range vertex id");
      return false;
    }
    e.range = current_.text;
    advance();
    f.edges.push_back(std::move(e));
    return expect_punct(";");
  }

  bool parse_word(std::vector<std::string>& out) {
    if (current_.type != Token::Type::ident) {
      error("expected a word (one or more ids)");
      return false;
    }
    while (current_.type == Token::Type::ident) {
      out.push_back(current_.text);
      advance();
    }
    return true;
  }

  bool parse_identity(StructureFile& f, bool is_square) {
    StructureFile::Identity ident;
    ident.is_square = is_square;
    if (!expect_punct(":")) return false;
    if (!parse_word(ident.lhs)) return false;
    if (!expect_punct("=")) return false;
    if (!parse_word(ident.rhs)) return false;
    f.identities.push_back(std::move(ident));
    return expect_punct(";");
  }

  bool parse_degree(StructureFile& f) {
    StructureFile::DegreeDecl d;
    if (current_.type != Token::Type::ident) {
      error("expected a generator id");
      return false;
    }
    d.id = current_.text;
    advance();
    if (!expect_punct("=")) return false;
    if (!expect_punct("(")) return false;
    while (true) {
      if (current_.type != Token::Type::number) {
        error("expected a natural number in the degree vector");
        return false;
      }
      d.degree.push_back(static_cast<int>(current_.value));
      advance();
      if (at_punct(",")) {
        advance();
        continue;
      }
      break;
    }
    if (!expect_punct(")")) return false;
    f.degrees.push_back(std::move(d));
    return expect_punct(";");
  }

  Lexer lexer_;
  Token current_;
  std::vector<Diagnostic> diagnostics_;
};

}  // namespace

ParseResult parse(const std::string& text) { return Parser(text).run(); }

std::string print(const StructureFile& f) {
  std::ostringstream out;
  switch (f.kind) {
    case StructureFile::Kind::graph: out << "graph {\n"; break;
    case StructureFile::Kind::kgraph: out << "kgraph " << f.rank << " {\n"; break;
    case StructureFile::Kind::category: out << "category {\n"; break;
  }
  if (!f.vertices.empty()) {
    out << "  vertices";
    for (const auto& v : f.vertices) out << ' ' << v;
    out << ";\n";
  }
  for (const auto& e : f.edges) {
    out << "  edge " << e.id << ":";
    if (e.color > 0) out << ' ' << e.color << ":";
    out << ' ' << e.source << " -> " << e.range << ";\n";
  }
  for (const auto& ident : f.identities) {
    out << (ident.is_square ? "  square:" : "  relation:");
    for (const auto& id : ident.lhs) out << ' ' << id;
    out << " =";
    for (const auto& id : ident.rhs) out << ' ' << id;
    out << ";\n";
  }
  for (const auto& d : f.degrees) {
    out << "  degree " << d.id << " = (";
    for (size_t i = 0; i < d.degree.size(); ++i) out << (i ? "," : "") << d.degree[i];
    out << ");\n";
  }
  out << "}\n";
  return out.str();
}

namespace {

// Resolve a word over declared ids; vertex ids act as identity morphisms.
Word resolve_word(const std::vector<std::string>& ids, const std::map<std::string, int>& vertex_ids,
                  const std::map<std::string, int>& edge_ids,
                  const std::vector<Generator>& generators, const std::string& context) {
  struct Item {
    bool is_vertex;
    int index;
  };
  std::vector<Item> items;
  for (const auto& id : ids) {
    if (auto it = edge_ids.find(id); it != edge_ids.end())
      items.push_back({false, it->second});
    else if (auto vt = vertex_ids.find(id); vt != vertex_ids.end())
      items.push_back({true, vt->second});
    else
      throw Error(ErrorCode::UndeclaredId, "undeclared id '" + id + "' in " + context);
  }
  auto source_of = [&](const Item& it) {
    return it.is_vertex ? it.index : generators[it.index].source;
  };
  auto range_of = [&](const Item& it) {
    return it.is_vertex ? it.index : generators[it.index].range;
  };
  for (size_t i = 0; i + 1 < items.size(); ++i)
    if (source_of(items[i]) != range_of(items[i + 1]))
      throw Error(ErrorCode::NotComposable, "word not composable in " + context);
  std::vector<int32_t> gens;
  for (const auto& it : items)
    if (!it.is_vertex) gens.push_back(it.index);
  if (gens.empty()) return Word::vertex(items.front().index);
  return Word::from_generators(std::move(gens));
}

}  // namespace

std::variant<std::unique_ptr<PathCategory>, std::vector<Violation>> build_structure(
    const StructureFile& f) {
  std::vector<Violation> violations;

  // Kind gating.
  for (const auto& ident : f.identities) {
    if (ident.is_square && f.kind != StructureFile::Kind::kgraph)
      violations.push_back({ErrorCode::KindMismatch, "'square' is only valid in a kgraph"});
    if (!ident.is_square && f.kind != StructureFile::Kind::category)
      violations.push_back({ErrorCode::KindMismatch, "'relation' is only valid in a category"});
  }
  if (!f.degrees.empty() && f.kind != StructureFile::Kind::category)
    violations.push_back({ErrorCode::KindMismatch, "'degree' is only valid in a category"});
  for (const auto& e : f.edges) {
    if (e.color != 0 && f.kind != StructureFile::Kind::kgraph)
      violations.push_back({ErrorCode::KindMismatch, "edge color is only valid in a kgraph"});
    if (f.kind == StructureFile::Kind::kgraph && (e.color < 1 || e.color > f.rank))
      violations.push_back({ErrorCode::KindMismatch,
                            "edge '" + e.id + "' needs a color in 1.." + std::to_string(f.rank)});
  }
  if (!violations.empty()) return violations;

  if (f.kind == StructureFile::Kind::graph) {
    GraphSpec spec;
    spec.vertices = f.vertices;
    for (const auto& e : f.edges) spec.edges.push_back({e.id, e.source, e.range});
    auto validated = DirectedGraph::validate(spec);
    if (auto* errs = std::get_if<std::vector<Violation>>(&validated)) return *errs;
    return std::make_unique<GraphCategory>(std::get<DirectedGraph>(std::move(validated)));
  }

  // Shared id tables, declaration order.
  std::map<std::string, int> vertex_ids, edge_ids;
  for (const auto& v : f.vertices) {
    if (!vertex_ids.emplace(v, static_cast<int>(vertex_ids.size())).second)
      violations.push_back({ErrorCode::DuplicateId, "duplicate vertex id '" + v + "'"});
  }
  std::vector<Generator> generators;
  for (const auto& e : f.edges) {
    if (vertex_ids.count(e.id) || !edge_ids.emplace(e.id, static_cast<int>(generators.size())).second) {
      violations.push_back({ErrorCode::DuplicateId, "duplicate id '" + e.id + "'"});
      continue;
    }
    auto src = vertex_ids.find(e.source);
    auto rng = vertex_ids.find(e.range);
    if (src == vertex_ids.end())
      violations.push_back({ErrorCode::UndeclaredId, "edge '" + e.id + "' has undeclared source '" +
                                                         e.source + "'"});
    if (rng == vertex_ids.end())
      violations.push_back({ErrorCode::UndeclaredId, "edge '" + e.id + "' has undeclared range '" +
                                                         e.range + "'"});
    if (src == vertex_ids.end() || rng == vertex_ids.end()) continue;
    Generator g;
    g.id = e.id;
    g.source = src->second;
    g.range = rng->second;
    g.color = e.color;
    generators.push_back(std::move(g));
  }
  if (!violations.empty()) return violations;

  if (f.kind == StructureFile::Kind::kgraph) {
    KGraphSkeleton skel;
    skel.rank = f.rank;
    skel.vertices = f.vertices;
    for (auto& g : generators) g.degree = MultiDegree::unit(f.rank, g.color - 1);
    skel.edges = std::move(generators);
    for (const auto& ident : f.identities) {
      Word lhs, rhs;
      try {
        lhs = resolve_word(ident.lhs, vertex_ids, edge_ids, skel.edges, "square");
        rhs = resolve_word(ident.rhs, vertex_ids, edge_ids, skel.edges, "square");
      } catch (const Error& err) {
        violations.push_back({err.code(), err.what()});
        continue;
      }
      if (lhs.length() != 2 || rhs.length() != 2) {
        violations.push_back({ErrorCode::KindMismatch, "square sides must be two-edge words"});
        continue;
      }
      skel.squares.push_back({lhs.gen(0), lhs.gen(1), rhs.gen(0), rhs.gen(1)});
    }
    if (!violations.empty()) return violations;
    return std::make_unique<KGraphCategory>(std::move(skel));
  }

  CategoryPresentation pres;
  pres.vertices = f.vertices;
  pres.has_degree = !f.degrees.empty();
  pres.rank = 1;
  if (pres.has_degree) {
    std::map<std::string, std::vector<int>> degree_by_id;
    for (const auto& d : f.degrees) {
      if (!degree_by_id.emplace(d.id, d.degree).second)
        violations.push_back({ErrorCode::DuplicateId, "duplicate degree for '" + d.id + "'"});
      if (!edge_ids.count(d.id))
        violations.push_back({ErrorCode::UndeclaredId, "degree for undeclared edge '" + d.id + "'"});
    }
    if (!f.degrees.empty()) pres.rank = static_cast<int>(f.degrees.front().degree.size());
    for (const auto& d : f.degrees)
      if (static_cast<int>(d.degree.size()) != pres.rank)
        violations.push_back({ErrorCode::KindMismatch, "degree vectors must share one rank"});
    for (auto& g : generators) {
      auto it = degree_by_id.find(g.id);
      if (it == degree_by_id.end()) {
        violations.push_back(
            {ErrorCode::UndeclaredId, "generator '" + g.id + "' is missing a degree"});
        continue;
      }
      g.degree = MultiDegree(it->second);
    }
  } else {
    for (auto& g : generators) g.degree = MultiDegree({1});
  }
  if (!violations.empty()) return violations;
  pres.generators = std::move(generators);

  for (const auto& ident : f.identities) {
    Word lhs, rhs;
    try {
      lhs = resolve_word(ident.lhs, vertex_ids, edge_ids, pres.generators, "relation");
      rhs = resolve_word(ident.rhs, vertex_ids, edge_ids, pres.generators, "relation");
    } catch (const Error& err) {
      violations.push_back({err.code(), err.what()});
      continue;
    }
    pres.relations.push_back({std::move(lhs), std::move(rhs)});
  }
  if (!violations.empty()) return violations;

  auto relation_violations = validate_presentation(pres);
  if (!relation_violations.empty()) return relation_violations;
  return std::make_unique<PresentedCategory>(std::move(pres));
}

}  // namespace fock
