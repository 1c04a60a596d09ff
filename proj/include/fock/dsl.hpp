// dsl.hpp -- the structure description language.
//
//   file := kind "{" decl* "}"
//   kind := "graph" | "kgraph" rank | "category"
//   decl := "vertices" id+ ";"
//         | "edge" id [":" color] ":" id "->" id ";"
//         | "square:" word "=" word ";"
//         | "relation:" word "=" word ";"
//         | "degree" id "=" vector ";"
//   word := id+          (leftmost symbol applied last; composition right to left)
//   vector := "(" nat ("," nat)* ")"
//
// '#' starts a line comment.  Words are written left to right but compose
// right to left: in "a b" the symbol b acts first and a acts last.
#pragma once

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "fock/category.hpp"
#include "fock/kgraph.hpp"
#include "fock/presentation.hpp"

namespace fock {

struct Diagnostic {
  int line = 0;
  int col = 0;
  std::string message;
};

struct StructureFile {
  enum class Kind { graph, kgraph, category };
  Kind kind = Kind::graph;
  int rank = 1;  // kgraph only

  std::vector<std::string> vertices;

  struct EdgeDecl {
    std::string id;
    int color = 0;  // 0 = uncolored
    std::string source, range;
    bool operator==(const EdgeDecl&) const = default;
  };
  std::vector<EdgeDecl> edges;

  struct Identity {
    bool is_square = false;
    std::vector<std::string> lhs, rhs;
    bool operator==(const Identity&) const = default;
  };
  std::vector<Identity> identities;

  struct DegreeDecl {
    std::string id;
    std::vector<int> degree;
    bool operator==(const DegreeDecl&) const = default;
  };
  std::vector<DegreeDecl> degrees;

  bool operator==(const StructureFile&) const = default;
};

struct ParseResult {
  std::optional<StructureFile> file;
  std::vector<Diagnostic> diagnostics;
};

ParseResult parse(const std::string& text);

// Canonical printer; parse(print(f)) == f.
std::string print(const StructureFile& f);

// Validated structure: either a category (with kind-specific behavior behind
// the PathCategory interface) or the list of violations.
std::variant<std::unique_ptr<PathCategory>, std::vector<Violation>> build_structure(
    const StructureFile& f);

}  // namespace fock
