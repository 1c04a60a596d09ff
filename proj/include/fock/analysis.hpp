// analysis.hpp -- command implementations shared by the CLI and the gallery.
#pragma once

#include <memory>
#include <optional>
#include <string>

#include "fock/dsl.hpp"
#include "fock/report.hpp"

namespace fock {

struct AnalysisOptions {
  int max_length = 6;
  int truncation = 8;
  double tolerance = kRelationTol;
  uint64_t seed = 0;
};

struct CommandResult {
  Json report;
  int exit_code = 0;  // 0 pass, 1 checked property failed, 2 usage/parse error
};

struct Structure {
  StructureFile file;
  std::string source_text;
  std::unique_ptr<PathCategory> category;
};

// Parse + validate; on failure the CommandResult carries diagnostics.
std::variant<Structure, CommandResult> load_structure(const std::string& text,
                                                      const std::string& command,
                                                      const AnalysisOptions& options);

// The full property battery; reused by `analyze` and the gallery.
Json analyze_structure(Structure& structure, const AnalysisOptions& options);

CommandResult run_check_axioms(Structure& structure, const AnalysisOptions& options);
CommandResult run_enumerate(Structure& structure, const AnalysisOptions& options);
CommandResult run_fock_build(Structure& structure, const AnalysisOptions& options);
CommandResult run_verify_ck(Structure& structure, const AnalysisOptions& options);
CommandResult run_cesaro(Structure& structure, const AnalysisOptions& options);
CommandResult run_fourier(Structure& structure, const AnalysisOptions& options);
CommandResult run_analyze(Structure& structure, const AnalysisOptions& options);

// Seeded test data used by cesaro / fourier and the acceptance suite.
SparseMatrix seeded_random_operator(const FockBasis& basis, uint64_t seed, double density = 0.25);
DenseVector seeded_random_vector(int dim, uint64_t seed);

}  // namespace fock
