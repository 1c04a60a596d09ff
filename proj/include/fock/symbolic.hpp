// symbolic.hpp -- elements of the path algebra as coefficient maps on
// normal forms.  The left regular representation is faithful on the path
// algebra, so vanishing here certifies operator identities without any
// truncation artifacts.
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "fock/category.hpp"
#include "fock/types.hpp"
#include "fock/word.hpp"

namespace fock {

// Deterministic iteration order matters for reproducible reports.
using SymbolicElement = std::map<Word, Complex, WordLexLess>;

SymbolicElement sym_scale(const SymbolicElement& a, Complex c);
SymbolicElement sym_add(const SymbolicElement& a, const SymbolicElement& b);

// Product in the path algebra: non-composable pairs vanish, composable pairs
// land on the normal form of the concatenation.  The category must be
// verified far enough to normalize the longest product.
SymbolicElement sym_multiply(const PathCategory& cat, const SymbolicElement& a,
                             const SymbolicElement& b, double prune_tol = kRelationTol);

double sym_norm(const SymbolicElement& a);
int sym_max_length(const SymbolicElement& a);

struct SymbolicNilpotency {
  std::optional<int> index;           // least n <= max_power with a^n = 0
  std::vector<double> power_norms;    // coefficient norms of a^1, a^2, ...
};
SymbolicNilpotency symbolic_nilpotency(PathCategory& cat, const SymbolicElement& a, int max_power);

struct FalsifierSample {
  SymbolicElement element;
  std::optional<Word> witness;  // mu with L_mu * A not nilpotent within bounds
  int witness_power = 0;        // deepest power confirmed nonzero
};

struct FalsifierReport {
  bool counterexample_found = false;  // some sampled A had no witness
  int samples = 0;
  int path_bound = 0;
  int power_bound = 0;
  uint64_t seed = 0;
  std::vector<FalsifierSample> results;
};

// Randomized falsifier for the non-nilpotency half of property (P): samples
// combinations A = sum a_i L_{w_i} over classes of one common length, and
// searches for mu making L_mu A symbolically non-nilpotent within bounds.
// A sample with no witness is only a CANDIDATE counterexample; the search is
// bounded and never proves the property.
FalsifierReport falsify_property_P_part2(PathCategory& cat, int coeff_samples, int path_bound,
                                         uint64_t seed);

}  // namespace fock
