// symbolic.cpp -- path-algebra arithmetic and the property (P) falsifier.

#include "fock/symbolic.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "fock/rng.hpp"

namespace fock {

SymbolicElement sym_scale(const SymbolicElement& a, Complex c) {
  SymbolicElement out;
  for (const auto& [w, v] : a) out[w] = v * c;
  return out;
}

SymbolicElement sym_add(const SymbolicElement& a, const SymbolicElement& b) {
  SymbolicElement out = a;
  for (const auto& [w, v] : b) out[w] += v;
  return out;
}

SymbolicElement sym_multiply(const PathCategory& cat, const SymbolicElement& a,
                             const SymbolicElement& b, double prune_tol) {
  SymbolicElement out;
  for (const auto& [u, cu] : a) {
    for (const auto& [w, cw] : b) {
      if (!cat.composable(u, w)) continue;
      out[cat.normal_form(cat.concat(u, w))] += cu * cw;
    }
  }
  for (auto it = out.begin(); it != out.end();)
    it = std::abs(it->second) <= prune_tol ? out.erase(it) : std::next(it);
  return out;
}

double sym_norm(const SymbolicElement& a) {
  double s = 0.0;
  for (const auto& [w, v] : a) s += std::norm(v);
  return std::sqrt(s);
}

int sym_max_length(const SymbolicElement& a) {
  int len = 0;
  for (const auto& [w, v] : a) len = std::max(len, w.length());
  return len;
}

SymbolicNilpotency symbolic_nilpotency(PathCategory& cat, const SymbolicElement& a, int max_power) {
  SymbolicNilpotency result;
  cat.ensure_verified(std::max(1, sym_max_length(a) * max_power));
  SymbolicElement power = a;
  for (int n = 1; n <= max_power; ++n) {
    if (n > 1) power = sym_multiply(cat, power, a);
    result.power_norms.push_back(sym_norm(power));
    if (power.empty()) {
      result.index = n;
      return result;
    }
  }
  return result;
}

FalsifierReport falsify_property_P_part2(PathCategory& cat, int coeff_samples, int path_bound,
                                         uint64_t seed) {
  FalsifierReport report;
  report.samples = coeff_samples;
  report.path_bound = path_bound;
  report.seed = seed;

  int power_bound = 4;
  // One factor L_mu*A has words of length at most path_bound + 2.
  int unit = path_bound + 2;
  if (!cat.has_exact_certificate()) {
    // Bounded verification only: shrink the power depth to what fits.
    int cap = std::max(unit, 8);
    power_bound = std::max(1, cap / unit);
  }
  report.power_bound = power_bound;
  cat.ensure_verified(unit * power_bound);

  auto levels = cat.classes_by_length(path_bound);
  std::vector<Word> mus;  // candidate mu, vertices included
  for (const auto& level : levels) mus.insert(mus.end(), level.begin(), level.end());

  // "Same length" means equal total degree under the functor.
  std::map<int, std::vector<Word>> by_degree;
  for (const auto& level : levels)
    for (const Word& w : level) {
      int total = cat.degree_of(w).total();
      if (total > 0) by_degree[total].push_back(w);
    }
  if (by_degree.empty()) return report;
  std::vector<int> degrees;
  for (const auto& [total, words] : by_degree) degrees.push_back(total);

  std::mt19937_64 rng(seed);
  for (int sample = 0; sample < coeff_samples; ++sample) {
    const auto& group = by_degree.at(degrees[rng() % std::min<size_t>(2, degrees.size())]);

    SymbolicElement a;
    for (const Word& w : group) {
      double re = 2.0 * uniform01(rng) - 1.0;
      double im = 2.0 * uniform01(rng) - 1.0;
      if (std::abs(Complex(re, im)) > 0.2) a[w] = Complex(re, im);
    }
    if (a.empty()) a[group.front()] = Complex(1.0, 0.0);

    FalsifierSample result;
    result.element = a;
    for (const Word& mu : mus) {
      SymbolicElement lmu{{mu, Complex(1.0, 0.0)}};
      SymbolicElement b = sym_multiply(cat, lmu, a);
      if (b.empty()) continue;
      bool vanished = false;
      SymbolicElement power = b;
      int depth = 1;
      for (; depth < power_bound; ++depth) {
        power = sym_multiply(cat, power, b);
        if (power.empty()) {
          vanished = true;
          break;
        }
      }
      if (!vanished) {
        result.witness = mu;
        result.witness_power = depth;
        break;
      }
    }
    if (!result.witness) report.counterexample_found = true;
    report.results.push_back(std::move(result));
  }
  return report;
}

}  // namespace fock
