#pragma once

#include <map>
#include <string>
#include <vector>

#include "rbd/spinc.hpp"

namespace rbd {

struct FullPath {
  std::vector<IntVector> vectors;
  std::vector<std::size_t> moves;  // moves[i] takes vectors[i] to vectors[i + 1]
  int condition = 0;               // 1: some K_i > -m_i; 2: all K_i in [m_i, -m_i - 2]
};

// Off-diagonal entries in {0, 1} and the adjacency graph is a forest.
bool is_tree_form(const IntMatrix& form);

// Greedy path taking the lowest eligible vertex at each step.
FullPath full_path(const SpincLattice& lattice, const IntVector& k0);

// (K^2 + b2) / 4
Rational grading_shift(const SpincLattice& lattice, const IntVector& k);

struct DEntry {
  IntVector key;
  IntVector representative;  // lexicographically least member of the default box
  Rational d;
  IntVector witness;  // lexicographically least maximizer in the final box
  std::uint64_t box_members = 0;
};

struct DTableOptions {
  BoxPreset box = BoxPreset::Wide;
  int max_widenings = 3;
  unsigned jobs = 1;
};

struct DInvariantTable {
  std::vector<DEntry> entries;  // sorted by representative
  Integer b2;
  bool stabilized = false;
  int widenings = 0;
  bool tree_form = false;  // otherwise values are box maxima without a sleekness guarantee
  std::vector<std::string> warnings;

  const DEntry& at(const IntVector& key) const;
  const DEntry* find(const IntVector& key) const;

 private:
  friend DInvariantTable d_invariant_table(const SpincLattice&, const DTableOptions&);
  std::map<IntVector, std::size_t> index_;
};

DInvariantTable d_invariant_table(const SpincLattice& lattice, const DTableOptions& options = {});

struct DValue {
  Rational d;
  IntVector witness;
};
DValue d_invariant(const SpincLattice& lattice, const IntVector& k, const DTableOptions& options = {});

// Box vectors with K^2 = -b2, lexicographic order.
std::vector<IntVector> sharp_vectors(const SpincLattice& lattice, BoxPreset box = BoxPreset::Initial);

// For every class key: the number of distinct condition-2 endpoints over all
// move choices, summed over the initial-box vectors of that class.
std::map<IntVector, Integer> count_condition2_paths(const SpincLattice& lattice);

}  // namespace rbd
