#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rbd/dinvariant.hpp"

namespace rbd {

/// The extra 2-handle that turns the boundary into S^1 x S^2.
struct BallHandleSpec {
  IntVector intersections;
  Integer framing;
};

// Form bordered by the handle row and column; the handle is the last coordinate.
IntMatrix enhanced_matrix(const IntMatrix& form, const BallHandleSpec& spec);

// The handle for the C_{p,1} chain (-(p+2), -2, ..., -2).
BallHandleSpec casson_harer_handle(long p);

struct VectorVerdict {
  bool extends = false;
  bool divisible = false;
  std::optional<Integer> a;
};

// kernel = (c_1, ..., c_n, c_0) with c_0 on the handle.
VectorVerdict test_extension(const IntVector& kernel, const Integer& framing, const IntVector& k);

enum class ExtensionSource { Handle, Coset };

struct ClassVerdict {
  IntVector key;
  IntVector representative;
  Rational d;
  bool extends = false;
  bool divisible = false;
  std::optional<Integer> a;
};

struct ExtensionReport {
  ExtensionSource source = ExtensionSource::Handle;
  IntVector kernel;
  Integer framing;
  std::vector<ClassVerdict> classes;  // same order as the d-table
  std::vector<std::string> notes;

  std::size_t extending_count() const;
  std::vector<IntVector> extending_keys() const;
  bool extends_key(const IntVector& key) const;
};

ExtensionReport extension_classes(const SpincLattice& lattice, const DInvariantTable& table,
                                  const BallHandleSpec& spec);

// Report for an extension set given directly as class keys.
ExtensionReport extension_from_keys(const DInvariantTable& table, const std::vector<IntVector>& keys);

// (#extending)^2 = |det| and every extending class has d = 0.
bool owens_strle_check(const SpincLattice& lattice, const ExtensionReport& report);

// Integer t with t^2 = n, if any.
std::optional<Integer> exact_sqrt(const Integer& n);

// base + k * generator for k = 1 .. order(generator); the last entry is base.
std::vector<IntVector> cyclic_orbit(const SpincLattice& lattice, const IntVector& base, const IntVector& generator);

using KeySet = std::vector<IntVector>;  // sorted class keys

// Coordinate permutation K -> (K_{perm[0]}, K_{perm[1]}, ...) that preserves the form.
using VertexSymmetry = std::vector<std::size_t>;
bool is_symmetry(const IntMatrix& form, const VertexSymmetry& perm);
IntVector apply_symmetry(const VertexSymmetry& perm, const IntVector& k);

struct SubgroupCandidates {
  IntVector base;              // self-conjugate d = 0 class
  std::vector<KeySet> sets;    // base + H for order-t subgroups H inside the d = 0 set
  std::vector<std::vector<std::size_t>> orbits;  // partition of sets under the symmetry
};

SubgroupCandidates extension_subgroups(const SpincLattice& lattice, const DInvariantTable& table,
                                       const std::optional<VertexSymmetry>& symmetry = std::nullopt);

// Every coset of an order-t subgroup made of d = 0 classes and closed under conjugation.
std::vector<KeySet> conjugation_closed_extension_sets(const SpincLattice& lattice, const DInvariantTable& table);

}  // namespace rbd
