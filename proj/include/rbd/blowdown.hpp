#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rbd/ball.hpp"

namespace rbd {

struct AmbientClass {
  std::string name;
  Rational c1sq;
  IntVector pairing;    // evaluation on each configuration sphere
  std::string off_tag;  // classes may only merge when their tags agree
};

/// Declarative data for the closed manifold containing the configuration.
struct AmbientData {
  Integer chi;
  Integer sigma;
  std::vector<AmbientClass> classes;
};

// |K_i| + m_i <= -2 at every vertex.
bool taut_check(const SpincLattice& lattice, const IntVector& k);

// True when the greedy full path from a taut K has a single vector.
bool taut_unique_path(const SpincLattice& lattice, const IntVector& k);

// (c1^2 - 2 chi - 3 sigma) / 4
Rational d_formal(const Rational& c1sq, const Integer& chi, const Integer& sigma);

// <K, V> + V.V where K' = K + 2 I V.
Rational grrel_shift(const SpincLattice& lattice, const IntVector& k, const IntVector& k2);

// n = -(<K, V> + V.V) / 2
Integer u_power(const SpincLattice& lattice, const IntVector& k, const IntVector& v);

struct ShiftLedgerEntry {
  IntVector k;
  IntVector v;
  IntVector k_shifted;
  Rational shift;
  Integer n;
};

// Single -1 sphere, K = (1), V = -n for n = 0..nmax.
std::vector<ShiftLedgerEntry> blowup_ledger(int nmax);

// Configuration side characteristic and c1^2 = sigma (mod 8) on the ambient side.
bool characteristic_glue_check(const SpincLattice& lattice, const IntVector& k, const Rational& c1sq,
                               const Integer& sigma);

struct LiftRow {
  std::string name;
  std::string off_tag;
  IntVector k;
  Rational c1sq;
  Rational square;
  bool characteristic = false;
  bool taut = false;
  bool sharp = false;
  bool extends = false;
  bool survives = false;
  Rational d_before;
  Rational c1sq_after;
  Rational d_after;
  std::optional<std::size_t> group;  // survivor group index
};

struct BlowdownReport {
  Integer b2;
  Integer chi_before, sigma_before;
  Integer chi_after, sigma_after;
  std::vector<LiftRow> rows;
  std::vector<std::vector<std::size_t>> groups;  // merged survivors
  std::vector<std::string> notes;
};

BlowdownReport lift_basic_classes(const SpincLattice& lattice, const AmbientData& ambient,
                                  const ExtensionReport& ball);

}  // namespace rbd
