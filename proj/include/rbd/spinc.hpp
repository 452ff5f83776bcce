#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "rbd/linalg.hpp"

namespace rbd {

enum class BoxPreset {
  Wide,     // [m, -m]
  Initial,  // [m + 2, -m]
  Taut,     // [m + 2, -m - 2]
};

const char* box_preset_name(BoxPreset preset);
BoxPreset parse_box_preset(const std::string& name);

/// Inclusive per-coordinate ranges.
struct CharBox {
  std::vector<std::pair<Integer, Integer>> ranges;

  // widen > 0 pushes both ends out by 2 * widen.
  static CharBox preset(const IntMatrix& form, BoxPreset which, int widen = 0);
  bool contains(const IntVector& k) const;
};

/// Characteristic covectors of a nonsingular symmetric form and their
/// classes modulo 2 * image(form).
class SpincLattice {
 public:
  explicit SpincLattice(IntMatrix form);

  const IntMatrix& form() const { return form_; }
  const RatMatrix& inverse() const { return inverse_; }
  const SnfResult& snf() const { return snf_; }
  const Integer& det() const { return det_; }
  std::size_t rank() const { return form_.rows(); }
  Integer class_count() const { return abs(det_); }

  bool is_characteristic(const IntVector& k) const;
  void require_characteristic(const IntVector& k) const;

  Rational square(const IntVector& k) const;

  // Coordinates in the class group Z/d_1 + ... for the nontrivial factors.
  const IntVector& key_moduli() const { return moduli_; }
  IntVector class_key(const IntVector& k) const;
  IntVector conjugate_key(const IntVector& key) const;
  IntVector add_keys(const IntVector& a, const IntVector& b) const;
  IntVector sub_keys(const IntVector& a, const IntVector& b) const;
  // Rows of U used by class_key, restricted to the nontrivial factors.
  const std::vector<std::size_t>& key_rows() const { return key_rows_; }

  // x with k2 - k1 = 2 * I * x, when the two covectors share a class.
  std::optional<IntVector> same_class(const IntVector& k1, const IntVector& k2) const;

  // k + 2 * I * x
  IntVector shift(const IntVector& k, const IntVector& x) const;
  // k + 2 * I * e_j
  IntVector move(const IntVector& k, std::size_t j) const;

 private:
  IntMatrix form_;
  RatMatrix inverse_;
  SnfResult snf_;
  Integer det_;
  IntVector parity_;
  std::vector<std::size_t> key_rows_;
  IntVector moduli_;
  IntVector parity_key_;
};

// Characteristic vectors in the box, lexicographic order.
std::vector<IntVector> enumerate_box(const IntMatrix& form, const CharBox& box);

IntVector conjugate(const IntVector& k);

bool lex_less(const IntVector& a, const IntVector& b);

}  // namespace rbd
