#include "rbd/spinc.hpp"

#include <algorithm>

namespace rbd {

const char* box_preset_name(BoxPreset preset) {
  switch (preset) {
    case BoxPreset::Wide: return "wide";
    case BoxPreset::Initial: return "initial";
    case BoxPreset::Taut: return "taut";
  }
  return "wide";
}

BoxPreset parse_box_preset(const std::string& name) {
  if (name == "wide") return BoxPreset::Wide;
  if (name == "initial") return BoxPreset::Initial;
  if (name == "taut") return BoxPreset::Taut;
  throw Error(Errc::InvalidArgument, "unknown box preset '" + name + "' (wide|initial|taut)");
}

CharBox CharBox::preset(const IntMatrix& form, BoxPreset which, int widen) {
  CharBox box;
  for (std::size_t i = 0; i < form.rows(); ++i) {
    const Integer& m = form(i, i);
    Integer lo = m, hi = -m;
    if (which != BoxPreset::Wide) lo += 2;
    if (which == BoxPreset::Taut) hi -= 2;
    lo -= 2 * widen;
    hi += 2 * widen;
    box.ranges.emplace_back(lo, hi);
  }
  return box;
}

bool CharBox::contains(const IntVector& k) const {
  if (k.size() != ranges.size()) return false;
  for (std::size_t i = 0; i < k.size(); ++i)
    if (k[i] < ranges[i].first || k[i] > ranges[i].second) return false;
  return true;
}

SpincLattice::SpincLattice(IntMatrix form) : form_(std::move(form)) {
  if (!form_.square()) throw Error(Errc::NotSquare, "intersection form must be square");
  if (!form_.symmetric()) throw Error(Errc::NotSymmetric, "intersection form must be symmetric");
  det_ = determinant(form_);
  if (det_ == 0) throw Error(Errc::SingularMatrix, "intersection form is degenerate");
  inverse_ = invert(form_);
  snf_ = smith_normal_form(form_);
  const std::size_t n = rank();
  parity_.resize(n);
  for (std::size_t i = 0; i < n; ++i) parity_[i] = mod_floor(form_(i, i), Integer(2));
  for (std::size_t i = 0; i < n; ++i)
    if (snf_.d(i, i) != 1) {
      key_rows_.push_back(i);
      moduli_.push_back(snf_.d(i, i));
    }
  // Key of the parity vector itself: the class of c = p.
  IntVector up = snf_.u * parity_;
  for (std::size_t t = 0; t < key_rows_.size(); ++t) parity_key_.push_back(mod_floor(up[key_rows_[t]], moduli_[t]));
}

bool SpincLattice::is_characteristic(const IntVector& k) const {
  if (k.size() != rank()) return false;
  for (std::size_t i = 0; i < k.size(); ++i)
    if (is_even(k[i] - form_(i, i)) == false) return false;
  return true;
}

void SpincLattice::require_characteristic(const IntVector& k) const {
  if (k.size() != rank())
    throw Error(Errc::DimensionMismatch,
                "covector has " + std::to_string(k.size()) + " entries, form has rank " + std::to_string(rank()));
  if (!is_characteristic(k)) throw Error(Errc::NotCharacteristic, format_tuple(k) + " is not characteristic");
}

Rational SpincLattice::square(const IntVector& k) const {
  if (k.size() != rank()) throw Error(Errc::DimensionMismatch, "square: wrong length");
  require_characteristic(k);
  Rational s = 0;
  for (std::size_t i = 0; i < k.size(); ++i) {
    if (k[i] == 0) continue;
    Rational row = 0;
    for (std::size_t j = 0; j < k.size(); ++j) row += inverse_(i, j) * k[j];
    s += row * k[i];
  }
  return s;
}

IntVector SpincLattice::class_key(const IntVector& k) const {
  require_characteristic(k);
  IntVector key;
  key.reserve(key_rows_.size());
  for (std::size_t t = 0; t < key_rows_.size(); ++t) {
    const std::size_t r = key_rows_[t];
    Integer s = 0;
    for (std::size_t j = 0; j < k.size(); ++j) s += snf_.u(r, j) * ((k[j] - parity_[j]) / 2);
    key.push_back(mod_floor(s, moduli_[t]));
  }
  return key;
}

IntVector SpincLattice::conjugate_key(const IntVector& key) const {
  // c(-K) = -c(K) - p
  IntVector out(key.size());
  for (std::size_t t = 0; t < key.size(); ++t) out[t] = mod_floor(-key[t] - parity_key_[t], moduli_[t]);
  return out;
}

IntVector SpincLattice::add_keys(const IntVector& a, const IntVector& b) const {
  IntVector out(a.size());
  for (std::size_t t = 0; t < a.size(); ++t) out[t] = mod_floor(a[t] + b[t], moduli_[t]);
  return out;
}

IntVector SpincLattice::sub_keys(const IntVector& a, const IntVector& b) const {
  IntVector out(a.size());
  for (std::size_t t = 0; t < a.size(); ++t) out[t] = mod_floor(a[t] - b[t], moduli_[t]);
  return out;
}

std::optional<IntVector> SpincLattice::same_class(const IntVector& k1, const IntVector& k2) const {
  require_characteristic(k1);
  require_characteristic(k2);
  IntVector half(k1.size());
  for (std::size_t i = 0; i < k1.size(); ++i) half[i] = (k2[i] - k1[i]) / 2;
  return solve_integer(snf_, half);
}

IntVector SpincLattice::shift(const IntVector& k, const IntVector& x) const {
  IntVector ix = form_ * x;
  IntVector out = k;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += 2 * ix[i];
  return out;
}

IntVector SpincLattice::move(const IntVector& k, std::size_t j) const {
  IntVector out = k;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += 2 * form_(i, j);
  return out;
}

std::vector<IntVector> enumerate_box(const IntMatrix& form, const CharBox& box) {
  const std::size_t n = form.rows();
  if (box.ranges.size() != n) throw Error(Errc::DimensionMismatch, "box has wrong dimension");
  std::vector<Integer> lo(n), hi(n);
  for (std::size_t i = 0; i < n; ++i) {
    lo[i] = box.ranges[i].first;
    if (!is_even(lo[i] - form(i, i))) lo[i] += 1;
    hi[i] = box.ranges[i].second;
    if (!is_even(hi[i] - form(i, i))) hi[i] -= 1;
    if (lo[i] > hi[i]) return {};
  }
  std::vector<IntVector> out;
  IntVector k = lo;
  for (;;) {
    out.push_back(k);
    std::size_t i = n;
    while (i-- > 0) {
      if (k[i] < hi[i]) {
        k[i] += 2;
        break;
      }
      k[i] = lo[i];
    }
    if (i == static_cast<std::size_t>(-1)) break;
  }
  return out;
}

IntVector conjugate(const IntVector& k) { return negated(k); }

bool lex_less(const IntVector& a, const IntVector& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace rbd
