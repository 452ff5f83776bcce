#include "rbd/lens.hpp"

#include "rbd/errors.hpp"
#include "rbd/plumbing.hpp"

namespace rbd {

LensSpace make_lens(const Integer& p, const Integer& q, int orientation) {
  if (p < 1) throw Error(Errc::BadLensSpace, "lens space needs p >= 1");
  if (orientation != 1 && orientation != -1) throw Error(Errc::BadLensSpace, "orientation must be +1 or -1");
  if (gcd(p, q) != 1) throw Error(Errc::BadLensSpace, "L(" + p.get_str() + "," + q.get_str() + ") needs gcd(p, q) = 1");
  return LensSpace{p, q, orientation};
}

LensSpace normalize(const LensSpace& l) {
  LensSpace out = l;
  out.q = mod_floor(l.orientation > 0 ? l.q : Integer(-l.q), l.p);
  out.orientation = 1;
  return out;
}

bool lens_equiv(const LensSpace& a, const LensSpace& b) {
  const auto x = normalize(a), y = normalize(b);
  if (x.p != y.p) return false;
  if (x.p == 1) return true;
  return x.q == y.q || mod_floor(x.q * y.q, x.p) == 1;
}

bool lens_equiv_unoriented(const LensSpace& a, const LensSpace& b) {
  LensSpace r = b;
  r.orientation = -b.orientation;
  return lens_equiv(a, b) || lens_equiv(a, r);
}

bool dual_pair(const Integer& p, const Integer& q, const Integer& q2) { return q + q2 == p; }

LensSpace chain_boundary(const std::vector<Integer>& weights) {
  if (weights.empty()) throw Error(Errc::BadWeights, "empty chain");
  std::vector<Integer> terms;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (weights[i] > -2) throw Error(Errc::BadWeights, "weight " + std::to_string(i + 1) + " is " + weights[i].get_str() + ", need <= -2");
    terms.push_back(-weights[i]);
  }
  const Rational r = cfrac_evaluate(terms);
  return LensSpace{r.get_num(), r.get_den(), -1};
}

LensSpace park_boundary(const Integer& p, const Integer& q) { return make_lens(p * p, p * q - 1, -1); }

std::string format_lens(const LensSpace& l) {
  return std::string(l.orientation < 0 ? "-" : "") + "L(" + l.p.get_str() + "," + l.q.get_str() + ")";
}

}  // namespace rbd
