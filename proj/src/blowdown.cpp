#include "rbd/blowdown.hpp"

#include <numeric>

namespace rbd {

bool taut_check(const SpincLattice& lattice, const IntVector& k) {
  lattice.require_characteristic(k);
  for (std::size_t i = 0; i < k.size(); ++i)
    if (abs(k[i]) + lattice.form()(i, i) > -2) return false;
  return true;
}

bool taut_unique_path(const SpincLattice& lattice, const IntVector& k) {
  return full_path(lattice, k).vectors.size() == 1;
}

Rational d_formal(const Rational& c1sq, const Integer& chi, const Integer& sigma) {
  return (c1sq - Rational(2 * chi + 3 * sigma)) / 4;
}

Rational grrel_shift(const SpincLattice& lattice, const IntVector& k, const IntVector& k2) {
  const auto v = lattice.same_class(k, k2);
  if (!v) throw Error(Errc::NotSameClass, format_tuple(k) + " and " + format_tuple(k2) + " lie in different classes");
  return Rational(dot(k, *v) + dot(*v, lattice.form() * *v));
}

Integer u_power(const SpincLattice& lattice, const IntVector& k, const IntVector& v) {
  lattice.require_characteristic(k);
  if (v.size() != k.size()) throw Error(Errc::DimensionMismatch, "V has the wrong length");
  const Integer s = dot(k, v) + dot(v, lattice.form() * v);
  // K characteristic makes <K,V> and V.V share parity.
  const Integer n = -s / 2;
  if (n < 0) throw Error(Errc::NegativeShift, "U-power " + n.get_str() + " is negative");
  return n;
}

std::vector<ShiftLedgerEntry> blowup_ledger(int nmax) {
  const SpincLattice lattice(IntMatrix{{Integer(-1)}});
  std::vector<ShiftLedgerEntry> out;
  for (int n = 0; n <= nmax; ++n) {
    ShiftLedgerEntry e;
    e.k = make_vector({1});
    e.v = make_vector({-n});
    e.k_shifted = lattice.shift(e.k, e.v);
    e.shift = grrel_shift(lattice, e.k, e.k_shifted);
    e.n = u_power(lattice, e.k, e.v);
    out.push_back(std::move(e));
  }
  return out;
}

bool characteristic_glue_check(const SpincLattice& lattice, const IntVector& k, const Rational& c1sq,
                               const Integer& sigma) {
  if (!lattice.is_characteristic(k)) return false;
  if (c1sq.get_den() != 1) return false;
  return mod_floor(c1sq.get_num() - sigma, Integer(8)) == 0;
}

BlowdownReport lift_basic_classes(const SpincLattice& lattice, const AmbientData& ambient,
                                  const ExtensionReport& ball) {
  BlowdownReport r;
  r.b2 = Integer(static_cast<unsigned long>(lattice.rank()));
  r.chi_before = ambient.chi;
  r.sigma_before = ambient.sigma;
  r.chi_after = ambient.chi - r.b2;
  r.sigma_after = ambient.sigma + r.b2;
  const Rational minus_b2(-r.b2);
  for (const auto& c : ambient.classes) {
    if (c.pairing.size() != lattice.rank())
      throw Error(Errc::DimensionMismatch, "class " + c.name + " has " + std::to_string(c.pairing.size()) +
                                               " pairings, configuration has " + std::to_string(lattice.rank()));
    LiftRow row;
    row.name = c.name;
    row.off_tag = c.off_tag;
    row.k = c.pairing;
    row.c1sq = c.c1sq;
    row.characteristic = characteristic_glue_check(lattice, c.pairing, c.c1sq, ambient.sigma);
    row.square = lattice.square(c.pairing);
    row.d_before = d_formal(c.c1sq, ambient.chi, ambient.sigma);
    row.c1sq_after = c.c1sq - row.square;
    row.d_after = d_formal(row.c1sq_after, r.chi_after, r.sigma_after);
    if (lattice.is_characteristic(c.pairing)) {
      row.taut = taut_check(lattice, c.pairing);
      row.sharp = row.square == minus_b2;
      row.extends = ball.extends_key(lattice.class_key(c.pairing));
    } else {
      r.notes.push_back("class " + c.name + " is not characteristic on the configuration");
    }
    row.survives = row.characteristic && row.sharp && row.extends;
    r.rows.push_back(std::move(row));
  }

  // Survivors that differ by 2 PD[V] with V on the configuration restrict to
  // the same class on the complement.
  const std::size_t n = r.rows.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto root = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < n; ++i) {
    if (!r.rows[i].survives) continue;
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!r.rows[j].survives || r.rows[j].off_tag != r.rows[i].off_tag) continue;
      const auto v = lattice.same_class(r.rows[i].k, r.rows[j].k);
      if (!v) continue;
      const Integer vv = dot(*v, lattice.form() * *v);
      const Rational expect = r.rows[i].c1sq + Rational(4 * dot(r.rows[i].k, *v) + 4 * vv);
      if (expect != r.rows[j].c1sq) {
        r.notes.push_back("classes " + r.rows[i].name + " and " + r.rows[j].name +
                          " share a configuration class but their squares disagree");
        continue;
      }
      parent[root(j)] = root(i);
    }
  }
  std::vector<std::optional<std::size_t>> group_of_root(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!r.rows[i].survives) continue;
    const auto rt = root(i);
    if (!group_of_root[rt]) {
      group_of_root[rt] = r.groups.size();
      r.groups.emplace_back();
    }
    r.rows[i].group = *group_of_root[rt];
    r.groups[*group_of_root[rt]].push_back(i);
  }
  return r;
}

}  // namespace rbd
