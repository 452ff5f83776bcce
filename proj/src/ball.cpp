#include "rbd/ball.hpp"

#include <algorithm>
#include <set>

namespace rbd {

IntMatrix enhanced_matrix(const IntMatrix& form, const BallHandleSpec& spec) {
  const std::size_t n = form.rows();
  if (spec.intersections.size() != n)
    throw Error(Errc::DimensionMismatch, "handle row has " + std::to_string(spec.intersections.size()) +
                                             " entries, form has rank " + std::to_string(n));
  IntMatrix p(n + 1, n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) p(i, j) = form(i, j);
    p(i, n) = spec.intersections[i];
    p(n, i) = spec.intersections[i];
  }
  p(n, n) = spec.framing;
  return p;
}

BallHandleSpec casson_harer_handle(long p) {
  if (p < 2) throw Error(Errc::InvalidArgument, "C_{p,1} needs p >= 2");
  BallHandleSpec spec;
  spec.intersections.assign(static_cast<std::size_t>(p - 1), Integer(0));
  spec.intersections[0] = -2;
  if (p > 2) spec.intersections[1] = 1;
  spec.framing = -1;
  return spec;
}

VectorVerdict test_extension(const IntVector& kernel, const Integer& framing, const IntVector& k) {
  if (kernel.size() != k.size() + 1) throw Error(Errc::DimensionMismatch, "kernel length");
  Integer s = 0;
  for (std::size_t i = 0; i < k.size(); ++i) s += kernel[i] * k[i];
  const Integer& c0 = kernel.back();
  VectorVerdict v;
  if (c0 == 0) {
    v.divisible = s == 0;
    v.extends = v.divisible;
    if (v.extends) v.a = mod_floor(framing, Integer(2));
    return v;
  }
  v.divisible = mpz_divisible_p(s.get_mpz_t(), c0.get_mpz_t()) != 0;
  if (v.divisible) {
    v.a = -s / c0;
    v.extends = is_even(*v.a - framing);
  }
  return v;
}

std::size_t ExtensionReport::extending_count() const {
  return static_cast<std::size_t>(std::count_if(classes.begin(), classes.end(), [](const auto& c) { return c.extends; }));
}

std::vector<IntVector> ExtensionReport::extending_keys() const {
  std::vector<IntVector> out;
  for (const auto& c : classes)
    if (c.extends) out.push_back(c.key);
  return out;
}

bool ExtensionReport::extends_key(const IntVector& key) const {
  for (const auto& c : classes)
    if (c.key == key) return c.extends;
  return false;
}

ExtensionReport extension_classes(const SpincLattice& lattice, const DInvariantTable& table,
                                  const BallHandleSpec& spec) {
  const auto p = enhanced_matrix(lattice.form(), spec);
  const auto kernel = kernel_primitive(p);
  if (!kernel) throw Error(Errc::NoKernel, "enhanced matrix is nonsingular; the handle does not give S^1 x S^2");
  ExtensionReport r;
  r.source = ExtensionSource::Handle;
  r.kernel = *kernel;
  r.framing = spec.framing;
  // The verdict only depends on the class: shifting K by 2 I x moves a by 2 h.x.
  std::size_t disagreements = 0;
  for (const auto& e : table.entries) {
    const auto v = test_extension(r.kernel, spec.framing, e.representative);
    r.classes.push_back(ClassVerdict{e.key, e.representative, e.d, v.extends, v.divisible, v.a});
    if (v.extends != v.divisible) ++disagreements;
  }
  if (disagreements)
    r.notes.push_back("divisibility alone accepts " + std::to_string(disagreements) +
                      " classes whose coefficient a has the wrong parity");
  return r;
}

ExtensionReport extension_from_keys(const DInvariantTable& table, const std::vector<IntVector>& keys) {
  ExtensionReport r;
  r.source = ExtensionSource::Coset;
  const std::set<IntVector> wanted(keys.begin(), keys.end());
  for (const auto& e : table.entries) {
    const bool ext = wanted.count(e.key) > 0;
    r.classes.push_back(ClassVerdict{e.key, e.representative, e.d, ext, ext, std::nullopt});
  }
  return r;
}

bool owens_strle_check(const SpincLattice& lattice, const ExtensionReport& report) {
  const Integer t(static_cast<unsigned long>(report.extending_count()));
  if (t * t != lattice.class_count()) return false;
  for (const auto& c : report.classes)
    if (c.extends && c.d != 0) return false;
  return true;
}

std::optional<Integer> exact_sqrt(const Integer& n) {
  if (n < 0) return std::nullopt;
  Integer r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  if (r * r != n) return std::nullopt;
  return r;
}

namespace {

bool is_zero(const IntVector& key) {
  return std::all_of(key.begin(), key.end(), [](const Integer& x) { return x == 0; });
}

// Subgroup generated by gens, or empty if it leaves `allowed` or exceeds `cap`.
std::set<IntVector> closure(const SpincLattice& lat, const std::vector<IntVector>& gens,
                            const std::set<IntVector>& allowed, std::size_t cap) {
  std::set<IntVector> group;
  std::vector<IntVector> todo;
  const IntVector zero(lat.key_moduli().size(), Integer(0));
  group.insert(zero);
  todo.push_back(zero);
  while (!todo.empty()) {
    const IntVector x = todo.back();
    todo.pop_back();
    for (const auto& g : gens) {
      IntVector y = lat.add_keys(x, g);
      if (group.count(y)) continue;
      if (!allowed.count(y) || group.size() >= cap) return {};
      group.insert(y);
      todo.push_back(std::move(y));
    }
  }
  return group;
}

// Order-t subgroups inside `allowed` (a set of differences containing zero).
std::vector<std::set<IntVector>> subgroups_within(const SpincLattice& lat, const std::set<IntVector>& allowed,
                                                  std::size_t t) {
  std::set<std::set<IntVector>> found;
  std::vector<std::set<IntVector>> frontier;
  const IntVector zero(lat.key_moduli().size(), Integer(0));
  if (t == 1) {
    if (allowed.count(zero)) return {std::set<IntVector>{zero}};
    return {};
  }
  for (const auto& g : allowed) {
    if (is_zero(g)) continue;
    auto h = closure(lat, {g}, allowed, t);
    if (!h.empty() && found.insert(h).second) frontier.push_back(h);
  }
  // Joins of subgroups already found, for non-cyclic candidates.
  while (!frontier.empty()) {
    std::vector<std::set<IntVector>> next;
    const std::vector<std::set<IntVector>> all(found.begin(), found.end());
    for (const auto& a : frontier)
      for (const auto& b : all) {
        if (std::includes(a.begin(), a.end(), b.begin(), b.end())) continue;
        std::vector<IntVector> gens(a.begin(), a.end());
        gens.insert(gens.end(), b.begin(), b.end());
        auto h = closure(lat, gens, allowed, t);
        if (!h.empty() && found.insert(h).second) next.push_back(h);
      }
    frontier = std::move(next);
  }
  std::vector<std::set<IntVector>> out;
  for (const auto& h : found)
    if (h.size() == t) out.push_back(h);
  return out;
}

std::size_t subgroup_order(const SpincLattice& lattice) {
  const auto t = exact_sqrt(lattice.class_count());
  return t ? t->get_ui() : 0;
}

std::vector<IntVector> zero_classes(const DInvariantTable& table) {
  std::vector<IntVector> out;
  for (const auto& e : table.entries)
    if (e.d == 0) out.push_back(e.key);
  return out;
}

KeySet coset(const SpincLattice& lat, const IntVector& base, const std::set<IntVector>& h) {
  KeySet out;
  for (const auto& x : h) out.push_back(lat.add_keys(base, x));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<IntVector> cyclic_orbit(const SpincLattice& lattice, const IntVector& base, const IntVector& generator) {
  std::vector<IntVector> out;
  IntVector step = generator;
  for (;;) {
    out.push_back(lattice.add_keys(base, step));
    if (is_zero(step)) return out;
    step = lattice.add_keys(step, generator);
  }
}

bool is_symmetry(const IntMatrix& form, const VertexSymmetry& perm) {
  if (perm.size() != form.rows()) return false;
  std::vector<std::size_t> sorted(perm);
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i)
    if (sorted[i] != i) return false;
  return permuted(form, perm) == form;
}

IntVector apply_symmetry(const VertexSymmetry& perm, const IntVector& k) {
  IntVector out(k.size());
  for (std::size_t i = 0; i < k.size(); ++i) out[i] = k[perm[i]];
  return out;
}

SubgroupCandidates extension_subgroups(const SpincLattice& lattice, const DInvariantTable& table,
                                       const std::optional<VertexSymmetry>& symmetry) {
  const auto zeros = zero_classes(table);
  SubgroupCandidates out;
  bool have_base = false;
  for (const auto& e : table.entries)
    if (e.d == 0 && lattice.conjugate_key(e.key) == e.key) {
      out.base = e.key;
      have_base = true;
      break;
    }
  if (!have_base) throw Error(Errc::NoSelfConjugateBase, "no self-conjugate class with d = 0");
  const std::size_t t = subgroup_order(lattice);
  if (t == 0) return out;
  std::set<IntVector> diffs;
  for (const auto& z : zeros) diffs.insert(lattice.sub_keys(z, out.base));
  for (const auto& h : subgroups_within(lattice, diffs, t)) out.sets.push_back(coset(lattice, out.base, h));
  std::sort(out.sets.begin(), out.sets.end());

  std::vector<bool> placed(out.sets.size(), false);
  for (std::size_t i = 0; i < out.sets.size(); ++i) {
    if (placed[i]) continue;
    std::vector<std::size_t> orbit{i};
    placed[i] = true;
    if (symmetry) {
      if (!is_symmetry(lattice.form(), *symmetry))
        throw Error(Errc::InvalidArgument, "vertex permutation does not preserve the form");
      KeySet img = out.sets[i];
      for (;;) {
        KeySet next;
        for (const auto& key : img) {
          const auto* e = table.find(key);
          next.push_back(lattice.class_key(apply_symmetry(*symmetry, e->representative)));
        }
        std::sort(next.begin(), next.end());
        if (next == out.sets[i]) break;
        const auto it = std::find(out.sets.begin(), out.sets.end(), next);
        if (it == out.sets.end()) break;
        const auto j = static_cast<std::size_t>(it - out.sets.begin());
        if (!placed[j]) {
          placed[j] = true;
          orbit.push_back(j);
        }
        img = next;
      }
    }
    out.orbits.push_back(orbit);
  }
  return out;
}

std::vector<KeySet> conjugation_closed_extension_sets(const SpincLattice& lattice, const DInvariantTable& table) {
  const std::size_t t = subgroup_order(lattice);
  if (t == 0) return {};
  const auto zeros = zero_classes(table);
  std::set<KeySet> found;
  for (const auto& g : zeros) {
    std::set<IntVector> diffs;
    for (const auto& z : zeros) diffs.insert(lattice.sub_keys(z, g));
    for (const auto& h : subgroups_within(lattice, diffs, t)) {
      KeySet c = coset(lattice, g, h);
      const bool closed = std::all_of(c.begin(), c.end(), [&](const IntVector& k) {
        return std::binary_search(c.begin(), c.end(), lattice.conjugate_key(k));
      });
      if (closed) found.insert(std::move(c));
    }
  }
  return {found.begin(), found.end()};
}

}  // namespace rbd
