#include "fixtures.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "rbd/blowdown.hpp"
#include "rbd/goeritz.hpp"
#include "rbd/io.hpp"
#include "rbd/lens.hpp"
#include "rbd/plumbing.hpp"

namespace rbd::cli {

bool FixtureResult::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const FixtureCheck& c) { return c.ok(); });
}

namespace {

std::string join(const std::vector<IntVector>& vs, const char* sep = " ") {
  std::string out;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) out += sep;
    out += format_tuple(vs[i]);
  }
  return out;
}

std::string flat(const IntMatrix& m) {
  std::vector<IntVector> rows;
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));
  return join(rows);
}

std::string path_text(const FullPath& p) {
  return join(p.vectors, " ~ ") + " [" + std::to_string(p.condition) + "]";
}

std::vector<IntVector> sorted(std::vector<IntVector> v) {
  std::sort(v.begin(), v.end(), lex_less);
  return v;
}

// -(1/den) * entries, as in the reference table.
std::string scaled_inverse(const RatMatrix& inv, long den) {
  IntMatrix m(inv.rows(), inv.cols());
  for (std::size_t i = 0; i < inv.rows(); ++i)
    for (std::size_t j = 0; j < inv.cols(); ++j) {
      Rational x = -inv(i, j) * den;
      if (x.get_den() != 1) return "not a multiple of 1/" + std::to_string(den);
      m(i, j) = x.get_num();
    }
  return flat(m);
}

IntVector v(std::initializer_list<long> xs) { return make_vector(xs); }

void check(FixtureResult& r, std::string what, std::string expected, std::string actual) {
  r.checks.push_back({std::move(what), std::move(expected), std::move(actual)});
}

template <typename T>
std::string str(const T& x) {
  if constexpr (std::is_same_v<T, bool>)
    return x ? "true" : "false";
  else if constexpr (std::is_same_v<T, Integer> || std::is_same_v<T, Rational>)
    return to_string(x);
  else
    return std::to_string(x);
}

std::size_t zero_count(const DInvariantTable& t) {
  return static_cast<std::size_t>(std::count_if(t.entries.begin(), t.entries.end(), [](const DEntry& e) { return e.d == 0; }));
}

FixtureResult fixture_c53() {
  FixtureResult r{"c53", "C_{5,3} chain (-3,-5,-2)", {}, {}};
  const auto g = park_chain(5, 3).reversed();
  const SpincLattice lat(intersection_form(g));
  check(r, "form", "(-3,1,0) (1,-5,1) (0,1,-2)", flat(lat.form()));
  // The reference inverse is listed in the opposite vertex order.
  check(r, "inverse * -25, reversed order", "(14,3,1) (3,6,2) (1,2,9)",
        scaled_inverse(invert(permuted(lat.form(), {2, 1, 0})), 25));
  const auto boundary = chain_boundary({Integer(-3), Integer(-5), Integer(-2)});
  check(r, "boundary", "-L(25,9)", format_lens(boundary));
  check(r, "boundary = -L(25,14)", "true", str(lens_equiv(boundary, make_lens(Integer(25), Integer(14), -1))));
  const auto box = enumerate_box(lat.form(), CharBox::preset(lat.form(), BoxPreset::Initial));
  check(r, "initial box size", "30", str(box.size()));
  const auto sharp = sharp_vectors(lat);
  check(r, "sharp vectors", join(sorted({v({1, 3, 0}), v({-1, -3, 0}), v({3, -1, 0}), v({-1, 1, 2}), v({1, -3, 2})})),
        join(sharp));
  std::size_t len2 = 0;
  for (const auto& k : sharp) {
    const auto p = full_path(lat, k);
    if (p.vectors.size() == 2) ++len2;
    r.details.push_back(path_text(p));
  }
  check(r, "length-2 paths", "3", str(len2));
  check(r, "path of (3,-1,0)", "(3,-1,0) ~ (-3,1,0) [2]", path_text(full_path(lat, v({3, -1, 0}))));
  check(r, "square (1,3,0)", "-3", str(lat.square(v({1, 3, 0}))));
  check(r, "taut (1,3,0)", "true", str(taut_check(lat, v({1, 3, 0}))));
  check(r, "taut (3,-1,0)", "false", str(taut_check(lat, v({3, -1, 0}))));
  const auto table = d_invariant_table(lat);
  check(r, "classes", "25", str(table.entries.size()));
  check(r, "d = 0 classes", "5", str(zero_count(table)));
  const auto sets = conjugation_closed_extension_sets(lat, table);
  check(r, "conjugation-closed d = 0 cosets", "1", str(sets.size()));
  if (sets.size() == 1) {
    std::set<IntVector> sharp_keys;
    for (const auto& k : sharp) sharp_keys.insert(lat.class_key(k));
    check(r, "coset = sharp classes", "true", str(std::set<IntVector>(sets[0].begin(), sets[0].end()) == sharp_keys));
    check(r, "Owens-Strle 5^2 = 25", "true", str(owens_strle_check(lat, extension_from_keys(table, sets[0]))));
  }
  return r;
}

FixtureResult fixture_wahl() {
  FixtureResult r{"wahl222", "Wahl(2,2,2) star and its ball", {}, {}};
  const SpincLattice lat(intersection_form(wahl_graph(2, 2, 2)));
  check(r, "P", "(-4,1,1,1) (1,-3,0,0) (1,0,-3,0) (1,0,0,-3)", flat(lat.form()));
  check(r, "P^-1 * -81", "(27,9,9,9) (9,30,3,3) (9,3,30,3) (9,3,3,30)", scaled_inverse(lat.inverse(), 81));
  check(r, "invariant factors", "(1,1,3,27)", format_tuple(smith_normal_form(lat.form()).invariant_factors()));
  check(r, "initial box size", "108",
        str(enumerate_box(lat.form(), CharBox::preset(lat.form(), BoxPreset::Initial)).size()));
  const BallHandleSpec handle{v({1, -1, 1, 0}), Integer(-1)};
  check(r, "kernel", "(3,-2,4,1,9)", format_tuple(*kernel_primitive(enhanced_matrix(lat.form(), handle))));
  const auto table = d_invariant_table(lat);
  const auto rep = extension_classes(lat, table, handle);
  check(r, "extending classes", "9", str(rep.extending_count()));
  const std::vector<IntVector> reference = {v({2, 1, 1, 1}),  v({-2, -1, -1, -1}), v({-2, 3, 1, -1}),
                                          v({0, 1, 3, -1}), v({4, -1, -1, -1}),  v({-2, 1, -1, 3}),
                                          v({0, 3, -1, 1}), v({-2, -1, 3, 1}),   v({0, -1, 1, 3})};
  std::set<IntVector> reference_keys;
  for (const auto& k : reference) reference_keys.insert(lat.class_key(k));
  const auto ext = rep.extending_keys();
  check(r, "extending = listed nine", "true",
        str(reference_keys.size() == 9 && std::set<IntVector>(ext.begin(), ext.end()) == reference_keys));
  check(r, "Owens-Strle 9^2 = 81", "true", str(owens_strle_check(lat, rep)));
  check(r, "parity notes", "0", str(rep.notes.size()));
  check(r, "square (2,1,1,1)", "-4", str(lat.square(v({2, 1, 1, 1}))));
  check(r, "taut (-4,1,1,1)", "false", str(taut_check(lat, v({-4, 1, 1, 1}))));
  for (const auto& c : rep.classes)
    if (c.extends) r.details.push_back(format_tuple(c.representative) + "  a=" + to_string(*c.a) + "  d=" + to_string(c.d));
  return r;
}

FixtureResult fixture_l257() {
  FixtureResult r{"l257", "-L(25,7) from the (m,n) = (4,1) family", {}, {}};
  const auto g = reduce_blow_downs(mn_family_graph(4, 1));
  const SpincLattice lat(intersection_form(g));
  check(r, "reduced chain", "(-4,1,0,0) (1,-3,1,0) (0,1,-2,1) (0,0,1,-2)", flat(lat.form()));
  check(r, "boundary", "-L(25,7)",
        format_lens(chain_boundary({Integer(-4), Integer(-3), Integer(-2), Integer(-2)})));
  const std::vector<std::string> reference = {
      "(-2,-1,0,2) ~ (-2,-1,2,-2) ~ (-2,1,-2,0) [2]",
      "(-2,3,0,0) ~ (0,-3,2,0) ~ (0,-1,-2,2) ~ (0,-1,0,-2) [2]",
      "(0,1,0,2) ~ (0,1,2,-2) ~ (0,3,-2,0) ~ (2,-3,0,0) [2]",
      "(2,-1,2,0) ~ (2,1,-2,2) ~ (2,1,0,-2) [2]",
      "(4,-1,0,0) ~ (-4,1,0,0) [2]",
  };
  const auto sharp = sharp_vectors(lat);
  check(r, "sharp count", "5", str(sharp.size()));
  for (std::size_t i = 0; i < sharp.size() && i < reference.size(); ++i) {
    const auto p = path_text(full_path(lat, sharp[i]));
    check(r, "path " + std::to_string(i + 1), reference[i], p);
    r.details.push_back(p);
  }
  const auto counts = count_condition2_paths(lat);
  check(r, "condition-2 count for (4,-1,0,0)", "1", str(counts.at(lat.class_key(v({4, -1, 0, 0})))));
  return r;
}

const std::vector<IntVector>& orbit_941() {
  static const std::vector<IntVector> o = {v({1, 1, -1, 0, 2, 0}),  v({-1, 1, 1, 0, 0, 2}), v({-1, 1, -1, 0, 2, 2}),
                                           v({1, -1, 1, 2, 0, 0}),  v({1, -1, -1, 2, 2, 0}), v({-1, -1, 1, 2, 0, 2}),
                                           v({1, 1, 1, 0, 0, 0})};
  return o;
}

FixtureResult fixture_941() {
  FixtureResult r{"941", "9_41 Goeritz form (six spheres)", {}, {}};
  const SpincLattice lat(family_form(3, false));
  check(r, "invariant factors", "(1,1,1,1,7,7)", format_tuple(smith_normal_form(lat.form()).invariant_factors()));
  check(r, "inverse * -7", "(6,4,4,3,2,2) (4,6,4,2,3,2) (4,4,6,2,2,3) (3,2,2,5,1,1) (2,3,2,1,5,1) (2,2,3,1,1,5)",
        scaled_inverse(lat.inverse(), 7));
  const auto gf = goeritz_form(family_diagram(3, false), 6);
  check(r, "diagram Goeritz form = family form", "true", str(gf.form == lat.form()));
  const auto table = d_invariant_table(lat);
  check(r, "stabilized", "true", str(table.stabilized));
  check(r, "d = 0 classes", "13", str(zero_count(table)));
  const auto base = lat.class_key(v({1, 1, 1, -2, -2, -2}));
  check(r, "(1,1,1,0,0,0) ~ (1,1,1,-2,-2,-2)", "true",
        str(lat.same_class(v({1, 1, 1, 0, 0, 0}), v({1, 1, 1, -2, -2, -2})).has_value()));
  const auto x = lat.same_class(v({1, 1, 1, -2, -2, -2}), v({1, 1, 1, 0, 0, 0}));
  check(r, "witness x with K' = K + 2Ix", "(-1,-1,-1,-1,-1,-1)", format_tuple(x.value_or(IntVector{})));
  check(r, "(-1,1,1,0,2,0) is conjugate to (1,-1,-1,2,0,2)", "true",
        str(lat.class_key(v({-1, 1, 1, 0, 2, 0})) == lat.conjugate_key(lat.class_key(v({1, -1, -1, 2, 0, 2})))));
  bool named_zero = true;
  for (const auto& k : {v({-1, 1, 1, 0, 2, 0}), v({-1, -1, 1, 2, 0, 2}), v({1, 1, 1, 0, 0, 0}), v({-1, -1, -1, 0, 0, 0}),
                        v({1, 1, 1, -2, -2, -2}), v({-1, -1, -1, 2, 2, 2})})
    named_zero = named_zero && table.at(lat.class_key(k)).d == 0;
  check(r, "listed vectors have d = 0", "true", str(named_zero));
  const auto& o = orbit_941();
  const auto seq = cyclic_orbit(lat, base, lat.sub_keys(lat.class_key(o[0]), base));
  std::vector<IntVector> reference_keys;
  for (const auto& k : o) reference_keys.push_back(lat.class_key(k));
  check(r, "orbit in reference order", join(reference_keys), join(seq));
  const auto subs = extension_subgroups(lat, table, VertexSymmetry{2, 1, 0, 5, 4, 3});
  check(r, "base", format_tuple(base), format_tuple(subs.base));
  check(r, "candidate extension sets", "2", str(subs.sets.size()));
  check(r, "sets exchanged by the Z/2 symmetry", "1", str(subs.orbits.size()));
  bool contains = false;
  std::vector<IntVector> orbit_sorted(seq);
  std::sort(orbit_sorted.begin(), orbit_sorted.end());
  for (const auto& s : subs.sets) contains = contains || s == orbit_sorted;
  check(r, "reference orbit is a candidate", "true", str(contains));
  for (const auto& s : subs.sets) {
    std::vector<IntVector> reps;
    for (const auto& k : s) reps.push_back(table.at(k).representative);
    r.details.push_back(join(reps));
  }
  return r;
}

// Reference columns with the d = 0 entries in generator order k = 1..6.
const std::vector<IntVector>& left_941bar() {
  static const std::vector<IntVector> c = {v({1, -1, -3}), v({-3, -1, 3}), v({-3, 1, -1}),
                                           v({3, -1, 1}),  v({3, 1, -3}),  v({-1, 1, 3})};
  return c;
}
const std::vector<IntVector>& right_941bar() {
  static const std::vector<IntVector> c = {v({-3, -1, 1}), v({3, -1, -3}), v({-1, 1, -3}),
                                           v({1, -1, 3}),  v({-3, 1, 3}),  v({3, 1, -1})};
  return c;
}

FixtureResult fixture_941bar() {
  FixtureResult r{"941bar", "mirror of 9_41 (three spheres)", {}, {}};
  // Coordinates (a_0, c, a_1) of the hub-and-cycle form.
  const IntMatrix form = permuted(family_form(3, true), {0, 2, 1});
  const SpincLattice lat(form);
  check(r, "form", "(-5,1,2) (1,-3,1) (2,1,-5)", flat(lat.form()));
  check(r, "inverse * -7", "(2,1,1) (1,3,1) (1,1,2)", scaled_inverse(lat.inverse(), 7));
  check(r, "invariant factors", "(1,7,7)", format_tuple(smith_normal_form(lat.form()).invariant_factors()));
  const auto table = d_invariant_table(lat);
  check(r, "d = 0 classes", "13", str(zero_count(table)));
  const auto spin = lat.class_key(v({-1, 3, -1}));
  check(r, "(-1,3,-1) ~ (1,-3,1)", "true", str(lat.same_class(v({-1, 3, -1}), v({1, -3, 1})).has_value()));
  check(r, "spin class self-conjugate", "true", str(lat.conjugate_key(spin) == spin));
  const auto subs = extension_subgroups(lat, table, VertexSymmetry{2, 1, 0});
  check(r, "base", format_tuple(spin), format_tuple(subs.base));
  check(r, "candidate extension sets", "2", str(subs.sets.size()));
  check(r, "sets exchanged by the Z/2 symmetry", "1", str(subs.orbits.size()));
  for (const auto* column : {&left_941bar(), &right_941bar()}) {
    const auto g = lat.sub_keys(lat.class_key(column->front()), spin);
    const auto seq = cyclic_orbit(lat, spin, g);
    std::vector<IntVector> keys;
    for (const auto& k : *column) keys.push_back(lat.class_key(k));
    keys.push_back(spin);
    check(r, "column from " + format_tuple(column->front()), join(keys), join(seq));
    std::vector<IntVector> s(seq);
    std::sort(s.begin(), s.end());
    check(r, "column is a candidate", "true", str(std::find(subs.sets.begin(), subs.sets.end(), s) != subs.sets.end()));
  }
  return r;
}

FixtureResult fixture_blowup() {
  FixtureResult r{"blowup", "blow-up ledger on a single -1 sphere", {}, {}};
  for (const auto& e : blowup_ledger(5)) {
    const long n = -e.v[0].get_si();
    check(r, "u_power n=" + std::to_string(n), std::to_string(n * (n + 1) / 2), to_string(e.n));
    check(r, "shift n=" + std::to_string(n), std::to_string(-(n * n + n)), to_string(e.shift));
    r.details.push_back("K'=" + format_tuple(e.k_shifted) + "  shift=" + to_string(e.shift) + "  U^" + to_string(e.n));
  }
  check(r, "D(0, 4, 0)", "-2", str(d_formal(Rational(0), Integer(4), Integer(0))));
  check(r, "D(1, 47, -31)", "0", str(d_formal(Rational(1), Integer(47), Integer(-31))));
  return r;
}

std::string rows_text(const BlowdownReport& rep) {
  std::ostringstream os;
  for (const auto& row : rep.rows)
    os << row.name << ' ' << format_tuple(row.k) << (row.survives ? " survives" : "") << '\n';
  return os.str();
}

std::vector<IntVector> survivors(const BlowdownReport& rep) {
  std::vector<IntVector> out;
  for (const auto& row : rep.rows)
    if (row.survives) out.push_back(row.k);
  return sorted(out);
}

FixtureResult fixture_e2() {
  FixtureResult r{"e2", "E(2) containing C_{2,1}", {}, {}};
  const SpincLattice lat(intersection_form(park_chain(2, 1)));
  const auto table = d_invariant_table(lat);
  const auto ball = extension_classes(lat, table, casson_harer_handle(2));
  check(r, "kernel", "(-1,2)", format_tuple(ball.kernel));
  std::vector<IntVector> reps;
  for (const auto& c : ball.classes)
    if (c.extends) reps.push_back(c.representative);
  check(r, "extending representatives", "(-2) (2)", join(sorted(reps)));
  check(r, "divisibility-only disagreements noted", "1", str(ball.notes.size()));
  const auto rep = lift_basic_classes(lat, parse_ambient(ambient_e2_text(), "e2"), ball);
  check(r, "K=(0) survives", "false", str(rep.rows.at(0).survives));
  check(r, "K^2 + 1 = 0 exactly for K = +-2", "(-2) (2)", join(sharp_vectors(lat, BoxPreset::Wide)));
  r.details.push_back(rows_text(rep));
  return r;
}

FixtureResult fixture_e3() {
  FixtureResult r{"e3", "E(3)#2CP2bar containing C_{5,3}", {}, {}};
  const SpincLattice lat(intersection_form(park_chain(5, 3).reversed()));
  const auto table = d_invariant_table(lat);
  const auto sets = conjugation_closed_extension_sets(lat, table);
  check(r, "extension sets", "1", str(sets.size()));
  if (sets.empty()) return r;
  const auto rep = lift_basic_classes(lat, parse_ambient(ambient_e3_text(), "e3"), extension_from_keys(table, sets[0]));
  check(r, "survivors", "(-1,-3,0) (1,3,0)", join(survivors(rep)));
  check(r, "survivor classes", "2", str(rep.groups.size()));
  bool d_kept = true;
  for (const auto& row : rep.rows)
    if (row.survives) d_kept = d_kept && row.d_after == row.d_before;
  check(r, "D unchanged for survivors", "true", str(d_kept));
  check(r, "chi, sigma after", "35 -23", to_string(rep.chi_after) + " " + to_string(rep.sigma_after));
  r.details.push_back(rows_text(rep));
  return r;
}

FixtureResult fixture_e2_wahl() {
  FixtureResult r{"e2wahl", "E(2)#4CP2bar containing Wahl(2,2,2)", {}, {}};
  const SpincLattice lat(intersection_form(wahl_graph(2, 2, 2)));
  const auto table = d_invariant_table(lat);
  const auto ball = extension_classes(lat, table, BallHandleSpec{v({1, -1, 1, 0}), Integer(-1)});
  const auto rep = lift_basic_classes(lat, parse_ambient(ambient_e2_wahl_text(), "e2wahl"), ball);
  check(r, "survivors", "(-4,1,1,1) (-2,-1,-1,-1) (2,1,1,1) (4,-1,-1,-1)", join(survivors(rep)));
  check(r, "survivor classes after merging", "3", str(rep.groups.size()));
  bool taut_survivor = false;
  for (const auto& row : rep.rows)
    if (row.survives && !row.taut) taut_survivor = true;
  check(r, "a non-taut class survives", "true", str(taut_survivor));
  r.details.push_back(rows_text(rep));
  return r;
}

FixtureResult fixture_lens() {
  FixtureResult r{"lens", "lens space identifications", {}, {}};
  const auto L = [](long p, long q, int o) { return make_lens(Integer(p), Integer(q), o); };
  check(r, "-L(25,4) = L(25,21)", "true", str(lens_equiv(L(25, 4, -1), L(25, 21, 1))));
  check(r, "L(25,21) = -L(25,19)", "true", str(lens_equiv(L(25, 21, 1), L(25, 19, -1))));
  check(r, "-L(25,19) = L(25,6)", "true", str(lens_equiv(L(25, 19, -1), L(25, 6, 1))));
  check(r, "L(25,7) = L(25,14)", "false", str(lens_equiv(L(25, 7, 1), L(25, 14, 1))));
  check(r, "L(25,7) = -L(25,7)", "true", str(lens_equiv(L(25, 7, 1), L(25, 7, -1))));
  check(r, "L(9,2) = L(9,5)", "true", str(lens_equiv(L(9, 2, 1), L(9, 5, 1))));
  check(r, "L(9,7) = L(9,4)", "true", str(lens_equiv(L(9, 7, 1), L(9, 4, 1))));
  check(r, "chain (-5,-2,-2,-2,-2,-2)", "-L(25,6)",
        format_lens(chain_boundary({Integer(-5), Integer(-2), Integer(-2), Integer(-2), Integer(-2), Integer(-2)})));
  check(r, "cfrac 25/14", "(2,5,3)", format_tuple(cfrac_expand(Integer(25), Integer(14))));
  IntVector park_weights;
  const auto park51 = park_chain(5, 1);
  for (const auto& x : park51.vertices()) park_weights.push_back(x.weight);
  check(r, "park (5,1)", "(-7,-2,-2,-2)", format_tuple(park_weights));
  check(r, "dual pair 3 + 2 = 5", "true", str(dual_pair(Integer(5), Integer(3), Integer(2))));
  check(r, "L(25,14) = L(25,9)", "true", str(lens_equiv(park_boundary(Integer(5), Integer(3)), park_boundary(Integer(5), Integer(2)))));
  return r;
}

FixtureResult fixture_family() {
  FixtureResult r{"family", "ribbon family forms", {}, {}};
  const long dets[] = {1, 9, 49, 225};
  for (int n = 1; n <= 4; ++n) {
    check(r, "|det| n=" + std::to_string(n), std::to_string(dets[n - 1]), to_string(Integer(abs(determinant(family_form(n, false))))));
    check(r, "|det| mirror n=" + std::to_string(n), std::to_string(dets[n - 1]),
          to_string(Integer(abs(determinant(family_form(n, true))))));
  }
  check(r, "trefoil det", "3", to_string(det_check(trefoil_diagram())));
  check(r, "6_1 det", "9", to_string(det_check(family_diagram(2, false))));
  check(r, "9_41 det", "49", to_string(det_check(family_diagram(3, false))));
  const auto sf = seifert_star(Integer(-3), {{Integer(1), Integer(3)}, {Integer(1), Integer(3)}, {Integer(1), Integer(3)}});
  check(r, "Seifert (-3; 1/3,1/3,1/3)", "(-3,1,1,1) (1,-3,0,0) (1,0,-3,0) (1,0,0,-3)", flat(intersection_form(sf.graph)));
  return r;
}

using Maker = std::function<FixtureResult()>;

const std::vector<std::pair<std::string, Maker>>& registry() {
  static const std::vector<std::pair<std::string, Maker>> r = {
      {"c53", fixture_c53},       {"wahl222", fixture_wahl}, {"l257", fixture_l257},     {"941", fixture_941},
      {"941bar", fixture_941bar}, {"blowup", fixture_blowup}, {"e2", fixture_e2},        {"e3", fixture_e3},
      {"e2wahl", fixture_e2_wahl}, {"lens", fixture_lens},    {"family", fixture_family},
  };
  return r;
}

}  // namespace

std::vector<std::string> fixture_names() {
  std::vector<std::string> out;
  for (const auto& [name, _] : registry()) out.push_back(name);
  return out;
}

FixtureResult run_fixture(const std::string& name) {
  for (const auto& [n, make] : registry())
    if (n == name) return make();
  throw Error(Errc::InvalidArgument, "unknown fixture '" + name + "'");
}

std::string ambient_e2_text() {
  return "chi=24 sigma=-16\n"
         "class K c1sq=0 pair=0 off=F\n";
}

std::string ambient_e3_text() {
  std::ostringstream os;
  os << "chi=38 sigma=-26\n";
  for (int eps : {1, -1})
    for (int a1 : {1, -1})
      for (int a2 : {1, -1}) {
        os << "class " << (eps > 0 ? "+F" : "-F") << (a1 > 0 ? "+E1" : "-E1") << (a2 > 0 ? "+E2" : "-E2")
           << " c1sq=-2 pair=" << eps << ',' << eps * (2 * a1 + a2) << ',' << eps * (a2 - a1)
           << " off=" << (eps > 0 ? "F" : "-F") << '\n';
      }
  return os.str();
}

std::string ambient_e2_wahl_text() {
  std::ostringstream os;
  os << "chi=28 sigma=-20\n";
  for (int mask = 0; mask < 16; ++mask) {
    int e[4];
    std::string name;
    for (int i = 0; i < 4; ++i) {
      e[i] = (mask >> (3 - i)) & 1 ? -1 : 1;
      name += (e[i] > 0 ? "+E" : "-E") + std::to_string(i + 1);
    }
    os << "class " << name << " c1sq=-4 pair=" << e[0] - e[1] - e[2] - e[3] << ',' << -e[0] << ',' << -e[0] << ','
       << -e[0] << " off=L0\n";
  }
  return os.str();
}

}  // namespace rbd::cli
