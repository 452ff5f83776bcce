#include "rbd/dinvariant.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <set>
#include <thread>

namespace rbd {

bool is_tree_form(const IntMatrix& form) {
  if (!form.symmetric()) return false;
  const std::size_t n = form.rows();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto root = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      if (form(i, j) == 0) continue;
      if (form(i, j) != 1) return false;
      const auto a = root(i), b = root(j);
      if (a == b) return false;
      parent[a] = b;
    }
  return true;
}

namespace {

constexpr std::size_t kMaxPathLength = 1u << 20;

void require_tree(const SpincLattice& lattice) {
  if (!is_tree_form(lattice.form()))
    throw Error(Errc::NotTreeForm, "full paths need a form coming from a tree plumbing");
}

bool condition_one(const IntMatrix& f, const IntVector& k) {
  for (std::size_t i = 0; i < k.size(); ++i)
    if (k[i] > -f(i, i)) return true;
  return false;
}

// Vertices j with K_j = -m_j.
std::vector<std::size_t> eligible(const IntMatrix& f, const IntVector& k) {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < k.size(); ++j)
    if (k[j] == -f(j, j)) out.push_back(j);
  return out;
}

}  // namespace

FullPath full_path(const SpincLattice& lattice, const IntVector& k0) {
  require_tree(lattice);
  lattice.require_characteristic(k0);
  const IntMatrix& f = lattice.form();
  if (!CharBox::preset(f, BoxPreset::Initial).contains(k0))
    throw Error(Errc::OutsideInitialBox, format_tuple(k0) + " is outside [m+2, -m]");
  FullPath path;
  path.vectors.push_back(k0);
  for (;;) {
    const IntVector& k = path.vectors.back();
    if (condition_one(f, k)) {
      path.condition = 1;
      return path;
    }
    const auto moves = eligible(f, k);
    if (moves.empty()) {
      // Entries never drop below m_i along a path, so this is condition (2).
      path.condition = 2;
      return path;
    }
    if (path.vectors.size() > kMaxPathLength) throw Error(Errc::NotNegativeDefinite, "full path does not terminate");
    path.moves.push_back(moves.front());
    path.vectors.push_back(lattice.move(k, moves.front()));
  }
}

Rational grading_shift(const SpincLattice& lattice, const IntVector& k) {
  lattice.require_characteristic(k);
  return (lattice.square(k) + Rational(static_cast<long>(lattice.rank()))) / 4;
}

const DEntry* DInvariantTable::find(const IntVector& key) const {
  auto it = index_.find(key);
  return it == index_.end() ? nullptr : &entries[it->second];
}

const DEntry& DInvariantTable::at(const IntVector& key) const {
  const DEntry* e = find(key);
  if (!e) throw Error(Errc::InvalidArgument, "no class with key " + format_tuple(key));
  return *e;
}

namespace {

constexpr std::uint64_t kMaxClasses = 1u << 24;

long to_long(const Integer& x, const char* what) {
  if (!x.fits_slong_p()) throw Error(Errc::InvalidArgument, std::string(what) + " does not fit a machine word");
  return x.get_si();
}

// Everything the box scan needs, in machine words where possible.
struct ScanContext {
  std::size_t n = 0;
  std::vector<long> lo, hi;
  std::vector<long> parity;
  IntMatrix adj;  // sign(det) * adjugate, so K^2 = K^T adj K / |det|
  std::vector<std::vector<std::int64_t>> key_coeff;  // U rows mod d_t
  std::vector<std::int64_t> moduli;
  std::vector<std::uint64_t> stride;
  std::uint64_t classes = 1;
};

template <typename S>
struct Accumulator {
  bool seen = false;
  S best{};
  std::vector<long> witness;
  std::vector<long> first;
  std::uint64_t count = 0;
};

inline void set_scalar(std::int64_t& out, const Integer& v) { out = v.get_si(); }
inline void set_scalar(Integer& out, const Integer& v) { out = v; }
inline void set_scalar_back(Integer& out, std::int64_t v) { out = Integer(static_cast<long>(v)); }
inline void set_scalar_back(Integer& out, const Integer& v) { out = v; }

template <typename S>
void scan_box(const ScanContext& ctx, long first_lo, long first_hi, std::vector<Accumulator<S>>& acc) {
  const std::size_t n = ctx.n;
  acc.assign(ctx.classes, Accumulator<S>{});
  std::vector<std::vector<S>> a(n, std::vector<S>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) set_scalar(a[i][j], ctx.adj(i, j));

  std::vector<long> k(ctx.lo);
  std::vector<long> hi(ctx.hi);
  if (n > 0) {
    k[0] = first_lo;
    hi[0] = first_hi;
  }
  std::vector<S> y(n);
  for (std::size_t i = 0; i < n; ++i) {
    S s{};
    for (std::size_t j = 0; j < n; ++j) s += a[i][j] * S(k[j]);
    y[i] = s;
  }
  S q{};
  for (std::size_t i = 0; i < n; ++i) q += S(k[i]) * y[i];
  const std::size_t nk = ctx.moduli.size();
  std::vector<std::int64_t> key(nk, 0);
  for (std::size_t t = 0; t < nk; ++t) {
    std::int64_t s = 0;
    for (std::size_t j = 0; j < n; ++j) s = (s + ctx.key_coeff[t][j] * ((k[j] - ctx.parity[j]) / 2 % ctx.moduli[t])) % ctx.moduli[t];
    key[t] = (s % ctx.moduli[t] + ctx.moduli[t]) % ctx.moduli[t];
  }

  for (;;) {
    std::uint64_t idx = 0;
    for (std::size_t t = 0; t < nk; ++t) idx += static_cast<std::uint64_t>(key[t]) * ctx.stride[t];
    auto& slot = acc[idx];
    ++slot.count;
    if (!slot.seen) {
      slot.seen = true;
      slot.best = q;
      slot.witness = k;
      slot.first = k;
    } else if (q > slot.best) {
      slot.best = q;
      slot.witness = k;
    }

    std::size_t i = n;
    bool advanced = false;
    while (i-- > 0) {
      long delta;
      if (k[i] < hi[i]) {
        delta = 2;
        advanced = true;
      } else {
        delta = (i == 0 ? first_lo : ctx.lo[i]) - k[i];
      }
      if (delta != 0) {
        const S d(delta);
        q += S(2) * d * y[i] + d * d * a[i][i];
        for (std::size_t r = 0; r < n; ++r) y[r] += d * a[r][i];
        const long half = delta / 2;
        for (std::size_t t = 0; t < nk; ++t) {
          std::int64_t v = (key[t] + (half % ctx.moduli[t]) * ctx.key_coeff[t][i]) % ctx.moduli[t];
          key[t] = v < 0 ? v + ctx.moduli[t] : v;
        }
        k[i] += delta;
      }
      if (advanced) break;
    }
    if (!advanced) return;
  }
}

template <typename S>
std::vector<Accumulator<S>> scan_parallel(const ScanContext& ctx, unsigned jobs) {
  std::vector<Accumulator<S>> merged;
  if (ctx.n == 0) {
    scan_box<S>(ctx, 0, 0, merged);
    return merged;
  }
  const long lo = ctx.lo[0], hi = ctx.hi[0];
  const long values = (hi - lo) / 2 + 1;
  const unsigned shards = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(values)));
  if (shards == 1) {
    scan_box<S>(ctx, lo, hi, merged);
    return merged;
  }
  std::vector<std::vector<Accumulator<S>>> parts(shards);
  std::vector<std::thread> threads;
  long start = lo;
  for (unsigned s = 0; s < shards; ++s) {
    const long take = values / shards + (static_cast<long>(s) < values % shards ? 1 : 0);
    const long end = start + 2 * (take - 1);
    threads.emplace_back([&ctx, &parts, s, start, end] { scan_box<S>(ctx, start, end, parts[s]); });
    start = end + 2;
  }
  for (auto& t : threads) t.join();
  // Shards cover increasing first coordinates, so earlier shards win ties.
  merged = std::move(parts[0]);
  for (unsigned s = 1; s < shards; ++s)
    for (std::size_t c = 0; c < merged.size(); ++c) {
      auto& m = merged[c];
      auto& p = parts[s][c];
      if (!p.seen) continue;
      if (!m.seen) {
        m = std::move(p);
        continue;
      }
      m.count += p.count;
      if (p.best > m.best) {
        m.best = p.best;
        m.witness = std::move(p.witness);
      }
    }
  return merged;
}

struct ClassResult {
  bool seen = false;
  Rational d;
  IntVector witness;
  IntVector first;
  std::uint64_t count = 0;
};

IntVector to_vector(const std::vector<long>& v) {
  IntVector out;
  out.reserve(v.size());
  for (long x : v) out.emplace_back(x);
  return out;
}

std::vector<ClassResult> scan_classes(const SpincLattice& lattice, const CharBox& box, unsigned jobs) {
  const IntMatrix& f = lattice.form();
  ScanContext ctx;
  ctx.n = lattice.rank();
  for (std::size_t i = 0; i < ctx.n; ++i) {
    Integer lo = box.ranges[i].first, hi = box.ranges[i].second;
    if (!is_even(lo - f(i, i))) lo += 1;
    if (!is_even(hi - f(i, i))) hi -= 1;
    if (lo > hi) throw Error(Errc::EmptyBox, "box is empty in coordinate " + std::to_string(i + 1));
    ctx.lo.push_back(to_long(lo, "box bound"));
    ctx.hi.push_back(to_long(hi, "box bound"));
    ctx.parity.push_back(is_even(f(i, i)) ? 0 : 1);
  }
  const Integer det = lattice.det();
  const Integer absdet = abs(det);
  ctx.adj = IntMatrix(ctx.n, ctx.n);
  for (std::size_t i = 0; i < ctx.n; ++i)
    for (std::size_t j = 0; j < ctx.n; ++j) {
      Rational v = lattice.inverse()(i, j) * Rational(absdet);
      ctx.adj(i, j) = v.get_num();
    }
  const auto& rows = lattice.key_rows();
  const auto& moduli = lattice.key_moduli();
  if (absdet > Integer(static_cast<unsigned long>(kMaxClasses)))
    throw Error(Errc::InvalidArgument, "class group of order " + absdet.get_str() + " is too large to tabulate");
  ctx.classes = 1;
  ctx.stride.assign(moduli.size(), 0);
  for (std::size_t t = moduli.size(); t-- > 0;) {
    ctx.stride[t] = ctx.classes;
    ctx.classes *= moduli[t].get_ui();
  }
  for (std::size_t t = 0; t < moduli.size(); ++t) {
    ctx.moduli.push_back(moduli[t].get_si());
    std::vector<std::int64_t> coeff;
    for (std::size_t j = 0; j < ctx.n; ++j) coeff.push_back(mod_floor(lattice.snf().u(rows[t], j), moduli[t]).get_si());
    ctx.key_coeff.push_back(std::move(coeff));
  }

  // Machine words suffice when |K^T adj K| and every |(adj K)_i| stay below 2^62.
  Integer bound = 0;
  Integer kmax = 0;
  for (std::size_t i = 0; i < ctx.n; ++i) {
    const Integer a = std::abs(ctx.lo[i]), b = std::abs(ctx.hi[i]);
    if (a > kmax) kmax = a;
    if (b > kmax) kmax = b;
  }
  for (std::size_t i = 0; i < ctx.n; ++i)
    for (std::size_t j = 0; j < ctx.n; ++j) bound += abs(ctx.adj(i, j));
  bound *= (kmax + 2) * (kmax + 2) * 4;
  const Integer limit = Integer(1) << 62;

  std::vector<ClassResult> out(ctx.classes);
  auto finish = [&](auto& acc) {
    for (std::size_t c = 0; c < acc.size(); ++c) {
      if (!acc[c].seen) continue;
      auto& r = out[c];
      r.seen = true;
      Integer best;
      set_scalar_back(best, acc[c].best);
      Rational q(best, absdet);
      q.canonicalize();
      r.d = (q + Rational(static_cast<long>(ctx.n))) / 4;
      r.witness = to_vector(acc[c].witness);
      r.first = to_vector(acc[c].first);
      r.count = acc[c].count;
    }
  };
  if (bound < limit) {
    auto acc = scan_parallel<std::int64_t>(ctx, jobs);
    finish(acc);
  } else {
    auto acc = scan_parallel<Integer>(ctx, jobs);
    finish(acc);
  }
  return out;
}

IntVector decode_key(std::uint64_t idx, const IntVector& moduli) {
  IntVector key(moduli.size());
  for (std::size_t t = moduli.size(); t-- > 0;) {
    const auto m = moduli[t].get_ui();
    key[t] = Integer(static_cast<unsigned long>(idx % m));
    idx /= m;
  }
  return key;
}

}  // namespace

DInvariantTable d_invariant_table(const SpincLattice& lattice, const DTableOptions& options) {
  if (!is_negative_definite(lattice.form()))
    throw Error(Errc::NotNegativeDefinite, "d-invariants need a negative-definite form");
  const unsigned jobs = std::max(1u, options.jobs);
  DInvariantTable table;
  table.b2 = Integer(static_cast<unsigned long>(lattice.rank()));
  table.tree_form = is_tree_form(lattice.form());

  const auto base = scan_classes(lattice, CharBox::preset(lattice.form(), options.box, 0), jobs);
  auto current = base;
  int rounds = 0;
  bool stable = false;
  while (rounds < options.max_widenings) {
    ++rounds;
    auto wider = scan_classes(lattice, CharBox::preset(lattice.form(), options.box, rounds), jobs);
    bool same = true;
    for (std::size_t c = 0; c < wider.size() && same; ++c)
      same = wider[c].seen == current[c].seen && (!wider[c].seen || wider[c].d == current[c].d);
    current = std::move(wider);
    if (same) {
      stable = true;
      break;
    }
  }
  table.stabilized = stable || options.max_widenings == 0;
  table.widenings = rounds;
  if (!table.stabilized)
    table.warnings.push_back("d-values still changed after " + std::to_string(rounds) + " widenings");
  if (!table.tree_form)
    table.warnings.push_back("form is not a tree plumbing; d-values are box maxima without a sleekness guarantee");

  std::size_t missing = 0;
  for (std::size_t c = 0; c < current.size(); ++c) {
    if (!current[c].seen) {
      ++missing;
      continue;
    }
    DEntry e;
    e.key = decode_key(c, lattice.key_moduli());
    e.representative = base[c].seen ? base[c].first : current[c].first;
    if (!base[c].seen)
      table.warnings.push_back("class " + format_tuple(e.key) + " is not met by the starting box");
    e.d = current[c].d;
    e.witness = current[c].witness;
    e.box_members = base[c].seen ? base[c].count : 0;
    table.entries.push_back(std::move(e));
  }
  if (missing)
    table.warnings.push_back(std::to_string(missing) + " classes are not met by any scanned box");
  std::sort(table.entries.begin(), table.entries.end(),
            [](const DEntry& a, const DEntry& b) { return lex_less(a.representative, b.representative); });
  for (std::size_t i = 0; i < table.entries.size(); ++i) table.index_[table.entries[i].key] = i;
  return table;
}

DValue d_invariant(const SpincLattice& lattice, const IntVector& k, const DTableOptions& options) {
  const auto key = lattice.class_key(k);
  const auto table = d_invariant_table(lattice, options);
  const auto& e = table.at(key);
  return DValue{e.d, e.witness};
}

std::vector<IntVector> sharp_vectors(const SpincLattice& lattice, BoxPreset box) {
  const Rational target(-Integer(static_cast<unsigned long>(lattice.rank())));
  std::vector<IntVector> out;
  for (auto& k : enumerate_box(lattice.form(), CharBox::preset(lattice.form(), box)))
    if (lattice.square(k) == target) out.push_back(std::move(k));
  return out;
}

namespace {

using Endpoints = std::set<IntVector>;

const Endpoints& endpoints(const SpincLattice& lattice, const IntVector& k, std::map<IntVector, Endpoints>& memo,
                           std::size_t depth) {
  if (auto it = memo.find(k); it != memo.end()) return it->second;
  if (depth > kMaxPathLength) throw Error(Errc::NotNegativeDefinite, "full paths do not terminate");
  const IntMatrix& f = lattice.form();
  Endpoints out;
  if (!condition_one(f, k)) {
    const auto moves = eligible(f, k);
    if (moves.empty()) {
      out.insert(k);
    } else {
      for (std::size_t j : moves) {
        const auto& sub = endpoints(lattice, lattice.move(k, j), memo, depth + 1);
        out.insert(sub.begin(), sub.end());
      }
    }
  }
  return memo.emplace(k, std::move(out)).first->second;
}

}  // namespace

std::map<IntVector, Integer> count_condition2_paths(const SpincLattice& lattice) {
  require_tree(lattice);
  std::map<IntVector, Integer> counts;
  std::map<IntVector, Endpoints> memo;
  for (const auto& k0 : enumerate_box(lattice.form(), CharBox::preset(lattice.form(), BoxPreset::Initial))) {
    const auto& ends = endpoints(lattice, k0, memo, 0);
    counts[lattice.class_key(k0)] += static_cast<unsigned long>(ends.size());
  }
  return counts;
}

}  // namespace rbd
