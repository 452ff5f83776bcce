#pragma once

// Brute-force reference computations used to cross-check the library.
// Nothing here calls into the code under test except plain data types.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "rbd/matrix.hpp"

namespace oracle {

using rbd::Integer;
using rbd::IntMatrix;
using rbd::IntVector;
using rbd::Rational;
using rbd::RatMatrix;

using Small = std::vector<std::vector<long long>>;

inline Small to_small(const IntMatrix& a) {
  Small s(a.rows(), std::vector<long long>(a.cols()));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) s[i][j] = a(i, j).get_si();
  return s;
}

// Leibniz expansion; fine for n <= 7.
inline Integer det_leibniz(const IntMatrix& a) {
  const std::size_t n = a.rows();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Integer total = 0;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    Integer term = inversions % 2 ? -1 : 1;
    for (std::size_t i = 0; i < n && term != 0; ++i) term *= a(i, perm[i]);
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

// Cofactor adjugate: adj(i, j) = (-1)^{i+j} det(minor(j, i)).
inline IntMatrix adjugate(const IntMatrix& a) {
  const std::size_t n = a.rows();
  IntMatrix adj(n, n);
  if (n == 1) {
    adj(0, 0) = 1;
    return adj;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      IntMatrix m(n - 1, n - 1);
      for (std::size_t r = 0, rr = 0; r < n; ++r) {
        if (r == j) continue;
        for (std::size_t c = 0, cc = 0; c < n; ++c) {
          if (c == i) continue;
          m(rr, cc++) = a(r, c);
        }
        ++rr;
      }
      adj(i, j) = ((i + j) % 2 ? -1 : 1) * det_leibniz(m);
    }
  return adj;
}

inline RatMatrix inverse(const IntMatrix& a) {
  const Integer d = det_leibniz(a);
  const IntMatrix adj = adjugate(a);
  RatMatrix inv(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      inv(i, j) = Rational(adj(i, j), d);
      inv(i, j).canonicalize();
    }
  return inv;
}

// x^T A x < 0 for every nonzero x in {-3..3}^n.
inline bool negative_definite_bruteforce(const IntMatrix& a) {
  const std::size_t n = a.rows();
  const Small s = to_small(a);
  std::vector<long long> x(n, -3);
  for (;;) {
    bool zero = std::all_of(x.begin(), x.end(), [](long long v) { return v == 0; });
    if (!zero) {
      long long q = 0;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) q += x[i] * s[i][j] * x[j];
      if (q >= 0) return false;
    }
    std::size_t i = 0;
    while (i < n && x[i] == 3) x[i++] = -3;
    if (i == n) break;
    ++x[i];
  }
  return true;
}

inline bool characteristic(const IntMatrix& a, const IntVector& k) {
  for (std::size_t i = 0; i < a.rows(); ++i)
    if (((k[i] - a(i, i)) % 2) != 0) return false;
  return true;
}

/// Class data from the adjugate: K and K' share a class iff
/// adj * (K - K') = 0 mod 2|det|, and K^2 = K^T adj K / det.
struct ClassOracle {
  Small form;
  Small adj;
  long long det = 0;
  long long mod = 0;

  explicit ClassOracle(const IntMatrix& a) : form(to_small(a)), adj(to_small(adjugate(a))) {
    det = det_leibniz(a).get_si();
    mod = 2 * (det < 0 ? -det : det);
  }

  std::vector<long long> signature(const std::vector<long long>& k) const {
    std::vector<long long> s(k.size());
    for (std::size_t i = 0; i < k.size(); ++i) {
      long long v = 0;
      for (std::size_t j = 0; j < k.size(); ++j) v += adj[i][j] * k[j];
      s[i] = ((v % mod) + mod) % mod;
    }
    return s;
  }
  // K^T adj K; the square is this over det.
  long long numerator(const std::vector<long long>& k) const {
    long long q = 0;
    for (std::size_t i = 0; i < k.size(); ++i)
      for (std::size_t j = 0; j < k.size(); ++j) q += k[i] * adj[i][j] * k[j];
    return q;
  }
  Rational square(const std::vector<long long>& k) const {
    Rational r(static_cast<long>(numerator(k)), static_cast<long>(det));
    r.canonicalize();
    return r;
  }
};

inline std::vector<long long> small_vec(const IntVector& v) {
  std::vector<long long> s(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) s[i] = v[i].get_si();
  return s;
}

inline IntVector big_vec(const std::vector<long long>& v) {
  IntVector b(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) b[i] = Integer(static_cast<long>(v[i]));
  return b;
}

// Calls f on every characteristic vector with |K_i| <= |m_i| + 2 * extra.
inline void for_each_char(const IntMatrix& a, int extra, const std::function<void(const std::vector<long long>&)>& f) {
  const std::size_t n = a.rows();
  std::vector<long long> lo(n), hi(n), k(n);
  for (std::size_t i = 0; i < n; ++i) {
    const long long m = a(i, i).get_si();
    const long long r = (m < 0 ? -m : m) + 2 * extra;
    lo[i] = -r;
    hi[i] = r;
    k[i] = lo[i];
  }
  for (;;) {
    f(k);
    std::size_t i = 0;
    while (i < n && k[i] + 2 > hi[i]) {
      k[i] = lo[i];
      ++i;
    }
    if (i == n) return;
    k[i] += 2;
  }
}

/// d of every class: max of (K^2 + n) / 4 over an enlarged symmetric box.
inline std::map<std::vector<long long>, Rational> d_spectrum(const IntMatrix& a, int extra = 2) {
  const ClassOracle co(a);
  std::map<std::vector<long long>, long long> best;  // signature -> best numerator
  for_each_char(a, extra, [&](const std::vector<long long>& k) {
    const auto sig = co.signature(k);
    const long long q = co.numerator(k);
    auto it = best.find(sig);
    // det < 0 for odd rank; compare squares q/det.
    if (it == best.end()) {
      best.emplace(sig, q);
    } else if (co.det > 0 ? q > it->second : q < it->second) {
      it->second = q;
    }
  });
  std::map<std::vector<long long>, Rational> out;
  for (const auto& [sig, q] : best) {
    Rational sq(static_cast<long>(q), static_cast<long>(co.det));
    sq.canonicalize();
    out.emplace(sig, (sq + Rational(static_cast<long>(a.rows()))) / 4);
  }
  return out;
}

inline Rational d_of(const IntMatrix& a, const IntVector& k, int extra = 2) {
  const ClassOracle co(a);
  const auto spec = d_spectrum(a, extra);
  return spec.at(co.signature(small_vec(k)));
}

// Spanning trees by subset enumeration; loops are never tree edges.
inline long long spanning_trees(std::size_t vertices, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  if (vertices <= 1) return 1;
  const std::size_t m = edges.size();
  long long count = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcountll(mask)) != vertices - 1) continue;
    std::vector<std::size_t> parent(vertices);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
      return parent[x] == x ? x : parent[x] = find(parent[x]);
    };
    bool ok = true;
    for (std::size_t e = 0; e < m && ok; ++e) {
      if (!(mask >> e & 1)) continue;
      auto a = find(edges[e].first), b = find(edges[e].second);
      if (a == b)
        ok = false;
      else
        parent[a] = b;
    }
    if (ok) ++count;
  }
  return count;
}

// Continued fraction value c - 1/(rest).
inline Rational cfrac_value(const std::vector<Integer>& terms) {
  Rational v = terms.back();
  for (std::size_t i = terms.size() - 1; i-- > 0;) v = Rational(terms[i]) - 1 / v;
  return v;
}

inline long long inverse_mod(long long q, long long p) {
  for (long long x = 1; x < p; ++x)
    if ((q * x) % p == 1) return x;
  return 0;
}

}  // namespace oracle
