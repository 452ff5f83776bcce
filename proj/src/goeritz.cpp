#include "rbd/goeritz.hpp"

#include "rbd/linalg.hpp"

namespace rbd {

namespace {

void require_alternating(const AlternatingDiagram& d) {
  if (d.crossings.empty()) return;
  const int s = d.crossings.front().sign;
  for (std::size_t i = 0; i < d.crossings.size(); ++i) {
    const int t = d.crossings[i].sign;
    if (t != 1 && t != -1) throw Error(Errc::InvalidArgument, "crossing " + std::to_string(i + 1) + " has sign " + std::to_string(t));
    if (t != s) throw Error(Errc::NotAlternating, "crossing " + std::to_string(i + 1) + " breaks the alternating sign pattern");
  }
}

struct Incidence {
  std::size_t a, b;
  int sign;
};

GoeritzForm build(std::size_t regions, const std::vector<Incidence>& incidences, std::size_t basepoint) {
  if (basepoint >= regions) throw Error(Errc::InvalidArgument, "basepoint region out of range");
  IntMatrix full(regions, regions);
  for (const auto& x : incidences) {
    if (x.a >= regions || x.b >= regions) throw Error(Errc::InvalidArgument, "crossing names a region out of range");
    if (x.a == x.b) continue;  // nugatory: no contribution
    full(x.a, x.b) -= x.sign;
    full(x.b, x.a) -= x.sign;
  }
  for (std::size_t i = 0; i < regions; ++i) {
    Integer s = 0;
    for (std::size_t j = 0; j < regions; ++j)
      if (j != i) s += full(i, j);
    full(i, i) = -s;
  }
  GoeritzForm g;
  g.basepoint = basepoint;
  g.form = IntMatrix(regions - 1, regions - 1);
  for (std::size_t i = 0, r = 0; i < regions; ++i) {
    if (i == basepoint) continue;
    for (std::size_t j = 0, c = 0; j < regions; ++j) {
      if (j == basepoint) continue;
      g.form(r, c++) = full(i, j);
    }
    ++r;
  }
  if (is_negative_definite(g.form)) return g;
  for (std::size_t i = 0; i < g.form.rows(); ++i)
    for (std::size_t j = 0; j < g.form.cols(); ++j) g.form(i, j) = -g.form(i, j);
  g.flipped = true;
  if (is_negative_definite(g.form)) return g;
  throw Error(Errc::NotDefiniteEitherOrientation, "Goeritz form is not definite under either sign convention");
}

}  // namespace

GoeritzForm goeritz_form(const AlternatingDiagram& d, std::size_t basepoint) {
  require_alternating(d);
  std::vector<Incidence> inc;
  for (const auto& c : d.crossings) inc.push_back({c.white_a, c.white_b, c.sign});
  return build(d.white_regions, inc, basepoint);
}

GoeritzForm goeritz_form_black(const AlternatingDiagram& d, std::size_t basepoint) {
  require_alternating(d);
  std::vector<Incidence> inc;
  for (std::size_t i = 0; i < d.crossings.size(); ++i) {
    const auto& c = d.crossings[i];
    if (!c.black) throw Error(Errc::InvalidArgument, "crossing " + std::to_string(i + 1) + " lacks black regions");
    inc.push_back({c.black->first, c.black->second, -c.sign});
  }
  return build(d.black_regions, inc, basepoint);
}

Integer det_check(const AlternatingDiagram& d) { return abs(determinant(goeritz_form(d, 0).form)); }

IntMatrix family_form(int n, bool mirror) {
  if (n < 1) throw Error(Errc::InvalidArgument, "family index must be >= 1");
  const auto N = static_cast<std::size_t>(n);
  if (!mirror) {
    // T_0..T_{n-1}, then D_0..D_{n-1}; T_i meets D_i and both T_{i-1}, T_{i+1}.
    IntMatrix m(2 * N, 2 * N);
    for (std::size_t i = 0; i < N; ++i) {
      m(i, i) = -3;
      m(N + i, N + i) = -2;
      m(i, N + i) = 1;
      m(N + i, i) = 1;
      const std::size_t next = (i + 1) % N;
      m(i, next) += 1;
      m(next, i) += 1;
    }
    return m;
  }
  // Cycle a_0..a_{n-1} with doubled edges plus a hub c; a_{n-1} is dropped.
  IntMatrix lap(N + 1, N + 1);
  auto join = [&](std::size_t a, std::size_t b, int mult) {
    if (a == b) return;
    lap(a, b) += mult;
    lap(b, a) += mult;
    lap(a, a) -= mult;
    lap(b, b) -= mult;
  };
  for (std::size_t i = 0; i < N; ++i) {
    join(i, (i + 1) % N, 2);
    join(i, N, 1);
  }
  IntMatrix m(N, N);
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i + 1 < N; ++i) keep.push_back(i);
  keep.push_back(N);
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) m(i, j) = lap(keep[i], keep[j]);
  return m;
}

AlternatingDiagram family_diagram(int n, bool mirror) {
  if (n < 1) throw Error(Errc::InvalidArgument, "family index must be >= 1");
  const auto N = static_cast<std::size_t>(n);
  // Faces: T_i = i, D_i = n + i, outer = 2n. Vertices: a_i = i, hub = n.
  struct E {
    std::size_t f1, f2, v1, v2;
  };
  std::vector<E> edges;
  for (std::size_t i = 0; i < N; ++i) {
    const std::size_t next = (i + 1) % N;
    edges.push_back({(i + N - 1) % N, i, N, i});  // spoke between T_{i-1} and T_i
    edges.push_back({i, N + i, i, next});         // inner parallel edge
    edges.push_back({N + i, 2 * N, i, next});     // outer parallel edge
  }
  AlternatingDiagram d;
  if (!mirror) {
    d.white_regions = 2 * N + 1;
    d.black_regions = N + 1;
    for (const auto& e : edges) d.crossings.push_back({e.f1, e.f2, -1, std::make_pair(e.v1, e.v2)});
  } else {
    // Swap the hub and a_{n-1} so the last region is the basepoint.
    auto slot = [N](std::size_t v) { return v == N ? N - 1 : (v == N - 1 ? N : v); };
    d.white_regions = N + 1;
    d.black_regions = 2 * N + 1;
    for (const auto& e : edges) d.crossings.push_back({slot(e.v1), slot(e.v2), -1, std::make_pair(e.f1, e.f2)});
  }
  return d;
}

AlternatingDiagram trefoil_diagram() {
  AlternatingDiagram d;
  d.white_regions = 3;
  d.black_regions = 2;
  d.crossings = {{0, 1, -1, std::make_pair(std::size_t{0}, std::size_t{1})},
                 {1, 2, -1, std::make_pair(std::size_t{0}, std::size_t{1})},
                 {2, 0, -1, std::make_pair(std::size_t{0}, std::size_t{1})}};
  return d;
}

}  // namespace rbd
