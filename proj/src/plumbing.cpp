#include "rbd/plumbing.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

#include "rbd/linalg.hpp"

namespace rbd {

std::size_t PlumbingGraph::add_vertex(std::string label, Integer weight) {
  vertices_.push_back(Vertex{std::move(label), std::move(weight)});
  return vertices_.size() - 1;
}

void PlumbingGraph::add_edge(std::size_t a, std::size_t b, int multiplicity) {
  if (a >= size() || b >= size()) throw Error(Errc::InvalidArgument, "edge endpoint out of range");
  if (a == b) throw Error(Errc::InvalidArgument, "self-loop at vertex " + vertices_[a].label);
  if (multiplicity == 0) return;
  if (a > b) std::swap(a, b);
  for (auto it = edges_.begin(); it != edges_.end(); ++it)
    if (it->a == a && it->b == b) {
      it->multiplicity += multiplicity;
      if (it->multiplicity == 0) edges_.erase(it);
      return;
    }
  edges_.push_back(Edge{a, b, multiplicity});
}

std::size_t PlumbingGraph::index_of(const std::string& label) const {
  for (std::size_t i = 0; i < vertices_.size(); ++i)
    if (vertices_[i].label == label) return i;
  throw Error(Errc::InvalidArgument, "unknown vertex label '" + label + "'");
}

int PlumbingGraph::multiplicity(std::size_t a, std::size_t b) const {
  if (a > b) std::swap(a, b);
  for (const auto& e : edges_)
    if (e.a == a && e.b == b) return e.multiplicity;
  return 0;
}

int PlumbingGraph::valence(std::size_t v) const {
  int d = 0;
  for (const auto& e : edges_)
    if (e.a == v || e.b == v) d += std::abs(e.multiplicity);
  return d;
}

std::vector<std::size_t> PlumbingGraph::neighbors(std::size_t v) const {
  std::vector<std::size_t> out;
  for (const auto& e : edges_) {
    if (e.a == v) out.push_back(e.b);
    if (e.b == v) out.push_back(e.a);
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

// Number of connected components, or 0 if a cycle or multi-edge is present.
std::size_t forest_components(std::size_t n, const std::vector<Edge>& edges) {
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::size_t components = n;
  for (const auto& e : edges) {
    if (e.multiplicity != 1) return 0;
    const auto ra = find_root(parent, e.a), rb = find_root(parent, e.b);
    if (ra == rb) return 0;
    parent[ra] = rb;
    --components;
  }
  return n == 0 ? 1 : components;
}

}  // namespace

bool PlumbingGraph::is_forest() const { return forest_components(size(), edges_) > 0; }

bool PlumbingGraph::is_tree() const { return size() == 0 || forest_components(size(), edges_) == 1; }

PlumbingGraph PlumbingGraph::reversed() const {
  PlumbingGraph g;
  const std::size_t n = size();
  for (std::size_t i = n; i-- > 0;) g.add_vertex(vertices_[i].label, vertices_[i].weight);
  for (const auto& e : edges_) g.add_edge(n - 1 - e.a, n - 1 - e.b, e.multiplicity);
  return g;
}

PlumbingGraph graph_from_form(const IntMatrix& form) {
  if (!form.symmetric()) throw Error(Errc::NotSymmetric, "form must be symmetric");
  PlumbingGraph g;
  for (std::size_t i = 0; i < form.rows(); ++i) g.add_vertex("v" + std::to_string(i + 1), form(i, i));
  for (std::size_t i = 0; i < form.rows(); ++i)
    for (std::size_t j = i + 1; j < form.cols(); ++j) {
      if (form(i, j) == 0) continue;
      if (!form(i, j).fits_sint_p()) throw Error(Errc::InvalidArgument, "intersection number too large");
      g.add_edge(i, j, static_cast<int>(form(i, j).get_si()));
    }
  return g;
}

IntMatrix intersection_form(const PlumbingGraph& g) {
  IntMatrix m(g.size(), g.size());
  for (std::size_t i = 0; i < g.size(); ++i) m(i, i) = g.vertices()[i].weight;
  for (const auto& e : g.edges()) {
    m(e.a, e.b) += e.multiplicity;
    m(e.b, e.a) += e.multiplicity;
  }
  return m;
}

const char* sleek_tag_name(SleekTag tag) {
  switch (tag) {
    case SleekTag::Sleek: return "sleek";
    case SleekTag::EvenPartOnly: return "even-part-only";
    case SleekTag::Unsupported: return "unsupported";
  }
  return "unsupported";
}

BadVertexReport bad_vertices(const PlumbingGraph& g) {
  if (!g.is_tree()) throw Error(Errc::NotATree, "bad-vertex count needs a tree");
  BadVertexReport r;
  for (std::size_t v = 0; v < g.size(); ++v)
    if (Integer(g.valence(v)) > -g.vertices()[v].weight) r.vertices.push_back(v);
  r.negative_definite = is_negative_definite(intersection_form(g));
  if (r.vertices.size() <= 1 && r.negative_definite)
    r.tag = SleekTag::Sleek;
  else if (r.vertices.size() == 2)
    r.tag = SleekTag::EvenPartOnly;
  else
    r.tag = SleekTag::Unsupported;
  return r;
}

std::vector<Integer> cfrac_expand(const Integer& num_in, const Integer& den_in) {
  if (den_in < 1 || num_in <= den_in || gcd(num_in, den_in) != 1)
    throw Error(Errc::BadFraction,
                "need coprime num > den >= 1, got " + num_in.get_str() + "/" + den_in.get_str());
  std::vector<Integer> terms;
  Integer num = num_in, den = den_in;
  while (den != 0) {
    Integer b;
    mpz_cdiv_q(b.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    terms.push_back(b);
    Integer next = b * den - num;
    num = den;
    den = next;
  }
  return terms;
}

Rational cfrac_evaluate(const std::vector<Integer>& terms) {
  if (terms.empty()) throw Error(Errc::BadFraction, "empty continued fraction");
  Rational x(terms.back());
  for (std::size_t i = terms.size() - 1; i-- > 0;) {
    if (x == 0) throw Error(Errc::BadFraction, "continued fraction divides by zero");
    x = Rational(terms[i]) - 1 / x;
  }
  return x;
}

PlumbingGraph linear_chain(const std::vector<Integer>& weights) {
  PlumbingGraph g;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    g.add_vertex("v" + std::to_string(i + 1), weights[i]);
    if (i) g.add_edge(i - 1, i);
  }
  return g;
}

PlumbingGraph park_chain(long p, long q) {
  if (p < 2 || q < 1 || q >= p || std::gcd(p, q) != 1)
    throw Error(Errc::BadFraction, "chain needs coprime 0 < q < p");
  const Integer P(p), Q(q);
  auto terms = cfrac_expand(P * P, P * Q - 1);
  for (auto& t : terms) t = -t;
  return linear_chain(terms);
}

PlumbingGraph wahl_graph(long p, long q, long r) {
  if (p < 2 || q < 2 || r < 2) throw Error(Errc::InvalidArgument, "Wahl parameters must be >= 2");
  PlumbingGraph g;
  const auto center = g.add_vertex("c", Integer(-4));
  struct Arm {
    long twos;
    long leaf;
    const char* name;
  };
  const Arm arms[3] = {{r - 2, -(p + 1), "a"}, {p - 2, -(q + 1), "b"}, {q - 2, -(r + 1), "d"}};
  for (const auto& arm : arms) {
    std::size_t prev = center;
    for (long k = 0; k < arm.twos; ++k) {
      const auto v = g.add_vertex(std::string(arm.name) + std::to_string(k + 1), Integer(-2));
      g.add_edge(prev, v);
      prev = v;
    }
    const auto leaf = g.add_vertex(std::string(arm.name) + "L", Integer(arm.leaf));
    g.add_edge(prev, leaf);
  }
  return g;
}

PlumbingGraph mn_family_graph(long m, long n) {
  if (n < 1) throw Error(Errc::InvalidArgument, "family needs n >= 1");
  PlumbingGraph g;
  const auto a = g.add_vertex("m", Integer(-m));
  const auto b = g.add_vertex("t", Integer(-3));
  g.add_edge(a, b);
  std::size_t prev = b;
  for (long k = 0; k + 1 < n; ++k) {
    const auto v = g.add_vertex("s" + std::to_string(k + 1), Integer(-2));
    g.add_edge(prev, v);
    prev = v;
  }
  const auto e = g.add_vertex("e", Integer(-1));
  g.add_edge(b, e);
  const auto x = g.add_vertex("x", Integer(m - n - 2));
  g.add_edge(e, x);
  const auto y = g.add_vertex("y", Integer(-2));
  g.add_edge(e, y);
  return g;
}

PlumbingGraph blow_down(const PlumbingGraph& g, std::size_t v) {
  if (v >= g.size()) throw Error(Errc::InvalidArgument, "vertex out of range");
  const Integer e = g.vertices()[v].weight;
  if (e != 1 && e != -1)
    throw Error(Errc::NotBlowDownable, "vertex " + g.vertices()[v].label + " has weight " + e.get_str());
  const auto nb = g.neighbors(v);
  if (nb.size() > 2 || g.valence(v) != static_cast<int>(nb.size()))
    throw Error(Errc::NotBlowDownable, "vertex " + g.vertices()[v].label + " has valence above two");

  // Schur complement: a_uu - a_uv^2 / e, and a_uw - a_uv a_vw / e for the
  // neighbor pair. The pair entry has sign -e; a basis sign flip on one side
  // of the new edge makes it +1, which is valid because the graph stays a forest.
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < g.size(); ++i)
    if (i != v) keep.push_back(i);
  std::vector<std::size_t> where(g.size(), 0);
  PlumbingGraph out;
  for (std::size_t i : keep) {
    Integer w = g.vertices()[i].weight;
    if (std::find(nb.begin(), nb.end(), i) != nb.end()) w -= e;
    where[i] = out.add_vertex(g.vertices()[i].label, w);
  }
  for (const auto& edge : g.edges())
    if (edge.a != v && edge.b != v) out.add_edge(where[edge.a], where[edge.b], edge.multiplicity);
  if (nb.size() == 2) {
    if (g.multiplicity(nb[0], nb[1]) != 0)
      throw Error(Errc::NotBlowDownable, "neighbors of " + g.vertices()[v].label + " are adjacent");
    out.add_edge(where[nb[0]], where[nb[1]]);
  }
  return out;
}

PlumbingGraph reduce_blow_downs(const PlumbingGraph& input) {
  PlumbingGraph g = input;
  for (;;) {
    bool done = true;
    for (std::size_t v = 0; v < g.size(); ++v) {
      const auto& w = g.vertices()[v].weight;
      if (w != 1 && w != -1) continue;
      const auto nb = g.neighbors(v);
      if (nb.size() > 2 || g.valence(v) != static_cast<int>(nb.size())) continue;
      if (nb.size() == 2 && g.multiplicity(nb[0], nb[1]) != 0) continue;
      g = blow_down(g, v);
      done = false;
      break;
    }
    if (done) return g;
  }
}

SeifertStar seifert_star(const Integer& b, const std::vector<SeifertRay>& rays,
                         HjConvention convention) {
  SeifertStar s;
  const auto center = s.graph.add_vertex("c", b);
  for (std::size_t i = 0; i < rays.size(); ++i) {
    const auto& [beta, alpha] = rays[i];
    if (alpha < 2 || beta <= 0 || beta >= alpha || gcd(alpha, beta) != 1)
      throw Error(Errc::BadSeifertInvariants,
                  "ray " + std::to_string(i + 1) + ": need alpha >= 2, 0 < beta < alpha, coprime; got " +
                      beta.get_str() + "/" + alpha.get_str());
    const Integer den = convention == HjConvention::AlphaOverBeta ? beta : Integer(alpha - beta);
    std::size_t prev = center;
    const auto terms = cfrac_expand(alpha, den);
    for (std::size_t k = 0; k < terms.size(); ++k) {
      const auto v = s.graph.add_vertex("r" + std::to_string(i + 1) + "_" + std::to_string(k + 1),
                                        Integer(-terms[k]));
      s.graph.add_edge(prev, v);
      prev = v;
    }
  }
  s.guaranteed_negative_definite = b <= -static_cast<long>(rays.size());
  return s;
}

}  // namespace rbd
