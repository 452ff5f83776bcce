#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "rbd/matrix.hpp"

namespace rbd {

struct Vertex {
  std::string label;
  Integer weight;
};

// Signed multiplicity: the algebraic intersection number of the two spheres.
struct Edge {
  std::size_t a;
  std::size_t b;
  int multiplicity;
};

/// Weighted graph of disk bundles over spheres. Vertex order is the
/// coordinate order used by every form and covector built from it.
class PlumbingGraph {
 public:
  std::size_t add_vertex(std::string label, Integer weight);
  // Repeated calls on the same pair add up; a zero total removes the edge.
  void add_edge(std::size_t a, std::size_t b, int multiplicity = 1);

  std::size_t size() const { return vertices_.size(); }
  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t index_of(const std::string& label) const;

  int multiplicity(std::size_t a, std::size_t b) const;
  int valence(std::size_t v) const;
  std::vector<std::size_t> neighbors(std::size_t v) const;

  bool is_forest() const;  // simple and acyclic
  bool is_tree() const;    // forest and connected

  PlumbingGraph reversed() const;

 private:
  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
};

IntMatrix intersection_form(const PlumbingGraph& g);

// Inverse of intersection_form, with labels v1..vn.
PlumbingGraph graph_from_form(const IntMatrix& form);

enum class SleekTag { Sleek, EvenPartOnly, Unsupported };
const char* sleek_tag_name(SleekTag tag);

struct BadVertexReport {
  std::vector<std::size_t> vertices;
  bool negative_definite = false;
  SleekTag tag = SleekTag::Unsupported;
};

// Vertices with valence > -weight. Throws NotATree.
BadVertexReport bad_vertices(const PlumbingGraph& g);

// num/den = [b_k, ..., b_1] with c - 1/[rest], every term >= 2.
std::vector<Integer> cfrac_expand(const Integer& num, const Integer& den);
Rational cfrac_evaluate(const std::vector<Integer>& terms);

PlumbingGraph linear_chain(const std::vector<Integer>& weights);

// Chain with weights -b_k ... -b_1 where p^2/(pq-1) = [b_k, ..., b_1].
PlumbingGraph park_chain(long p, long q);

// Star with -4 center (first) and arms ending in -(p+1), -(q+1), -(r+1).
PlumbingGraph wahl_graph(long p, long q, long r);

// Unreduced graph containing a +/-1 sphere; see reduce_blow_downs.
PlumbingGraph mn_family_graph(long m, long n);

// Blows down a +/-1 vertex of valence at most two with simple edges.
PlumbingGraph blow_down(const PlumbingGraph& g, std::size_t v);

// Blows down the lowest-index admissible +/-1 vertex until none is left.
PlumbingGraph reduce_blow_downs(const PlumbingGraph& g);

enum class HjConvention {
  // Ray for beta/alpha is the expansion of alpha/beta.
  AlphaOverBeta,
  // Ray for beta/alpha is the expansion of alpha/(alpha - beta).
  AlphaOverComplement,
};

struct SeifertRay {
  Integer beta;
  Integer alpha;
};

struct SeifertStar {
  PlumbingGraph graph;
  // b <= -(number of rays)
  bool guaranteed_negative_definite = false;
};

SeifertStar seifert_star(const Integer& b, const std::vector<SeifertRay>& rays,
                         HjConvention convention = HjConvention::AlphaOverBeta);

}  // namespace rbd
