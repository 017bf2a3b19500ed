#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "trop/matroid.hpp"
#include "trop/plucker.hpp"
#include "trop/rational.hpp"

namespace trop {

enum class Color { Black, White };

// Vertices 0..n-1 are the boundary vertices 1..n in clockwise order; the rest
// are internal. Edge e joins ends[e][0] and ends[e][1]; dart 2e runs from
// ends[e][0] to ends[e][1] and dart 2e+1 the other way. Faces are traced from
// the rotation system after closing the boundary into a cycle.
class PlabicGraph {
 public:
  struct Internal {
    int id;
    Color color;
  };

  PlabicGraph() = default;
  // `rotation[v]` lists the edges at internal vertex v clockwise; boundary
  // vertices carry exactly one edge. Throws on malformed input.
  PlabicGraph(int n, std::vector<Color> internal_colors, std::vector<std::array<int, 2>> edges,
              std::vector<std::vector<int>> internal_rotations, std::vector<int> external_ids = {});

  int n() const { return n_; }
  int num_vertices() const { return static_cast<int>(rot_.size()); }
  int num_edges() const { return static_cast<int>(ends_.size()); }
  bool is_boundary(int v) const { return v < n_; }
  Color color(int v) const { return colors_[v - n_]; }
  const std::array<int, 2>& ends(int e) const { return ends_[e]; }
  const std::vector<int>& rotation(int v) const { return rot_[v]; }
  int external_id(int v) const { return ids_[v]; }

  int tail(int dart) const { return ends_[dart / 2][dart % 2]; }
  int head(int dart) const { return ends_[dart / 2][1 - dart % 2]; }

  int num_faces() const { return static_cast<int>(face_darts_.size()); }
  int exterior_face() const { return exterior_; }
  // Face on the left of a dart of a real edge.
  int left_face(int dart) const { return left_[dart]; }
  const std::vector<int>& face_boundary(int f) const { return face_darts_[f]; }

  // Type k from the degree formula k - (n-k) = sum over internal v of
  // color(v) (deg(v) - 2), black = +1, white = -1.
  int degree_type() const;

 private:
  void trace_faces();

  int n_ = 0;
  std::vector<Color> colors_;
  std::vector<std::array<int, 2>> ends_;
  std::vector<std::vector<int>> rot_;
  std::vector<int> ids_;
  std::vector<int> left_;  // over real and boundary-arc darts
  std::vector<std::vector<int>> face_darts_;
  int exterior_ = -1;
};

struct DecoratedPermutation {
  std::vector<int> pi;  // pi[i-1] = pi(i)
  std::vector<std::optional<Color>> fixed_color;  // set exactly at fixed points

  bool operator==(const DecoratedPermutation&) const = default;
};

// Positions i with pi(i) < i, or pi(i) = i colored white.
std::vector<int> anti_excedances(const DecoratedPermutation& p);
std::string to_string(const DecoratedPermutation& p);

DecoratedPermutation trip_permutation(const PlabicGraph& G);

struct PerfectOrientation {
  std::vector<bool> forward;  // edge e runs ends[e][0] -> ends[e][1]
  Mask sources = 0;
  bool operator==(const PerfectOrientation&) const = default;
};

bool is_perfect_orientation(const PlabicGraph& G, const PerfectOrientation& O);
std::vector<PerfectOrientation> perfect_orientations(const PlabicGraph& G);
Matroid positroid_of_plabic(const PlabicGraph& G);

// A flow: vertex-disjoint directed paths (from sources outside J to J outside
// the sources) and directed cycles, each a list of darts.
struct Flow {
  std::vector<std::vector<int>> paths;
  std::vector<std::vector<int>> cycles;
};

std::vector<Flow> flows(const PlabicGraph& G, const PerfectOrientation& O, Mask J);

// How many times each face lies to the left of a path or cycle of the flow.
std::vector<int> left_face_counts(const PlabicGraph& G, const Flow& F);
// Faces to the left of one directed path or cycle.
std::vector<int> faces_left_of(const PlabicGraph& G, const std::vector<int>& darts);

// Sum (tropical) or product (classical) of face parameters over left faces.
// The exterior face never contributes; `params` is indexed by face.
Rational tropical_flow_weight(const PlabicGraph& G, const Flow& F, const std::vector<Rational>& params);
Rational classical_flow_weight(const PlabicGraph& G, const Flow& F, const std::vector<Rational>& params);

// Face variables X_{ij}, 1 <= i <= k < j <= n, stored row by row.
struct WebParameters {
  int k = 0;
  int n = 0;
  std::vector<Rational> x;

  WebParameters() = default;
  WebParameters(int k_, int n_) : k(k_), n(n_), x(static_cast<std::size_t>(k_) * (n_ - k_), 0) {}
  Rational& at(int i, int j) { return x[static_cast<std::size_t>(i - 1) * (n - k) + (j - k - 1)]; }
  const Rational& at(int i, int j) const { return x[static_cast<std::size_t>(i - 1) * (n - k) + (j - k - 1)]; }
  bool operator==(const WebParameters&) const = default;
};

struct Point2 {
  Rational x, y;
};

struct WebGraph {
  int k = 0;
  int n = 0;
  PlabicGraph graph;
  PerfectOrientation canonical;  // acyclic, sources {1..k}
  std::vector<std::vector<int>> face;  // face[i][j] for the labelled faces, 1-based
  int unlabeled_face = -1;
  std::vector<Point2> position;  // drawing coordinates per vertex
};

WebGraph web_graph(int k, int n);

// Flows of the canonical orientation of Web_{k,n}, stored per k-subset as
// face multiplicities over the labelled faces.
class WebNetwork {
 public:
  WebNetwork(int k, int n);
  const WebGraph& web() const { return web_; }
  const std::vector<std::vector<int>>& flow_exponents(Mask J) const;
  PluckerVector phi(const WebParameters& x) const;
  PluckerVector trop_phi(const WebParameters& X) const;

 private:
  WebGraph web_;
  std::vector<std::vector<std::vector<int>>> exps_;  // by lex rank of J
};

PluckerVector phi(int k, int n, const WebParameters& x);
PluckerVector trop_phi(int k, int n, const WebParameters& X);

Mask k_set(int i, int j, int k, int n);
WebParameters trop_psi(int k, int n, const PluckerVector& P);
WebParameters psi(int k, int n, const PluckerVector& p);

// Small named graphs: n lollipops with the given colors.
PlabicGraph lollipops(const std::vector<Color>& colors);

// Built-in test family at (k, n): Web_{k,n}, its perfectly orientable
// edge-deletion variants (all of them, or up to `max_deletions` removals),
// and the all-lollipop graphs of type k.
std::vector<PlabicGraph> builtin_graphs(int k, int n, int max_deletions = -1);

PlabicGraph delete_edges(const PlabicGraph& G, const std::vector<int>& edges);

}  // namespace trop
