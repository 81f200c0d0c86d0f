#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cy2 {

/// Nonnegative integer vector indexed by the vertices of an associated
/// quiver, in the quiver's frozen vertex order.
using DimVector = std::vector<long long>;

long long total(const DimVector& a);
bool leq(const DimVector& a, const DimVector& b);  // componentwise
bool is_zero(const DimVector& a);
DimVector add(const DimVector& a, const DimVector& b);
DimVector sub(const DimVector& a, const DimVector& b);  // may go negative

struct Arrow {
  std::string label;
  int tail = 0;
  int head = 0;
};

struct QuiverError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Finite directed multigraph with labeled vertices and arrows. Loops and
/// parallel arrows are allowed; parallel arrows stay distinct labeled
/// objects. Immutable after construction. Vertex order is frozen at
/// construction and used for all vector and matrix indexing.
class Quiver {
 public:
  Quiver() = default;
  Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows);

  int num_vertices() const { return static_cast<int>(vertices_.size()); }
  int num_arrows() const { return static_cast<int>(arrows_.size()); }
  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  const Arrow& arrow(int i) const { return arrows_[i]; }
  const std::string& vertex(int i) const { return vertices_[i]; }

  std::optional<int> vertex_index(const std::string& label) const;
  std::optional<int> arrow_index(const std::string& label) const;

  int loops_at(int v) const;
  bool has_loop(int v) const { return loops_at(v) > 0; }
  /// Arrows between v and w in either direction (v != w).
  int edges_between(int v, int w) const;

 private:
  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
};

struct QuiverClass {
  enum Tag { Dynkin, ExtendedDynkin, Wild } tag;
  /// For ExtendedDynkin: the unique sincere vector with p(delta)=1 on the
  /// component, indexed by the component's own vertex order.
  DimVector delta;
};

/// p(alpha) = 1 - alpha.alpha + sum over arrows of alpha_h * alpha_t.
long long p_form(const Quiver& q, const DimVector& a);

/// Symmetrized bilinear form: (beta,gamma) = 2 sum beta_v gamma_v
/// - sum over arrows of (beta_t gamma_h + beta_h gamma_t).
/// Polarization: (alpha,alpha) = 2(1 - p(alpha)).
long long sym_form(const Quiver& q, const DimVector& b, const DimVector& c);

/// Adjoins a reversed arrow labeled `<label>*` for each arrow.
Quiver double_quiver(const Quiver& q);

/// Per connected component, in order of smallest vertex index.
std::vector<QuiverClass> classify(const Quiver& q);

/// Removes zero-dimension vertices and incident arrows. Result is sincere
/// (possibly empty for the all-zero vector).
std::pair<Quiver, DimVector> support_restrict(const Quiver& q, const DimVector& a);

std::vector<Quiver> connected_components(const Quiver& q);

/// Vertex index sets of connected components (underlying undirected graph).
std::vector<std::vector<int>> component_vertex_sets(const Quiver& q);

// --- text format -----------------------------------------------------------
//
//   # comment
//   vertex <label>
//   arrow <label> : <tail> -> <head>
//   dim <label>=<nonneg int> ...
//
// Labels are whitespace-free. Duplicate labels are rejected with
// line-numbered errors. The dim line is optional; unmentioned vertices get 0.

struct QuiverFile {
  Quiver quiver;
  std::optional<DimVector> dim;
};

/// Throws QuiverError (message carries a line number) on malformed input.
QuiverFile parse_quiver_text(const std::string& text);
QuiverFile load_quiver_file(const std::string& path);

std::string quiver_to_text(const Quiver& q, const DimVector* dim = nullptr);

/// `a=1 b=0` against q's vertex labels, or a bare comma/space separated list
/// in vertex order (`1,0`).
std::optional<DimVector> parse_dim_vector(const Quiver& q, const std::string& text);
std::string dim_vector_to_text(const Quiver& q, const DimVector& a);

}  // namespace cy2
