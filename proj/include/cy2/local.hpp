#pragma once

#include "cy2/moduli.hpp"
#include "cy2/quiver.hpp"

#include <optional>
#include <vector>

namespace cy2 {

/// One isotypic slot of a semisimple representation: `mult` copies of a
/// simple with dimension vector `beta`. When `distinct` is set, the slot
/// stands for `mult` pairwise non-isomorphic simples of the same dimension
/// vector, each with multiplicity one; that reading requires a
/// positive-dimensional simple locus (2p(beta) > 0).
struct SsFactor {
  DimVector beta;
  long long mult = 1;
  bool distinct = false;
};

struct SemisimpleType {
  std::vector<SsFactor> factors;

  DimVector alpha(const Quiver& q) const;
  long long num_simple_factors() const;  // counted with multiplicity
};

/// Checks the type invariants: distinct betas across slots, every beta
/// simple-admitting, mult >= 1, and distinct flags only where 2p(beta) > 0.
/// Throws QuiverError on violation.
void validate_type(const Quiver& q, const SemisimpleType& t);

struct LocalModel {
  /// The full local quiver: one vertex per slot, Ext^1(beta_i, beta_j)
  /// arrows i -> j. Loop counts are 2p(beta_i); cross counts are symmetric.
  Quiver local_quiver;
  /// Half quiver whose double is local_quiver: p(beta_i) loops, cross arrows
  /// oriented i -> j for i < j.
  Quiver half_quiver;
  /// Multiplicities (e_1, ..., e_k), indexed by the model's vertices.
  DimVector eps;
};

/// dim Ext^1 between simples of dimension vectors beta and gamma:
/// 2 [beta = gamma] - (beta, gamma). Both inputs must admit simples.
long long ext1_between_simples(const Quiver& q, const DimVector& beta, const DimVector& gamma);

LocalModel local_quiver(const Quiver& q, const SemisimpleType& t);

/// A semisimple module is cyclic iff every slot has mult <= |beta| (distinct
/// slots count each copy with multiplicity one).
bool is_cyclic_type(const SemisimpleType& t);

/// Whether the zero representation of the preprojective algebra on (q, a) is
/// a smooth point. Requires a sincere; true iff every connected component is
/// a single vertex with either dimension 1 (any loops) or no loops.
bool zero_point_smooth(const Quiver& q, const DimVector& a);

/// Whether the semisimple point of the given type is smooth, via
/// zero_point_smooth on the half local quiver.
bool semisimple_point_smooth(const Quiver& q, const SemisimpleType& t);

/// Searches for a cyclic non-simple semisimple type of total dimension vector
/// alpha: >= 2 simple factors counted with multiplicity, every beta
/// simple-admitting, cyclic per is_cyclic_type (using the distinct reading
/// where 2p(beta) > 0 allows it). Fewest factors first, then lexicographic.
std::optional<SemisimpleType> find_singular_witness(const Quiver& q, const DimVector& a);

}  // namespace cy2
