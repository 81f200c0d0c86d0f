#pragma once

#include "cy2/matrix.hpp"
#include "cy2/quiver.hpp"
#include "cy2/rng.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace cy2 {

/// Isotypic slot of a certified block-semisimple representation: `mult`
/// consecutive diagonal copies of a simple of total dimension `dim`.
struct BlockPart {
  long long dim = 0;   // total dimension of the simple
  long long mult = 1;  // number of consecutive copies
  DimVector beta;      // per-vertex dimensions (quiver reps only)
};

/// Exact matrix representation of the preprojective algebra of a quiver:
/// one alpha_h x alpha_t matrix per arrow of the double quiver.
struct QuiverMatrixRep {
  Quiver quiver;  // a double quiver with paired labels a, a*
  DimVector dim;
  std::vector<Mat> mats;  // per arrow index
  /// Set by build_semisimple; enables the closed-form cyclicity test.
  std::optional<std::vector<BlockPart>> semisimple_parts;

  long long n() const { return total(dim); }
  /// Offset of each vertex block inside k^n, in vertex order.
  std::vector<long long> offsets() const;
  /// Arrow matrix embedded as an n x n matrix on the vertex blocks.
  Mat embedded(int arrow_index) const;
  /// Projector onto the block of vertex v.
  Mat vertex_projector(int v) const;
};

/// Exact matrix representation of a genus-g surface group: 2g invertible
/// n x n matrices. Inverses are computed eagerly at construction.
struct SurfaceMatrixRep {
  long long g = 0, n = 0;
  std::vector<Mat> x, y;        // g generators each
  std::vector<Mat> xinv, yinv;  // cached inverses
  std::optional<std::vector<BlockPart>> semisimple_parts;
};

/// Validates shapes against the dimension vector; throws QuiverError.
QuiverMatrixRep make_quiver_rep(Quiver double_q, DimVector dim, std::vector<Mat> mats);

/// Checks invertibility of every generator; throws QuiverError on a singular
/// matrix or size mismatch.
SurfaceMatrixRep make_surface_rep(long long g, long long n, std::vector<Mat> x, std::vector<Mat> y);

/// (original, starred) arrow index pairs of a double quiver; throws on
/// unpaired arrows.
std::vector<std::pair<int, int>> star_pairs(const Quiver& q);

/// Whether sum over pairs of [rho(a), rho(a*)] vanishes on every vertex block.
bool check_preprojective(const QuiverMatrixRep& rep);

/// Whether the product of commutators [X_1,Y_1]...[X_g,Y_g] is the identity.
bool check_surface(const SurfaceMatrixRep& rep);

/// dim of the intertwiner space {E : E rho(x) = rho(x) E for all generators}.
/// Block-diagonal E for quiver reps, full Mat_n for surface reps.
long long end_dim(const QuiverMatrixRep& rep);
long long end_dim(const SurfaceMatrixRep& rep);

/// dim Hom(a, b): intertwiners from rep a to rep b. Used to recognize
/// isomorphic simple blocks.
long long intertwiner_dim(const QuiverMatrixRep& a, const QuiverMatrixRep& b);
long long intertwiner_dim(const SurfaceMatrixRep& a, const SurfaceMatrixRep& b);

/// Nullity of the derivative of the preprojective relation at rep; throws if
/// the relation itself fails.
long long tangent_dim_preprojective(const QuiverMatrixRep& rep);

/// 2g n^2 minus the rank of the exact Jacobian of the commutator relator
/// (derivation rules d(uv) = d(u) rho(v) + rho(u) d(v),
/// d(u^{-1}) = -rho(u)^{-1} d(u) rho(u)^{-1}); throws if the relation fails.
long long tangent_dim_surface(const SurfaceMatrixRep& rep);

struct ExtProfile {
  long long h0 = 0, h1 = 0, h2 = 0;
  long long tangent_dim = 0;
};

ExtProfile ext_profile(const QuiverMatrixRep& rep);
ExtProfile ext_profile(const SurfaceMatrixRep& rep);

/// Span-density simplicity: closes the span of the algebra image under
/// left multiplication by the generators; simple iff it fills End_k(k^n).
/// Certifies absolute simplicity over the rationals.
bool is_simple(const QuiverMatrixRep& rep);
bool is_simple(const SurfaceMatrixRep& rep);

struct CyclicResult {
  enum Kind { Yes, No, NotFound } kind = NotFound;
  std::vector<Rat> vec;     // certificate vector for Yes
  long long trials = 0;     // random trials consumed (NotFound)
};

/// Certifies a candidate cyclic vector by span stabilization (at most n
/// closure rounds).
bool certify_cyclic(const QuiverMatrixRep& rep, const std::vector<Rat>& v);
bool certify_cyclic(const SurfaceMatrixRep& rep, const std::vector<Rat>& v);

/// Yes with a certified vector; No only for recognized block-semisimple reps
/// where the multiplicity test fails; otherwise NotFound after the standard
/// basis plus `trials` seeded random draws.
CyclicResult has_cyclic_vector(const QuiverMatrixRep& rep, long long trials = 32,
                               uint64_t seed = 0);
CyclicResult has_cyclic_vector(const SurfaceMatrixRep& rep, long long trials = 32,
                               uint64_t seed = 0);

/// Cyclic rep cuts out a two-sided ideal iff end_dim = n. Throws if v is not
/// a cyclic vector.
bool is_two_sided_point(const QuiverMatrixRep& rep, const std::vector<Rat>& v);
bool is_two_sided_point(const SurfaceMatrixRep& rep, const std::vector<Rat>& v);

/// Block-diagonal direct sum of certified-simple parts; records the isotypic
/// structure (isomorphic parts are merged into one slot).
QuiverMatrixRep build_semisimple(const std::vector<std::pair<QuiverMatrixRep, long long>>& parts);
SurfaceMatrixRep build_semisimple(const std::vector<std::pair<SurfaceMatrixRep, long long>>& parts);

/// Extends a representation of the plain quiver q to its double by assigning
/// zero to every starred arrow; the preprojective relation holds trivially.
QuiverMatrixRep lift_quiver_rep(const Quiver& q, const DimVector& dim, std::vector<Mat> mats);

/// Invertible Y with X Y X^{-1} Y^{-1} = D, searched in the nullspace of
/// Y -> XY - DYX (seeded random combinations, verified exactly before
/// returning); nullopt when no invertible element is found within `trials`.
std::optional<Mat> solve_commutator_equation(const Mat& x, const Mat& d, uint64_t seed = 0,
                                             long long trials = 64);

/// Certified-simple surface representation. Pair one is a diagonal matrix
/// with distinct entries against a cyclic permutation; the last pair cancels
/// the accumulated commutator through solve_commutator_equation; middle
/// pairs are (random invertible, identity). Throws after `retries` failed
/// attempts.
SurfaceMatrixRep build_surface_simple(long long g, long long n, uint64_t seed,
                                      long long retries = 32);

/// X_1 = I + regular nilpotent Jordan block, Y_1 = I, all other generators I;
/// the returned vector (first standard basis vector) is cyclic and
/// end_dim = n.
std::pair<SurfaceMatrixRep, std::vector<Rat>> build_two_sided_point(long long g, long long n);

struct ExtendedDynkinCyclicRep {
  QuiverMatrixRep rep;
  std::vector<Rat> cyclic_vec;
};

/// The explicit cyclic non-simple representation of the 4-arm star quiver
/// (one center of dimension 2, four arms of dimension 1) at its imaginary
/// root: full-rank map into the center, zero maps on terminal arrows and on
/// all starred arrows. Certified cyclic with end_dim >= 2.
ExtendedDynkinCyclicRep build_extended_dynkin_cyclic();

}  // namespace cy2
