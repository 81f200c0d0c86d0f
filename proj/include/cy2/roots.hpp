#pragma once

#include "cy2/quiver.hpp"

#include <map>
#include <vector>

namespace cy2 {

struct RootClass {
  enum Tag { NotRoot, RealRoot, ImaginaryRoot } tag;
  /// Vertices reflected at during the Kac reduction, in order.
  std::vector<int> reflections;

  bool is_root() const { return tag != NotRoot; }
};

/// Weyl reflection at a loop-free vertex: alpha - (alpha, eps_v) eps_v.
/// Throws QuiverError if v carries a loop. The result may have a negative
/// entry at v; callers interpret the sign.
DimVector reflect(const Quiver& q, const DimVector& a, int v);

/// Kac reduction. Repeatedly reflects at the smallest-index loop-free vertex
/// with (alpha, eps_v) > 0; terminates at a coordinate vector (real root, or
/// imaginary when the vertex is looped), in the fundamental region
/// (imaginary), or with a negative entry / disconnected support (not a root).
RootClass classify_root(const Quiver& q, const DimVector& a);

/// All positive roots beta with 0 < beta <= alpha componentwise, in
/// lexicographic order.
std::vector<DimVector> positive_roots_below(const Quiver& q, const DimVector& a);

/// Session memo for classify_root over one quiver. Not thread-safe; use one
/// cache per task.
class RootCache {
 public:
  explicit RootCache(const Quiver& q) : q_(&q) {}
  const RootClass& classify(const DimVector& a);
  const Quiver& quiver() const { return *q_; }

 private:
  const Quiver* q_;
  std::map<DimVector, RootClass> memo_;
};

}  // namespace cy2
