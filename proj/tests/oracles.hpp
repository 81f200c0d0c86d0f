#pragma once

#include "cy2/quiver.hpp"
#include "cy2/roots.hpp"

#include <functional>
#include <map>
#include <vector>

namespace cy2::testing {

/// Brute-force positive-root table over the box 0 < v <= bound, independent
/// of the greedy reduction in classify_root. Seeds: coordinate vectors
/// (real at loop-free vertices, imaginary at looped ones) and the
/// fundamental-region vectors in the box; closure under loop-free reflections
/// that stay inside the box. Valid because every root's reduction path is
/// componentwise monotone, so it never leaves the box.
class RootOracle {
 public:
  RootOracle(const Quiver& q, const DimVector& bound) : q_(q) {
    std::vector<DimVector> box;
    DimVector cur(bound.size(), 0);
    enumerate(bound, 0, cur, box);

    for (const DimVector& v : box) {
      if (total(v) == 0) continue;
      if (is_coordinate(v)) {
        int vtx = coord_vertex(v);
        table_[v] = q_.has_loop(vtx) ? RootClass::ImaginaryRoot : RootClass::RealRoot;
      } else if (in_fundamental_region(v)) {
        table_[v] = RootClass::ImaginaryRoot;
      }
    }

    bool changed = true;
    while (changed) {
      changed = false;
      std::vector<std::pair<DimVector, RootClass::Tag>> found;
      for (const auto& [v, tag] : table_)
        for (int w = 0; w < q_.num_vertices(); ++w) {
          if (q_.has_loop(w)) continue;
          DimVector r = reflect(q_, v, w);
          bool ok = true;
          for (size_t i = 0; i < r.size(); ++i)
            if (r[i] < 0 || r[i] > bound[i]) ok = false;
          if (ok && total(r) > 0 && !table_.count(r)) found.push_back({r, tag});
        }
      for (auto& [r, tag] : found)
        if (table_.emplace(r, tag).second) changed = true;
    }
  }

  RootClass::Tag classify(const DimVector& v) const {
    auto it = table_.find(v);
    return it == table_.end() ? RootClass::NotRoot : it->second;
  }

  bool is_positive_root(const DimVector& v) const { return table_.count(v) > 0; }

  std::vector<DimVector> roots() const {
    std::vector<DimVector> out;
    for (const auto& [v, tag] : table_) out.push_back(v);
    return out;
  }

 private:
  static void enumerate(const DimVector& bound, size_t i, DimVector& cur,
                        std::vector<DimVector>& out) {
    if (i == bound.size()) {
      out.push_back(cur);
      return;
    }
    for (long long x = 0; x <= bound[i]; ++x) {
      cur[i] = x;
      enumerate(bound, i + 1, cur, out);
    }
  }

  static bool is_coordinate(const DimVector& v) { return total(v) == 1; }
  static int coord_vertex(const DimVector& v) {
    for (size_t i = 0; i < v.size(); ++i)
      if (v[i] == 1) return static_cast<int>(i);
    return -1;
  }

  bool in_fundamental_region(const DimVector& v) const {
    // Connected support and (v, eps_w) <= 0 at every support vertex.
    std::vector<long long> marked(v.size(), 0);
    int start = -1;
    for (size_t i = 0; i < v.size(); ++i)
      if (v[i] > 0) start = static_cast<int>(i);
    if (start < 0) return false;
    std::vector<int> stack{start};
    marked[start] = 1;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (const Arrow& a : q_.arrows())
        for (auto [s, t] : {std::pair{a.tail, a.head}, std::pair{a.head, a.tail}})
          if (s == x && v[t] > 0 && !marked[t]) {
            marked[t] = 1;
            stack.push_back(t);
          }
    }
    for (size_t i = 0; i < v.size(); ++i)
      if (v[i] > 0 && !marked[i]) return false;
    for (int w = 0; w < q_.num_vertices(); ++w) {
      if (v[w] == 0) continue;
      DimVector eps(v.size(), 0);
      eps[w] = 1;
      if (sym_form(q_, v, eps) > 0) return false;
    }
    return true;
  }

  const Quiver& q_;
  std::map<DimVector, RootClass::Tag> table_;
};

/// Naive simple-existence oracle: alpha is a positive root (per RootOracle)
/// and p(alpha) > sum p(beta_i) over every decomposition into >= 2 positive
/// roots. Full recursive enumeration, no pruning beyond ordering.
inline bool oracle_admits_simples(const Quiver& q, const DimVector& alpha) {
  RootOracle oracle(q, alpha);
  if (!oracle.is_positive_root(alpha)) return false;
  std::vector<DimVector> roots = oracle.roots();

  long long target = p_form(q, alpha);
  // Search for a violating decomposition: >= 2 parts, sum of p >= p(alpha).
  std::function<bool(const DimVector&, size_t, long long, long long)> violated =
      [&](const DimVector& remaining, size_t min_i, long long parts, long long psum) -> bool {
    if (is_zero(remaining)) return parts >= 2 && psum >= target;
    for (size_t i = min_i; i < roots.size(); ++i) {
      if (!leq(roots[i], remaining)) continue;
      if (violated(sub(remaining, roots[i]), i, parts + 1, psum + p_form(q, roots[i])))
        return true;
    }
    return false;
  };
  return !violated(alpha, 0, 0, 0);
}

}  // namespace cy2::testing
