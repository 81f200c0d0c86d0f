#include "cy2/roots.hpp"

#include <algorithm>

namespace cy2 {

static long long pairing_with_eps(const Quiver& q, const DimVector& a, int v) {
  long long s = 2 * a[v];
  for (const Arrow& arr : q.arrows()) {
    if (arr.tail == v) s -= a[arr.head];
    if (arr.head == v) s -= a[arr.tail];
  }
  return s;
}

DimVector reflect(const Quiver& q, const DimVector& a, int v) {
  if (static_cast<int>(a.size()) != q.num_vertices())
    throw QuiverError("dimension vector length does not match quiver");
  if (q.has_loop(v)) throw QuiverError("reflection at looped vertex '" + q.vertex(v) + "'");
  DimVector r = a;
  r[v] -= pairing_with_eps(q, a, v);
  return r;
}

// Support of a is nonempty and connected in the underlying graph.
static bool support_connected(const Quiver& q, const DimVector& a) {
  int n = q.num_vertices();
  int start = -1;
  for (int v = 0; v < n; ++v)
    if (a[v] > 0) {
      start = v;
      break;
    }
  if (start < 0) return false;
  std::vector<bool> seen(n, false);
  std::vector<int> stack{start};
  seen[start] = true;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (const Arrow& arr : q.arrows()) {
      int w = -1;
      if (arr.tail == v) w = arr.head;
      else if (arr.head == v) w = arr.tail;
      if (w >= 0 && a[w] > 0 && !seen[w]) {
        seen[w] = true;
        stack.push_back(w);
      }
    }
  }
  for (int v = 0; v < n; ++v)
    if (a[v] > 0 && !seen[v]) return false;
  return true;
}

static int coordinate_vertex(const DimVector& a) {
  int v = -1;
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    if (a[i] != 1 || v >= 0) return -1;
    v = static_cast<int>(i);
  }
  return v;
}

RootClass classify_root(const Quiver& q, const DimVector& a) {
  if (static_cast<int>(a.size()) != q.num_vertices())
    throw QuiverError("dimension vector length does not match quiver");
  if (is_zero(a)) throw QuiverError("classify_root rejects the zero vector");

  DimVector cur = a;
  std::vector<int> trace;
  for (;;) {
    for (long long x : cur)
      if (x < 0) return {RootClass::NotRoot, std::move(trace)};
    if (int v = coordinate_vertex(cur); v >= 0)
      return {q.has_loop(v) ? RootClass::ImaginaryRoot : RootClass::RealRoot, std::move(trace)};
    if (!support_connected(q, cur)) return {RootClass::NotRoot, std::move(trace)};

    int pick = -1;
    for (int v = 0; v < q.num_vertices(); ++v) {
      if (q.has_loop(v)) continue;
      if (pairing_with_eps(q, cur, v) > 0) {
        pick = v;
        break;
      }
    }
    if (pick < 0) {
      // Fundamental region: connected support, (alpha, eps_v) <= 0 at every
      // loop-free vertex.
      return {RootClass::ImaginaryRoot, std::move(trace)};
    }
    cur = reflect(q, cur, pick);
    trace.push_back(pick);
  }
}

std::vector<DimVector> positive_roots_below(const Quiver& q, const DimVector& a) {
  if (static_cast<int>(a.size()) != q.num_vertices())
    throw QuiverError("dimension vector length does not match quiver");
  std::vector<DimVector> out;
  int n = q.num_vertices();
  DimVector cur(n, 0);
  // Lexicographic walk over the box [0, a].
  for (;;) {
    int i = n - 1;
    while (i >= 0 && cur[i] == a[i]) cur[i--] = 0;
    if (i < 0) break;
    ++cur[i];
    if (!is_zero(cur) && classify_root(q, cur).is_root()) out.push_back(cur);
  }
  std::sort(out.begin(), out.end());
  return out;
}

const RootClass& RootCache::classify(const DimVector& a) {
  auto it = memo_.find(a);
  if (it != memo_.end()) return it->second;
  return memo_.emplace(a, classify_root(*q_, a)).first->second;
}

}  // namespace cy2
