#pragma once

#include "cy2/quiver.hpp"

#include <string>
#include <vector>

namespace cy2::testing {

inline Quiver a2() { return Quiver({"u", "v"}, {{"a", 0, 1}}); }

/// Kronecker quiver: two vertices, two parallel arrows.
inline Quiver atilde1() { return Quiver({"u", "v"}, {{"a", 0, 1}, {"b", 0, 1}}); }

/// 4-arm star: center plus four arms, one arrow into the center, three out.
inline Quiver dtilde4() {
  return Quiver({"c", "o1", "o2", "o3", "o4"},
                {{"a1", 1, 0}, {"a2", 0, 2}, {"a3", 0, 3}, {"a4", 0, 4}});
}

inline Quiver loops(int m) {
  std::vector<Arrow> arrows;
  for (int i = 0; i < m; ++i) arrows.push_back({"a" + std::to_string(i + 1), 0, 0});
  return Quiver({"v"}, arrows);
}

/// Two vertices, three parallel arrows (wild).
inline Quiver kronecker3() {
  return Quiver({"u", "v"}, {{"a", 0, 1}, {"b", 0, 1}, {"c", 0, 1}});
}

}  // namespace cy2::testing
