#pragma once

#include "cy2/replab.hpp"

#include <string>

namespace cy2 {

// --- matrix representation text format --------------------------------------
//
//   # comment
//   surface g=<g> n=<n>              (or)  quiver-rep <quiverfile> dim <vector>
//   matrix <label>
//   <row of space-separated rationals p/q or integers>
//   ...
//
// Surface files carry matrices X1..Xg and Y1..Yg. Quiver files carry one
// matrix per arrow of the double of the referenced quiver; the quiver file
// path is resolved relative to the rep file's directory. Round trips are
// bit-exact.

struct RepFile {
  std::optional<QuiverMatrixRep> quiver_rep;
  std::optional<SurfaceMatrixRep> surface_rep;
  std::string quiver_path;  // as written in a quiver-rep header
};

/// Throws QuiverError (message carries a line number) on malformed input.
/// `base_dir` is prefixed to relative quiver file paths.
RepFile parse_rep_text(const std::string& text, const std::string& base_dir = "");
RepFile load_rep_file(const std::string& path);

std::string rep_to_text(const SurfaceMatrixRep& rep);
std::string rep_to_text(const QuiverMatrixRep& rep, const std::string& quiver_path);

}  // namespace cy2
