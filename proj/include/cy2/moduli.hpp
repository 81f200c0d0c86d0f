#pragma once

#include "cy2/quiver.hpp"
#include "cy2/roots.hpp"

#include <optional>
#include <string>

namespace cy2 {

enum class Verdict { Smooth, Singular, OutOfScope };

std::string to_string(Verdict v);

struct ModuliReport {
  bool admits_simples = false;
  std::optional<long long> rep_dim;
  std::optional<long long> quotient_dim;
  std::optional<long long> hilb_dim;
  Verdict smooth = Verdict::OutOfScope;
  std::string reason;
};

/// Crawley-Boevey criterion: alpha is a positive root and every decomposition
/// into r >= 2 positive roots beta^1+...+beta^r satisfies
/// p(alpha) > sum p(beta^i). On a disconnected quiver the criterion holds only
/// when the support lies in a single connected component.
bool admits_simples(const Quiver& q, const DimVector& a);

/// dim Rep = 2p(alpha) + alpha.alpha - 1, asserted only when simples exist.
std::optional<long long> rep_dim_preprojective(const Quiver& q, const DimVector& a);

/// dim Rep // GL = 2p(alpha), asserted only when simples exist.
std::optional<long long> quotient_dim_preprojective(const Quiver& q, const DimVector& a);

/// dim Hilb = 1 + 2 sum_arrows alpha_h alpha_t + sum_v (alpha_v - 2 alpha_v^2),
/// asserted only when simples exist.
std::optional<long long> hilb_dim_preprojective(const Quiver& q, const DimVector& a);

/// Smooth iff the support-restricted quiver has one vertex and alpha = (1);
/// OutOfScope when no simples exist.
Verdict hilb_smooth_preprojective(const Quiver& q, const DimVector& a);

/// Full preprojective report (admits_simples + dims + smoothness).
ModuliReport preprojective_report(const Quiver& q, const DimVector& a);

/// dim Rep for the genus-g surface group: (2g-1)n^2+1 for g>1, n^2+n for g=1.
/// Rejects g < 1.
long long surface_rep_dim(long long g, long long n);

/// dim Hilb = (2g-2)n^2 + n + 1; nullopt (out of scope) for g <= 1.
std::optional<long long> surface_hilb_dim(long long g, long long n);

/// Smooth iff n = 1; OutOfScope for g <= 1.
Verdict surface_hilb_smooth(long long g, long long n);

ModuliReport surface_report(long long g, long long n);

struct ExtendedDynkinWitness {
  std::vector<int> vertex_set;   // indices into q
  std::vector<int> arrow_set;    // indices into q
  DimVector delta;               // indexed by vertex_set order, delta <= alpha there
};

/// Searches subquivers (vertex subset + arrow subset) for an extended Dynkin
/// quiver, including the one-vertex-one-loop case, whose imaginary root delta
/// fits under alpha. Returns the first hit in canonical order (fewest
/// vertices, then lexicographic subsets).
std::optional<ExtendedDynkinWitness> extended_dynkin_lower_bound(const Quiver& q,
                                                                 const DimVector& a);

}  // namespace cy2
