#include "cy2/local.hpp"

#include <algorithm>
#include <stdexcept>

namespace cy2 {

DimVector SemisimpleType::alpha(const Quiver& q) const {
  DimVector a(q.num_vertices(), 0);
  for (const SsFactor& f : factors)
    for (int v = 0; v < q.num_vertices(); ++v) a[v] += f.mult * f.beta[v];
  return a;
}

long long SemisimpleType::num_simple_factors() const {
  long long n = 0;
  for (const SsFactor& f : factors) n += f.mult;
  return n;
}

void validate_type(const Quiver& q, const SemisimpleType& t) {
  if (t.factors.empty()) throw QuiverError("semisimple type must have at least one factor");
  for (size_t i = 0; i < t.factors.size(); ++i) {
    const SsFactor& f = t.factors[i];
    if (f.mult < 1) throw QuiverError("factor multiplicity must be >= 1");
    if (!admits_simples(q, f.beta))
      throw QuiverError("factor dimension vector does not admit simple representations");
    if (f.distinct && 2 * p_form(q, f.beta) <= 0)
      throw QuiverError("distinct flag requires a positive-dimensional simple locus");
    for (size_t j = i + 1; j < t.factors.size(); ++j)
      if (t.factors[j].beta == f.beta) throw QuiverError("duplicate factor dimension vector");
  }
}

long long ext1_between_simples(const Quiver& q, const DimVector& beta, const DimVector& gamma) {
  if (!admits_simples(q, beta) || !admits_simples(q, gamma))
    throw QuiverError("ext1_between_simples requires simple-admitting dimension vectors");
  long long same = (beta == gamma) ? 2 : 0;
  return same - sym_form(q, beta, gamma);
}

LocalModel local_quiver(const Quiver& q, const SemisimpleType& t) {
  validate_type(q, t);
  int k = static_cast<int>(t.factors.size());
  std::vector<std::string> labels;
  for (int i = 0; i < k; ++i) labels.push_back("s" + std::to_string(i + 1));

  std::vector<Arrow> half_arrows;
  for (int i = 0; i < k; ++i) {
    long long self = ext1_between_simples(q, t.factors[i].beta, t.factors[i].beta);
    if (self % 2 != 0 || self != 2 * p_form(q, t.factors[i].beta))
      throw std::logic_error("local quiver self-extension count is not 2p");
    for (long long l = 0; l < self / 2; ++l)
      half_arrows.push_back({"l" + std::to_string(i + 1) + "_" + std::to_string(l + 1), i, i});
  }
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      long long cross = ext1_between_simples(q, t.factors[i].beta, t.factors[j].beta);
      if (cross < 0) throw std::logic_error("negative extension count between simples");
      for (long long l = 0; l < cross; ++l)
        half_arrows.push_back({"c" + std::to_string(i + 1) + "_" + std::to_string(j + 1) + "_" +
                                   std::to_string(l + 1),
                               i, j});
    }

  LocalModel m;
  m.half_quiver = Quiver(labels, half_arrows);
  m.local_quiver = double_quiver(m.half_quiver);
  for (const SsFactor& f : t.factors) m.eps.push_back(f.mult);
  return m;
}

bool is_cyclic_type(const SemisimpleType& t) {
  for (const SsFactor& f : t.factors) {
    if (f.distinct) continue;  // mult pairwise non-isomorphic simples, one copy each
    if (f.mult > total(f.beta)) return false;
  }
  return true;
}

bool zero_point_smooth(const Quiver& q, const DimVector& a) {
  if (static_cast<int>(a.size()) != q.num_vertices())
    throw QuiverError("dimension vector length does not match quiver");
  for (long long x : a)
    if (x <= 0) throw QuiverError("zero_point_smooth requires a sincere dimension vector");
  for (const auto& vs : component_vertex_sets(q)) {
    if (vs.size() != 1) return false;
    int v = vs[0];
    if (q.loops_at(v) > 0 && a[v] != 1) return false;
  }
  return true;
}

bool semisimple_point_smooth(const Quiver& q, const SemisimpleType& t) {
  LocalModel m = local_quiver(q, t);
  return zero_point_smooth(m.half_quiver, m.eps);
}

namespace {

// Enumerates multiset decompositions of alpha over `roots` (indices
// nondecreasing), fewest parts first.
bool search_decomposition(const Quiver& q, const std::vector<DimVector>& roots,
                          const DimVector& alpha, long long parts_left, size_t min_index,
                          const DimVector& remaining, std::vector<size_t>& chosen,
                          SemisimpleType& out) {
  if (parts_left == 0) {
    if (!is_zero(remaining)) return false;
    SemisimpleType t;
    for (size_t idx : chosen) {
      if (!t.factors.empty() && t.factors.back().beta == roots[idx]) {
        ++t.factors.back().mult;
      } else {
        t.factors.push_back({roots[idx], 1, false});
      }
    }
    // Cyclic reading: keep multiplicity when mult <= |beta|, otherwise fall
    // back to mult pairwise distinct simples if the simple locus is
    // positive-dimensional.
    for (SsFactor& f : t.factors) {
      if (f.mult <= total(f.beta)) continue;
      if (2 * p_form(q, f.beta) > 0) {
        f.distinct = true;
      } else {
        return false;
      }
    }
    out = t;
    return true;
  }
  for (size_t i = min_index; i < roots.size(); ++i) {
    if (!leq(roots[i], remaining)) continue;
    chosen.push_back(i);
    if (search_decomposition(q, roots, alpha, parts_left - 1, i, sub(remaining, roots[i]), chosen,
                             out))
      return true;
    chosen.pop_back();
  }
  return false;
}

}  // namespace

std::optional<SemisimpleType> find_singular_witness(const Quiver& q, const DimVector& a) {
  if (!admits_simples(q, a))
    throw QuiverError("find_singular_witness requires a simple-admitting dimension vector");
  if (total(a) == 1) throw QuiverError("find_singular_witness rejects coordinate vectors");

  std::vector<DimVector> candidates;
  for (const DimVector& r : positive_roots_below(q, a))
    if (r != a && admits_simples(q, r)) candidates.push_back(r);

  for (long long parts = 2; parts <= total(a); ++parts) {
    std::vector<size_t> chosen;
    SemisimpleType t;
    if (search_decomposition(q, candidates, a, parts, 0, a, chosen, t)) return t;
  }
  return std::nullopt;
}

}  // namespace cy2
