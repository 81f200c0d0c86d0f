#include "cy2/moduli.hpp"

#include <algorithm>
#include <map>

namespace cy2 {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Smooth: return "Smooth";
    case Verdict::Singular: return "Singular";
    default: return "OutOfScope";
  }
}

namespace {

// Max of sum p(beta^i) over decompositions of gamma into >= 1 positive roots;
// nullopt when gamma has no such decomposition.
class DecompositionTable {
 public:
  DecompositionTable(const Quiver& q, std::vector<DimVector> roots)
      : q_(&q), roots_(std::move(roots)) {
    for (const auto& r : roots_) p_.push_back(p_form(q, r));
  }

  std::optional<long long> best(const DimVector& gamma) {
    if (is_zero(gamma)) return 0;
    auto it = memo_.find(gamma);
    if (it != memo_.end()) return it->second;
    std::optional<long long> best_sum;
    for (size_t i = 0; i < roots_.size(); ++i) {
      if (!leq(roots_[i], gamma)) continue;
      auto rest = best(sub(gamma, roots_[i]));
      if (!rest) continue;
      long long cand = p_[i] + *rest;
      if (!best_sum || cand > *best_sum) best_sum = cand;
    }
    memo_.emplace(gamma, best_sum);
    return best_sum;
  }

  const std::vector<DimVector>& roots() const { return roots_; }
  long long root_p(size_t i) const { return p_[i]; }

 private:
  const Quiver* q_;
  std::vector<DimVector> roots_;
  std::vector<long long> p_;
  std::map<DimVector, std::optional<long long>> memo_;
};

bool support_in_one_component(const Quiver& q, const DimVector& a) {
  auto comps = component_vertex_sets(q);
  int carrying = 0;
  for (const auto& vs : comps) {
    for (int v : vs)
      if (a[v] > 0) {
        ++carrying;
        break;
      }
  }
  return carrying == 1;
}

}  // namespace

bool admits_simples(const Quiver& q, const DimVector& a) {
  if (is_zero(a)) throw QuiverError("admits_simples rejects the zero vector");
  if (!support_in_one_component(q, a)) return false;
  if (!classify_root(q, a).is_root()) return false;
  if (total(a) == 1) return true;

  long long pa = p_form(q, a);
  DecompositionTable table(q, positive_roots_below(q, a));
  // Decompositions with r >= 2: first summand beta, remainder nonzero.
  for (size_t i = 0; i < table.roots().size(); ++i) {
    const DimVector& beta = table.roots()[i];
    if (beta == a || !leq(beta, a)) continue;
    auto rest = table.best(sub(a, beta));
    if (rest && table.root_p(i) + *rest >= pa) return false;
  }
  return true;
}

std::optional<long long> rep_dim_preprojective(const Quiver& q, const DimVector& a) {
  if (!admits_simples(q, a)) return std::nullopt;
  long long dot = 0;
  for (long long x : a) dot += x * x;
  return 2 * p_form(q, a) + dot - 1;
}

std::optional<long long> quotient_dim_preprojective(const Quiver& q, const DimVector& a) {
  if (!admits_simples(q, a)) return std::nullopt;
  return 2 * p_form(q, a);
}

std::optional<long long> hilb_dim_preprojective(const Quiver& q, const DimVector& a) {
  if (!admits_simples(q, a)) return std::nullopt;
  long long s = 1;
  for (const Arrow& arr : q.arrows()) s += 2 * a[arr.head] * a[arr.tail];
  for (long long x : a) s += x - 2 * x * x;
  return s;
}

Verdict hilb_smooth_preprojective(const Quiver& q, const DimVector& a) {
  if (!admits_simples(q, a)) return Verdict::OutOfScope;
  auto [rq, ra] = support_restrict(q, a);
  if (rq.num_vertices() == 1 && ra == DimVector{1}) return Verdict::Smooth;
  return Verdict::Singular;
}

ModuliReport preprojective_report(const Quiver& q, const DimVector& a) {
  ModuliReport r;
  r.admits_simples = admits_simples(q, a);
  if (!r.admits_simples) {
    r.smooth = Verdict::OutOfScope;
    r.reason = "no simple representations in this dimension vector";
    return r;
  }
  r.rep_dim = rep_dim_preprojective(q, a);
  r.quotient_dim = quotient_dim_preprojective(q, a);
  r.hilb_dim = hilb_dim_preprojective(q, a);
  r.smooth = hilb_smooth_preprojective(q, a);
  r.reason = r.smooth == Verdict::Smooth
                 ? "all representations in this component are simple"
                 : "a cyclic representation with endomorphism dimension > 1 exists";
  return r;
}

long long surface_rep_dim(long long g, long long n) {
  if (g < 1) throw QuiverError("surface genus must be >= 1");
  if (n < 1) throw QuiverError("surface representation dimension must be >= 1");
  if (g == 1) return n * n + n;
  return (2 * g - 1) * n * n + 1;
}

std::optional<long long> surface_hilb_dim(long long g, long long n) {
  if (n < 1) throw QuiverError("surface representation dimension must be >= 1");
  if (g <= 1) return std::nullopt;
  return (2 * g - 2) * n * n + n + 1;
}

Verdict surface_hilb_smooth(long long g, long long n) {
  if (n < 1) throw QuiverError("surface representation dimension must be >= 1");
  if (g <= 1) return Verdict::OutOfScope;
  return n == 1 ? Verdict::Smooth : Verdict::Singular;
}

ModuliReport surface_report(long long g, long long n) {
  ModuliReport r;
  r.rep_dim = surface_rep_dim(g, n);
  if (g > 1) {
    r.admits_simples = true;
    r.quotient_dim = *r.rep_dim - (n * n - 1);
    r.hilb_dim = surface_hilb_dim(g, n);
    r.smooth = surface_hilb_smooth(g, n);
    r.reason = r.smooth == Verdict::Smooth ? "all 1-dimensional representations are simple"
                                           : "a two-sided-ideal point raises the tangent dimension";
  } else {
    r.smooth = Verdict::OutOfScope;
    r.reason = "smoothness verdicts cover genus > 1 only";
  }
  return r;
}

std::optional<ExtendedDynkinWitness> extended_dynkin_lower_bound(const Quiver& q,
                                                                 const DimVector& a) {
  int n = q.num_vertices();
  // Vertex subsets in canonical order: fewest vertices first, then
  // lexicographic. Only support vertices can carry delta >= 1.
  std::vector<int> support;
  for (int v = 0; v < n; ++v)
    if (a[v] > 0) support.push_back(v);
  int m = static_cast<int>(support.size());
  if (m == 0 || m > 20) return std::nullopt;

  std::vector<std::vector<int>> subsets;
  for (unsigned mask = 1; mask < (1u << m); ++mask) {
    std::vector<int> vs;
    for (int i = 0; i < m; ++i)
      if (mask & (1u << i)) vs.push_back(support[i]);
    subsets.push_back(std::move(vs));
  }
  std::stable_sort(subsets.begin(), subsets.end(),
                   [](const auto& x, const auto& y) { return x.size() < y.size(); });

  for (const auto& vs : subsets) {
    std::vector<int> remap(n, -1);
    std::vector<std::string> labels;
    for (int v : vs) {
      remap[v] = static_cast<int>(labels.size());
      labels.push_back(q.vertex(v));
    }
    std::vector<int> induced;
    for (int i = 0; i < q.num_arrows(); ++i)
      if (remap[q.arrow(i).tail] >= 0 && remap[q.arrow(i).head] >= 0) induced.push_back(i);
    int k = static_cast<int>(induced.size());
    if (k > 20) continue;

    std::vector<unsigned> arrow_masks;
    for (unsigned mask = 1; mask < (1u << k); ++mask) arrow_masks.push_back(mask);
    std::stable_sort(arrow_masks.begin(), arrow_masks.end(), [](unsigned x, unsigned y) {
      return __builtin_popcount(x) < __builtin_popcount(y);
    });

    for (unsigned mask : arrow_masks) {
      std::vector<Arrow> arrows;
      std::vector<int> arrow_set;
      for (int i = 0; i < k; ++i)
        if (mask & (1u << i)) {
          const Arrow& src = q.arrow(induced[i]);
          arrows.push_back({src.label, remap[src.tail], remap[src.head]});
          arrow_set.push_back(induced[i]);
        }
      Quiver sub(labels, arrows);
      auto cls = classify(sub);
      if (cls.size() != 1 || cls[0].tag != QuiverClass::ExtendedDynkin) continue;
      bool fits = true;
      for (size_t i = 0; i < vs.size(); ++i)
        if (cls[0].delta[i] > a[vs[i]]) fits = false;
      if (!fits) continue;
      return ExtendedDynkinWitness{vs, arrow_set, cls[0].delta};
    }
  }
  return std::nullopt;
}

}  // namespace cy2
