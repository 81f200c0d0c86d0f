#include "cy2/replab.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace cy2 {

namespace {

std::vector<Rat> flatten(const Mat& m) {
  std::vector<Rat> v;
  v.reserve(static_cast<size_t>(m.rows()) * m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) v.push_back(m.at(i, j));
  return v;
}

Mat unit(int rows, int cols, int r, int c) {
  Mat m(rows, cols);
  m.at(r, c) = 1;
  return m;
}

/// Columns-from-units builder: assembles the matrix of a linear map given a
/// callback producing the flattened image of each unknown unit.
template <typename F>
Mat assemble(long long rows, long long cols, F&& column) {
  Mat m(static_cast<int>(rows), static_cast<int>(cols));
  for (long long j = 0; j < cols; ++j) {
    std::vector<Rat> col = column(j);
    for (long long i = 0; i < rows; ++i) m.at(static_cast<int>(i), static_cast<int>(j)) = col[i];
  }
  return m;
}

}  // namespace

std::vector<long long> QuiverMatrixRep::offsets() const {
  std::vector<long long> off(dim.size() + 1, 0);
  for (size_t v = 0; v < dim.size(); ++v) off[v + 1] = off[v] + dim[v];
  return off;
}

Mat QuiverMatrixRep::embedded(int arrow_index) const {
  std::vector<long long> off = offsets();
  const Arrow& a = quiver.arrow(arrow_index);
  const Mat& m = mats[arrow_index];
  Mat e(static_cast<int>(n()), static_cast<int>(n()));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      e.at(static_cast<int>(off[a.head]) + i, static_cast<int>(off[a.tail]) + j) = m.at(i, j);
  return e;
}

Mat QuiverMatrixRep::vertex_projector(int v) const {
  std::vector<long long> off = offsets();
  Mat e(static_cast<int>(n()), static_cast<int>(n()));
  for (long long i = off[v]; i < off[v + 1]; ++i)
    e.at(static_cast<int>(i), static_cast<int>(i)) = 1;
  return e;
}

QuiverMatrixRep make_quiver_rep(Quiver double_q, DimVector dim, std::vector<Mat> mats) {
  if (static_cast<int>(dim.size()) != double_q.num_vertices())
    throw QuiverError("dimension vector length does not match quiver");
  for (long long d : dim)
    if (d < 0) throw QuiverError("dimension vector entries must be nonnegative");
  if (static_cast<int>(mats.size()) != double_q.num_arrows())
    throw QuiverError("expected one matrix per arrow");
  for (int i = 0; i < double_q.num_arrows(); ++i) {
    const Arrow& a = double_q.arrow(i);
    if (mats[i].rows() != dim[a.head] || mats[i].cols() != dim[a.tail])
      throw QuiverError("matrix for arrow " + a.label + " has wrong shape");
  }
  return QuiverMatrixRep{std::move(double_q), std::move(dim), std::move(mats), std::nullopt};
}

SurfaceMatrixRep make_surface_rep(long long g, long long n, std::vector<Mat> x,
                                  std::vector<Mat> y) {
  if (g < 1) throw QuiverError("genus must be at least 1");
  if (n < 1) throw QuiverError("dimension must be at least 1");
  if (static_cast<long long>(x.size()) != g || static_cast<long long>(y.size()) != g)
    throw QuiverError("expected g X-matrices and g Y-matrices");
  SurfaceMatrixRep rep;
  rep.g = g;
  rep.n = n;
  for (long long i = 0; i < g; ++i) {
    for (const Mat* m : {&x[i], &y[i]})
      if (m->rows() != n || m->cols() != n) throw QuiverError("generator matrix has wrong shape");
    auto xi = x[i].inverse(), yi = y[i].inverse();
    if (!xi || !yi)
      throw QuiverError("generator matrix " + std::to_string(i + 1) + " is not invertible");
    rep.xinv.push_back(std::move(*xi));
    rep.yinv.push_back(std::move(*yi));
  }
  rep.x = std::move(x);
  rep.y = std::move(y);
  return rep;
}

std::vector<std::pair<int, int>> star_pairs(const Quiver& q) {
  std::vector<std::pair<int, int>> pairs;
  std::vector<bool> used(q.num_arrows(), false);
  for (int i = 0; i < q.num_arrows(); ++i) {
    const Arrow& a = q.arrow(i);
    if (a.label.size() >= 1 && a.label.back() == '*') continue;
    auto j = q.arrow_index(a.label + "*");
    if (!j) throw QuiverError("arrow " + a.label + " has no starred partner");
    const Arrow& s = q.arrow(*j);
    if (s.tail != a.head || s.head != a.tail)
      throw QuiverError("starred arrow " + s.label + " does not reverse " + a.label);
    pairs.push_back({i, *j});
    used[i] = used[*j] = true;
  }
  for (int i = 0; i < q.num_arrows(); ++i)
    if (!used[i]) throw QuiverError("arrow " + q.arrow(i).label + " is not part of a star pair");
  return pairs;
}

bool check_preprojective(const QuiverMatrixRep& rep) {
  const Quiver& q = rep.quiver;
  std::vector<Mat> acc;
  for (int v = 0; v < q.num_vertices(); ++v)
    acc.push_back(Mat(static_cast<int>(rep.dim[v]), static_cast<int>(rep.dim[v])));
  for (auto [a, as] : star_pairs(q)) {
    const Arrow& ar = q.arrow(a);
    acc[ar.head] = acc[ar.head] + rep.mats[a] * rep.mats[as];
    acc[ar.tail] = acc[ar.tail] - rep.mats[as] * rep.mats[a];
  }
  for (const Mat& m : acc)
    if (!m.is_zero()) return false;
  return true;
}

bool check_surface(const SurfaceMatrixRep& rep) {
  Mat prod = Mat::identity(static_cast<int>(rep.n));
  for (long long i = 0; i < rep.g; ++i)
    prod = prod * rep.x[i] * rep.y[i] * rep.xinv[i] * rep.yinv[i];
  return prod == Mat::identity(static_cast<int>(rep.n));
}

long long intertwiner_dim(const QuiverMatrixRep& a, const QuiverMatrixRep& b) {
  const Quiver& q = a.quiver;
  if (b.quiver.num_vertices() != q.num_vertices() || b.quiver.num_arrows() != q.num_arrows())
    throw QuiverError("intertwiner_dim requires representations of the same quiver");
  int nv = q.num_vertices();
  // Unknowns E_v of shape b.dim[v] x a.dim[v]; one block row per arrow.
  std::vector<long long> ucol(nv + 1, 0);
  for (int v = 0; v < nv; ++v) ucol[v + 1] = ucol[v] + b.dim[v] * a.dim[v];
  long long rows = 0;
  for (int i = 0; i < q.num_arrows(); ++i)
    rows += b.dim[q.arrow(i).head] * a.dim[q.arrow(i).tail];
  if (ucol[nv] == 0) return 0;

  Mat sys = assemble(rows, ucol[nv], [&](long long j) {
    int v = 0;
    while (ucol[v + 1] <= j) ++v;
    long long local = j - ucol[v];
    int r = static_cast<int>(local / std::max<long long>(a.dim[v], 1));
    int c = static_cast<int>(local % std::max<long long>(a.dim[v], 1));
    Mat u = unit(static_cast<int>(b.dim[v]), static_cast<int>(a.dim[v]), r, c);
    std::vector<Rat> col;
    for (int i = 0; i < q.num_arrows(); ++i) {
      const Arrow& ar = q.arrow(i);
      Mat block(static_cast<int>(b.dim[ar.head]), static_cast<int>(a.dim[ar.tail]));
      if (ar.head == v) block = block + u * a.mats[i];
      if (ar.tail == v) block = block - b.mats[i] * u;
      for (const Rat& x : flatten(block)) col.push_back(x);
    }
    return col;
  });
  return ucol[nv] - rank(sys);
}

long long intertwiner_dim(const SurfaceMatrixRep& a, const SurfaceMatrixRep& b) {
  if (a.g != b.g) throw QuiverError("intertwiner_dim requires equal genus");
  long long cols = b.n * a.n;
  std::vector<const Mat*> ga, gb;
  for (long long i = 0; i < a.g; ++i) {
    ga.push_back(&a.x[i]);
    ga.push_back(&a.y[i]);
    gb.push_back(&b.x[i]);
    gb.push_back(&b.y[i]);
  }
  Mat sys = assemble(2 * a.g * b.n * a.n, cols, [&](long long j) {
    int r = static_cast<int>(j / a.n), c = static_cast<int>(j % a.n);
    Mat u = unit(static_cast<int>(b.n), static_cast<int>(a.n), r, c);
    std::vector<Rat> col;
    for (size_t k = 0; k < ga.size(); ++k)
      for (const Rat& x : flatten(u * *ga[k] - *gb[k] * u)) col.push_back(x);
    return col;
  });
  return cols - rank(sys);
}

long long end_dim(const QuiverMatrixRep& rep) { return intertwiner_dim(rep, rep); }
long long end_dim(const SurfaceMatrixRep& rep) { return intertwiner_dim(rep, rep); }

long long tangent_dim_preprojective(const QuiverMatrixRep& rep) {
  if (!check_preprojective(rep))
    throw QuiverError("tangent space requested at a point violating the relation");
  const Quiver& q = rep.quiver;
  auto pairs = star_pairs(q);
  int na = q.num_arrows();
  std::vector<long long> ucol(na + 1, 0);
  for (int i = 0; i < na; ++i)
    ucol[i + 1] = ucol[i] + rep.dim[q.arrow(i).head] * rep.dim[q.arrow(i).tail];
  long long rows = 0;
  for (int v = 0; v < q.num_vertices(); ++v) rows += rep.dim[v] * rep.dim[v];
  if (ucol[na] == 0) return 0;

  Mat sys = assemble(rows, ucol[na], [&](long long j) {
    int b = 0;
    while (ucol[b + 1] <= j) ++b;
    long long local = j - ucol[b];
    long long w = rep.dim[q.arrow(b).tail];
    Mat u = unit(static_cast<int>(rep.dim[q.arrow(b).head]), static_cast<int>(w),
                 static_cast<int>(local / std::max<long long>(w, 1)),
                 static_cast<int>(local % std::max<long long>(w, 1)));
    std::vector<Mat> dr;
    for (int v = 0; v < q.num_vertices(); ++v)
      dr.push_back(Mat(static_cast<int>(rep.dim[v]), static_cast<int>(rep.dim[v])));
    for (auto [a, as] : pairs) {
      const Arrow& ar = q.arrow(a);
      if (b == a) {
        dr[ar.head] = dr[ar.head] + u * rep.mats[as];
        dr[ar.tail] = dr[ar.tail] - rep.mats[as] * u;
      }
      if (b == as) {
        dr[ar.head] = dr[ar.head] + rep.mats[a] * u;
        dr[ar.tail] = dr[ar.tail] - u * rep.mats[a];
      }
    }
    std::vector<Rat> col;
    for (const Mat& m : dr)
      for (const Rat& x : flatten(m)) col.push_back(x);
    return col;
  });
  return ucol[na] - rank(sys);
}

long long tangent_dim_surface(const SurfaceMatrixRep& rep) {
  if (!check_surface(rep))
    throw QuiverError("tangent space requested at a point violating the relation");
  long long g = rep.g, n = rep.n;
  // Relator letters in order, as (unknown index, exponent) with x_i -> i,
  // y_i -> g + i.
  struct Letter {
    long long gen;
    int exp;
    const Mat *rho, *rhoinv;
  };
  std::vector<Letter> word;
  for (long long i = 0; i < g; ++i) {
    word.push_back({i, +1, &rep.x[i], &rep.xinv[i]});
    word.push_back({g + i, +1, &rep.y[i], &rep.yinv[i]});
    word.push_back({i, -1, &rep.x[i], &rep.xinv[i]});
    word.push_back({g + i, -1, &rep.y[i], &rep.yinv[i]});
  }
  size_t L = word.size();
  std::vector<Mat> prefix(L + 1, Mat::identity(static_cast<int>(n)));
  for (size_t k = 0; k < L; ++k) {
    const Mat& m = word[k].exp > 0 ? *word[k].rho : *word[k].rhoinv;
    prefix[k + 1] = prefix[k] * m;
  }
  std::vector<Mat> suffix(L + 1, Mat::identity(static_cast<int>(n)));
  for (size_t k = L; k-- > 0;) {
    const Mat& m = word[k].exp > 0 ? *word[k].rho : *word[k].rhoinv;
    suffix[k] = m * suffix[k + 1];
  }

  long long cols = 2 * g * n * n;
  Mat sys = assemble(n * n, cols, [&](long long j) {
    long long t = j / (n * n);
    long long local = j % (n * n);
    Mat u = unit(static_cast<int>(n), static_cast<int>(n), static_cast<int>(local / n),
                 static_cast<int>(local % n));
    Mat acc(static_cast<int>(n), static_cast<int>(n));
    for (size_t k = 0; k < L; ++k) {
      if (word[k].gen != t) continue;
      Mat term = word[k].exp > 0 ? u : (*word[k].rhoinv * u * *word[k].rhoinv) * Rat(-1);
      acc = acc + prefix[k] * term * suffix[k + 1];
    }
    return flatten(acc);
  });
  return cols - rank(sys);
}

namespace {

ExtProfile profile_from(long long h0, long long tangent, long long ambient) {
  ExtProfile p;
  p.h0 = h0;
  p.tangent_dim = tangent;
  p.h1 = tangent - ambient + h0;
  p.h2 = h0;
  if (p.h1 < 0) throw std::logic_error("negative Ext^1 dimension");
  return p;
}

}  // namespace

ExtProfile ext_profile(const QuiverMatrixRep& rep) {
  long long ambient = 0;
  for (long long d : rep.dim) ambient += d * d;
  return profile_from(end_dim(rep), tangent_dim_preprojective(rep), ambient);
}

ExtProfile ext_profile(const SurfaceMatrixRep& rep) {
  return profile_from(end_dim(rep), tangent_dim_surface(rep), rep.n * rep.n);
}

namespace {

/// Closes the span of `seeds` under left multiplication by `gens`, counting
/// rounds; the span must stabilize within dim(seed space) rounds.
bool span_closure_full(int dim, const std::vector<std::vector<Rat>>& seeds,
                       const std::vector<Mat>& gens,
                       int target,  // required span dimension
                       SpanBasis* out = nullptr) {
  SpanBasis span(dim);
  std::vector<std::vector<Rat>> frontier;
  for (const auto& s : seeds)
    if (span.insert(s)) frontier.push_back(s);
  int rounds = 0;
  while (!frontier.empty() && span.size() < target) {
    if (++rounds > dim + 1) throw std::logic_error("span closure failed to stabilize");
    std::vector<std::vector<Rat>> next;
    for (const auto& v : frontier)
      for (const Mat& gmat : gens) {
        std::vector<Rat> w(gmat.rows());
        for (int i = 0; i < gmat.rows(); ++i) {
          Rat s = 0;
          for (int j = 0; j < gmat.cols(); ++j)
            if (!v[j].is_zero()) s += gmat.at(i, j) * v[j];
          w[i] = s;
        }
        if (span.insert(w)) next.push_back(std::move(w));
      }
    frontier = std::move(next);
  }
  if (out) *out = span;
  return span.size() >= target;
}

std::vector<Mat> algebra_generators(const QuiverMatrixRep& rep) {
  std::vector<Mat> gens;
  for (int v = 0; v < rep.quiver.num_vertices(); ++v)
    if (rep.dim[v] > 0) gens.push_back(rep.vertex_projector(v));
  for (int i = 0; i < rep.quiver.num_arrows(); ++i) gens.push_back(rep.embedded(i));
  return gens;
}

std::vector<Mat> algebra_generators(const SurfaceMatrixRep& rep) {
  std::vector<Mat> gens;
  for (long long i = 0; i < rep.g; ++i) {
    gens.push_back(rep.x[i]);
    gens.push_back(rep.y[i]);
    gens.push_back(rep.xinv[i]);
    gens.push_back(rep.yinv[i]);
  }
  return gens;
}

/// Left multiplication embedding Mat_n -> End(Mat_n) flattened: the span of
/// words applied to seed matrices, tracked as n^2 vectors.
template <typename RepT>
bool algebra_span_full(const RepT& rep, long long n, const std::vector<Mat>& seeds) {
  std::vector<Mat> gens = algebra_generators(rep);
  // Track matrices directly: closure under M -> G*M.
  SpanBasis span(static_cast<int>(n * n));
  std::vector<Mat> frontier;
  for (const Mat& s : seeds)
    if (span.insert(flatten(s))) frontier.push_back(s);
  int rounds = 0;
  while (!frontier.empty() && !span.full()) {
    if (++rounds > n * n + 1) throw std::logic_error("algebra closure failed to stabilize");
    std::vector<Mat> next;
    for (const Mat& m : frontier)
      for (const Mat& gmat : gens) {
        Mat w = gmat * m;
        if (span.insert(flatten(w))) next.push_back(std::move(w));
      }
    frontier = std::move(next);
  }
  return span.full();
}

}  // namespace

bool is_simple(const QuiverMatrixRep& rep) {
  long long n = rep.n();
  if (n == 0) return false;
  std::vector<Mat> seeds;
  for (int v = 0; v < rep.quiver.num_vertices(); ++v)
    if (rep.dim[v] > 0) seeds.push_back(rep.vertex_projector(v));
  return algebra_span_full(rep, n, seeds);
}

bool is_simple(const SurfaceMatrixRep& rep) {
  return algebra_span_full(rep, rep.n, {Mat::identity(static_cast<int>(rep.n))});
}

bool certify_cyclic(const QuiverMatrixRep& rep, const std::vector<Rat>& v) {
  long long n = rep.n();
  if (static_cast<long long>(v.size()) != n) throw QuiverError("vector length mismatch");
  if (n == 0) return false;
  return span_closure_full(static_cast<int>(n), {v}, algebra_generators(rep),
                           static_cast<int>(n));
}

bool certify_cyclic(const SurfaceMatrixRep& rep, const std::vector<Rat>& v) {
  if (static_cast<long long>(v.size()) != rep.n) throw QuiverError("vector length mismatch");
  return span_closure_full(static_cast<int>(rep.n), {v}, algebra_generators(rep),
                           static_cast<int>(rep.n));
}

namespace {

/// Global coordinate indices of copy `c` of part `j` in a block-semisimple
/// rep, in the copy's internal basis order.
std::vector<long long> copy_coordinates(const QuiverMatrixRep& rep,
                                        const std::vector<BlockPart>& parts, size_t j,
                                        long long c) {
  std::vector<long long> off = rep.offsets();
  std::vector<long long> coords;
  for (size_t v = 0; v < rep.dim.size(); ++v) {
    long long local = 0;
    for (size_t jj = 0; jj < j; ++jj) local += parts[jj].mult * parts[jj].beta[v];
    local += c * parts[j].beta[v];
    for (long long i = 0; i < parts[j].beta[v]; ++i) coords.push_back(off[v] + local + i);
  }
  return coords;
}

std::vector<long long> copy_coordinates(const SurfaceMatrixRep&,
                                        const std::vector<BlockPart>& parts, size_t j,
                                        long long c) {
  long long base = 0;
  for (size_t jj = 0; jj < j; ++jj) base += parts[jj].mult * parts[jj].dim;
  base += c * parts[j].dim;
  std::vector<long long> coords;
  for (long long i = 0; i < parts[j].dim; ++i) coords.push_back(base + i);
  return coords;
}

template <typename RepT>
CyclicResult cyclic_search(const RepT& rep, long long n, long long trials, uint64_t seed) {
  CyclicResult res;
  if (rep.semisimple_parts) {
    const auto& parts = *rep.semisimple_parts;
    for (const BlockPart& p : parts)
      if (p.mult > p.dim) {
        res.kind = CyclicResult::No;
        return res;
      }
    // Multiplicity e <= dim d: the i-th copy takes the i-th basis vector of
    // its own subspace; the algebra image is the full product of matrix
    // blocks, so the orbit of the assembled vector fills the space.
    std::vector<Rat> v(n, Rat(0));
    for (size_t j = 0; j < parts.size(); ++j)
      for (long long c = 0; c < parts[j].mult; ++c) {
        auto coords = copy_coordinates(rep, parts, j, c);
        v[coords[static_cast<size_t>(c)]] = 1;
      }
    if (!certify_cyclic(rep, v))
      throw std::logic_error("semisimple cyclicity certificate failed to verify");
    res.kind = CyclicResult::Yes;
    res.vec = std::move(v);
    return res;
  }
  for (long long i = 0; i < n; ++i) {
    std::vector<Rat> v(n, Rat(0));
    v[i] = 1;
    if (certify_cyclic(rep, v)) {
      res.kind = CyclicResult::Yes;
      res.vec = std::move(v);
      return res;
    }
  }
  Rng rng(seed);
  for (long long t = 0; t < trials; ++t) {
    std::vector<Rat> v;
    for (long long i = 0; i < n; ++i) v.push_back(rng.rational(9));
    ++res.trials;
    if (certify_cyclic(rep, v)) {
      res.kind = CyclicResult::Yes;
      res.vec = std::move(v);
      return res;
    }
  }
  res.kind = CyclicResult::NotFound;
  return res;
}

}  // namespace

CyclicResult has_cyclic_vector(const QuiverMatrixRep& rep, long long trials, uint64_t seed) {
  return cyclic_search(rep, rep.n(), trials, seed);
}

CyclicResult has_cyclic_vector(const SurfaceMatrixRep& rep, long long trials, uint64_t seed) {
  return cyclic_search(rep, rep.n, trials, seed);
}

bool is_two_sided_point(const QuiverMatrixRep& rep, const std::vector<Rat>& v) {
  if (!certify_cyclic(rep, v)) throw QuiverError("vector is not cyclic");
  return end_dim(rep) == rep.n();
}

bool is_two_sided_point(const SurfaceMatrixRep& rep, const std::vector<Rat>& v) {
  if (!certify_cyclic(rep, v)) throw QuiverError("vector is not cyclic");
  return end_dim(rep) == rep.n;
}

QuiverMatrixRep build_semisimple(const std::vector<std::pair<QuiverMatrixRep, long long>>& parts) {
  if (parts.empty()) throw QuiverError("build_semisimple requires at least one part");
  const Quiver& q = parts[0].first.quiver;
  for (const auto& [rep, mult] : parts) {
    if (mult < 1) throw QuiverError("part multiplicity must be >= 1");
    if (rep.quiver.vertices() != q.vertices() ||
        rep.quiver.num_arrows() != q.num_arrows())
      throw QuiverError("all parts must share one quiver");
    if (!is_simple(rep)) throw QuiverError("build_semisimple part is not simple");
  }
  // Merge isomorphic parts into identical consecutive copies of one
  // representative.
  std::vector<std::pair<const QuiverMatrixRep*, long long>> merged;
  for (const auto& [rep, mult] : parts) {
    bool found = false;
    for (auto& [mrep, mmult] : merged)
      if (mrep->dim == rep.dim && intertwiner_dim(*mrep, rep) > 0) {
        mmult += mult;
        found = true;
        break;
      }
    if (!found) merged.push_back({&rep, mult});
  }

  int nv = q.num_vertices();
  DimVector dim(nv, 0);
  for (const auto& [rep, mult] : merged)
    for (int v = 0; v < nv; ++v) dim[v] += mult * rep->dim[v];

  std::vector<Mat> mats;
  for (int i = 0; i < q.num_arrows(); ++i) {
    const Arrow& a = q.arrow(i);
    Mat m(static_cast<int>(dim[a.head]), static_cast<int>(dim[a.tail]));
    long long roff = 0, coff = 0;
    for (const auto& [rep, mult] : merged) {
      const Mat& block = rep->mats[i];
      for (long long c = 0; c < mult; ++c) {
        for (int r2 = 0; r2 < block.rows(); ++r2)
          for (int c2 = 0; c2 < block.cols(); ++c2)
            m.at(static_cast<int>(roff) + r2, static_cast<int>(coff) + c2) = block.at(r2, c2);
        roff += rep->dim[a.head];
        coff += rep->dim[a.tail];
      }
    }
    mats.push_back(std::move(m));
  }

  QuiverMatrixRep out = make_quiver_rep(q, dim, std::move(mats));
  std::vector<BlockPart> meta;
  for (const auto& [rep, mult] : merged) meta.push_back({rep->n(), mult, rep->dim});
  out.semisimple_parts = std::move(meta);
  return out;
}

SurfaceMatrixRep build_semisimple(const std::vector<std::pair<SurfaceMatrixRep, long long>>& parts) {
  if (parts.empty()) throw QuiverError("build_semisimple requires at least one part");
  long long g = parts[0].first.g;
  for (const auto& [rep, mult] : parts) {
    if (mult < 1) throw QuiverError("part multiplicity must be >= 1");
    if (rep.g != g) throw QuiverError("all parts must share one genus");
    if (!is_simple(rep)) throw QuiverError("build_semisimple part is not simple");
  }
  std::vector<std::pair<const SurfaceMatrixRep*, long long>> merged;
  for (const auto& [rep, mult] : parts) {
    bool found = false;
    for (auto& [mrep, mmult] : merged)
      if (mrep->n == rep.n && intertwiner_dim(*mrep, rep) > 0) {
        mmult += mult;
        found = true;
        break;
      }
    if (!found) merged.push_back({&rep, mult});
  }

  long long n = 0;
  for (const auto& [rep, mult] : merged) n += mult * rep->n;
  std::vector<Mat> xs, ys;
  for (long long i = 0; i < g; ++i) {
    Mat xm(static_cast<int>(n), static_cast<int>(n)), ym(static_cast<int>(n), static_cast<int>(n));
    long long off = 0;
    for (const auto& [rep, mult] : merged)
      for (long long c = 0; c < mult; ++c) {
        for (int r2 = 0; r2 < rep->n; ++r2)
          for (int c2 = 0; c2 < rep->n; ++c2) {
            xm.at(static_cast<int>(off) + r2, static_cast<int>(off) + c2) = rep->x[i].at(r2, c2);
            ym.at(static_cast<int>(off) + r2, static_cast<int>(off) + c2) = rep->y[i].at(r2, c2);
          }
        off += rep->n;
      }
    xs.push_back(std::move(xm));
    ys.push_back(std::move(ym));
  }

  SurfaceMatrixRep out = make_surface_rep(g, n, std::move(xs), std::move(ys));
  std::vector<BlockPart> meta;
  for (const auto& [rep, mult] : merged) meta.push_back({rep->n, mult, {}});
  out.semisimple_parts = std::move(meta);
  return out;
}

QuiverMatrixRep lift_quiver_rep(const Quiver& q, const DimVector& dim, std::vector<Mat> mats) {
  if (static_cast<int>(mats.size()) != q.num_arrows())
    throw QuiverError("expected one matrix per arrow of the base quiver");
  Quiver dq = double_quiver(q);
  std::vector<Mat> all = std::move(mats);
  for (const Arrow& a : q.arrows())
    all.push_back(Mat(static_cast<int>(dim[a.tail]), static_cast<int>(dim[a.head])));
  return make_quiver_rep(std::move(dq), dim, std::move(all));
}

std::optional<Mat> solve_commutator_equation(const Mat& x, const Mat& d, uint64_t seed,
                                             long long trials) {
  int n = x.rows();
  if (x.cols() != n || d.rows() != n || d.cols() != n)
    throw QuiverError("solve_commutator_equation requires square matrices of equal size");
  auto xinv = x.inverse();
  if (!xinv || !d.inverse()) throw QuiverError("inputs must be invertible");

  // Nullspace of Y -> XY - DYX; any invertible element satisfies
  // X Y X^{-1} Y^{-1} = D.
  Mat sys = assemble(static_cast<long long>(n) * n, static_cast<long long>(n) * n,
                     [&](long long j) {
                       Mat u = unit(n, n, static_cast<int>(j / n), static_cast<int>(j % n));
                       return flatten(x * u - d * u * x);
                     });
  std::vector<std::vector<Rat>> basis = nullspace(sys);
  if (basis.empty()) return std::nullopt;

  auto to_mat = [&](const std::vector<Rat>& v) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m.at(i, j) = v[static_cast<size_t>(i) * n + j];
    return m;
  };
  auto verify = [&](const Mat& y) -> std::optional<Mat> {
    auto yinv = y.inverse();
    if (!yinv) return std::nullopt;
    if (x * y * *xinv * *yinv == d) return y;
    return std::nullopt;
  };

  for (const auto& v : basis)
    if (auto y = verify(to_mat(v))) return y;
  Rng rng(seed);
  for (long long t = 0; t < trials; ++t) {
    std::vector<Rat> v(static_cast<size_t>(n) * n, Rat(0));
    for (const auto& b : basis) {
      long long c = rng.next_in(-5, 5);
      if (c == 0) continue;
      for (size_t i = 0; i < v.size(); ++i) v[i] += Rat(c) * b[i];
    }
    if (auto y = verify(to_mat(v))) return y;
  }
  return std::nullopt;
}

SurfaceMatrixRep build_surface_simple(long long g, long long n, uint64_t seed,
                                      long long retries) {
  if (g < 1 || n < 1) throw QuiverError("genus and dimension must be at least 1");
  Rng rng(seed);
  if (n == 1) {
    std::vector<Mat> xs, ys;
    for (long long i = 0; i < g; ++i) {
      Mat xm(1, 1), ym(1, 1);
      xm.at(0, 0) = rng.nonzero_rational();
      ym.at(0, 0) = rng.nonzero_rational();
      xs.push_back(xm);
      ys.push_back(ym);
    }
    return make_surface_rep(g, 1, std::move(xs), std::move(ys));
  }
  if (g < 2)
    throw QuiverError("no absolutely simple representations of dimension > 1 at genus 1");

  for (long long attempt = 0; attempt < retries; ++attempt) {
    // Pair one: diagonal with distinct entries against the cyclic shift.
    std::vector<Rat> diag;
    bool distinct = true;
    for (long long i = 0; i < n; ++i) {
      Rat r = rng.nonzero_rational();
      for (const Rat& s : diag)
        if (s == r) distinct = false;
      diag.push_back(r);
    }
    if (!distinct) continue;

    Mat x1(static_cast<int>(n), static_cast<int>(n));
    for (long long i = 0; i < n; ++i) x1.at(static_cast<int>(i), static_cast<int>(i)) = diag[i];
    Mat perm(static_cast<int>(n), static_cast<int>(n));
    for (long long i = 0; i < n; ++i)
      perm.at(static_cast<int>((i + 1) % n), static_cast<int>(i)) = 1;

    Mat c = x1 * perm * *x1.inverse() * *perm.inverse();
    Mat d = *c.inverse();
    // [diag(z), perm] = diag(z_k / z_{k-1}); the product of d's diagonal
    // entries is 1, so the recurrence closes up.
    std::vector<Rat> z(n);
    z[0] = 1;
    for (long long k = 1; k < n; ++k) z[k] = d.at(static_cast<int>(k), static_cast<int>(k)) * z[k - 1];
    Mat xg(static_cast<int>(n), static_cast<int>(n));
    for (long long i = 0; i < n; ++i) xg.at(static_cast<int>(i), static_cast<int>(i)) = z[i];

    auto yg = solve_commutator_equation(xg, d, rng.next());
    if (!yg) continue;

    std::vector<Mat> xs{x1}, ys{perm};
    for (long long i = 1; i < g - 1; ++i) {
      xs.push_back(rng.invertible_matrix(static_cast<int>(n)));
      ys.push_back(Mat::identity(static_cast<int>(n)));
    }
    xs.push_back(xg);
    ys.push_back(*yg);

    SurfaceMatrixRep rep = make_surface_rep(g, n, std::move(xs), std::move(ys));
    if (check_surface(rep) && is_simple(rep)) return rep;
  }
  throw QuiverError("build_surface_simple exhausted its retry budget");
}

std::pair<SurfaceMatrixRep, std::vector<Rat>> build_two_sided_point(long long g, long long n) {
  if (g < 1 || n < 1) throw QuiverError("genus and dimension must be at least 1");
  Mat x1 = Mat::identity(static_cast<int>(n));
  for (long long i = 0; i + 1 < n; ++i) x1.at(static_cast<int>(i + 1), static_cast<int>(i)) = 1;
  std::vector<Mat> xs, ys;
  xs.push_back(x1);
  ys.push_back(Mat::identity(static_cast<int>(n)));
  for (long long i = 1; i < g; ++i) {
    xs.push_back(Mat::identity(static_cast<int>(n)));
    ys.push_back(Mat::identity(static_cast<int>(n)));
  }
  SurfaceMatrixRep rep = make_surface_rep(g, n, std::move(xs), std::move(ys));
  std::vector<Rat> v(n, Rat(0));
  v[0] = 1;
  return {std::move(rep), std::move(v)};
}

ExtendedDynkinCyclicRep build_extended_dynkin_cyclic() {
  Quiver q({"c", "o1", "o2", "o3", "o4"},
           {{"a1", 1, 0}, {"a2", 0, 2}, {"a3", 0, 3}, {"a4", 0, 4}});
  DimVector dim{2, 1, 1, 1, 1};
  std::vector<Mat> mats;
  Mat a1(2, 1);
  a1.at(0, 0) = 1;
  mats.push_back(a1);
  mats.push_back(Mat(1, 2));
  mats.push_back(Mat(1, 2));
  mats.push_back(Mat(1, 2));
  QuiverMatrixRep rep = lift_quiver_rep(q, dim, std::move(mats));

  std::vector<Rat> v(6, Rat(1));
  v[0] = 0;  // center block carries (0, 1)
  return {std::move(rep), std::move(v)};
}

}  // namespace cy2
