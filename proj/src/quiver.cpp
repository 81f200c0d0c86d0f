#include "cy2/quiver.hpp"

#include "cy2/matrix.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

namespace cy2 {

long long total(const DimVector& a) { return std::accumulate(a.begin(), a.end(), 0LL); }

bool leq(const DimVector& a, const DimVector& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

bool is_zero(const DimVector& a) {
  return std::all_of(a.begin(), a.end(), [](long long x) { return x == 0; });
}

DimVector add(const DimVector& a, const DimVector& b) {
  DimVector r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

DimVector sub(const DimVector& a, const DimVector& b) {
  DimVector r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Quiver::Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows)
    : vertices_(std::move(vertices)), arrows_(std::move(arrows)) {
  std::map<std::string, int> seen;
  for (int i = 0; i < num_vertices(); ++i)
    if (!seen.emplace(vertices_[i], i).second)
      throw QuiverError("duplicate vertex label '" + vertices_[i] + "'");
  std::map<std::string, int> aseen;
  for (int i = 0; i < num_arrows(); ++i) {
    const Arrow& a = arrows_[i];
    if (!aseen.emplace(a.label, i).second)
      throw QuiverError("duplicate arrow label '" + a.label + "'");
    if (a.tail < 0 || a.tail >= num_vertices() || a.head < 0 || a.head >= num_vertices())
      throw QuiverError("arrow '" + a.label + "' references undeclared vertex");
  }
}

std::optional<int> Quiver::vertex_index(const std::string& label) const {
  for (int i = 0; i < num_vertices(); ++i)
    if (vertices_[i] == label) return i;
  return std::nullopt;
}

std::optional<int> Quiver::arrow_index(const std::string& label) const {
  for (int i = 0; i < num_arrows(); ++i)
    if (arrows_[i].label == label) return i;
  return std::nullopt;
}

int Quiver::loops_at(int v) const {
  int n = 0;
  for (const Arrow& a : arrows_)
    if (a.tail == v && a.head == v) ++n;
  return n;
}

int Quiver::edges_between(int v, int w) const {
  int n = 0;
  for (const Arrow& a : arrows_)
    if ((a.tail == v && a.head == w) || (a.tail == w && a.head == v)) ++n;
  return n;
}

static void check_indexed(const Quiver& q, const DimVector& a) {
  if (static_cast<int>(a.size()) != q.num_vertices())
    throw QuiverError("dimension vector length does not match quiver");
}

long long p_form(const Quiver& q, const DimVector& a) {
  check_indexed(q, a);
  long long s = 1;
  for (long long x : a) s -= x * x;
  for (const Arrow& arr : q.arrows()) s += a[arr.head] * a[arr.tail];
  return s;
}

long long sym_form(const Quiver& q, const DimVector& b, const DimVector& c) {
  check_indexed(q, b);
  check_indexed(q, c);
  long long s = 0;
  for (size_t i = 0; i < b.size(); ++i) s += 2 * b[i] * c[i];
  for (const Arrow& arr : q.arrows()) s -= b[arr.tail] * c[arr.head] + b[arr.head] * c[arr.tail];
  return s;
}

Quiver double_quiver(const Quiver& q) {
  std::vector<Arrow> arrows = q.arrows();
  for (const Arrow& a : q.arrows()) arrows.push_back({a.label + "*", a.head, a.tail});
  return Quiver(q.vertices(), std::move(arrows));
}

std::vector<std::vector<int>> component_vertex_sets(const Quiver& q) {
  int n = q.num_vertices();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const Arrow& a : q.arrows()) parent[find(a.tail)] = find(a.head);
  std::map<int, std::vector<int>> groups;
  for (int v = 0; v < n; ++v) groups[find(v)].push_back(v);
  std::vector<std::vector<int>> out;
  std::vector<std::pair<int, std::vector<int>>> sorted(groups.begin(), groups.end());
  std::sort(sorted.begin(), sorted.end(),
            [](const auto& a, const auto& b) { return a.second.front() < b.second.front(); });
  for (auto& [root, vs] : sorted) out.push_back(std::move(vs));
  return out;
}

static Quiver subquiver_on(const Quiver& q, const std::vector<int>& vertex_set) {
  std::vector<int> remap(q.num_vertices(), -1);
  std::vector<std::string> vs;
  for (int v : vertex_set) {
    remap[v] = static_cast<int>(vs.size());
    vs.push_back(q.vertex(v));
  }
  std::vector<Arrow> arrows;
  for (const Arrow& a : q.arrows())
    if (remap[a.tail] >= 0 && remap[a.head] >= 0)
      arrows.push_back({a.label, remap[a.tail], remap[a.head]});
  return Quiver(std::move(vs), std::move(arrows));
}

std::vector<Quiver> connected_components(const Quiver& q) {
  std::vector<Quiver> out;
  for (const auto& vs : component_vertex_sets(q)) out.push_back(subquiver_on(q, vs));
  return out;
}

// Classification of a connected quiver via the symmetrized Tits form:
// positive definite <=> Dynkin (simply laced), positive semidefinite with a
// radical <=> extended Dynkin with delta spanning the radical. A loop at v
// makes the diagonal entry 2 - 2*loops nonpositive, so looped components are
// never Dynkin; one vertex with one loop comes out extended Dynkin with
// delta = (1) (the A~_0 convention).
static QuiverClass classify_connected(const Quiver& q) {
  int n = q.num_vertices();
  Mat c(n, n);
  for (int v = 0; v < n; ++v) c.at(v, v) = 2 - 2 * q.loops_at(v);
  for (const Arrow& a : q.arrows()) {
    if (a.tail == a.head) continue;
    c.at(a.tail, a.head) -= 1;
    c.at(a.head, a.tail) -= 1;
  }

  // Symmetric elimination: PSD iff every pivot is >= 0 and any zero diagonal
  // has a zero row at its elimination step.
  Mat w = c;
  std::vector<bool> done(n, false);
  int pivots = 0;
  for (int step = 0; step < n; ++step) {
    int piv = -1;
    for (int v = 0; v < n; ++v)
      if (!done[v] && w.at(v, v) != 0) {
        piv = v;
        break;
      }
    if (piv < 0) {
      // Remaining diagonal all zero: PSD only if the rest of the matrix is zero.
      for (int v = 0; v < n; ++v)
        for (int u = 0; u < n; ++u)
          if (!done[v] && !done[u] && w.at(v, u) != 0) return {QuiverClass::Wild, {}};
      break;
    }
    if (w.at(piv, piv) < 0) return {QuiverClass::Wild, {}};
    ++pivots;
    done[piv] = true;
    Rat p = w.at(piv, piv);
    for (int v = 0; v < n; ++v) {
      if (done[v] || w.at(v, piv) == 0) continue;
      Rat f = w.at(v, piv) / p;
      for (int u = 0; u < n; ++u)
        if (!done[u]) w.at(v, u) -= f * w.at(piv, u);
    }
  }
  if (pivots == n) return {QuiverClass::Dynkin, {}};

  // PSD with radical: connected semidefinite graphs have a one-dimensional
  // radical spanned by a strictly positive vector.
  auto ns = nullspace(c);
  if (ns.size() != 1) return {QuiverClass::Wild, {}};
  // Scale to a primitive positive integer vector.
  Int lcm = 1;
  for (const Rat& x : ns[0]) lcm = boost::multiprecision::lcm(lcm, denominator(x));
  std::vector<Int> iv(n);
  Int g = 0;
  for (int v = 0; v < n; ++v) {
    iv[v] = numerator(ns[0][v]) * (lcm / denominator(ns[0][v]));
    g = boost::multiprecision::gcd(g, iv[v]);
  }
  if (g == 0) return {QuiverClass::Wild, {}};
  bool neg = false;
  for (const Int& x : iv)
    if (x < 0) neg = true;
  DimVector delta(n);
  for (int v = 0; v < n; ++v) {
    Int e = iv[v] / g * (neg ? -1 : 1);
    if (e <= 0) return {QuiverClass::Wild, {}};
    delta[v] = e.convert_to<long long>();
  }
  if (p_form(q, delta) != 1) return {QuiverClass::Wild, {}};
  return {QuiverClass::ExtendedDynkin, delta};
}

std::vector<QuiverClass> classify(const Quiver& q) {
  std::vector<QuiverClass> out;
  for (const auto& vs : component_vertex_sets(q)) out.push_back(classify_connected(subquiver_on(q, vs)));
  return out;
}

std::pair<Quiver, DimVector> support_restrict(const Quiver& q, const DimVector& a) {
  check_indexed(q, a);
  std::vector<int> keep;
  DimVector dim;
  for (int v = 0; v < q.num_vertices(); ++v)
    if (a[v] > 0) {
      keep.push_back(v);
      dim.push_back(a[v]);
    }
  return {subquiver_on(q, keep), dim};
}

// --- text format -----------------------------------------------------------

static std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> toks;
  std::istringstream in(line);
  std::string t;
  while (in >> t) {
    if (t[0] == '#') break;
    toks.push_back(t);
  }
  return toks;
}

QuiverFile parse_quiver_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  std::vector<std::string> vertices;
  struct RawArrow {
    int line;
    std::string label, tail, head;
  };
  struct RawDim {
    int line;
    std::string label;
    long long value;
  };
  std::vector<RawArrow> raw_arrows;
  std::optional<std::vector<RawDim>> raw_dim;
  auto fail = [&](const std::string& msg) -> void {
    throw QuiverError("line " + std::to_string(lineno) + ": " + msg);
  };
  while (std::getline(in, line)) {
    ++lineno;
    auto toks = tokenize(line);
    if (toks.empty()) continue;
    if (toks[0] == "vertex") {
      if (toks.size() != 2) fail("expected: vertex <label>");
      if (std::find(vertices.begin(), vertices.end(), toks[1]) != vertices.end())
        fail("duplicate vertex label '" + toks[1] + "'");
      vertices.push_back(toks[1]);
    } else if (toks[0] == "arrow") {
      // arrow <label> : <tail> -> <head>
      if (toks.size() != 6 || toks[2] != ":" || toks[4] != "->")
        fail("expected: arrow <label> : <tail> -> <head>");
      for (const auto& ra : raw_arrows)
        if (ra.label == toks[1]) fail("duplicate arrow label '" + toks[1] + "'");
      raw_arrows.push_back({lineno, toks[1], toks[3], toks[5]});
    } else if (toks[0] == "dim") {
      if (raw_dim) fail("duplicate dim line");
      raw_dim.emplace();
      for (size_t i = 1; i < toks.size(); ++i) {
        auto eq = toks[i].find('=');
        if (eq == std::string::npos) fail("expected <label>=<nonneg int> in dim line");
        std::string label = toks[i].substr(0, eq), val = toks[i].substr(eq + 1);
        try {
          size_t pos = 0;
          long long x = std::stoll(val, &pos);
          if (pos != val.size() || x < 0) throw std::invalid_argument("");
          for (const auto& rd : *raw_dim)
            if (rd.label == label) fail("duplicate vertex '" + label + "' in dim line");
          raw_dim->push_back({lineno, label, x});
        } catch (const std::invalid_argument&) {
          fail("bad dimension value '" + val + "'");
        } catch (const std::out_of_range&) {
          fail("bad dimension value '" + val + "'");
        }
      }
    } else {
      fail("unknown declaration '" + toks[0] + "'");
    }
  }

  std::vector<Arrow> arrows;
  auto vidx = [&](int line, const std::string& label) -> int {
    auto it = std::find(vertices.begin(), vertices.end(), label);
    if (it == vertices.end())
      throw QuiverError("line " + std::to_string(line) + ": undeclared vertex '" + label + "'");
    return static_cast<int>(it - vertices.begin());
  };
  for (const auto& ra : raw_arrows)
    arrows.push_back({ra.label, vidx(ra.line, ra.tail), vidx(ra.line, ra.head)});

  QuiverFile out{Quiver(std::move(vertices), std::move(arrows)), std::nullopt};
  if (raw_dim) {
    DimVector d(out.quiver.num_vertices(), 0);
    for (const auto& rd : *raw_dim) {
      auto v = out.quiver.vertex_index(rd.label);
      if (!v)
        throw QuiverError("line " + std::to_string(rd.line) + ": dim line references undeclared vertex '" +
                          rd.label + "'");
      d[*v] = rd.value;
    }
    out.dim = std::move(d);
  }
  return out;
}

QuiverFile load_quiver_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw QuiverError("cannot open quiver file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_quiver_text(buf.str());
}

std::string quiver_to_text(const Quiver& q, const DimVector* dim) {
  std::ostringstream out;
  for (const auto& v : q.vertices()) out << "vertex " << v << "\n";
  for (const Arrow& a : q.arrows())
    out << "arrow " << a.label << " : " << q.vertex(a.tail) << " -> " << q.vertex(a.head) << "\n";
  if (dim) out << "dim " << dim_vector_to_text(q, *dim) << "\n";
  return out.str();
}

std::optional<DimVector> parse_dim_vector(const Quiver& q, const std::string& text) {
  std::string norm = text;
  std::replace(norm.begin(), norm.end(), ',', ' ');
  auto toks = tokenize(norm);
  if (toks.empty()) return std::nullopt;
  DimVector d(q.num_vertices(), 0);
  bool labeled = toks[0].find('=') != std::string::npos;
  if (labeled) {
    for (const auto& t : toks) {
      auto eq = t.find('=');
      if (eq == std::string::npos) return std::nullopt;
      auto v = q.vertex_index(t.substr(0, eq));
      if (!v) return std::nullopt;
      try {
        size_t pos = 0;
        long long x = std::stoll(t.substr(eq + 1), &pos);
        if (pos != t.size() - eq - 1 || x < 0) return std::nullopt;
        d[*v] = x;
      } catch (...) {
        return std::nullopt;
      }
    }
    return d;
  }
  if (static_cast<int>(toks.size()) != q.num_vertices()) return std::nullopt;
  for (size_t i = 0; i < toks.size(); ++i) {
    try {
      size_t pos = 0;
      long long x = std::stoll(toks[i], &pos);
      if (pos != toks[i].size() || x < 0) return std::nullopt;
      d[i] = x;
    } catch (...) {
      return std::nullopt;
    }
  }
  return d;
}

std::string dim_vector_to_text(const Quiver& q, const DimVector& a) {
  std::ostringstream out;
  for (int v = 0; v < q.num_vertices(); ++v) {
    if (v) out << " ";
    out << q.vertex(v) << "=" << a[v];
  }
  return out.str();
}

}  // namespace cy2
