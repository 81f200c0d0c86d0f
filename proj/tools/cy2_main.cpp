#include "CLI11.hpp"

#include "cy2/local.hpp"
#include "cy2/moduli.hpp"
#include "cy2/quiver.hpp"
#include "cy2/repio.hpp"
#include "cy2/replab.hpp"
#include "cy2/roots.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace cy2;

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitParse = 2;
constexpr int kExitOutOfScope = 3;

struct Options {
  std::string quiver_file;
  std::string dim_text;
  std::string below_text;
  std::vector<std::string> surface;  // ["g=2", "n=3"]
  std::vector<std::string> factors;
  uint64_t seed = 1;
  bool seed_given = false;
  long long trials = 32;
  bool strict = false;
};

uint64_t resolve_seed(const Options& o) {
  if (o.seed_given) return o.seed;
  if (const char* env = std::getenv("CY2_SEED")) return std::strtoull(env, nullptr, 10);
  return o.seed;
}

std::string comma_vec(const DimVector& a) {
  std::string s;
  for (size_t i = 0; i < a.size(); ++i) s += (i ? "," : "") + std::to_string(a[i]);
  return s;
}

std::string opt_ll(const std::optional<long long>& v) {
  return v ? std::to_string(*v) : std::string("none");
}

QuiverFile need_quiver(const Options& o) {
  if (o.quiver_file.empty()) throw QuiverError("missing -q <quiverfile>");
  return load_quiver_file(o.quiver_file);
}

DimVector need_dim(const Quiver& q, const std::string& text) {
  if (text.empty()) throw QuiverError("missing --dim <vector>");
  auto d = parse_dim_vector(q, text);
  if (!d) throw QuiverError("malformed dimension vector: " + text);
  return *d;
}

std::pair<long long, long long> need_surface(const Options& o) {
  if (o.surface.size() != 2) throw QuiverError("missing --surface g=<g> n=<n>");
  long long g = -1, n = -1;
  for (const std::string& tok : o.surface) {
    if (tok.rfind("g=", 0) == 0)
      g = std::stoll(tok.substr(2));
    else if (tok.rfind("n=", 0) == 0)
      n = std::stoll(tok.substr(2));
    else
      throw QuiverError("malformed --surface token: " + tok);
  }
  if (g < 1 || n < 1) throw QuiverError("--surface requires g >= 1 and n >= 1");
  return {g, n};
}

/// Parses `<vector> x<mult> [distinct]`, the same shape `witness` prints.
SsFactor parse_factor(const Quiver& q, const std::string& text) {
  std::istringstream in(text);
  std::string vec, mult, flag;
  if (!(in >> vec >> mult)) throw QuiverError("malformed factor: " + text);
  SsFactor f;
  auto d = parse_dim_vector(q, vec);
  if (!d) throw QuiverError("malformed factor vector: " + vec);
  f.beta = *d;
  if (mult.size() < 2 || mult[0] != 'x') throw QuiverError("malformed multiplicity: " + mult);
  f.mult = std::stoll(mult.substr(1));
  if (in >> flag) {
    if (flag != "distinct") throw QuiverError("unexpected factor token: " + flag);
    f.distinct = true;
  }
  return f;
}

std::string root_tag(RootClass::Tag t) {
  switch (t) {
    case RootClass::RealRoot: return "RealRoot";
    case RootClass::ImaginaryRoot: return "ImaginaryRoot";
    default: return "NotRoot";
  }
}

std::string class_tag(QuiverClass::Tag t) {
  switch (t) {
    case QuiverClass::Dynkin: return "Dynkin";
    case QuiverClass::ExtendedDynkin: return "ExtendedDynkin";
    default: return "Wild";
  }
}

int run_quiver_check(const Options& o) {
  QuiverFile qf = need_quiver(o);
  std::cout << "vertices = " << qf.quiver.num_vertices() << "\n";
  std::cout << "arrows = " << qf.quiver.num_arrows() << "\n";
  auto classes = classify(qf.quiver);
  auto comps = component_vertex_sets(qf.quiver);
  for (size_t i = 0; i < classes.size(); ++i) {
    std::string verts;
    for (size_t j = 0; j < comps[i].size(); ++j)
      verts += (j ? " " : "") + qf.quiver.vertex(comps[i][j]);
    std::cout << "component " << (i + 1) << " vertices = " << verts << "\n";
    std::cout << "component " << (i + 1) << " class = " << class_tag(classes[i].tag) << "\n";
    if (classes[i].tag == QuiverClass::ExtendedDynkin)
      std::cout << "component " << (i + 1) << " delta = " << comma_vec(classes[i].delta) << "\n";
  }
  // Round-trip echo in the canonical text format.
  std::cout << "echo-begin\n"
            << quiver_to_text(qf.quiver, qf.dim ? &*qf.dim : nullptr) << "echo-end\n";
  return kExitOk;
}

int run_roots(const Options& o) {
  QuiverFile qf = need_quiver(o);
  if (!o.below_text.empty()) {
    DimVector bound = need_dim(qf.quiver, o.below_text);
    for (const DimVector& r : positive_roots_below(qf.quiver, bound)) {
      RootClass c = classify_root(qf.quiver, r);
      std::cout << "root = " << comma_vec(r) << " " << root_tag(c.tag) << "\n";
    }
    return kExitOk;
  }
  DimVector a = need_dim(qf.quiver, o.dim_text);
  RootClass c = classify_root(qf.quiver, a);
  std::cout << "dim = " << comma_vec(a) << "\n";
  std::cout << "class = " << root_tag(c.tag) << "\n";
  std::string refl;
  for (size_t i = 0; i < c.reflections.size(); ++i)
    refl += (i ? " " : "") + qf.quiver.vertex(c.reflections[i]);
  std::cout << "reflections = " << (refl.empty() ? "-" : refl) << "\n";
  return kExitOk;
}

int run_simples(const Options& o) {
  QuiverFile qf = need_quiver(o);
  DimVector a = need_dim(qf.quiver, o.dim_text);
  std::cout << "admits_simples = " << (admits_simples(qf.quiver, a) ? "true" : "false") << "\n";
  return kExitOk;
}

int report_common(const ModuliReport& r, bool strict) {
  std::cout << "admits_simples = " << (r.admits_simples ? "true" : "false") << "\n";
  std::cout << "rep_dim = " << opt_ll(r.rep_dim) << "\n";
  std::cout << "quotient_dim = " << opt_ll(r.quotient_dim) << "\n";
  std::cout << "hilb_dim = " << opt_ll(r.hilb_dim) << "\n";
  std::cout << "verdict = " << to_string(r.smooth) << "\n";
  std::cout << "reason = " << r.reason << "\n";
  if (strict && r.smooth == Verdict::OutOfScope) return kExitOutOfScope;
  return kExitOk;
}

ModuliReport resolve_report(const Options& o) {
  if (!o.surface.empty()) {
    auto [g, n] = need_surface(o);
    std::cout << "input = surface g=" << g << " n=" << n << "\n";
    return surface_report(g, n);
  }
  QuiverFile qf = need_quiver(o);
  DimVector a = o.dim_text.empty() && qf.dim ? *qf.dim : need_dim(qf.quiver, o.dim_text);
  std::cout << "input = quiver " << o.quiver_file << " dim " << comma_vec(a) << "\n";
  return preprojective_report(qf.quiver, a);
}

int run_dims(const Options& o) { return report_common(resolve_report(o), false); }

int run_smooth(const Options& o) { return report_common(resolve_report(o), o.strict); }

SemisimpleType need_type(const Quiver& q, const Options& o) {
  if (o.factors.empty()) throw QuiverError("missing --factor \"<vector> x<mult> [distinct]\"");
  SemisimpleType t;
  for (const std::string& f : o.factors) t.factors.push_back(parse_factor(q, f));
  validate_type(q, t);
  return t;
}

int run_local_quiver(const Options& o) {
  QuiverFile qf = need_quiver(o);
  SemisimpleType t = need_type(qf.quiver, o);
  LocalModel m = local_quiver(qf.quiver, t);
  std::cout << quiver_to_text(m.local_quiver);
  std::cout << "eps = " << comma_vec(m.eps) << "\n";
  std::cout << "cyclic_type = " << (is_cyclic_type(t) ? "true" : "false") << "\n";
  std::cout << "smooth_point = " << (semisimple_point_smooth(qf.quiver, t) ? "true" : "false")
            << "\n";
  return kExitOk;
}

void print_type(const Quiver&, const SemisimpleType& t) {
  for (const SsFactor& f : t.factors) {
    std::cout << "factor " << comma_vec(f.beta) << " x" << f.mult;
    if (f.distinct) std::cout << " distinct";
    std::cout << "\n";
  }
}

int run_witness(const Options& o) {
  QuiverFile qf = need_quiver(o);
  DimVector a = need_dim(qf.quiver, o.dim_text);
  auto t = find_singular_witness(qf.quiver, a);
  if (!t) {
    std::cout << "none\n";
    return kExitOk;
  }
  print_type(qf.quiver, *t);
  return kExitOk;
}

int run_rep(const std::string& action, const std::string& file, const Options& o) {
  RepFile rf = load_rep_file(file);
  uint64_t seed = resolve_seed(o);
  if (action == "verify") {
    bool ok = rf.surface_rep ? check_surface(*rf.surface_rep) : check_preprojective(*rf.quiver_rep);
    std::cout << "relation = " << (ok ? "ok" : "violated") << "\n";
    return kExitOk;
  }
  if (action == "tangent") {
    long long t = rf.surface_rep ? tangent_dim_surface(*rf.surface_rep)
                                 : tangent_dim_preprojective(*rf.quiver_rep);
    std::cout << "tangent_dim = " << t << "\n";
    return kExitOk;
  }
  if (action == "end") {
    long long e = rf.surface_rep ? end_dim(*rf.surface_rep) : end_dim(*rf.quiver_rep);
    std::cout << "end_dim = " << e << "\n";
    return kExitOk;
  }
  if (action == "profile") {
    ExtProfile p = rf.surface_rep ? ext_profile(*rf.surface_rep) : ext_profile(*rf.quiver_rep);
    std::cout << "h0 = " << p.h0 << "\n"
              << "h1 = " << p.h1 << "\n"
              << "h2 = " << p.h2 << "\n"
              << "tangent_dim = " << p.tangent_dim << "\n";
    return kExitOk;
  }
  if (action == "cyclic") {
    std::cout << "seed = " << seed << "\n";
    CyclicResult c = rf.surface_rep ? has_cyclic_vector(*rf.surface_rep, o.trials, seed)
                                    : has_cyclic_vector(*rf.quiver_rep, o.trials, seed);
    if (c.kind == CyclicResult::Yes) {
      std::cout << "cyclic = yes\n";
      std::string v;
      for (size_t i = 0; i < c.vec.size(); ++i) v += (i ? " " : "") + to_string(c.vec[i]);
      std::cout << "vector = " << v << "\n";
      bool two_sided = rf.surface_rep ? is_two_sided_point(*rf.surface_rep, c.vec)
                                      : is_two_sided_point(*rf.quiver_rep, c.vec);
      std::cout << "two_sided = " << (two_sided ? "true" : "false") << "\n";
    } else if (c.kind == CyclicResult::No) {
      std::cout << "cyclic = no\n";
    } else {
      std::cout << "cyclic = not-found\n";
      std::cout << "trials = " << c.trials << "\n";
    }
    return kExitOk;
  }
  if (action == "simple") {
    bool s = rf.surface_rep ? is_simple(*rf.surface_rep) : is_simple(*rf.quiver_rep);
    std::cout << "simple = " << (s ? "true" : "false") << "\n";
    return kExitOk;
  }
  throw QuiverError("unknown rep action: " + action);
}

int run_make_simple(const Options& o) {
  auto [g, n] = need_surface(o);
  uint64_t seed = resolve_seed(o);
  SurfaceMatrixRep rep = build_surface_simple(g, n, seed);
  std::cout << "# seed = " << seed << "\n";
  std::cout << rep_to_text(rep);
  return kExitOk;
}

int run_make_twosided(const Options& o) {
  auto [g, n] = need_surface(o);
  auto [rep, v] = build_two_sided_point(g, n);
  std::string vs;
  for (size_t i = 0; i < v.size(); ++i) vs += (i ? " " : "") + to_string(v[i]);
  std::cout << "# cyclic-vector = " << vs << "\n";
  std::cout << rep_to_text(rep);
  return kExitOk;
}

Quiver loop_quiver(int loops) {
  std::vector<Arrow> arrows;
  for (int i = 0; i < loops; ++i) arrows.push_back({"a" + std::to_string(i + 1), 0, 0});
  return Quiver({"v"}, arrows);
}

Quiver star_quiver() {
  return Quiver({"c", "o1", "o2", "o3", "o4"},
                {{"a1", 1, 0}, {"a2", 0, 2}, {"a3", 0, 3}, {"a4", 0, 4}});
}

int run_paper_table(const std::string& input_file, const Options& o) {
  struct Row {
    bool surface;
    long long g = 0, n = 0;
    Quiver q;
    DimVector a;
    std::string label;
  };
  std::vector<Row> rows;
  if (!input_file.empty()) {
    QuiverFile qf;  // unused placeholder to keep loader local
    (void)qf;
    std::ifstream in(input_file);
    if (!in) throw QuiverError("cannot open " + input_file);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      std::istringstream ls(line);
      std::string kind;
      if (!(ls >> kind) || kind[0] == '#') continue;
      if (kind == "surface") {
        Row r;
        r.surface = true;
        if (!(ls >> r.g >> r.n))
          throw QuiverError("line " + std::to_string(lineno) + ": expected surface <g> <n>");
        r.label = "surface g=" + std::to_string(r.g) + " n=" + std::to_string(r.n);
        rows.push_back(std::move(r));
      } else if (kind == "quiver") {
        Row r;
        r.surface = false;
        std::string path, vec;
        if (!(ls >> path >> vec))
          throw QuiverError("line " + std::to_string(lineno) + ": expected quiver <file> <dim>");
        QuiverFile f = load_quiver_file(path);
        auto d = parse_dim_vector(f.quiver, vec);
        if (!d) throw QuiverError("line " + std::to_string(lineno) + ": malformed dim " + vec);
        r.q = f.quiver;
        r.a = *d;
        r.label = "quiver " + path + " dim " + vec;
        rows.push_back(std::move(r));
      } else {
        throw QuiverError("line " + std::to_string(lineno) + ": unknown row kind " + kind);
      }
    }
  } else {
    for (long long g : {2, 3})
      for (long long n : {1, 2, 3})
        rows.push_back({true, g, n, {}, {}, "surface g=" + std::to_string(g) + " n=" +
                                              std::to_string(n)});
    for (int loops : {2, 3})
      for (long long d : {1, 2, 3})
        rows.push_back({false, 0, 0, loop_quiver(loops), {d},
                        std::to_string(loops) + "-loop dim " + std::to_string(d)});
    rows.push_back({false, 0, 0, star_quiver(), {2, 1, 1, 1, 1}, "4-arm star dim 2,1,1,1,1"});
  }
  bool first = true;
  for (const Row& r : rows) {
    if (!first) std::cout << "\n";
    first = false;
    std::cout << "input = " << r.label << "\n";
    ModuliReport rep = r.surface ? surface_report(r.g, r.n) : preprojective_report(r.q, r.a);
    std::cout << "rep_dim = " << opt_ll(rep.rep_dim) << "\n";
    std::cout << "hilb_dim = " << opt_ll(rep.hilb_dim) << "\n";
    std::cout << "verdict = " << to_string(rep.smooth) << "\n";
  }
  (void)o;
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact dimension and smoothness analysis for preprojective and "
               "surface-group moduli"};
  app.require_subcommand(1);

  Options o;
  std::string rep_action, rep_file, table_input;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("-q", o.quiver_file, "quiver file");
    cmd->add_option("--dim", o.dim_text, "dimension vector");
    cmd->add_option("--surface", o.surface, "surface input g=<g> n=<n>")->expected(2);
    cmd->add_option("--seed", o.seed, "random seed")->each([&](const std::string&) {
      o.seed_given = true;
    });
    cmd->add_option("--trials", o.trials, "random trials");
    cmd->add_flag("--strict", o.strict, "exit 3 on out-of-scope verdicts");
    cmd->add_option("--below", o.below_text, "list positive roots below this vector");
    cmd->add_option("--factor", o.factors, "semisimple factor \"<vector> x<mult> [distinct]\"");
  };

  CLI::App* quiver = app.add_subcommand("quiver", "quiver file operations");
  CLI::App* qcheck = quiver->add_subcommand("check", "parse, classify, echo");
  add_common(qcheck);
  CLI::App* roots_cmd = app.add_subcommand("roots", "root classification");
  add_common(roots_cmd);
  CLI::App* simples = app.add_subcommand("simples", "simple-representation existence");
  add_common(simples);
  CLI::App* dims = app.add_subcommand("dims", "moduli dimensions");
  add_common(dims);
  CLI::App* smooth = app.add_subcommand("smooth", "smoothness verdict");
  add_common(smooth);
  CLI::App* local = app.add_subcommand("local-quiver", "local model of a semisimple type");
  add_common(local);
  CLI::App* witness = app.add_subcommand("witness", "cyclic non-simple semisimple search");
  add_common(witness);

  CLI::App* rep = app.add_subcommand("rep", "matrix representation analysis");
  rep->add_option("action", rep_action, "verify|tangent|end|profile|cyclic|simple")->required();
  rep->add_option("file", rep_file, "representation file")->required();
  add_common(rep);

  CLI::App* surface = app.add_subcommand("surface", "surface representation constructions");
  CLI::App* mksimple = surface->add_subcommand("make-simple", "certified simple representation");
  add_common(mksimple);
  CLI::App* mktwosided = surface->add_subcommand("make-twosided", "two-sided-ideal point");
  add_common(mktwosided);

  CLI::App* table = app.add_subcommand("paper-table", "headline dimension/smoothness table");
  table->add_option("--input", table_input, "row list file");
  add_common(table);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitParse;
  }

  try {
    if (qcheck->parsed()) return run_quiver_check(o);
    if (roots_cmd->parsed()) return run_roots(o);
    if (simples->parsed()) return run_simples(o);
    if (dims->parsed()) return run_dims(o);
    if (smooth->parsed()) return run_smooth(o);
    if (local->parsed()) return run_local_quiver(o);
    if (witness->parsed()) return run_witness(o);
    if (rep->parsed()) return run_rep(rep_action, rep_file, o);
    if (mksimple->parsed()) return run_make_simple(o);
    if (mktwosided->parsed()) return run_make_twosided(o);
    if (table->parsed()) return run_paper_table(table_input, o);
    std::cerr << "error: no subcommand\n";
    return kExitParse;
  } catch (const QuiverError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::logic_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}
