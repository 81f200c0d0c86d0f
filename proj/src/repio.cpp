#include "cy2/repio.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

namespace cy2 {

namespace {

struct Line {
  int number;
  std::vector<std::string> tokens;
};

std::vector<Line> tokenize(const std::string& text) {
  std::vector<Line> lines;
  std::istringstream in(text);
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    size_t hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    std::istringstream ls(raw);
    std::vector<std::string> tokens;
    std::string tok;
    while (ls >> tok) tokens.push_back(tok);
    if (!tokens.empty()) lines.push_back({number, std::move(tokens)});
  }
  return lines;
}

[[noreturn]] void fail(int line, const std::string& msg) {
  throw QuiverError("line " + std::to_string(line) + ": " + msg);
}

long long parse_ll(const Line& l, const std::string& kv, const std::string& key) {
  if (kv.size() <= key.size() + 1 || kv.compare(0, key.size() + 1, key + "=") != 0)
    fail(l.number, "expected " + key + "=<integer>");
  try {
    return std::stoll(kv.substr(key.size() + 1));
  } catch (const std::exception&) {
    fail(l.number, "malformed integer in " + kv);
  }
}

/// Reads `matrix <label>` blocks until end of input.
struct MatrixBlock {
  int line;
  std::string label;
  std::vector<std::vector<Rat>> rows;
};

std::vector<MatrixBlock> read_blocks(const std::vector<Line>& lines, size_t start) {
  std::vector<MatrixBlock> blocks;
  for (size_t i = start; i < lines.size(); ++i) {
    const Line& l = lines[i];
    if (l.tokens[0] == "matrix") {
      if (l.tokens.size() != 2) fail(l.number, "expected: matrix <label>");
      blocks.push_back({l.number, l.tokens[1], {}});
      continue;
    }
    if (blocks.empty()) fail(l.number, "expected a matrix header");
    std::vector<Rat> row;
    for (const std::string& tok : l.tokens) {
      auto r = parse_rational(tok);
      if (!r) fail(l.number, "malformed rational " + tok);
      row.push_back(*r);
    }
    blocks.back().rows.push_back(std::move(row));
  }
  return blocks;
}

Mat block_to_mat(const MatrixBlock& b, int rows, int cols) {
  if (static_cast<int>(b.rows.size()) != rows)
    fail(b.line, "matrix " + b.label + " expects " + std::to_string(rows) + " rows");
  Mat m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    if (static_cast<int>(b.rows[i].size()) != cols)
      fail(b.line, "matrix " + b.label + " expects " + std::to_string(cols) + " columns");
    for (int j = 0; j < cols; ++j) m.at(i, j) = b.rows[i][j];
  }
  return m;
}

const MatrixBlock& find_block(const std::vector<MatrixBlock>& blocks, const std::string& label,
                              int header_line) {
  for (const MatrixBlock& b : blocks)
    if (b.label == label) return b;
  fail(header_line, "missing matrix " + label);
}

void emit_matrix(std::ostringstream& out, const std::string& label, const Mat& m) {
  out << "matrix " << label << "\n";
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) out << (j ? " " : "") << to_string(m.at(i, j));
    out << "\n";
  }
}

}  // namespace

RepFile parse_rep_text(const std::string& text, const std::string& base_dir) {
  std::vector<Line> lines = tokenize(text);
  if (lines.empty()) throw QuiverError("line 1: empty representation file");
  const Line& h = lines[0];
  RepFile out;

  if (h.tokens[0] == "surface") {
    if (h.tokens.size() != 3) fail(h.number, "expected: surface g=<g> n=<n>");
    long long g = parse_ll(h, h.tokens[1], "g");
    long long n = parse_ll(h, h.tokens[2], "n");
    auto blocks = read_blocks(lines, 1);
    if (blocks.size() != static_cast<size_t>(2 * g))
      fail(h.number, "expected " + std::to_string(2 * g) + " matrices");
    std::vector<Mat> xs, ys;
    for (long long i = 1; i <= g; ++i) {
      xs.push_back(block_to_mat(find_block(blocks, "X" + std::to_string(i), h.number),
                                static_cast<int>(n), static_cast<int>(n)));
      ys.push_back(block_to_mat(find_block(blocks, "Y" + std::to_string(i), h.number),
                                static_cast<int>(n), static_cast<int>(n)));
    }
    out.surface_rep = make_surface_rep(g, n, std::move(xs), std::move(ys));
    return out;
  }

  if (h.tokens[0] == "quiver-rep") {
    if (h.tokens.size() < 4 || h.tokens[2] != "dim")
      fail(h.number, "expected: quiver-rep <quiverfile> dim <vector>");
    out.quiver_path = h.tokens[1];
    std::filesystem::path qp(out.quiver_path);
    if (qp.is_relative() && !base_dir.empty()) qp = std::filesystem::path(base_dir) / qp;
    QuiverFile qf = load_quiver_file(qp.string());
    Quiver dq = double_quiver(qf.quiver);

    std::string dimtext;
    for (size_t i = 3; i < h.tokens.size(); ++i) {
      if (i > 3) dimtext += " ";
      dimtext += h.tokens[i];
    }
    auto dim = parse_dim_vector(qf.quiver, dimtext);
    if (!dim) fail(h.number, "malformed dimension vector");

    auto blocks = read_blocks(lines, 1);
    if (blocks.size() != static_cast<size_t>(dq.num_arrows()))
      fail(h.number, "expected one matrix per arrow of the double quiver");
    std::vector<Mat> mats;
    for (const Arrow& a : dq.arrows())
      mats.push_back(block_to_mat(find_block(blocks, a.label, h.number),
                                  static_cast<int>((*dim)[a.head]),
                                  static_cast<int>((*dim)[a.tail])));
    out.quiver_rep = make_quiver_rep(std::move(dq), *dim, std::move(mats));
    return out;
  }

  fail(h.number, "expected a surface or quiver-rep header");
}

RepFile load_rep_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw QuiverError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_rep_text(buf.str(), std::filesystem::path(path).parent_path().string());
}

std::string rep_to_text(const SurfaceMatrixRep& rep) {
  std::ostringstream out;
  out << "surface g=" << rep.g << " n=" << rep.n << "\n";
  for (long long i = 0; i < rep.g; ++i) {
    emit_matrix(out, "X" + std::to_string(i + 1), rep.x[i]);
    emit_matrix(out, "Y" + std::to_string(i + 1), rep.y[i]);
  }
  return out.str();
}

std::string rep_to_text(const QuiverMatrixRep& rep, const std::string& quiver_path) {
  std::ostringstream out;
  out << "quiver-rep " << quiver_path << " dim " << dim_vector_to_text(rep.quiver, rep.dim)
      << "\n";
  for (int i = 0; i < rep.quiver.num_arrows(); ++i)
    emit_matrix(out, rep.quiver.arrow(i).label, rep.mats[i]);
  return out.str();
}

}  // namespace cy2
