#include "packlab/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "packlab/error.hpp"

namespace packlab {

namespace {

[[noreturn]] void parse_fail(const std::string& what) { throw Error(Errc::kParseError, what); }

template <typename T>
T next_value(std::istream& in, const char* what) {
  T value{};
  if (!(in >> value)) parse_fail(std::string("expected ") + what);
  return value;
}

void expect_end(std::istream& in) {
  std::string rest;
  if (in >> rest) parse_fail("unexpected trailing token '" + rest + "'");
}

int positive(int x, const char* what) {
  if (x < 1) parse_fail(std::string(what) + " must be positive");
  return x;
}

template <typename Scalar>
void write_columns(std::ostream& out, const Packing<Scalar>& p) {
  for (int j = 0; j < p.size(); ++j) {
    for (int i = 0; i < p.dim(); ++i) {
      if (i > 0) out << ' ';
      if constexpr (std::is_same_v<Scalar, double>) {
        out << format_double(p.vectors()(i, j));
      } else {
        out << format_double(p.vectors()(i, j).real()) << ' '
            << format_double(p.vectors()(i, j).imag());
      }
    }
    out << '\n';
  }
}

}  // namespace

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

// ---------------------------------------------------------------------------
// Packings

void write_packing_text(std::ostream& out, const AnyPacking& p) {
  std::visit(
      [&](const auto& q) {
        out << q.dim() << ' ' << q.size() << ' ' << to_string(q.field()) << '\n';
        write_columns(out, q);
      },
      p);
}

AnyPacking read_packing_text(std::istream& in) {
  const int d = positive(next_value<int>(in, "d"), "d");
  const int n = positive(next_value<int>(in, "n"), "n");
  const auto field = next_value<std::string>(in, "field");
  if (field == "real") {
    Eigen::MatrixXd m(d, n);
    for (int j = 0; j < n; ++j) {
      for (int i = 0; i < d; ++i) m(i, j) = next_value<double>(in, "coordinate");
    }
    expect_end(in);
    return RealPacking(m);
  }
  if (field == "complex") {
    Eigen::MatrixXcd m(d, n);
    for (int j = 0; j < n; ++j) {
      for (int i = 0; i < d; ++i) {
        const double re = next_value<double>(in, "real part");
        const double im = next_value<double>(in, "imaginary part");
        m(i, j) = Complex(re, im);
      }
    }
    expect_end(in);
    return ComplexPacking(m);
  }
  parse_fail("field must be 'real' or 'complex', got '" + field + "'");
}

RealPacking read_sloane(std::istream& in, int d, int n) {
  positive(d, "d");
  positive(n, "n");
  Eigen::MatrixXd m(d, n);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < d; ++i) m(i, j) = next_value<double>(in, "coordinate");
  }
  expect_end(in);
  return RealPacking(m);
}

Json packing_to_json(const AnyPacking& p, const Json& meta) {
  Json j;
  std::visit(
      [&](const auto& q) {
        using Scalar = typename std::decay_t<decltype(q)>::Matrix::Scalar;
        j["d"] = q.dim();
        j["n"] = q.size();
        j["field"] = to_string(q.field());
        Json columns = Json::array();
        for (int c = 0; c < q.size(); ++c) {
          Json col = Json::array();
          for (int i = 0; i < q.dim(); ++i) {
            if constexpr (std::is_same_v<Scalar, double>) {
              col.push_back(q.vectors()(i, c));
            } else {
              col.push_back({q.vectors()(i, c).real(), q.vectors()(i, c).imag()});
            }
          }
          columns.push_back(std::move(col));
        }
        j["columns"] = std::move(columns);
      },
      p);
  j["meta"] = meta;
  return j;
}

AnyPacking packing_from_json(const Json& j) {
  try {
    const int d = positive(j.at("d").get<int>(), "d");
    const int n = positive(j.at("n").get<int>(), "n");
    const auto field = j.at("field").get<std::string>();
    const Json& columns = j.at("columns");
    if (!columns.is_array() || static_cast<int>(columns.size()) != n) {
      parse_fail("columns must hold n arrays");
    }
    for (const Json& col : columns) {
      if (!col.is_array() || static_cast<int>(col.size()) != d) {
        parse_fail("every column must hold d entries");
      }
    }
    if (field == "real") {
      Eigen::MatrixXd m(d, n);
      for (int c = 0; c < n; ++c) {
        for (int i = 0; i < d; ++i) m(i, c) = columns[c][i].get<double>();
      }
      return RealPacking(m);
    }
    if (field == "complex") {
      Eigen::MatrixXcd m(d, n);
      for (int c = 0; c < n; ++c) {
        for (int i = 0; i < d; ++i) {
          const Json& e = columns[c][i];
          if (!e.is_array() || e.size() != 2) parse_fail("complex entries are [re, im]");
          m(i, c) = Complex(e[0].get<double>(), e[1].get<double>());
        }
      }
      return ComplexPacking(m);
    }
    parse_fail("field must be 'real' or 'complex'");
  } catch (const Json::exception& e) {
    parse_fail(e.what());
  }
}

AnyPacking load_packing(const std::string& path) {
  const std::string text = read_file(path);
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    Json j;
    try {
      j = Json::parse(text);
    } catch (const Json::exception& e) {
      parse_fail(path + ": " + e.what());
    }
    return packing_from_json(j);
  }
  std::istringstream in(text);
  return read_packing_text(in);
}

void save_packing(const std::string& path, const AnyPacking& p, const Json& meta) {
  std::ostringstream out;
  const bool json = path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0;
  if (json) {
    out << packing_to_json(p, meta).dump(1) << '\n';
  } else {
    write_packing_text(out, p);
  }
  write_file(path, out.str());
}

// ---------------------------------------------------------------------------
// Graphs

void write_graph(std::ostream& out, const Graph& g) {
  out << g.order() << '\n';
  for (const auto& [i, j] : g.edges()) out << i + 1 << ' ' << j + 1 << '\n';
}

Graph read_graph(std::istream& in) {
  const int n = next_value<int>(in, "vertex count");
  if (n < 0) parse_fail("vertex count must be non-negative");
  Graph g(n);
  int i = 0;
  while (in >> i) {
    const int j = next_value<int>(in, "edge endpoint");
    if (i < 1 || j < 1 || i > n || j > n || i == j) {
      parse_fail("bad edge " + std::to_string(i) + " " + std::to_string(j));
    }
    g.add_edge(i - 1, j - 1);
  }
  if (!in.eof()) parse_fail("expected an edge endpoint");
  return g;
}

Graph load_graph(const std::string& path) {
  std::istringstream in(read_file(path));
  return read_graph(in);
}

// ---------------------------------------------------------------------------
// Incidence structures

void write_incidence(std::ostream& out, const IncidenceStructure& c) {
  out << c.num_points() << ' ' << c.num_lines() << '\n';
  for (const auto& line : c.lines()) {
    for (size_t i = 0; i < line.size(); ++i) out << (i ? " " : "") << line[i] + 1;
    out << '\n';
  }
}

IncidenceStructure read_incidence(std::istream& in) {
  const int points = next_value<int>(in, "point count");
  const int count = next_value<int>(in, "line count");
  if (points < 0 || count < 0) parse_fail("counts must be non-negative");
  std::string row;
  std::getline(in, row);
  std::vector<std::vector<int>> lines;
  while (static_cast<int>(lines.size()) < count && std::getline(in, row)) {
    if (row.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream ls(row);
    std::vector<int> line;
    int p = 0;
    while (ls >> p) {
      if (p < 1 || p > points) parse_fail("point " + std::to_string(p) + " out of range");
      line.push_back(p - 1);
    }
    if (!ls.eof()) parse_fail("non-integer point in line " + std::to_string(lines.size() + 1));
    lines.push_back(std::move(line));
  }
  if (static_cast<int>(lines.size()) != count) parse_fail("fewer lines than declared");
  expect_end(in);
  return IncidenceStructure(points, std::move(lines));
}

// ---------------------------------------------------------------------------
// Matrices

void write_matrix(std::ostream& out, const Eigen::MatrixXd& m) {
  out << m.rows() << ' ' << m.cols() << '\n';
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) out << (j ? " " : "") << format_double(m(i, j));
    out << '\n';
  }
}

Eigen::MatrixXd read_matrix(std::istream& in) {
  const int rows = next_value<int>(in, "row count");
  const int cols = next_value<int>(in, "column count");
  if (rows < 0 || cols < 0) parse_fail("matrix dimensions must be non-negative");
  Eigen::MatrixXd m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) m(i, j) = next_value<double>(in, "matrix entry");
  }
  expect_end(in);
  return m;
}

// ---------------------------------------------------------------------------
// Certificates

Json certificate_to_json(const Eigen::MatrixXd& y, const Json& meta) {
  Json j;
  j["n"] = y.rows();
  Json flat = Json::array();
  for (Eigen::Index i = 0; i < y.rows(); ++i) {
    for (Eigen::Index k = 0; k < y.cols(); ++k) flat.push_back(y(i, k));
  }
  j["Y"] = std::move(flat);
  j["meta"] = meta;
  return j;
}

Eigen::MatrixXd certificate_from_json(const Json& j) {
  try {
    const int n = positive(j.at("n").get<int>(), "n");
    const Json& flat = j.at("Y");
    if (!flat.is_array() || flat.size() != static_cast<size_t>(n) * n) {
      parse_fail("Y must hold n * n entries");
    }
    Eigen::MatrixXd y(n, n);
    for (int i = 0; i < n; ++i) {
      for (int k = 0; k < n; ++k) y(i, k) = flat[static_cast<size_t>(i) * n + k].get<double>();
    }
    return y;
  } catch (const Json::exception& e) {
    parse_fail(e.what());
  }
}

Eigen::MatrixXd load_certificate(const std::string& path) {
  try {
    return certificate_from_json(Json::parse(read_file(path)));
  } catch (const Json::exception& e) {
    parse_fail(path + ": " + e.what());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::kInvalidArgument, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::kInvalidArgument, "cannot write '" + path + "'");
  out << contents;
  if (!out) throw Error(Errc::kInvalidArgument, "write to '" + path + "' failed");
}

}  // namespace packlab
