#pragma once

#include <iosfwd>
#include <string>

#include <Eigen/Core>

#include "json.hpp"
#include "packlab/frames.hpp"
#include "packlab/graph.hpp"
#include "packlab/incidence.hpp"

namespace packlab {

using Json = nlohmann::json;

// 17 significant digits, enough to round-trip any double.
std::string format_double(double x);

// ---------------------------------------------------------------------------
// Packings
//
// Text: first line "d n real|complex", then one line per vector holding d
// values (real) or 2d interleaved re/im values (complex).
// JSON: {"d", "n", "field", "columns", "meta"}; complex entries are [re, im].

void write_packing_text(std::ostream& out, const AnyPacking& p);
AnyPacking read_packing_text(std::istream& in);

// One coordinate per line, d * n lines, column-major. Always real.
RealPacking read_sloane(std::istream& in, int d, int n);

Json packing_to_json(const AnyPacking& p, const Json& meta = Json::object());
AnyPacking packing_from_json(const Json& j);

// Reads JSON when the first non-blank character is '{', text otherwise.
AnyPacking load_packing(const std::string& path);
// Writes JSON when the path ends in ".json", text otherwise.
void save_packing(const std::string& path, const AnyPacking& p,
                  const Json& meta = Json::object());

// ---------------------------------------------------------------------------
// Graphs: first line n, then one "i j" pair per edge, 1-indexed.

void write_graph(std::ostream& out, const Graph& g);
Graph read_graph(std::istream& in);
Graph load_graph(const std::string& path);

// ---------------------------------------------------------------------------
// Incidence structures: "|P| |L|", then one line of 1-indexed points per line.

void write_incidence(std::ostream& out, const IncidenceStructure& c);
IncidenceStructure read_incidence(std::istream& in);

// ---------------------------------------------------------------------------
// Dense matrices: "rows cols", then one row per line.

void write_matrix(std::ostream& out, const Eigen::MatrixXd& m);
Eigen::MatrixXd read_matrix(std::istream& in);

// ---------------------------------------------------------------------------
// Certificates: {"n", "Y" (row-major), "meta"}.

Json certificate_to_json(const Eigen::MatrixXd& y, const Json& meta = Json::object());
Eigen::MatrixXd certificate_from_json(const Json& j);
Eigen::MatrixXd load_certificate(const std::string& path);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

}  // namespace packlab
