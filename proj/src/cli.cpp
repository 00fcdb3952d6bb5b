#include "packlab/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "packlab/catalog.hpp"
#include "packlab/certify.hpp"
#include "packlab/error.hpp"
#include "packlab/incidence.hpp"
#include "packlab/io.hpp"
#include "packlab/secure.hpp"
#include "packlab/weil.hpp"

namespace packlab {

namespace {

struct Options {
  // construct
  std::string name;
  std::string output;
  std::string data_dir;
  int q = 0;
  int r = 0;
  int p = 0;
  int k = 0;
  int d = 0;
  int n = 0;
  std::string graph;
  // analyze / certify
  std::string input;
  double tol = 1e-9;
  std::string expect;
  std::string certificate;
  std::string save_certificate;
  // cad-export
  int form = 2;
  int cls = 1;
  std::string format = "json";
  bool welch = false;
  // table
  std::string json;
  // convert
  std::string convert_out;
  std::vector<int> sloane;
};

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string strip_prefix(const std::string& name, const std::string& prefix) {
  return name.compare(0, prefix.size(), prefix) == 0 ? name.substr(prefix.size()) : "";
}

void emit_packing(const AnyPacking& p, const Options& o, const Json& meta, std::ostream& out) {
  if (o.output.empty() || o.output == "-") {
    write_packing_text(out, p);
    return;
  }
  save_packing(o.output, p, meta);
  std::visit(
      [&](const auto& q) {
        out << "wrote " << o.output << ": d " << q.dim() << ", n " << q.size() << ", "
            << to_string(q.field()) << '\n';
      },
      p);
}

// construct <name|family> [params] -o FILE
int cmd_construct(const Options& o, std::ostream& out, std::ostream& err) {
  Json meta;
  meta["construction"] = o.name;
  if (const std::string key = strip_prefix(o.name, "catalog:"); !key.empty()) {
    const CatalogEntry& e = catalog_entry(key);
    meta["catalog"] = e.key();
    emit_packing(build(key, {o.data_dir}), o, meta, out);
    return kExitOk;
  }
  if (const std::string spec = strip_prefix(o.name, "thm52:"); !spec.empty()) {
    const auto comma = spec.find(',');
    if (comma == std::string::npos) {
      err << "thm52 needs CASE,q (for example thm52:P,3)\n";
      return kExitUsage;
    }
    const Thm52Case which = parse_thm52_case(spec.substr(0, comma));
    const int q = std::stoi(spec.substr(comma + 1));
    emit_packing(thm52(which, q).packing, o, meta, out);
    return kExitOk;
  }
  if (const std::string spec = strip_prefix(o.name, "conjectured:"); !spec.empty()) {
    const int d = std::stoi(spec);
    emit_packing(factor_gram(conjectured_gram(d), d), o, meta, out);
    return kExitOk;
  }
  if (o.name == "weil") {
    if (o.q == 0 || o.r == 0) {
      err << "weil needs --q and --r\n";
      return kExitUsage;
    }
    meta["q"] = o.q;
    meta["r"] = o.r;
    emit_packing(weil_packing(o.q, o.r).packing, o, meta, out);
    return kExitOk;
  }
  if (o.name == "mub") {
    if (o.p == 0 || o.k == 0) {
      err << "mub needs --p and --k\n";
      return kExitUsage;
    }
    const MubFamily f = mub_family(o.p, o.k);
    Eigen::MatrixXcd m(o.p, o.p * static_cast<int>(f.bases.size()));
    for (size_t b = 0; b < f.bases.size(); ++b) m.middleCols(static_cast<Eigen::Index>(b) * o.p, o.p) = f.bases[b];
    emit_packing(ComplexPacking(m), o, meta, out);
    return kExitOk;
  }
  if (o.name == "approx") {
    if (o.d == 0 || o.n == 0) {
      err << "approx needs --d and --n\n";
      return kExitUsage;
    }
    const ApproxResult a = approx_packing(o.d, o.n);
    meta["case"] = to_string(a.which);
    meta["p"] = a.p;
    meta["k"] = a.k;
    meta["case_bound"] = a.case_bound;
    meta["guarantee"] = a.guarantee;
    emit_packing(a.packing, o, meta, out);
    return kExitOk;
  }
  if (o.name == "srg") {
    if (o.graph.empty()) {
      err << "srg needs --graph FILE\n";
      return kExitUsage;
    }
    emit_packing(srg_packing(srg_data(load_graph(o.graph))).packing, o, meta, out);
    return kExitOk;
  }
  err << "unknown construction '" << o.name
      << "'; expected catalog:KEY, thm52:CASE,q, conjectured:D, weil, mub, approx or srg\n";
  return kExitUsage;
}

std::string degree_profile(const Graph& g) {
  std::map<int, int> counts;
  for (int v = 0; v < g.order(); ++v) ++counts[g.degree(v)];
  std::ostringstream ss;
  bool first = true;
  for (const auto& [deg, count] : counts) {
    ss << (first ? "" : " ") << deg << ':' << count;
    first = false;
  }
  return ss.str();
}

template <typename Scalar>
bool analyze_packing(const Packing<Scalar>& p, const Options& o, const CatalogEntry* expect,
                     std::ostream& out) {
  const int d = p.dim();
  const int n = p.size();
  out << "d: " << d << '\n' << "n: " << n << '\n' << "field: " << to_string(p.field()) << '\n';
  if (n < 2) {
    out << "coherence: undefined (n < 2)\n";
    return true;
  }
  const double mu = coherence(p);
  const BoundReport b = bound_report(d, n);
  out << "coherence: " << format_double(mu) << '\n';
  out << "welch_bound: " << format_double(b.welch.value) << (b.welch.trivial ? " (trivial)" : "")
      << '\n';
  if (!b.welch.trivial) out << "coherence_over_welch: " << format_double(mu / b.welch.value) << '\n';
  out << "orthoplex_bound: " << format_double(b.orthoplex.value)
      << " (applicable: " << yes_no(b.orthoplex.applicable) << ")\n";
  if (d >= 2) {
    out << "gerzon_range: [" << format_double(b.gerzon.lower) << ", "
        << format_double(b.gerzon.upper) << "] (contains n: " << yes_no(b.in_gerzon) << ")\n";
  }
  const TightReport t = is_tight(p, o.tol);
  out << "tight: " << yes_no(t.tight) << " (max deviation " << format_double(t.max_deviation)
      << ")\n";
  const AngleClass angles = classify_angles(gram(p));
  out << "angles: " << to_string(angles.tag) << " (" << angles.count() << " levels)\n";
  for (const auto& level : angles.levels) {
    out << "  level " << format_double(level.value) << " x " << level.multiplicity << '\n';
  }
  if (mu > 0) {
    const Graph g = contact_graph(p, o.tol);
    out << "contact_graph_edges: " << g.num_edges() << '\n';
    out << "contact_degree_profile: " << degree_profile(g) << '\n';
    out << "d_secure: " << yes_no(is_d_secure(g, d).secure) << '\n';
  } else {
    out << "contact_graph_edges: 0 (orthonormal set)\n";
  }
  if (!expect) {
    out << "expectation: none\n";
    return true;
  }
  if constexpr (std::is_same_v<Scalar, double>) {
    const EntryCheck c = check_entry(*expect, p);
    out << "expectation: catalog " << expect->key() << '\n';
    out << "  minimal_polynomial: " << expect->minimal_polynomial.to_string() << '\n';
    out << "  residual: " << format_double(c.residual) << (c.residual_ok ? " ok" : " FAIL") << '\n';
    out << "  coherence_code: " << c.mu_code << " expected " << expect->mu_code
        << (c.code_ok ? " ok" : " FAIL") << '\n';
    out << "  angles: " << c.angles << " expected " << expect->angles
        << (c.angles_ok ? " ok" : " FAIL") << '\n';
    out << "  tight: " << yes_no(c.tight) << " expected " << yes_no(expect->tight)
        << (c.tight_ok ? " ok" : " FAIL") << '\n';
    out << "verdict: " << (c.passed() ? "pass" : "fail") << '\n';
    return c.passed();
  } else {
    out << "expectation: catalog entries are real; complex packing does not match\n";
    return false;
  }
}

// analyze FILE [--tol T] [--expect d,n]
int cmd_analyze(const Options& o, std::ostream& out, std::ostream&) {
  const std::string text = read_file(o.input);
  const AnyPacking p = load_packing(o.input);
  const CatalogEntry* expect = nullptr;
  if (!o.expect.empty()) {
    expect = &catalog_entry(o.expect);
  } else if (text.find_first_not_of(" \t\r\n") != std::string::npos &&
             text[text.find_first_not_of(" \t\r\n")] == '{') {
    const Json j = Json::parse(text);
    if (j.contains("meta") && j["meta"].is_object() && j["meta"].contains("catalog")) {
      expect = &catalog_entry(j["meta"]["catalog"].get<std::string>());
    }
  }
  out << "file: " << o.input << '\n';
  const bool ok = std::visit([&](const auto& q) { return analyze_packing(q, o, expect, out); }, p);
  return ok ? kExitOk : kExitVerificationFailed;
}

void print_certificate(const CertificateReport& r, std::ostream& out) {
  out << "verdict: " << to_string(r.verdict) << '\n';
  out << "nonzero: " << yes_no(r.nonzero) << '\n';
  out << "normal: " << yes_no(r.normal) << " (residual " << format_double(r.normality_residual)
      << ")\n";
  out << "sign_condition: " << yes_no(r.sign_condition) << '\n';
  out << "support_condition: " << yes_no(r.support_condition) << " (" << r.support.size()
      << " pairs)\n";
  out << "injective: " << yes_no(r.injective) << " (rank " << r.injectivity_rank << " of "
      << r.tangent_dimension << ")\n";
  out << "dual_value: " << format_double(r.dual_value) << '\n';
  out << "objective: " << format_double(r.objective) << '\n';
}

// certify FILE [--certificate FILE]
int cmd_certify(const Options& o, std::ostream& out, std::ostream& err) {
  const AnyPacking any = load_packing(o.input);
  if (!std::holds_alternative<RealPacking>(any)) {
    err << "certify needs a real packing\n";
    return kExitUsage;
  }
  const RealPacking& p = std::get<RealPacking>(any);
  CertificateReport r;
  if (!o.certificate.empty()) {
    out << "certificate: " << o.certificate << '\n';
    r = check_certificate(p, load_certificate(o.certificate), o.tol);
  } else {
    out << "certificate: searched\n";
    r = search_certificate(p, o.tol);
  }
  print_certificate(r, out);
  if (!o.save_certificate.empty() && r.verdict == Verdict::kCertified) {
    write_file(o.save_certificate, certificate_to_json(r.certificate).dump(1) + "\n");
    out << "wrote " << o.save_certificate << '\n';
  }
  return r.verdict == Verdict::kCertified ? kExitOk : kExitVerificationFailed;
}

// secure GRAPH --d D
int cmd_secure(const Options& o, std::ostream& out, std::ostream&) {
  const Graph g = load_graph(o.graph);
  const SecureReport r = is_d_secure(g, o.d);
  out << "vertices: " << g.order() << '\n' << "edges: " << g.num_edges() << '\n';
  out << "degree_profile: " << degree_profile(g) << '\n';
  out << "d: " << o.d << '\n' << "secure: " << yes_no(r.secure) << '\n';
  out << "deletion_order:";
  for (int v : r.deletion_order) out << ' ' << v + 1;
  out << "\nresidual:";
  for (int v : r.residual) out << ' ' << v + 1;
  out << '\n';
  return r.secure ? kExitOk : kExitVerificationFailed;
}

// cad-export --d D --form 1|2 --class I --format json|script -o FILE
int cmd_cad_export(const Options& o, std::ostream& out, std::ostream& err) {
  const FormTag tag = o.form == 1 ? FormTag::kI : FormTag::kII;
  const GramForm form = gram_form(tag, o.d);
  const SwitchingClasses classes =
      tag == FormTag::kII ? form2_sign_classes(o.d) : seidel_switching_classes(o.d + 1);
  const int count = static_cast<int>(classes.representatives.size());
  if (o.cls < 1 || o.cls > count) {
    err << "--class must lie in [1, " << count << "] for d = " << o.d << ", form " << o.form << '\n';
    return kExitUsage;
  }
  Eigen::MatrixXi signs = Eigen::MatrixXi::Zero(form.order, form.order);
  const Eigen::MatrixXi& rep = classes.representatives[static_cast<size_t>(o.cls - 1)].entries();
  signs.topLeftCorner(rep.rows(), rep.cols()) = rep;
  const PolynomialSystem sys = cad_query(form, signs, {o.welch});
  const std::string text = export_cad(sys, parse_cad_format(o.format));
  if (o.output.empty() || o.output == "-") {
    out << text;
  } else {
    write_file(o.output, text);
    out << "wrote " << o.output << ": " << sys.equalities.size() << " equalities, "
        << sys.inequalities.size() << " inequalities, " << sys.variables.size() << " variables\n";
  }
  return kExitOk;
}

Json report_json(const Table1Report& report) {
  Json rows = Json::array();
  for (const auto& r : report.rows) {
    const CatalogEntry& e = *r.entry;
    Json j;
    j["d"] = e.d;
    j["n"] = e.n;
    j["builder"] = e.builder;
    j["availability"] = to_string(e.availability);
    j["minimal_polynomial"] = e.minimal_polynomial.to_string();
    j["expected_code"] = e.mu_code;
    j["expected_angles"] = e.angles;
    j["expected_tight"] = e.tight;
    j["opt"] = e.opt;
    j["notes"] = e.notes;
    if (!r.skip_reason.empty()) {
      j["status"] = "skipped";
      j["reason"] = r.skip_reason;
    } else if (!r.built) {
      j["status"] = "error";
      j["error"] = r.error;
    } else {
      j["status"] = r.check.passed() ? "pass" : "fail";
      j["mu"] = r.check.mu;
      j["residual"] = r.check.residual;
      j["code"] = r.check.mu_code;
      j["angles"] = r.check.angles;
      j["tight"] = r.check.tight;
      j["seconds"] = r.seconds;
    }
    rows.push_back(std::move(j));
  }
  Json out;
  out["rows"] = std::move(rows);
  out["built"] = report.built();
  out["passed"] = report.passed();
  out["failed"] = report.failed();
  out["skipped"] = report.skipped();
  return out;
}

// table [--data DIR] [--json FILE]
int cmd_table(const Options& o, std::ostream& out, std::ostream&) {
  const Table1Report report = table1_report({o.data_dir});
  for (const auto& r : report.rows) {
    const CatalogEntry& e = *r.entry;
    char head[32];
    std::snprintf(head, sizeof(head), "(%2d,%3d)", e.d, e.n);
    out << head << ' ';
    if (!r.skip_reason.empty()) {
      out << "skip  " << r.skip_reason << '\n';
    } else if (!r.built) {
      out << "ERROR " << r.error << '\n';
    } else {
      char line[256];
      std::snprintf(line, sizeof(line),
                    "%s  mu %.10f  residual %.1e  code %d/%d  angles %d/%d  tight %s/%s", r.check.passed() ? "pass" : "FAIL",
                    r.check.mu, r.check.residual, r.check.mu_code, e.mu_code, r.check.angles,
                    e.angles, r.check.tight ? "+" : "-", e.tight ? "+" : "-");
      out << line << "  " << e.notes << '\n';
    }
  }
  out << "built " << report.built() << ", passed " << report.passed() << ", failed "
      << report.failed() << ", skipped " << report.skipped() << '\n';
  if (!o.json.empty()) write_file(o.json, report_json(report).dump(1) + "\n");
  return report.failed() == 0 ? kExitOk : kExitVerificationFailed;
}

// convert IN OUT [--sloane d n]
int cmd_convert(const Options& o, std::ostream& out, std::ostream&) {
  AnyPacking p;
  if (!o.sloane.empty()) {
    std::istringstream in(read_file(o.input));
    p = read_sloane(in, o.sloane[0], o.sloane[1]);
  } else {
    p = load_packing(o.input);
  }
  save_packing(o.convert_out, p);
  out << "wrote " << o.convert_out << '\n';
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Construct, analyze and certify packings of lines", "packlab"};
  app.require_subcommand(1);
  Options o;

  auto* construct = app.add_subcommand("construct", "Build a packing");
  construct->add_option("name", o.name,
                        "catalog:D,N | catalog:NAME | thm52:CASE,Q | conjectured:D | weil | mub | "
                        "approx | srg")
      ->required();
  construct->add_option("-o,--output", o.output, "Output file (.json for JSON, text otherwise)");
  construct->add_option("--data", o.data_dir, "Directory with external adjacency files");
  construct->add_option("--q", o.q, "Field size for weil");
  construct->add_option("--r", o.r, "Polynomial degree for weil");
  construct->add_option("--p", o.p, "Prime for mub");
  construct->add_option("--k", o.k, "Number of bases for mub");
  construct->add_option("--d", o.d, "Dimension for approx");
  construct->add_option("--n", o.n, "Number of lines for approx");
  construct->add_option("--graph", o.graph, "Adjacency file for srg");

  auto* analyze = app.add_subcommand("analyze", "Report bounds, angles and security of a packing");
  analyze->add_option("file", o.input)->required();
  analyze->add_option("--tol", o.tol, "Tolerance for tightness and contact graph")
      ->check(CLI::PositiveNumber);
  analyze->add_option("--expect", o.expect, "Compare against a catalog row, e.g. 4,6");

  auto* certify = app.add_subcommand("certify", "Check or search for a dual certificate");
  certify->add_option("file", o.input)->required();
  certify->add_option("--certificate", o.certificate, "Certificate JSON to verify");
  certify->add_option("--save-certificate", o.save_certificate, "Write a found certificate");
  certify->add_option("--tol", o.tol, "Verification tolerance")->check(CLI::PositiveNumber);

  auto* secure = app.add_subcommand("secure", "Min-degree peeling test");
  secure->add_option("graph", o.graph)->required();
  secure->add_option("--d", o.d)->required()->check(CLI::NonNegativeNumber);

  auto* cad = app.add_subcommand("cad-export", "Export a quantifier-elimination query");
  cad->add_option("--d", o.d)->required();
  cad->add_option("--form", o.form)->check(CLI::IsMember({1, 2}));
  cad->add_option("--class", o.cls, "1-based switching class index");
  cad->add_option("--format", o.format)->check(CLI::IsMember({"json", "script"}));
  cad->add_flag("--welch", o.welch, "Add the Welch strengthening");
  cad->add_option("-o,--output", o.output);

  auto* table = app.add_subcommand("table", "Regression report over the catalog");
  table->add_option("--data", o.data_dir, "Directory with external adjacency files");
  table->add_option("--json", o.json, "Also write the report as JSON");

  auto* convert = app.add_subcommand("convert", "Convert between packing formats");
  convert->add_option("input", o.input)->required();
  convert->add_option("output", o.convert_out)->required();
  convert->add_option("--sloane", o.sloane, "Read a flat column-major file of d * n values")
      ->expected(2);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (construct->parsed()) return cmd_construct(o, out, err);
    if (analyze->parsed()) return cmd_analyze(o, out, err);
    if (certify->parsed()) return cmd_certify(o, out, err);
    if (secure->parsed()) return cmd_secure(o, out, err);
    if (cad->parsed()) return cmd_cad_export(o, out, err);
    if (table->parsed()) return cmd_table(o, out, err);
    if (convert->parsed()) return cmd_convert(o, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Json::exception& e) {
    err << "error: ParseError: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::logic_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

int run_cli(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run_cli(args, std::cout, std::cerr);
}

}  // namespace packlab
