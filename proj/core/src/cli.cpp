#include "tgwa/cli.hpp"

#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "tgwa/constructions.hpp"
#include "tgwa/locfin.hpp"
#include "tgwa/parse.hpp"
#include "tgwa/rank2.hpp"
#include "tgwa/tgwc.hpp"

namespace tgwa {

namespace {

using json = nlohmann::ordered_json;

enum class Format { text, structured };

struct Session {
  int cap = 32;
  Format format = Format::text;
  long seed = 0;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

TgwcDatum load_datum(const std::string& path) {
  return parse_tgwc_spec(read_file(path));
}

// Commands other than `validate` require a valid datum.
TgwcDatum load_valid_datum(const std::string& path) {
  TgwcDatum d = load_datum(path);
  ValidationReport report = validate_tgwc(d);
  if (!report.all_pass()) {
    std::string failed;
    for (const auto& c : report.checks)
      if (!c.pass) failed += (failed.empty() ? "" : ", ") + c.name;
    throw ParameterError("datum fails validation: " + failed);
  }
  return d;
}

void emit(const Session& s, std::ostream& out, const json& doc,
          const std::string& text) {
  if (s.format == Format::structured)
    out << doc.dump(2) << "\n";
  else
    out << text;
}

json degree_json(const Degree& g) {
  json a = json::array();
  for (int e : g) a.push_back(e);
  return a;
}

// ---------------------------------------------------------------- validate

int cmd_validate(const Session& s, const std::string& file, std::ostream& out) {
  TgwcDatum d = load_datum(file);
  ValidationReport report = validate_tgwc(d);
  json doc;
  doc["command"] = "validate";
  doc["file"] = file;
  doc["checks"] = json::array();
  std::ostringstream text;
  text << "validation of " << file << "\n";
  for (const auto& c : report.checks) {
    json jc;
    jc["name"] = c.name;
    jc["pass"] = c.pass;
    if (!c.detail.empty()) jc["detail"] = c.detail;
    doc["checks"].push_back(jc);
    text << "  [" << (c.pass ? "pass" : "FAIL") << "] " << c.name;
    if (!c.detail.empty()) text << ": " << c.detail;
    text << "\n";
  }
  doc["mu_symmetric"] = report.mu_symmetric;
  doc["all_pass"] = report.all_pass();
  text << "mu symmetric: " << (report.mu_symmetric ? "yes" : "no") << "\n";
  text << "result: " << (report.all_pass() ? "PASS" : "FAIL") << "\n";
  emit(s, out, doc, text.str());
  return report.all_pass() ? 0 : 1;
}

// ------------------------------------------------------------------ cartan

int cmd_cartan(const Session& s, const std::string& file, std::ostream& out) {
  TgwcDatum d = load_valid_datum(file);
  PolyCartanMatrix P = poly_cartan_matrix(d, s.cap);
  Gcm C = cartan_of(P);
  json doc;
  doc["command"] = "cartan";
  doc["file"] = file;
  doc["polynomial_cartan_matrix"] = json::array();
  std::ostringstream text;
  text << "polynomial_cartan_matrix:\n";
  for (int i = 1; i <= P.n(); ++i) {
    json row = json::array();
    for (int j = 1; j <= P.n(); ++j) {
      row.push_back(P.at(i, j).to_string());
      text << "  p[" << i << "][" << j << "] = " << P.at(i, j).to_string()
           << "\n";
    }
    doc["polynomial_cartan_matrix"].push_back(row);
  }
  doc["generalized_cartan_matrix"] = json::array();
  text << "generalized_cartan_matrix:\n";
  for (int i = 1; i <= C.n(); ++i) {
    json row = json::array();
    text << "  [";
    for (int j = 1; j <= C.n(); ++j) {
      row.push_back(C.at(i, j));
      text << (j > 1 ? ", " : "") << C.at(i, j);
    }
    text << "]\n";
    doc["generalized_cartan_matrix"].push_back(row);
  }
  emit(s, out, doc, text.str());
  return 0;
}

// ------------------------------------------------------------------- serre

int cmd_serre(const Session& s, const std::string& file, int i, int j,
              std::ostream& out) {
  TgwcDatum d = load_valid_datum(file);
  if (i == j) throw IndexError("serre requires i != j");
  ScalarPoly p = minimal_polynomial(d, i, j, s.cap);
  SerreElement e = serre_element(d, p, i, j);
  bool verified = verify_serre(d, e);
  json doc;
  doc["command"] = "serre";
  doc["file"] = file;
  doc["i"] = i;
  doc["j"] = j;
  doc["minimal_polynomial"] = p.to_string();
  doc["degree"] = e.m;
  doc["lambda"] = json::array();
  for (const auto& l : e.lambda) doc["lambda"].push_back(l.to_string());
  doc["x_form"] = e.x_form.to_string();
  doc["y_form"] = e.y_form.to_string();
  doc["verified"] = verified;
  std::ostringstream text;
  text << "p[" << i << "][" << j << "] = " << p.to_string() << "\n";
  text << "x_form: " << e.x_form.to_string() << "\n";
  text << "y_form: " << e.y_form.to_string() << "\n";
  text << "verified: " << (verified ? "true" : "false") << "\n";
  emit(s, out, doc, text.str());
  return verified ? 0 : 1;
}

// ------------------------------------------------------------------ member

int cmd_member(const Session& s, const std::string& file,
               const std::string& element, std::ostream& out) {
  TgwcDatum d = load_valid_datum(file);
  GradedElement a = parse_element(d, element);
  auto deg = a.homogeneous_degree(d.rank());
  if (!deg)
    throw DegreeError(
        "membership requires a homogeneous element; decompose first");
  MembershipResult r = ideal_membership(d, a);
  json doc;
  doc["command"] = "member";
  doc["file"] = file;
  doc["element"] = element;
  doc["degree"] = degree_json(*deg);
  doc["verdict"] = r.member;
  doc["pairing_witnesses"] = json::array();
  std::ostringstream text;
  text << "element: " << a.to_string() << "\n";
  text << "degree: (";
  for (size_t k = 0; k < deg->size(); ++k)
    text << (k ? ", " : "") << (*deg)[k];
  text << ")\n";
  text << "member: " << (r.member ? "true" : "false") << "\n";
  if (!r.member) {
    json w;
    w["word"] = word_to_string(*r.witness);
    w["pairing"] = r.witness_pairing->to_string();
    doc["pairing_witnesses"].push_back(w);
    text << "witness: F(" << word_to_string(*r.witness)
         << ", element) = " << r.witness_pairing->to_string() << "\n";
  }
  emit(s, out, doc, text.str());
  return r.member ? 0 : 1;
}

// ----------------------------------------------------------------- project

int cmd_project(const Session& s, const std::string& file,
                const std::string& element, std::ostream& out) {
  TgwcDatum d = load_valid_datum(file);
  GradedElement a = parse_element(d, element);
  Polynomial p = project_to_base(d, a);
  json doc;
  doc["command"] = "project";
  doc["file"] = file;
  doc["element"] = element;
  doc["polynomial"] = p.to_string();
  emit(s, out, doc, "projection: " + p.to_string() + "\n");
  return 0;
}

// -------------------------------------------------------------- shapovalov

int cmd_shapovalov(const Session& s, const std::string& file,
                   const std::string& left, const std::string& right,
                   std::ostream& out) {
  TgwcDatum d = load_valid_datum(file);
  GradedElement a = parse_element(d, left);
  GradedElement b = parse_element(d, right);
  Polynomial f = shapovalov(d, a, b);
  json doc;
  doc["command"] = "shapovalov";
  doc["file"] = file;
  doc["left"] = left;
  doc["right"] = right;
  doc["value"] = f.to_string();
  emit(s, out, doc, "F(left, right) = " + f.to_string() + "\n");
  return 0;
}

// -------------------------------------------------------------------- build

Gcm parse_cartan_arg(const std::string& text) {
  std::vector<std::vector<int>> rows;
  std::istringstream in(text);
  std::string row;
  while (std::getline(in, row, ';')) {
    std::vector<int> entries;
    std::istringstream rin(row);
    std::string cell;
    while (std::getline(rin, cell, ',')) {
      try {
        entries.push_back(std::stoi(cell));
      } catch (const std::exception&) {
        throw ParseError("bad Cartan matrix entry '" + cell + "'");
      }
    }
    rows.push_back(std::move(entries));
  }
  try {
    return make_gcm(std::move(rows));
  } catch (const GcmError& e) {
    throw ParseError(std::string("--cartan: ") + e.what());
  }
}

// "I J: value" as used by --mu and --lambda.
std::tuple<int, int, Scalar> parse_indexed_scalar(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos)
    throw ParseError("expected \"I J: value\", got '" + text + "'");
  std::istringstream head(text.substr(0, colon));
  int i = 0, j = 0;
  if (!(head >> i >> j))
    throw ParseError("expected \"I J: value\", got '" + text + "'");
  std::string tail;
  if (head >> tail)
    throw ParseError("expected \"I J: value\", got '" + text + "'");
  Scalar v = parse_scalar(text.substr(colon + 1),
                          FieldKind::rational_functions);
  return {i, j, v};
}

std::vector<std::vector<Scalar>> scalar_matrix(
    int n, const Scalar& fill, const std::vector<std::string>& entries,
    bool symmetric) {
  std::vector<std::vector<Scalar>> m(n, std::vector<Scalar>(n, fill));
  for (const auto& e : entries) {
    auto [i, j, v] = parse_indexed_scalar(e);
    if (i < 1 || i > n || j < 1 || j > n || i == j)
      throw ParseError("index pair out of range in '" + e + "'");
    m[i - 1][j - 1] = v;
    if (symmetric) m[j - 1][i - 1] = v;
  }
  return m;
}

struct BuildArgs {
  std::string preset;
  std::string cartan;
  std::string q = "q";
  std::vector<std::string> mu;
  std::string qbar;
  std::vector<std::string> lambda;
  std::string output;
};

int cmd_build(const Session& s, const BuildArgs& args, std::ostream& out) {
  std::optional<TgwcDatum> datum;
  if (args.preset == "a2-classical") {
    datum = build_type_a2_example();
  } else if (args.preset == "tqmu") {
    if (args.cartan.empty())
      throw ParseError("--preset tqmu requires --cartan");
    TqmuParams params;
    params.cartan = parse_cartan_arg(args.cartan);
    params.q = parse_scalar(args.q, FieldKind::rational_functions);
    params.mu =
        scalar_matrix(params.cartan.n(), Scalar(1), args.mu, /*symmetric=*/true);
    datum = build_tqmu(params);
  } else if (args.preset == "qweyl") {
    if (args.qbar.empty()) throw ParseError("--preset qweyl requires --qbar");
    QWeylParams params;
    std::istringstream in(args.qbar);
    std::string cell;
    while (std::getline(in, cell, ','))
      params.qbar.push_back(parse_scalar(cell, FieldKind::rational_functions));
    const int n = static_cast<int>(params.qbar.size());
    params.lambda = scalar_matrix(n, Scalar(1), args.lambda,
                                  /*symmetric=*/false);
    // Unspecified mirror entries follow lambda_ji = lambda_ij^{-1}.
    for (const auto& e : args.lambda) {
      auto [i, j, v] = parse_indexed_scalar(e);
      bool mirrored = false;
      for (const auto& e2 : args.lambda) {
        auto [i2, j2, v2] = parse_indexed_scalar(e2);
        if (i2 == j && j2 == i) mirrored = true;
      }
      if (!mirrored) params.lambda[j - 1][i - 1] = v.inverse();
    }
    QWeylBuild build = build_quantized_weyl(params);
    if (!build.involution_condition)
      throw ParameterError(
          "the qweyl preset requires lambda_ji = q_i lambda_ij (symmetric "
          "mu); the datum is constructible through the library API only");
    datum = std::move(build.datum);
  } else {
    throw ParseError("unknown preset '" + args.preset + "'");
  }

  std::string spec = print_tgwc_spec(*datum);
  json doc;
  doc["command"] = "build";
  doc["preset"] = args.preset;
  if (!args.output.empty()) {
    std::ofstream f(args.output, std::ios::binary);
    if (!f) throw ParseError("cannot write file: " + args.output);
    f << spec;
    doc["written"] = args.output;
    emit(s, out, doc, "wrote " + args.output + "\n");
  } else {
    doc["spec"] = spec;
    emit(s, out, doc, spec);
  }
  return 0;
}

// ------------------------------------------------------------ presentation

int cmd_presentation(const Session& s, const std::string& file,
                     std::ostream& out) {
  TgwcDatum d = load_valid_datum(file);
  PresentationReport report = presentation(d, s.cap);
  json doc;
  doc["command"] = "presentation";
  doc["file"] = file;
  doc["ok"] = report.ok;
  std::ostringstream text;
  if (!report.ok) {
    doc["failure"] = report.failure;
    text << "no presentation: " << report.failure << "\n";
    emit(s, out, doc, text.str());
    return 1;
  }
  doc["p1a_scalar"] = report.p1a_scalar->to_string();
  json gens;
  gens["ring"] = report.ring_generators;
  gens["x"] = {"X(1)", "X(2)"};
  gens["y"] = {"Y(1)", "Y(2)"};
  doc["generators"] = gens;
  doc["serre_pair"] = {{"xi1", report.pair->xi1.to_string()},
                       {"xi2", report.pair->xi2.to_string()},
                       {"eta1", report.pair->eta1.to_string()},
                       {"eta2", report.pair->eta2.to_string()}};
  doc["relations"] = json::array();
  text << "generators:";
  for (const auto& g : report.ring_generators) text << " " << g;
  text << " X(1) X(2) Y(1) Y(2)\n";
  text << "relations:\n";
  for (const auto& r : report.relations) {
    json jr;
    jr["family"] = r.family;
    jr["relation"] = r.text;
    jr["verified"] = r.verified;
    doc["relations"].push_back(jr);
    text << "  (" << r.family << ") " << r.text << "  ["
         << (r.verified ? "verified" : "FAILED") << "]\n";
  }
  emit(s, out, doc, text.str());
  bool all = true;
  for (const auto& r : report.relations) all = all && r.verified;
  return all ? 0 : 1;
}

// ------------------------------------------------------- check-theorem-5-3

int cmd_check_theorem(const Session& s, const std::string& cartan,
                      const std::string& q,
                      const std::vector<std::string>& mu, std::ostream& out) {
  TqmuParams params;
  params.cartan = parse_cartan_arg(cartan);
  params.q = parse_scalar(q, FieldKind::rational_functions);
  params.mu = scalar_matrix(params.cartan.n(), Scalar(1), mu,
                            /*symmetric=*/true);
  Theorem53Report report = verify_theorem_5_3(params, s.cap);
  json doc;
  doc["command"] = "check-theorem-5-3";
  doc["cartan"] = cartan;
  doc["q"] = q;
  doc["locally_finite"] = report.locally_finite;
  doc["pairs"] = json::array();
  std::ostringstream text;
  text << "locally finite: " << (report.locally_finite ? "yes" : "no") << "\n";
  for (const auto& p : report.pairs) {
    json jp;
    jp["i"] = p.i;
    jp["j"] = p.j;
    jp["p_ij"] = p.p_computed.to_string();
    jp["product_matches"] = p.product_matches;
    jp["qbinomial_matches"] = p.qbinomial_matches;
    jp["serre_verified"] = p.serre_verified;
    jp["serre_coeffs_mu_free"] = p.serre_coeffs_mu_free;
    jp["independence_matches"] = p.independence_matches;
    jp["pass"] = p.pass();
    doc["pairs"].push_back(jp);
    text << "pair (" << p.i << ", " << p.j << "): p = "
         << p.p_computed.to_string() << "\n"
         << "  product " << (p.product_matches ? "ok" : "MISMATCH")
         << ", q-binomial " << (p.qbinomial_matches ? "ok" : "MISMATCH")
         << ", serre " << (p.serre_verified ? "ok" : "FAILED")
         << ", mu-free " << (p.serre_coeffs_mu_free ? "ok" : "MISMATCH")
         << ", independence " << (p.independence_matches ? "ok" : "MISMATCH")
         << "\n";
  }
  doc["all_pass"] = report.all_pass();
  text << "result: " << (report.all_pass() ? "PASS" : "FAIL") << "\n";
  emit(s, out, doc, text.str());
  return report.all_pass() ? 0 : 1;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err) {
  CLI::App app{"Exact computations with twisted generalized Weyl algebras"};
  app.name("tgwa");
  app.require_subcommand(1);
  app.fallthrough();  // global options are accepted after the subcommand

  Session session;
  std::string format_name = "text";
  app.add_option("--cap", session.cap,
                 "Iteration cap for span closures (default 32)")
      ->check(CLI::PositiveNumber);
  app.add_option("--format", format_name, "Report format")
      ->check(CLI::IsMember({"text", "structured"}));
  app.add_option("--seed", session.seed, "Random seed for property commands");

  std::string file, element, left, right, cartan, q = "q";
  int opt_i = 0, opt_j = 0;
  std::vector<std::string> mu_args;
  BuildArgs build_args;

  CLI::App* validate = app.add_subcommand("validate", "Check a datum file");
  validate->add_option("spec", file, "datum file")->required();

  CLI::App* cartan_cmd =
      app.add_subcommand("cartan", "Polynomial Cartan matrix and C(P)");
  cartan_cmd->add_option("spec", file)->required();

  CLI::App* serre = app.add_subcommand(
      "serre", "Generalized Serre element for an ordered pair");
  serre->add_option("spec", file)->required();
  serre->add_option("--i", opt_i)->required();
  serre->add_option("--j", opt_j)->required();

  CLI::App* member =
      app.add_subcommand("member", "Homogeneous ideal membership");
  member->add_option("spec", file)->required();
  member->add_option("--element", element)->required();

  CLI::App* project =
      app.add_subcommand("project", "Degree-zero projection to the base ring");
  project->add_option("spec", file)->required();
  project->add_option("--element", element)->required();

  CLI::App* shapovalov_cmd =
      app.add_subcommand("shapovalov", "Shapovalov pairing of two elements");
  shapovalov_cmd->add_option("spec", file)->required();
  shapovalov_cmd->add_option("--left", left)->required();
  shapovalov_cmd->add_option("--right", right)->required();

  CLI::App* build = app.add_subcommand("build", "Generate a preset datum");
  build->add_option("--preset", build_args.preset)
      ->required()
      ->check(CLI::IsMember({"a2-classical", "qweyl", "tqmu"}));
  build->add_option("--cartan", build_args.cartan,
                    "rows as \"2,-1;-1,2\" (tqmu)");
  build->add_option("--q", build_args.q, "q scalar (default the generic q)");
  build->add_option("--mu", build_args.mu, "\"I J: value\" (repeatable)");
  build->add_option("--qbar", build_args.qbar, "comma-separated q_i (qweyl)");
  build->add_option("--lambda", build_args.lambda,
                    "\"I J: value\" (repeatable, qweyl)");
  build->add_option("-o,--output", build_args.output, "write the datum file");

  CLI::App* pres =
      app.add_subcommand("presentation", "Rank-two presentation report");
  pres->add_option("spec", file)->required();

  CLI::App* check53 = app.add_subcommand(
      "check-theorem-5-3", "Verify the construction against its theorem");
  check53->add_option("--cartan", cartan)->required();
  check53->add_option("--q", q);
  check53->add_option("--mu", mu_args, "\"I J: value\" (repeatable)");

  try {
    std::vector<std::string> argv = args;
    argv.insert(argv.begin(), "tgwa");
    std::vector<char*> cargv;
    for (auto& a : argv) cargv.push_back(a.data());
    app.parse(static_cast<int>(cargv.size()), cargv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  session.format =
      (format_name == "structured") ? Format::structured : Format::text;

  try {
    if (validate->parsed()) return cmd_validate(session, file, out);
    if (cartan_cmd->parsed()) return cmd_cartan(session, file, out);
    if (serre->parsed()) return cmd_serre(session, file, opt_i, opt_j, out);
    if (member->parsed()) return cmd_member(session, file, element, out);
    if (project->parsed()) return cmd_project(session, file, element, out);
    if (shapovalov_cmd->parsed())
      return cmd_shapovalov(session, file, left, right, out);
    if (build->parsed()) return cmd_build(session, build_args, out);
    if (pres->parsed()) return cmd_presentation(session, file, out);
    if (check53->parsed())
      return cmd_check_theorem(session, cartan, q, mu_args, out);
    err << "error: no subcommand\n";
    return 2;
  } catch (const CapExceededError& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace tgwa
