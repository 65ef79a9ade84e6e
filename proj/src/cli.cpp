#include "sra/cli.hpp"

#include <cstdlib>
#include <sstream>

#include <CLI11.hpp>

#include "sra/checks.hpp"
#include "sra/expr.hpp"
#include "sra/io.hpp"

namespace sra {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Source {
  std::string builtin, factors, file;
  int n = 0, rank = 0;
};

struct Config {
  Source source;
  std::string kappa = "both";
  bool json = false;
  std::string expr;
  int cutoff = 2;
  int degree = 0;
  int samples = 20;
  std::uint64_t seed = 1;
  std::string assignment;
};

GroupFile resolve(const Source& s) {
  if (s.builtin.empty() == s.file.empty()) throw UsageError("give exactly one of --builtin and --group");
  if (!s.file.empty()) return load_group_file(s.file);
  std::string spec = s.builtin;
  auto need = [&](int v, const char* flag) {
    if (v < 1) throw UsageError("--builtin " + s.builtin + " needs " + flag);
    return std::to_string(v);
  };
  if (spec == "cyclic" || spec == "dihedral")
    spec += ":" + need(s.n, "--n");
  else if (spec == "doubled-A" || spec == "doubled-B")
    spec += ":" + need(s.rank, "--rank");
  else if (spec == "product") {
    if (s.factors.empty()) throw UsageError("--builtin product needs --factors, e.g. cyclic:2,cyclic:3");
    spec = "product(" + s.factors + ")";
  }
  GroupFile out;
  try {
    out.group = std::make_shared<const Group>(builtin(spec));
  } catch (const GroupError& e) {
    if (e.kind() == GroupError::Kind::UnknownBuiltin) throw UsageError(e.what());
    throw;
  }
  out.eta.assign(out.group->eta_count(), std::nullopt);
  return out;
}

std::vector<int> kappas(const std::string& k) {
  if (k == "both") return {1, -1};
  if (k == "1" || k == "+1") return {1};
  if (k == "-1") return {-1};
  throw UsageError("--kappa must be +1, -1 or both");
}

std::string kappa_text(int k) { return k == 1 ? "+1" : "-1"; }

void hint_check(const Group& G, std::ostream& err) {
  const char* hint = std::getenv("SRA_CYCLOTOMIC_ORDER");
  if (!hint || !*hint) return;
  char* end = nullptr;
  long v = std::strtol(hint, &end, 10);
  if (*end != '\0' || v < 1)
    err << "note: ignoring malformed SRA_CYCLOTOMIC_ORDER='" << hint << "'\n";
  else if (v != G.field_order())
    err << "note: SRA_CYCLOTOMIC_ORDER=" << v << " is a hint only; the field order of " << G.name() << " is "
        << G.field_order() << "\n";
}

std::string parenthesize(const std::string& s) {
  return s.find_first_of(" ") == std::string::npos ? s : "(" + s + ")";
}

std::string value_text(const TraceValue& v, int m) {
  std::string out;
  for (int i = 0; i < v.params(); ++i) {
    if (v.coeff(i).is_zero()) continue;
    std::string c = print(v.coeff(i), m);
    std::string term = c == "1" ? "P" + std::to_string(i) : parenthesize(c) + "*P" + std::to_string(i);
    out += (out.empty() ? "" : " + ") + term;
  }
  return out.empty() ? "0" : out;
}

std::string monomial_text(const Monomial& e) {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += "a" + std::to_string(i + 1);
    if (e[i] > 1) out += "^" + std::to_string(e[i]);
  }
  return out.empty() ? "1" : out;
}

Json check_json(const CheckReport& r) {
  Json j;
  j["name"] = r.name;
  j["samples"] = r.samples;
  j["failures"] = r.failures;
  j["first_failure"] = r.first_failure;
  return j;
}

std::string check_line(const CheckReport& r) {
  std::ostringstream os;
  os << (r.ok() ? "ok    " : "FAIL  ") << r.name << " (" << r.samples << " samples";
  if (!r.ok()) os << ", " << r.failures << " failures; first: " << r.first_failure;
  os << ")";
  return os.str();
}

// ---------------------------------------------------------------------------
// Subcommands

int cmd_group(const GroupFile& gf, const Config&, std::ostream& out, bool json) {
  const Group& G = *gf.group;
  std::vector<int> eta_of(G.classes().size(), -1);
  for (int k = 0; k < G.eta_count(); ++k) eta_of[G.reflection_classes()[k]] = k;
  if (json) {
    Json j;
    j["provenance"] = provenance(G);
    j["N"] = G.half_dim();
    j["size"] = G.size();
    j["exponent"] = G.exponent();
    j["reflections"] = G.reflections().size();
    j["eta_count"] = G.eta_count();
    Json classes = Json::array();
    for (std::size_t c = 0; c < G.classes().size(); ++c) {
      const auto& cls = G.classes()[c];
      Json x;
      x["id"] = c;
      x["representative"] = print_word(G, cls.representative);
      x["size"] = cls.members.size();
      x["order"] = G.element_order(cls.representative);
      x["E_plus"] = G.e_grading(cls.representative, 1).E;
      x["E_minus"] = G.e_grading(cls.representative, -1).E;
      x["eta"] = eta_of[c] < 0 ? Json(nullptr) : Json("eta" + std::to_string(eta_of[c]));
      classes.push_back(std::move(x));
    }
    j["classes"] = std::move(classes);
    out << j.dump(2) << "\n";
    return 0;
  }
  out << "group " << G.name() << ": N = " << G.half_dim() << ", |G| = " << G.size() << ", m = " << G.field_order()
      << ", exponent " << G.exponent() << "\n";
  out << G.reflections().size() << " reflections in " << G.eta_count() << " classes\n";
  out << "class  representative  size  order  E(+1)  E(-1)  eta\n";
  for (std::size_t c = 0; c < G.classes().size(); ++c) {
    const auto& cls = G.classes()[c];
    std::ostringstream row;
    row << c << "  " << print_word(G, cls.representative) << "  " << cls.members.size() << "  "
        << G.element_order(cls.representative) << "  " << G.e_grading(cls.representative, 1).E << "  "
        << G.e_grading(cls.representative, -1).E << "  "
        << (eta_of[c] < 0 ? std::string("-") : "eta" + std::to_string(eta_of[c]));
    out << row.str() << "\n";
  }
  return 0;
}

int cmd_counts(const GroupFile& gf, const Config&, std::ostream& out, bool json) {
  const Group& G = *gf.group;
  Group::Counts c = G.kappa_counts();
  if (json) {
    Json j;
    j["provenance"] = provenance(G);
    j["traces"] = c.traces;
    j["supertraces"] = c.supertraces;
    out << j.dump(2) << "\n";
  } else {
    out << "group " << G.name() << ": T = " << c.traces << ", S = " << c.supertraces << "\n";
  }
  return 0;
}

int cmd_glc(const GroupFile& gf, const Config& cfg, std::ostream& out, bool json) {
  const Group& G = *gf.group;
  Algebra A(gf.group, gf.params());
  const int m = G.field_order();
  Json reports = Json::array();
  for (int k : kappas(cfg.kappa)) {
    TraceFunctional sp = solve_glc(A, k);
    if (json) {
      Json j;
      j["provenance"] = provenance(G, k);
      Json free = Json::array();
      for (int c : sp.free_classes) free.push_back(c);
      j["free_classes"] = std::move(free);
      Json table = Json::array();
      for (std::size_t c = 0; c < G.classes().size(); ++c) {
        Json row;
        row["class"] = c;
        row["representative"] = print_word(G, G.classes()[c].representative);
        row["value"] = trace_value_json(sp.table[c], m);
        table.push_back(std::move(row));
      }
      j["table"] = std::move(table);
      reports.push_back(std::move(j));
    } else {
      out << "group " << G.name() << ", kappa = " << kappa_text(k) << ": " << sp.params() << " free parameters\n";
      for (int i = 0; i < sp.params(); ++i)
        out << "  P" << i << " = value on class " << sp.free_classes[i] << " ("
            << print_word(G, G.classes()[sp.free_classes[i]].representative) << ")\n";
      for (std::size_t c = 0; c < G.classes().size(); ++c)
        out << "  sp(" << print_word(G, G.classes()[c].representative) << ") = " << value_text(sp.table[c], m)
            << "\n";
    }
  }
  if (json) out << reports.dump(2) << "\n";
  return 0;
}

int cmd_eval(const GroupFile& gf, const Config& cfg, std::ostream& out, bool json) {
  if (cfg.expr.empty()) throw UsageError("eval needs --expr");
  const Group& G = *gf.group;
  Algebra A(gf.group, gf.params());
  Element f = parse(cfg.expr, A);
  const int m = G.field_order();
  Json reports = Json::array();
  for (int k : kappas(cfg.kappa)) {
    TraceEvaluator sp(A, solve_glc(A, k));
    TraceValue v = sp.evaluate(f);
    if (json) {
      Json j;
      j["provenance"] = provenance(G, k);
      j["expr"] = cfg.expr;
      j["normal_form"] = print(f);
      j["value"] = trace_value_json(v, m);
      reports.push_back(std::move(j));
    } else {
      out << "kappa = " << kappa_text(k) << ": sp(" << print(f) << ") = " << value_text(v, m) << "\n";
    }
  }
  if (json) out << reports.dump(2) << "\n";
  return 0;
}

int cmd_oracle(const GroupFile& gf, const Config& cfg, std::ostream& out, bool json) {
  const Group& G = *gf.group;
  Algebra A(gf.group, symbolic_params(G));
  int degree = cfg.degree > 0 ? cfg.degree : 6;
  bool ok = true;
  Json reports = Json::array();
  for (int k : kappas(cfg.kappa)) {
    TraceEvaluator sp(A, solve_glc(A, k));
    CheckReport r = check_eta0_oracle(A, sp, degree);
    ok = ok && r.ok();
    if (json) {
      Json j = check_json(r);
      j["provenance"] = provenance(G, k);
      j["max_degree"] = degree;
      reports.push_back(std::move(j));
    } else {
      out << check_line(r) << "\n";
    }
  }
  if (json) out << reports.dump(2) << "\n";
  return ok ? 0 : 1;
}

std::vector<Cyclotomic> read_assignment(const std::string& text, int m) {
  std::vector<Cyclotomic> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(parse_cyclotomic(item, m));
    } catch (const std::invalid_argument& e) {
      throw UsageError(std::string("--assignment: ") + e.what());
    }
  }
  return out;
}

int cmd_gram(const GroupFile& gf, const Config& cfg, std::ostream& out, bool json) {
  if (cfg.cutoff < 0) throw UsageError("--cutoff must be nonnegative");
  const Group& G = *gf.group;
  Algebra A(gf.group, gf.params());
  const int m = G.field_order();
  Json reports = Json::array();
  for (int k : kappas(cfg.kappa)) {
    TraceEvaluator sp(A, solve_glc(A, k));
    std::vector<Cyclotomic> assignment = read_assignment(cfg.assignment, m);
    if (!assignment.empty() && static_cast<int>(assignment.size()) != sp.functional().params())
      throw UsageError("--assignment needs " + std::to_string(sp.functional().params()) + " values for kappa = " +
                       kappa_text(k));
    GramReport r = gram(sp, cfg.cutoff, assignment);
    if (json) {
      Json j;
      j["provenance"] = provenance(G, k);
      j["cutoff"] = r.cutoff;
      Json as = Json::array();
      for (const auto& c : r.assignment) as.push_back(cyclotomic_json(c, m));
      j["assignment"] = std::move(as);
      Json basis = Json::array();
      for (const auto& [e, g] : r.basis) {
        Json b;
        b["exponents"] = e;
        b["element"] = print_word(G, g);
        basis.push_back(std::move(b));
      }
      j["basis"] = std::move(basis);
      Json matrix = Json::array();
      for (const auto& row : r.matrix) {
        Json jr = Json::array();
        for (const auto& x : row) jr.push_back(eta_json(x, m));
        matrix.push_back(std::move(jr));
      }
      j["matrix"] = std::move(matrix);
      j["determinant"] = r.determinant ? eta_json(*r.determinant, m) : Json(nullptr);
      Json roots = Json::array();
      for (const auto& q : r.rational_roots) roots.push_back(q.get_str());
      j["rational_roots"] = std::move(roots);
      reports.push_back(std::move(j));
    } else {
      out << "group " << G.name() << ", kappa = " << kappa_text(k) << ", cutoff " << r.cutoff << ", assignment (";
      for (std::size_t i = 0; i < r.assignment.size(); ++i) out << (i ? ", " : "") << r.assignment[i].to_literal(m);
      out << "), basis size " << r.basis.size() << "\n";
      out << "  basis:";
      for (const auto& [e, g] : r.basis)
        out << " "
            << (g == G.identity() ? monomial_text(e)
                : degree(e) == 0  ? print_word(G, g)
                                  : monomial_text(e) + "*" + print_word(G, g));
      out << "\n";
      if (r.basis.size() <= 8)
        for (const auto& row : r.matrix) {
          out << "  [";
          for (std::size_t i = 0; i < row.size(); ++i) out << (i ? ", " : "") << print(row[i], m);
          out << "]\n";
        }
      if (r.determinant) {
        out << "  det = " << print(*r.determinant, m) << "\n  rational roots:";
        for (const auto& q : r.rational_roots) out << " " << q.get_str();
        out << (r.rational_roots.empty() ? " none\n" : "\n");
      } else {
        out << "  determinant not computed (more than one eta variable)\n";
      }
    }
  }
  if (json) out << reports.dump(2) << "\n";
  return 0;
}

int cmd_selftest(const GroupFile& gf, const Config& cfg, std::ostream& out, bool json) {
  const Group& G = *gf.group;
  Algebra A(gf.group, symbolic_params(G));
  const int degree = cfg.degree > 0 ? cfg.degree : 3;
  Rng rng(cfg.seed);
  std::vector<CheckReport> reports;
  reports.push_back(check_group_invariants(G));
  {
    CheckReport counts{"counts against eigenvalue enumeration " + G.name(), 1};
    Group::Counts a = G.kappa_counts(), b = brute_force_counts(G);
    if (a.traces != b.traces || a.supertraces != b.supertraces) counts.fail("T, S disagree");
    reports.push_back(counts);
  }
  for (int k : kappas(cfg.kappa)) {
    reports.push_back(check_glc_dimension(A, k));
    TraceFunctional f = solve_glc(A, k);
    TraceEvaluator sp(A, f);
    reports.push_back(check_glc_consistency(sp));
    reports.push_back(check_cyclicity(sp, rng, cfg.samples, degree));
    reports.push_back(check_g_invariance(sp, rng, cfg.samples, degree));
    reports.push_back(check_linearity(sp, rng, cfg.samples, degree));
    reports.push_back(check_confluence(A, f, rng, cfg.samples, 2 * degree));
    reports.push_back(check_eta0_oracle(A, sp, std::min(degree + 1, 4)));
    if (k == -1 && G.klein()) reports.push_back(check_klein(sp, rng, cfg.samples, degree));
  }
  bool ok = true;
  for (const auto& r : reports) ok = ok && r.ok();
  if (json) {
    Json j;
    j["provenance"] = provenance(G);
    j["seed"] = cfg.seed;
    j["samples"] = cfg.samples;
    j["max_degree"] = degree;
    Json checks = Json::array();
    for (const auto& r : reports) checks.push_back(check_json(r));
    j["checks"] = std::move(checks);
    j["ok"] = ok;
    out << j.dump(2) << "\n";
  } else {
    for (const auto& r : reports) out << check_line(r) << "\n";
    out << (ok ? "all checks passed" : "some checks FAILED") << "\n";
  }
  return ok ? 0 : 1;
}

void add_source(CLI::App* sub, Config& cfg) {
  sub->add_option("--builtin", cfg.source.builtin,
                  "cyclic, doubled-A, doubled-B, dihedral, product, or a compact spec such as cyclic:4");
  sub->add_option("--n", cfg.source.n, "order parameter for cyclic and dihedral");
  sub->add_option("--rank", cfg.source.rank, "rank for doubled-A and doubled-B");
  sub->add_option("--factors", cfg.source.factors, "comma-separated builtin specs for product");
  sub->add_option("--group", cfg.source.file, "group definition file (JSON)");
  sub->add_flag("--json", cfg.json, "machine-readable output");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact traces and supertraces on symplectic reflection algebras", "sra"};
  app.require_subcommand(1);
  Config cfg;
  using Handler = int (*)(const GroupFile&, const Config&, std::ostream&, bool);
  std::vector<std::pair<CLI::App*, Handler>> commands;

  auto* group = app.add_subcommand("group", "group order, classes, reflections and E-grading");
  add_source(group, cfg);
  commands.emplace_back(group, cmd_group);

  auto* counts = app.add_subcommand("counts", "numbers T and S of independent traces and supertraces");
  add_source(counts, cfg);
  commands.emplace_back(counts, cmd_counts);

  auto* glc = app.add_subcommand("glc", "solve the ground level conditions on C[G]");
  add_source(glc, cfg);
  glc->add_option("--kappa", cfg.kappa, "+1, -1 or both");
  commands.emplace_back(glc, cmd_glc);

  auto* eval = app.add_subcommand("eval", "evaluate the general kappa-trace on an expression");
  add_source(eval, cfg);
  eval->add_option("--kappa", cfg.kappa, "+1, -1 or both");
  eval->add_option("--expr", cfg.expr, "expression in a1..a2N, g0.., e, eta0.., z")->required();
  commands.emplace_back(eval, cmd_eval);

  auto* oracle = app.add_subcommand("oracle-check", "compare the reduction at eta = 0 with the closed form");
  add_source(oracle, cfg);
  oracle->add_option("--kappa", cfg.kappa, "+1, -1 or both");
  oracle->add_option("--degree", cfg.degree, "maximal monomial degree (default 6)");
  commands.emplace_back(oracle, cmd_oracle);

  auto* gram_cmd = app.add_subcommand("gram", "Gram matrix of the bilinear form sp(f h) up to a degree cutoff");
  add_source(gram_cmd, cfg);
  gram_cmd->add_option("--kappa", cfg.kappa, "+1, -1 or both");
  gram_cmd->add_option("--cutoff", cfg.cutoff, "degree cutoff (default 2)");
  gram_cmd->add_option("--assignment", cfg.assignment,
                       "comma-separated free parameter values (default: first 1, rest 0)");
  commands.emplace_back(gram_cmd, cmd_gram);

  auto* self = app.add_subcommand("selftest", "run the property checks on one group");
  add_source(self, cfg);
  self->add_option("--kappa", cfg.kappa, "+1, -1 or both");
  self->add_option("--samples", cfg.samples, "random samples per check (default 20)")->check(CLI::PositiveNumber);
  self->add_option("--seed", cfg.seed, "random seed (default 1)");
  self->add_option("--degree", cfg.degree, "maximal degree of random elements (default 3)");
  commands.emplace_back(self, cmd_selftest);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << "run 'sra --help' for the flag list\n";
    return 2;
  }

  try {
    for (const auto& [sub, handler] : commands) {
      if (!sub->parsed()) continue;
      kappas(cfg.kappa);  // validate before any work
      GroupFile gf = resolve(cfg.source);
      hint_check(*gf.group, err);
      return handler(gf, cfg, out, cfg.json);
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return 1;
  } catch (const GroupError& e) {
    err << "group error: " << e.what() << "\n";
    return 1;
  } catch (const GlcInconsistent& e) {
    err << "inconsistent ground level conditions: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace sra
