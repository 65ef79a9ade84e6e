#include "sra/io.hpp"

#include <fstream>

#include "sra/expr.hpp"

namespace sra {

namespace {

[[noreturn]] void bad(const std::string& what) { throw GroupError(GroupError::Kind::BadInput, what); }

Cyclotomic read_entry(const Json& e, int m, const std::string& where) {
  try {
    if (e.is_number_integer()) return Cyclotomic(Rational(e.get<long>()));
    if (e.is_string()) {
      const std::string& s = e.get_ref<const std::string&>();
      if (m == 0 && s.find('z') != std::string::npos)
        bad(where + ": literal '" + s + "' mentions z but the file declares no cyclotomic_order");
      return parse_cyclotomic(s, m == 0 ? 1 : m);
    }
  } catch (const std::invalid_argument& ex) {
    bad(where + ": " + ex.what());
  }
  bad(where + ": entries must be integers or literal strings");
}

Matrix read_matrix(const Json& j, int dim, int m, const std::string& where) {
  if (!j.is_array() || static_cast<int>(j.size()) != dim) bad(where + ": expected " + std::to_string(dim) + " rows");
  Matrix out(dim, dim);
  for (int i = 0; i < dim; ++i) {
    const Json& row = j[i];
    if (!row.is_array() || static_cast<int>(row.size()) != dim)
      bad(where + ": row " + std::to_string(i) + " needs " + std::to_string(dim) + " entries");
    for (int k = 0; k < dim; ++k)
      out(i, k) = read_entry(row[k], m, where + "[" + std::to_string(i) + "][" + std::to_string(k) + "]");
  }
  return out;
}

Json write_matrix(const Matrix& a, int m) {
  Json out = Json::array();
  for (Index i = 0; i < a.rows(); ++i) {
    Json row = Json::array();
    for (Index k = 0; k < a.cols(); ++k) row.push_back(a(i, k).to_literal(m));
    out.push_back(std::move(row));
  }
  return out;
}

std::string rational_text(const Rational& r) { return r.get_str(); }

}  // namespace

AlgebraParams GroupFile::params() const {
  AlgebraParams p = symbolic_params(*group);
  const int n = group->eta_count();
  for (int k = 0; k < n; ++k)
    if (eta.at(k)) p.eta[k] = EtaPolynomial(n, Cyclotomic(*eta[k]));
  return p;
}

GroupFile read_group(const Json& j, const GroupOptions& base) {
  if (!j.is_object()) bad("group file must be a JSON object");
  GroupOptions opt = base;
  if (j.contains("name")) {
    if (!j["name"].is_string()) bad("name must be a string");
    opt.name = j["name"].get<std::string>();
  }
  if (!j.contains("N") || !j["N"].is_number_integer() || j["N"].get<int>() < 1) bad("N must be a positive integer");
  const int dim = 2 * j["N"].get<int>();
  int m = 0;
  if (j.contains("cyclotomic_order")) {
    if (!j["cyclotomic_order"].is_number_integer() || j["cyclotomic_order"].get<int>() < 1)
      bad("cyclotomic_order must be a positive integer");
    m = j["cyclotomic_order"].get<int>();
    opt.cyclotomic_order = m;
  }
  Matrix omega = j.contains("omega") ? read_matrix(j["omega"], dim, m, "omega") : standard_omega(dim / 2);
  if (!j.contains("generators") || !j["generators"].is_array() || j["generators"].empty())
    bad("generators must be a nonempty list of matrices");
  std::vector<Matrix> gens;
  for (std::size_t i = 0; i < j["generators"].size(); ++i)
    gens.push_back(read_matrix(j["generators"][i], dim, m, "generators[" + std::to_string(i) + "]"));

  GroupFile out;
  out.group = std::make_shared<const Group>(Group::close(gens, omega, opt));
  out.eta.assign(out.group->eta_count(), std::nullopt);
  if (j.contains("eta")) {
    if (!j["eta"].is_object()) bad("eta must be an object");
    for (const auto& [label, value] : j["eta"].items()) {
      int k = -1;
      if (label.rfind("eta", 0) == 0 && label.size() > 3 &&
          label.find_first_not_of("0123456789", 3) == std::string::npos)
        k = std::stoi(label.substr(3));
      if (k < 0 || k >= out.group->eta_count())
        bad("eta label '" + label + "' does not name a reflection class (eta0.." +
            "eta" + std::to_string(out.group->eta_count() - 1) + ")");
      if (value.is_string() && value.get<std::string>() == "symbolic") continue;
      try {
        if (value.is_number_integer())
          out.eta[k] = Rational(value.get<long>());
        else if (value.is_string())
          out.eta[k] = parse_rational(value.get<std::string>());
        else
          bad("eta value for '" + label + "' must be a rational literal or \"symbolic\"");
      } catch (const std::invalid_argument& ex) {
        bad("eta value for '" + label + "': " + ex.what());
      }
    }
  }
  return out;
}

GroupFile load_group_file(const std::string& path, const GroupOptions& base) {
  std::ifstream in(path);
  if (!in) bad("cannot open group file '" + path + "'");
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::parse_error& ex) {
    bad("group file '" + path + "' is not valid JSON: " + ex.what());
  }
  return read_group(j, base);
}

Json write_group(const Group& G, const std::vector<std::optional<Rational>>& eta) {
  const int m = G.field_order();
  Json out;
  out["name"] = G.name();
  out["N"] = G.half_dim();
  out["cyclotomic_order"] = m;
  out["omega"] = write_matrix(G.omega(), m);
  Json gens = Json::array();
  for (int g : G.generators()) gens.push_back(write_matrix(G.matrix(g), m));
  out["generators"] = std::move(gens);
  Json e = Json::object();
  for (int k = 0; k < G.eta_count(); ++k) {
    bool fixed = k < static_cast<int>(eta.size()) && eta[k];
    e["eta" + std::to_string(k)] = fixed ? rational_text(*eta[k]) : "symbolic";
  }
  out["eta"] = std::move(e);
  return out;
}

Json cyclotomic_json(const Cyclotomic& c, int m) {
  Json out = Json::array();
  for (const Rational& r : c.coefficients(m)) out.push_back(rational_text(r));
  return out;
}

Json eta_json(const EtaPolynomial& p, int m) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms()) {
    Json t;
    t["exponents"] = e;
    t["coefficient"] = cyclotomic_json(c, m);
    terms.push_back(std::move(t));
  }
  Json out;
  out["text"] = print(p, m);
  out["terms"] = std::move(terms);
  return out;
}

Json trace_value_json(const TraceValue& v, int m) {
  Json out = Json::array();
  for (const auto& c : v.coeffs()) out.push_back(eta_json(c, m));
  return out;
}

Json provenance(const Group& G, std::optional<int> kappa) {
  Json out;
  out["group"] = G.name();
  out["kappa"] = kappa ? Json(*kappa) : Json(nullptr);
  out["m"] = G.field_order();
  return out;
}

}  // namespace sra
