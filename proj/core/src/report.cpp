#include "einstrength/report.hpp"

#include "einstrength/errors.hpp"
#include "einstrength/system_file.hpp"

#include <json.hpp>

#include <sstream>

namespace einstrength {

using nlohmann::json;
using ordered = nlohmann::ordered_json;

Format parse_format(const std::string& s) {
  if (s == "text") return Format::Text;
  if (s == "json") return Format::Json;
  throw ParseError("unknown format '" + s + "' (expected text or json)");
}

namespace {

std::string dump(const ordered& j) { return j.dump(2) + "\n"; }

ordered points_json(const LatticeSet& s) {
  ordered a = ordered::array();
  for (const auto& p : s.points()) a.push_back(p);
  return a;
}

ordered poly_json(const NumericalPolynomial& p) {
  ordered coeffs = ordered::array();
  for (const auto& c : p.coefficients()) coeffs.push_back(c.get_str());
  return ordered{{"expanded", p.to_string()}, {"binomial", p.to_binomial_string()}, {"coefficients", coeffs}};
}

std::string route_name(BlockRoute r) { return r == BlockRoute::Linear ? "linear" : "quasi-linear"; }

std::string name_list(const std::vector<std::size_t>& idx, const Naming& names) {
  std::string s;
  for (std::size_t i = 0; i < idx.size(); ++i) s += (i ? ", " : "") + names.indeterminates.at(idx[i]);
  return s;
}

std::string index_list(const std::vector<std::size_t>& idx) {
  std::string s;
  for (std::size_t i = 0; i < idx.size(); ++i) s += (i ? ", " : "") + std::to_string(idx[i] + 1);
  return s;
}

ordered charset_json(const AutoreducedSet& cs, const Naming& names) {
  ordered a = ordered::array();
  const auto leaders = cs.leaders();
  for (std::size_t i = 0; i < cs.size(); ++i)
    a.push_back({{"leader", names.term(leaders[i])}, {"polynomial", cs[i].to_string(names)}});
  return a;
}

void charset_text(std::ostream& os, const AutoreducedSet& cs, const Naming& names) {
  const auto leaders = cs.leaders();
  for (std::size_t i = 0; i < cs.size(); ++i)
    os << "  " << (i + 1) << ". leader " << names.term(leaders[i]) << ": " << cs[i].to_string(names) << "\n";
}

}  // namespace

std::string render_lattice(const std::string& function, const LatticeSet& input, Format f) {
  const LatticeSet mn = minimal_elements(input);
  NumericalPolynomial p = function == "omega" ? omega(input) : phi(input);
  if (f == Format::Json) {
    ordered j{{"function", function},
              {"m", input.dim()},
              {"points", points_json(input)},
              {"minimal", points_json(mn)},
              {"polynomial", poly_json(p)}};
    return dump(j);
  }
  std::ostringstream os;
  os << function << " = " << p.to_string() << "\n";
  os << "binomial form: " << p.to_binomial_string() << "\n";
  os << "points: " << input.to_string() << "\n";
  os << "minimal: " << mn.to_string() << "\n";
  return os.str();
}

std::string render_charset(const StrengthReport& rep, const Naming& names, Format f) {
  if (f == Format::Json)
    return dump(ordered{{"ranking", rep.ranking.to_string()}, {"charset", charset_json(rep.charset, names)}});
  std::ostringstream os;
  os << "ranking: " << rep.ranking.to_string() << "\n";
  os << "characteristic set (" << rep.charset.size() << " elements, increasing rank):\n";
  charset_text(os, rep.charset, names);
  return os.str();
}

std::string render_strength(const StrengthReport& rep, const Naming& names, Format f) {
  if (f == Format::Json) {
    ordered blocks = ordered::array();
    for (const auto& b : rep.blocks) {
      std::vector<std::size_t> gens;
      for (auto g : b.generators) gens.push_back(g + 1);
      ordered leaders = ordered::array(), inds = ordered::array();
      for (auto i : b.leader_indeterminates) leaders.push_back(names.indeterminates.at(i));
      for (auto i : b.indeterminates) inds.push_back(names.indeterminates.at(i));
      ordered shifts = ordered::array();
      for (const auto& s : b.shifts) shifts.push_back(s.exponents());
      blocks.push_back({{"route", route_name(b.route)},
                        {"generators", gens},
                        {"leader_indeterminates", leaders},
                        {"indeterminates", inds},
                        {"charset", charset_json(b.charset, names)},
                        {"shifts", shifts}});
    }
    ordered per = ordered::object();
    for (const auto& [i, s] : rep.leader_sets)
      per[names.indeterminates.at(i)] = {{"leader_exponents", points_json(s)},
                                         {"phi", poly_json(rep.per_indeterminate.at(i))}};
    return dump(ordered{{"ranking", rep.ranking.to_string()},
                        {"charset", charset_json(rep.charset, names)},
                        {"blocks", blocks},
                        {"indeterminates", per},
                        {"psi", poly_json(rep.psi)},
                        {"sigma_tr_deg", rep.sigma_tr_deg}});
  }
  std::ostringstream os;
  os << "ranking: " << rep.ranking.to_string() << "\n";
  for (std::size_t k = 0; k < rep.blocks.size(); ++k) {
    const auto& b = rep.blocks[k];
    os << "block " << (k + 1) << " (" << route_name(b.route) << "): generators " << index_list(b.generators)
       << "; leaders in " << name_list(b.leader_indeterminates, names) << "\n";
  }
  os << "characteristic set (" << rep.charset.size() << " elements, increasing rank):\n";
  charset_text(os, rep.charset, names);
  for (const auto& [i, s] : rep.leader_sets)
    os << "leader exponents of " << names.indeterminates.at(i) << ": " << s.to_string()
       << "  phi = " << rep.per_indeterminate.at(i).to_string() << "\n";
  os << "psi = " << rep.psi.to_string() << "\n";
  os << "psi (binomial) = " << rep.psi.to_binomial_string() << "\n";
  os << "sigma-transcendence degree = " << rep.sigma_tr_deg << "\n";
  return os.str();
}

std::string render_system(const DifferenceSystem& sys, Format f) {
  if (f == Format::Json) return write_system(sys);
  std::ostringstream os;
  const Naming names = sys.naming();
  os << "translations: ";
  for (std::size_t i = 0; i < sys.m(); ++i) os << (i ? ", " : "") << sys.translations[i];
  os << "\nindeterminates: ";
  for (std::size_t i = 0; i < sys.n(); ++i) os << (i ? ", " : "") << sys.indeterminates[i];
  os << "\nconstants:";
  for (const auto& c : sys.constants) os << " " << c.name << (c.nonzero ? "" : "?");
  os << "\n";
  if (sys.ranking) os << "ranking: " << sys.ranking->to_string() << "\n";
  for (std::size_t i = 0; i < sys.polynomials.size(); ++i)
    os << "  " << (i + 1) << ". " << sys.polynomials[i].to_string(names) << "\n";
  return os.str();
}

std::string render_verification(const VerificationReport& rep, Format f) {
  if (f == Format::Json) {
    ordered checks = ordered::array();
    for (const auto& c : rep.checks) {
      ordered b = ordered::object();
      for (const auto& [k, v] : c.bindings) b[k] = v.get_str();
      checks.push_back({{"trial", c.trial},
                        {"r", c.r},
                        {"expected", c.expected.get_str()},
                        {"observed", c.observed},
                        {"radius", c.radius},
                        {"ok", c.ok()},
                        {"bindings", b}});
    }
    return dump(ordered{{"label", rep.label},
                        {"scheme", to_string(rep.scheme)},
                        {"seed", rep.seed},
                        {"psi", rep.expected_psi.to_string()},
                        {"passed", rep.passed()},
                        {"total", rep.checks.size()},
                        {"summary", rep.summary()},
                        {"checks", checks}});
  }
  std::ostringstream os;
  os << "psi = " << rep.expected_psi.to_string() << ", seed " << rep.seed << "\n";
  std::size_t trial = 0;
  for (const auto& c : rep.checks) {
    if (c.trial != trial) {
      trial = c.trial;
      os << "trial " << trial << ":";
      for (const auto& [k, v] : c.bindings) os << " " << k << "=" << v.get_str();
      os << "\n";
    }
    os << "  r = " << c.r << ": grid " << c.observed << ", psi " << c.expected.get_str() << " (R = " << c.radius
       << ") " << (c.ok() ? "ok" : "MISMATCH") << "\n";
  }
  os << rep.summary() << "\n";
  return os.str();
}

std::string render_catalog(Format f) {
  ordered arr = ordered::array();
  std::ostringstream os;
  for (const auto& name : catalog_names()) {
    CatalogEntry e = catalog_lookup(name);
    ordered schemes = ordered::object();
    os << name << ": " << e.title << "\n";
    for (auto s : e.schemes()) {
      std::string per = e.expected_psi.at(s).to_string();
      schemes[to_string(s)] = {{"expected_psi", per},
                               {"ranking", e.ranking.at(s).to_string()},
                               {"linear", e.is_linear(s)}};
      os << "  " << to_string(s) << ": psi = " << per << (name == "chromatography" ? " per component" : "")
         << ", ranking " << e.ranking.at(s).to_string() << (e.is_linear(s) ? ", linear" : "") << "\n";
    }
    for (const auto& n : e.notes) os << "  note: " << n << "\n";
    arr.push_back({{"name", name}, {"title", e.title}, {"schemes", schemes}, {"notes", e.notes}});
  }
  if (f == Format::Json) return dump(arr);
  return os.str();
}

}  // namespace einstrength
