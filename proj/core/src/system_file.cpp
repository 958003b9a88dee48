#include "einstrength/system_file.hpp"

#include "einstrength/errors.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace einstrength {

using nlohmann::json;

namespace {

std::pair<int, int> line_column(const std::string& text, std::size_t byte) {
  int line = 1, col = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

const json& field(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object() || !obj.contains(key)) throw ParseError(where + ": missing key '" + key + "'");
  return obj.at(key);
}

std::vector<std::string> names(const json& j, const std::string& where) {
  if (!j.is_array()) throw ParseError(where + " must be a list of names");
  std::vector<std::string> out;
  for (const auto& e : j) {
    if (!e.is_string()) throw ParseError(where + " must contain strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

std::vector<std::size_t> permutation(const json& j, const std::string& where) {
  if (!j.is_array()) throw ParseError(where + " must be a list of indices");
  std::vector<std::size_t> out;
  for (const auto& e : j) {
    if (!e.is_number_unsigned() && !(e.is_number_integer() && e.get<long>() >= 0))
      throw ParseError(where + " must contain nonnegative integers");
    out.push_back(e.get<std::size_t>());
  }
  return out;
}

std::size_t index_of(const std::vector<std::string>& v, const std::string& name, const std::string& what) {
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] == name) return i;
  throw ParseError("undeclared " + what + " '" + name + "'");
}

DifferenceSystem from_json(const json& doc) {
  if (!doc.is_object()) throw ParseError("system file must be an object");
  DifferenceSystem sys;
  sys.translations = names(field(doc, "translations", "system"), "translations");
  sys.indeterminates = names(field(doc, "indeterminates", "system"), "indeterminates");
  if (doc.contains("m")) {
    const auto& m = doc.at("m");
    if (!m.is_number_integer() || m.get<long>() != static_cast<long>(sys.translations.size()))
      throw ParseError("m does not match the number of translations");
  }
  if (sys.indeterminates.empty()) throw ParseError("at least one indeterminate is required");
  if (doc.contains("constants")) {
    for (const auto& c : doc.at("constants")) {
      if (c.is_string()) {
        sys.constants.push_back({c.get<std::string>(), true});
        continue;
      }
      const auto& nm = field(c, "name", "constant");
      if (!nm.is_string()) throw ParseError("constant name must be a string");
      bool nonzero = c.value("nonzero", true);
      sys.constants.push_back({nm.get<std::string>(), nonzero});
    }
  }
  const std::size_t m = sys.m(), n = sys.n();
  const auto& polys = field(doc, "polynomials", "system");
  if (!polys.is_array()) throw ParseError("polynomials must be a list");
  for (std::size_t pi = 0; pi < polys.size(); ++pi) {
    const std::string where = "polynomial " + std::to_string(pi + 1);
    if (!polys[pi].is_array()) throw ParseError(where + " must be a list of monomials");
    SigmaPolynomial p(m, n);
    for (const auto& mono : polys[pi]) {
      const auto& coeff = field(mono, "coefficient", where);
      ConstantExpr c = coeff.is_string()   ? parse_constant(coeff.get<std::string>())
                       : coeff.is_number_integer() ? ConstantExpr(coeff.get<long>())
                                            : throw ParseError(where + ": coefficient must be a string");
      SigmaPolynomial term = SigmaPolynomial::constant(m, n, c);
      const json empty = json::array();
      const json& factors = mono.contains("terms") ? mono.at("terms") : empty;
      if (!factors.is_array()) throw ParseError(where + ": terms must be a list");
      for (const auto& f : factors) {
        const auto& shift = field(f, "shift", where);
        if (!shift.is_array() || shift.size() != m)
          throw ParseError(where + ": shift must be an integer vector of length " + std::to_string(m));
        Coords k;
        for (const auto& x : shift) {
          if (!x.is_number_integer()) throw ParseError(where + ": shift entries must be integers");
          k.push_back(x.get<long>());
        }
        const auto& ind = field(f, "ind", where);
        if (!ind.is_string()) throw ParseError(where + ": ind must be a name");
        long pow = f.value("pow", 1L);
        if (pow < 1) throw ParseError(where + ": pow must be positive");
        term = term * SigmaPolynomial::term(m, n, Term{Shift(k), index_of(sys.indeterminates, ind, "indeterminate")},
                                            1, static_cast<unsigned>(pow));
      }
      p += term;
    }
    sys.polynomials.push_back(std::move(p));
  }
  if (doc.contains("ranking") && !doc.at("ranking").is_null()) {
    const auto& r = doc.at("ranking");
    std::vector<std::size_t> tp, ip;
    if (r.contains("translation_priority")) tp = permutation(r.at("translation_priority"), "translation_priority");
    if (r.contains("indeterminate_priority"))
      ip = permutation(r.at("indeterminate_priority"), "indeterminate_priority");
    try {
      Ranking rk(tp, ip);
      rk.validate(m, n);
      sys.ranking = rk;
    } catch (const ParseError&) {
      throw;
    } catch (const std::exception& e) {
      throw ParseError(std::string("invalid ranking: ") + e.what());
    }
  }
  sys.validate();
  return sys;
}

}  // namespace

DifferenceSystem parse_system(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    auto [line, col] = line_column(text, e.byte);
    std::string msg = e.what();
    auto pos = msg.find("parse error");
    throw ParseError(pos == std::string::npos ? msg : msg.substr(pos), line, col);
  }
  try {
    return from_json(doc);
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed system file: ") + e.what());
  }
}

DifferenceSystem read_system_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_system(ss.str());
}

std::string write_system(const DifferenceSystem& sys) {
  json doc = json::object();
  doc["m"] = sys.m();
  doc["translations"] = sys.translations;
  doc["indeterminates"] = sys.indeterminates;
  json consts = json::array();
  for (const auto& c : sys.constants) consts.push_back({{"name", c.name}, {"nonzero", c.nonzero}});
  doc["constants"] = consts;
  json polys = json::array();
  for (const auto& p : sys.polynomials) {
    json monos = json::array();
    for (const auto& [pp, c] : p.monomials()) {
      json terms = json::array();
      for (const auto& [t, e] : pp)
        terms.push_back({{"shift", t.shift.exponents()}, {"ind", sys.indeterminates.at(t.ind)}, {"pow", e}});
      monos.push_back({{"coefficient", c.to_string()}, {"terms", terms}});
    }
    polys.push_back(monos);
  }
  doc["polynomials"] = polys;
  if (sys.ranking) {
    std::vector<std::size_t> tp = sys.ranking->translation_priority(), ip = sys.ranking->indeterminate_priority();
    if (tp.empty())
      for (std::size_t i = 0; i < sys.m(); ++i) tp.push_back(i);
    if (ip.empty())
      for (std::size_t i = 0; i < sys.n(); ++i) ip.push_back(i);
    doc["ranking"] = {{"translation_priority", tp}, {"indeterminate_priority", ip}};
  }
  return doc.dump(2) + "\n";
}

void write_system_file(const DifferenceSystem& sys, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write '" + path + "'");
  out << write_system(sys);
}

}  // namespace einstrength
