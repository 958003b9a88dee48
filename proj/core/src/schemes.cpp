#include "einstrength/schemes.hpp"

#include "einstrength/errors.hpp"

#include <algorithm>

namespace einstrength {

std::string to_string(SchemeKind s) {
  switch (s) {
    case SchemeKind::Forward: return "forward";
    case SchemeKind::Symmetric: return "symmetric";
    case SchemeKind::CrankNicholson: return "crank-nicholson";
  }
  return "?";
}

SchemeKind parse_scheme(const std::string& s) {
  std::string t = s;
  std::transform(t.begin(), t.end(), t.begin(), [](unsigned char c) { return std::tolower(c); });
  if (t == "forward" || t == "forw") return SchemeKind::Forward;
  if (t == "symmetric" || t == "symm") return SchemeKind::Symmetric;
  if (t == "crank-nicholson" || t == "crank-nicolson" || t == "cn") return SchemeKind::CrankNicholson;
  throw ParseError("unknown scheme '" + s + "' (expected forward, symmetric or crank-nicholson)");
}

PDEPolynomial::PDEPolynomial(const ConstantExpr& c) { add({}, c); }

PDEPolynomial PDEPolynomial::var(std::size_t unknown, Derivative d) {
  PDEPolynomial p;
  p.add({{JetVar{unknown, d}, 1}}, 1);
  return p;
}

void PDEPolynomial::add(Key k, const ConstantExpr& c) {
  if (c.is_zero()) return;
  std::sort(k.begin(), k.end());
  auto it = terms_.find(k);
  if (it == terms_.end()) {
    terms_.emplace(std::move(k), c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

PDEPolynomial operator+(const PDEPolynomial& a, const PDEPolynomial& b) {
  PDEPolynomial r = a;
  for (const auto& [k, c] : b.terms_) r.add(k, c);
  return r;
}

PDEPolynomial PDEPolynomial::operator-() const {
  PDEPolynomial r;
  for (const auto& [k, c] : terms_) r.add(k, -c);
  return r;
}

PDEPolynomial operator-(const PDEPolynomial& a, const PDEPolynomial& b) { return a + (-b); }

PDEPolynomial operator*(const PDEPolynomial& a, const PDEPolynomial& b) {
  PDEPolynomial r;
  for (const auto& [k1, c1] : a.terms_)
    for (const auto& [k2, c2] : b.terms_) {
      PDEPolynomial::Key k;
      for (const auto& f : k1) k.push_back(f);
      for (const auto& f : k2) {
        auto it = std::find_if(k.begin(), k.end(), [&](const auto& g) { return g.first == f.first; });
        if (it == k.end())
          k.push_back(f);
        else
          it->second += f.second;
      }
      r.add(std::move(k), c1 * c2);
    }
  return r;
}

namespace {

constexpr std::size_t kM = 2;

SigmaPolynomial shifted_y(std::size_t n, std::size_t j, long kx, long kt, const ConstantExpr& c) {
  return SigmaPolynomial::term(kM, n, Term{Shift(Coords{kx, kt}), j}, c);
}

SigmaPolynomial substitute(const JetVar& v, std::size_t n, SchemeKind s) {
  const std::size_t j = v.unknown;
  if (s == SchemeKind::Forward) {
    switch (v.d) {
      case Derivative::None: return shifted_y(n, j, 0, 0, 1);
      case Derivative::X: return shifted_y(n, j, 1, 0, 1) - shifted_y(n, j, 0, 0, 1);
      case Derivative::XX:
        return shifted_y(n, j, 2, 0, 1) - shifted_y(n, j, 1, 0, 2) + shifted_y(n, j, 0, 0, 1);
      case Derivative::T: return shifted_y(n, j, 0, 1, 1) - shifted_y(n, j, 0, 0, 1);
    }
  }
  switch (v.d) {
    case Derivative::None: return shifted_y(n, j, 0, 0, 1);
    case Derivative::X: return shifted_y(n, j, 1, 0, 1) - shifted_y(n, j, -1, 0, 1);
    case Derivative::XX:
      return shifted_y(n, j, 1, 0, 1) + shifted_y(n, j, -1, 0, 1) - shifted_y(n, j, 0, 0, 2);
    case Derivative::T: return shifted_y(n, j, 0, 1, 1) - shifted_y(n, j, 0, -1, 1);
  }
  return {};
}

std::vector<std::string> indeterminate_names(std::size_t n) { return Naming::standard(kM, n).indeterminates; }

}  // namespace

DifferenceSystem discretize(const PDESpec& pde, SchemeKind scheme) {
  if (scheme == SchemeKind::CrankNicholson)
    throw UnsupportedSystem("the Crank-Nicholson form is not derived; only stored catalog forms exist");
  const std::size_t n = pde.unknowns.size();
  DifferenceSystem sys;
  sys.translations = {"a1", "a2"};
  sys.indeterminates = indeterminate_names(n);
  sys.constants = pde.constants;
  for (const auto& eq : pde.equations) {
    SigmaPolynomial out(kM, n);
    for (const auto& [key, c] : eq.terms()) {
      SigmaPolynomial mono = SigmaPolynomial::constant(kM, n, c);
      for (const auto& [v, e] : key) {
        if (v.unknown >= n) throw DimensionMismatch("equation refers to an undeclared unknown");
        mono = mono * substitute(v, n, scheme).pow(e);
      }
      out += mono;
    }
    sys.polynomials.push_back(std::move(out));
  }
  return sys;
}

PDESpec reaction_diffusion_family(const ConstantExpr& a, const ConstantExpr& b, const ConstantExpr& c,
                                  const PDEPolynomial& f, std::vector<ConstantDecl> constants) {
  PDEPolynomial u = PDEPolynomial::var(0), ux = PDEPolynomial::var(0, Derivative::X),
                uxx = PDEPolynomial::var(0, Derivative::XX), ut = PDEPolynomial::var(0, Derivative::T);
  PDESpec p;
  p.unknowns = {"u"};
  p.equations = {uxx + (PDEPolynomial(a) * u + PDEPolynomial(b)) * ux + PDEPolynomial(c) * ut + f};
  p.constants = std::move(constants);
  return p;
}

PDESpec fitzhugh_nagumo_literal() {
  PDEPolynomial u = PDEPolynomial::var(0);
  PDEPolynomial a = ConstantExpr::symbol("a");
  PDEPolynomial f = u * (PDEPolynomial(1) - u) * (a - u);
  return reaction_diffusion_family(1, 0, 0, f, {{"a", true}});
}

std::vector<SchemeKind> CatalogEntry::schemes() const {
  std::vector<SchemeKind> out;
  for (const auto& [s, f] : forms) out.push_back(s);
  return out;
}

const DifferenceSystem& CatalogEntry::form(SchemeKind s) const {
  auto it = forms.find(s);
  if (it == forms.end())
    throw UnsupportedSystem("catalog entry '" + name + "' has no " + to_string(s) + " form");
  return it->second;
}

NumericalPolynomial CatalogEntry::expected_total(SchemeKind s) const {
  return expected_psi.at(s).scaled(static_cast<long>(components));
}

bool CatalogEntry::is_linear(SchemeKind s) const {
  const auto& f = form(s);
  return std::all_of(f.polynomials.begin(), f.polynomials.end(), [](const auto& p) { return p.is_linear(); });
}

namespace {

ConstantExpr K(const std::string& s) { return ConstantExpr::symbol(s); }

NumericalPolynomial P(const std::string& s) { return parse_numpoly(s); }

// The stored Crank-Nicholson shape for one unknown with constants p_1..p_5.
SigmaPolynomial crank_nicholson_shape(std::size_t n, std::size_t j, const std::string& p) {
  return shifted_y(n, j, 1, 1, 1) + shifted_y(n, j, -1, 1, K(p + "_1")) + shifted_y(n, j, 1, 0, K(p + "_2")) +
         shifted_y(n, j, 0, 1, K(p + "_3")) + shifted_y(n, j, -1, 0, K(p + "_4")) +
         SigmaPolynomial::constant(kM, n, K(p + "_5"));
}

std::vector<ConstantDecl> decls(const std::vector<std::string>& names) {
  std::vector<ConstantDecl> d;
  for (const auto& s : names) d.push_back({s, true});
  return d;
}

std::vector<ConstantDecl> cn_decls(const std::vector<std::string>& prefixes) {
  std::vector<ConstantDecl> d;
  for (const auto& p : prefixes)
    for (int i = 1; i <= 5; ++i) d.push_back({p + "_" + std::to_string(i), true});
  return d;
}

void add_derived(CatalogEntry& e, SchemeKind s, const Ranking& rk, const std::string& psi) {
  DifferenceSystem sys = discretize(e.pde, s);
  if (!rk.is_standard()) sys.ranking = rk;
  e.forms[s] = std::move(sys);
  e.ranking[s] = rk;
  e.expected_psi[s] = P(psi);
}

CatalogEntry diffusion() {
  CatalogEntry e;
  e.name = "diffusion";
  e.title = "u_t = a u_xx";
  PDEPolynomial a = K("a");
  e.pde.unknowns = {"u"};
  e.pde.equations = {a * PDEPolynomial::var(0, Derivative::XX) - PDEPolynomial::var(0, Derivative::T)};
  e.pde.constants = decls({"a"});
  add_derived(e, SchemeKind::Forward, Ranking(), "5t");
  add_derived(e, SchemeKind::Symmetric, Ranking(), "4t");
  DifferenceSystem cn;
  cn.translations = {"a1", "a2"};
  cn.indeterminates = indeterminate_names(1);
  cn.constants = cn_decls({"a"});
  cn.polynomials = {crank_nicholson_shape(1, 0, "a")};
  e.forms[SchemeKind::CrankNicholson] = cn;
  e.ranking[SchemeKind::CrankNicholson] = Ranking();
  e.expected_psi[SchemeKind::CrankNicholson] = P("6t - 1");
  e.notes.push_back("Crank-Nicholson form is stored with generic constants a_1..a_5, not derived.");
  e.notes.push_back("Symmetric form comes from direct substitution, so the time difference enters as -[a2 y] + [a2^-1 y].");
  return e;
}

CatalogEntry family(const std::string& name, const std::string& title, const ConstantExpr& a, const ConstantExpr& b,
                    const ConstantExpr& c, const PDEPolynomial& f, const std::vector<std::string>& constants) {
  CatalogEntry e;
  e.name = name;
  e.title = title;
  e.pde = reaction_diffusion_family(a, b, c, f, decls(constants));
  add_derived(e, SchemeKind::Forward, Ranking(), "5t");
  add_derived(e, SchemeKind::Symmetric, Ranking({1, 0}, {}), "4t");
  e.notes.push_back("Realized through u_xx + (a u + b) u_x + c u_t + F(u) = 0.");
  e.notes.push_back("Symmetric form is analyzed with the time translation ranked above the space translation.");
  return e;
}

CatalogEntry reaction_kinetics() {
  CatalogEntry e;
  e.name = "reaction-kinetics";
  e.title = "v1_t = v1_xx, v2_t = v2_xx, u_t = u_xx - k1 u^2 + k1 u v1 + k2 v2 - k2 u";
  PDEPolynomial v1 = PDEPolynomial::var(0), v2 = PDEPolynomial::var(1), u = PDEPolynomial::var(2);
  PDEPolynomial k1 = K("k1"), k2 = K("k2");
  auto heat = [](std::size_t j) {
    return PDEPolynomial::var(j, Derivative::XX) - PDEPolynomial::var(j, Derivative::T);
  };
  e.pde.unknowns = {"v1", "v2", "u1"};
  e.pde.equations = {heat(0), heat(1), heat(2) - k1 * u * u + k1 * u * v1 + k2 * v2 - k2 * u};
  e.pde.constants = decls({"k1", "k2"});
  add_derived(e, SchemeKind::Forward, Ranking(), "15t");
  add_derived(e, SchemeKind::Symmetric, Ranking(), "12t");
  DifferenceSystem cn;
  cn.translations = {"a1", "a2"};
  cn.indeterminates = indeterminate_names(3);
  cn.constants = cn_decls({"a", "b", "c"});
  cn.constants.push_back({"k1", true});
  cn.constants.push_back({"k2", true});
  auto y = [](std::size_t j) { return shifted_y(3, j, 0, 0, 1); };
  SigmaPolynomial third = crank_nicholson_shape(3, 2, "c") + y(0).scaled(K("k1")) * y(2) -
                          y(2).pow(2).scaled(K("k1")) + y(1).scaled(K("k2")) - y(2).scaled(K("k2"));
  cn.polynomials = {crank_nicholson_shape(3, 0, "a"), crank_nicholson_shape(3, 1, "b"), third};
  e.forms[SchemeKind::CrankNicholson] = cn;
  e.ranking[SchemeKind::CrankNicholson] = Ranking();
  e.expected_psi[SchemeKind::CrankNicholson] = P("18t - 3");
  e.notes.push_back("Crank-Nicholson system is three copies of the stored diffusion shape; the third carries the reaction terms.");
  e.notes.push_back("The third equation is quasi-linear; the first two are linear and independent.");
  return e;
}

CatalogEntry chromatography(std::size_t components) {
  if (components == 0) throw ParseError("chromatography needs at least one component");
  CatalogEntry e;
  e.name = "chromatography";
  e.title = "C_t + F Cs_t + u C_z = D_L C_zz, per component";
  e.components = components;
  PDEPolynomial f = K("F"), vel = K("u");
  std::vector<std::string> names{"F", "u"};
  for (std::size_t i = 1; i <= components; ++i) {
    std::size_t c = 2 * (i - 1), s = c + 1;
    std::string d = "D_L" + std::to_string(i);
    names.push_back(d);
    e.pde.unknowns.push_back("C_" + std::to_string(i));
    e.pde.unknowns.push_back("Cs_" + std::to_string(i));
    PDEPolynomial dl = K(d);
    e.pde.equations.push_back(dl * PDEPolynomial::var(c, Derivative::XX) - vel * PDEPolynomial::var(c, Derivative::X) -
                              PDEPolynomial::var(c, Derivative::T) - f * PDEPolynomial::var(s, Derivative::T));
  }
  e.pde.constants = decls(names);
  add_derived(e, SchemeKind::Forward, Ranking(), "2t^2 + 7t + 1");
  add_derived(e, SchemeKind::Symmetric, Ranking(), "2t^2 + 6t + 1");
  e.notes.push_back("Expected polynomials are per component pair; the system total is N times that.");
  e.notes.push_back("Forward form has b_i = D_Li + u + 1 from the substitution.");
  return e;
}

}  // namespace

DifferenceSystem reaction_linear_subsystem(SchemeKind s) {
  if (s == SchemeKind::CrankNicholson) {
    DifferenceSystem cn;
    cn.translations = {"a1", "a2"};
    cn.indeterminates = indeterminate_names(2);
    cn.constants = cn_decls({"a", "b"});
    cn.polynomials = {crank_nicholson_shape(2, 0, "a"), crank_nicholson_shape(2, 1, "b")};
    return cn;
  }
  PDESpec p;
  p.unknowns = {"v1", "v2"};
  for (std::size_t j = 0; j < 2; ++j)
    p.equations.push_back(PDEPolynomial::var(j, Derivative::XX) - PDEPolynomial::var(j, Derivative::T));
  return discretize(p, s);
}

std::vector<std::string> catalog_names() {
  return {"diffusion",      "murray",         "burgers",         "fisher",
          "huxley",         "burgers-fisher", "burgers-huxley",  "fitzhugh-nagumo",
          "reaction-kinetics", "chromatography"};
}

CatalogEntry catalog_lookup(const std::string& name, std::size_t components) {
  PDEPolynomial u = PDEPolynomial::var(0);
  PDEPolynomial k = K("k");
  if (name == "diffusion") return diffusion();
  if (name == "murray")
    return family(name, "u_xx + mu_1 u_t + mu_2 u - mu_3 u^2 = 0", 0, 0, K("mu_1"),
                  PDEPolynomial(K("mu_2")) * u - PDEPolynomial(K("mu_3")) * u * u, {"mu_1", "mu_2", "mu_3"});
  if (name == "burgers") return family(name, "u_xx - u u_x - u_t = 0", -1, 0, -1, 0, {});
  if (name == "fisher") return family(name, "u_xx - u_t + u(1 - u) = 0", 0, 0, -1, u - u * u, {});
  if (name == "huxley")
    return family(name, "u_xx - u_t + u(u - 1)(u - k) = 0", 0, 0, -1,
                  u * u * u - (k + PDEPolynomial(1)) * u * u + k * u, {"k"});
  if (name == "burgers-fisher")
    return family(name, "u_xx + u u_x - u_t + u(1 - u) = 0", 1, 0, -1, u - u * u, {});
  if (name == "burgers-huxley")
    return family(name, "u_xx + u u_x - u_t - u(u - 1)(u - k) = 0", 1, 0, -1,
                  -(u * u * u) + (k + PDEPolynomial(1)) * u * u - k * u, {"k"});
  if (name == "fitzhugh-nagumo") {
    PDEPolynomial a = K("a");
    CatalogEntry e = family(name, "u_xx + u u_x + c u_t + u(1 - u)(a - u) = 0", 1, 0, K("c"),
                            u * (PDEPolynomial(1) - u) * (a - u), {"a", "c"});
    e.notes.push_back(
        "The equation has no u_t term; it is catalogued with a symbolic nonzero c as the family requires. "
        "With c = 0 the forward strength is 4t and the symmetric form is not quasi-linear.");
    return e;
  }
  if (name == "reaction-kinetics") return reaction_kinetics();
  if (name == "chromatography") return chromatography(components);
  throw ParseError("unknown catalog entry '" + name + "'");
}

}  // namespace einstrength
