#include "einstrength/errors.hpp"
#include "einstrength/report.hpp"
#include "einstrength/system_file.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace einstrength;

namespace {

struct Options {
  std::string format = "text";
  std::string ranking;
  std::string source;
  std::string scheme;
  std::string export_path;
  std::string points;
  std::size_t m = 0;
  std::size_t components = 1;
  std::uint64_t seed = 1;
  long rmin = 0;
  long rmax = 3;
  std::size_t trials = 3;
};

std::vector<std::size_t> parse_indices(const std::string& s) {
  std::vector<std::size_t> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      long v = std::stol(item, &used);
      if (used != item.size() || v < 0) throw std::invalid_argument(item);
      out.push_back(static_cast<std::size_t>(v));
    } catch (const std::exception&) {
      throw ParseError("bad ranking index '" + item + "'");
    }
  }
  return out;
}

// "standard", "1,0" or "1,0/2,0,1" (translation priority / indeterminate priority).
Ranking parse_ranking(const std::string& s) {
  if (s.empty() || s == "standard") return Ranking();
  auto slash = s.find('/');
  std::vector<std::size_t> tp = parse_indices(s.substr(0, slash));
  std::vector<std::size_t> ip;
  if (slash != std::string::npos) ip = parse_indices(s.substr(slash + 1));
  try {
    return Ranking(tp, ip);
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception& e) {
    throw ParseError(std::string("invalid ranking: ") + e.what());
  }
}

struct Resolved {
  DifferenceSystem system;
  Ranking ranking;
  std::optional<CatalogEntry> entry;
  SchemeKind scheme = SchemeKind::Forward;
  std::string label;
};

Resolved resolve(const Options& o) {
  Resolved r;
  if (std::filesystem::is_regular_file(o.source)) {
    r.system = read_system_file(o.source);
    r.ranking = r.system.ranking.value_or(Ranking());
    r.label = o.source;
  } else {
    if (o.scheme.empty()) throw ParseError("--scheme is required with a catalog entry");
    r.scheme = parse_scheme(o.scheme);
    r.entry = catalog_lookup(o.source, o.components);
    r.system = r.entry->form(r.scheme);
    r.ranking = r.entry->ranking.at(r.scheme);
    r.label = o.source;
  }
  if (!o.ranking.empty()) r.ranking = parse_ranking(o.ranking);
  r.ranking.validate(r.system.m(), r.system.n());
  return r;
}

void maybe_export(const Options& o, DifferenceSystem sys, const Ranking& rk) {
  if (o.export_path.empty()) return;
  if (!rk.is_standard()) sys.ranking = rk;
  write_system_file(sys, o.export_path);
}

std::string read_points_arg(const std::string& arg) {
  if (!arg.empty() && std::filesystem::is_regular_file(arg)) {
    std::ifstream in(arg);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }
  return arg;
}

int lattice_command(const Options& o, const std::string& fn) {
  auto pts = parse_points(read_points_arg(o.points));
  std::size_t m = o.m;
  if (!pts.empty()) {
    if (m != 0 && m != pts.front().size()) throw DimensionMismatch("--m disagrees with the point dimension");
    m = pts.front().size();
  }
  if (m == 0) throw ParseError("--m is required for an empty point list");
  LatticeSet s(fn == "omega" ? Ambient::Naturals : Ambient::Integers, m, pts);
  std::cout << render_lattice(fn, s, parse_format(o.format));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Einstein strength of systems of partial difference equations"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--ranking", o.ranking, "Ranking: standard, or translation order like 1,0 with optional /indeterminate order");

  auto* om = app.add_subcommand("omega", "Dimension polynomial of a set of points in N^m");
  auto* ph = app.add_subcommand("phi", "Dimension polynomial of a set of points in Z^m");
  for (auto* c : {om, ph}) {
    c->add_option("points", o.points, "Points like \"(2,0) (-1,1)\", or a file holding them");
    c->add_option("--m", o.m, "Ambient dimension (needed when the list is empty)");
  }

  auto* cs = app.add_subcommand("charset", "Characteristic set of a system");
  auto* st = app.add_subcommand("strength", "Strength report of a system");
  auto* ds = app.add_subcommand("discretize", "Difference system of a catalog entry");
  auto* vf = app.add_subcommand("verify", "Check psi against the grid oracle");
  for (auto* c : {cs, st, ds, vf}) {
    c->add_option("source", o.source, "System file or catalog entry name")->required();
    c->add_option("--scheme", o.scheme, "forward, symmetric or crank-nicholson");
    c->add_option("--components", o.components, "Component count for chromatography")->check(CLI::PositiveNumber);
  }
  for (auto* c : {cs, st, ds}) c->add_option("--export", o.export_path, "Write the system to a JSON file");
  vf->add_option("--seed", o.seed, "Random seed");
  vf->add_option("--rmin", o.rmin, "Smallest order checked")->check(CLI::NonNegativeNumber);
  vf->add_option("--rmax", o.rmax, "Largest order checked")->check(CLI::NonNegativeNumber);
  vf->add_option("--trials", o.trials, "Number of random constant bindings")->check(CLI::PositiveNumber);
  auto* cl = app.add_subcommand("catalog-list", "List catalog entries");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return static_cast<int>(ExitCode::Parse);
  }

  try {
    const Format fmt = parse_format(o.format);
    if (om->parsed()) return lattice_command(o, "omega");
    if (ph->parsed()) return lattice_command(o, "phi");
    if (cl->parsed()) {
      std::cout << render_catalog(fmt);
      return 0;
    }
    Resolved r = resolve(o);
    if (ds->parsed()) {
      if (!r.entry) throw ParseError("discretize needs a catalog entry name");
      DifferenceSystem sys = r.system;
      if (!r.ranking.is_standard()) sys.ranking = r.ranking;
      maybe_export(o, sys, r.ranking);
      std::cout << render_system(sys, fmt);
      return 0;
    }
    if (cs->parsed() || st->parsed()) {
      maybe_export(o, r.system, r.ranking);
      StrengthReport rep = strength_of_system(r.system, r.ranking);
      std::cout << (cs->parsed() ? render_charset(rep, r.system.naming(), fmt)
                                 : render_strength(rep, r.system.naming(), fmt));
      return 0;
    }
    if (o.rmin > o.rmax) throw ParseError("--rmin exceeds --rmax");
    VerificationReport rep;
    if (r.entry) {
      rep = randomized_verify(*r.entry, r.scheme, o.rmin, o.rmax, o.trials, o.seed);
    } else {
      NumericalPolynomial psi = strength_of_system(r.system, r.ranking).psi;
      rep = randomized_verify(r.system, psi, o.rmin, o.rmax, o.trials, o.seed);
      rep.label = r.label;
    }
    std::cout << render_verification(rep, fmt);
    return rep.ok() ? 0 : static_cast<int>(ExitCode::Mismatch);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return static_cast<int>(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return static_cast<int>(ExitCode::Parse);
  }
}
