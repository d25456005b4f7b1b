#include <unistd.h>

#include <CLI11.hpp>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

#include "cyclicaut/classifier.hpp"
#include "cyclicaut/errors.hpp"
#include "cyclicaut/serialize.hpp"
#include "cyclicaut/verify.hpp"

namespace {

using namespace cyclicaut;
using serialize::Json;

struct Config {
  bool json = false;
  std::uint64_t seed = 0;
  std::size_t max_cosets = grouptheory::kDefaultMaxCosets;
  std::size_t max_size = grouptheory::kDefaultMaxSize;
  std::optional<Int> n_max;

  std::string curve;
  Int n = 0, a = 0, b = 0, c = 0, p = 0, d = 0, param = 0;
  std::string pres;
  std::string perms;
  int degree = 0;
  std::string family;
  std::size_t samples = 100;
  std::string records;
};

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

std::string join(const std::vector<Int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

void print_report(const classifier::ClassificationReport& r) {
  std::cout << "curve:        " << r.cover.equation() << "\n";
  if (r.canonical_triple)
    std::cout << "canonical:    (" << join({r.canonical_triple->begin(), r.canonical_triple->end()})
              << ")\n";
  std::cout << "genus:        " << r.genus << "\n"
            << "signature:    " << r.signature.to_string() << "\n"
            << "row:          " << r.row << "\n"
            << "order:        " << r.group.order << "\n"
            << "structure:    " << r.group.structure.display() << "\n"
            << "base order:   " << r.base_order << "\n";
  if (r.group.presentation) std::cout << "presentation: " << r.group.presentation->to_string() << "\n";
  for (const auto& s : r.chain)
    std::cout << "extension:    " << s.inner.to_string() << " -> " << s.outer.to_string() << "  row "
              << s.row << ", index " << s.index << "\n";
  for (const auto& note : r.notes) std::cout << "note:         " << note << "\n";
}

void output(const Config& cfg, const classifier::ClassificationReport& r) {
  if (cfg.json)
    emit(serialize::to_json(r));
  else
    print_report(r);
}

void describe_cover(const Config& cfg, const curve::CyclicCover& cover) {
  const Int g = curve::genus(cover);
  const auto sig = curve::signature_of(cover);
  const auto exps = cover.all_exponents();
  std::optional<bool> dihedral;
  if (exps.size() == 4)
    dihedral = classifier::dihedral_four_branch(cover.n, exps[0], exps[1], exps[2], exps[3]);
  std::optional<bool> normal;
  if (numtheory::is_prime(cover.n))
    normal = classifier::stability_normal(cover.n, static_cast<Int>(exps.size()));

  if (cfg.json) {
    Json j;
    j["input"] = serialize::to_json(cover);
    j["genus"] = g;
    j["signature"] = serialize::to_json(sig);
    j["branch_points"] = exps.size();
    j["dihedral_extension"] = dihedral ? Json(*dihedral) : Json(nullptr);
    j["deck_group_normal"] = normal ? Json(*normal) : Json(nullptr);
    emit(j);
    return;
  }
  std::cout << "curve:        " << cover.equation() << "\n"
            << "genus:        " << g << "\n"
            << "signature:    " << sig.to_string() << "\n"
            << "branch pts:   " << exps.size() << "\n";
  if (dihedral) std::cout << "dihedral:     " << (*dihedral ? "yes" : "no") << "\n";
  if (normal) std::cout << "deck normal:  " << (*normal ? "yes" : "not forced") << "\n";
}

int run_classify(const Config& cfg) {
  if (cfg.curve.empty()) {
    output(cfg, classifier::classify_belyi(cfg.n, cfg.a, cfg.b, cfg.c));
    return 0;
  }
  const auto form = curve::parse_curve_form(cfg.curve);
  if (form.fermat_degree) {
    const Int n = form.cover.n, d = *form.fermat_degree;
    output(cfg, d > n ? classifier::classify_fermat(d, n) : classifier::classify_fermat(n, d));
    return 0;
  }
  const auto& cover = form.cover;
  const auto exps = cover.all_exponents();
  if (exps.size() == 3) {
    auto r = classifier::classify_belyi(cover.n, exps[0], exps[1], exps[2]);
    r.cover = cover;
    output(cfg, r);
    return 0;
  }
  describe_cover(cfg, cover);
  return 0;
}

int run_genus(const Config& cfg) {
  const auto cover = curve::parse_curve(cfg.curve);
  const Int g = curve::genus(cover);
  const auto sig = curve::signature_of(cover);
  if (cfg.json) {
    Json j;
    j["input"] = serialize::to_json(cover);
    j["genus"] = g;
    j["signature"] = serialize::to_json(sig);
    emit(j);
  } else {
    std::cout << g << "\n";
  }
  return 0;
}

int run_enumerate(const Config& cfg) {
  std::vector<verify::Enumeration> runs;
  if (cfg.n) {
    runs.push_back(verify::enumerate_classes(cfg.n));
  } else if (cfg.n_max) {
    for (Int n = 4; n <= *cfg.n_max; ++n) runs.push_back(verify::enumerate_classes(n));
  } else {
    throw CLI::RequiredError("enumerate needs --n or --n-max");
  }
  if (cfg.json) {
    if (runs.size() == 1) {
      emit(serialize::to_json(runs.front()));
    } else {
      Json all = Json::array();
      for (const auto& e : runs) all.push_back(serialize::to_json(e));
      emit(all);
    }
    return 0;
  }
  for (const auto& e : runs) {
    std::cout << "n = " << e.n << ": " << e.admissible_triples << " admissible triples, "
              << e.classes.size() << " classes\n";
    for (const auto& c : e.classes)
      std::cout << "  (" << join({c.canonical.begin(), c.canonical.end()}) << ")  g="
                << c.report.genus << "  " << c.report.row << "  |G|=" << c.report.group.order
                << "  " << c.report.group.structure.display() << "\n";
  }
  return 0;
}

std::optional<std::string> read_stream(std::istream& in) {
  std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  if (text.find_first_not_of(" \t\r\n") == std::string::npos) return std::nullopt;
  return text;
}

std::vector<verify::ClassRecord> parse_records(const std::string& text) {
  std::vector<verify::ClassRecord> out;
  std::istringstream in(text);
  while (in >> std::ws && in.peek() != std::char_traits<char>::eof()) {
    Json j;
    in >> j;
    auto part = serialize::records_from_json(j);
    out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  if (out.empty()) throw std::domain_error("no class records in input");
  return out;
}

int run_cross_check(const Config& cfg) {
  std::optional<std::string> text;
  if (!cfg.records.empty() && cfg.records != "-") {
    std::ifstream file(cfg.records);
    if (!file) throw std::domain_error("cannot open " + cfg.records);
    text = read_stream(file);
    if (!text) throw std::domain_error("no class records in " + cfg.records);
  } else if (cfg.records == "-" || (!cfg.n_max && !isatty(STDIN_FILENO))) {
    text = read_stream(std::cin);
    if (!text && cfg.records == "-") throw std::domain_error("no class records on standard input");
  }

  verify::CrossCheckReport report;
  if (text) {
    report = verify::cross_check_records(parse_records(*text));
  } else {
    verify::CrossCheckOptions opt;
    if (cfg.n_max) opt.n_max = *cfg.n_max;
    if (opt.n_max < opt.n_min) throw std::domain_error("--n-max must be at least 4");
    report = verify::cross_check(opt);
  }

  if (cfg.json) {
    emit(serialize::to_json(report));
  } else {
    for (const auto& c : report.checks) {
      std::cout << (c.pass ? "PASS " : "FAIL ") << std::left << std::setw(26) << c.name << " n in ["
                << c.n_min << "," << c.n_max << "]";
      if (c.witness) std::cout << "  " << *c.witness;
      std::cout << "\n";
    }
  }
  return report.all_pass() ? 0 : 1;
}

int run_gs_table(const Config& cfg) {
  if (cfg.json) {
    emit(serialize::gs_table_json());
    return 0;
  }
  for (const auto& row : fuchsian::gs_table()) {
    std::cout << std::left << std::setw(4) << row.id << std::setw(16) << row.inner << std::setw(14)
              << row.outer << "index " << std::setw(4) << row.index
              << (row.normal ? "normal" : "      ");
    if (row.min_n) std::cout << "  n >= " << row.min_n;
    if (row.min_n_plus_m) std::cout << "  n+m >= " << row.min_n_plus_m;
    std::cout << "\n";
  }
  return 0;
}

int run_coset_enum(const Config& cfg) {
  const auto pres = grouptheory::parse_presentation(cfg.pres);
  const Int order = grouptheory::coset_enumerate(pres, cfg.max_cosets);
  if (cfg.json) {
    Json j;
    j["presentation"] = serialize::to_json(pres);
    j["order"] = order;
    emit(j);
  } else {
    std::cout << order << "\n";
  }
  return 0;
}

int run_abelianize(const Config& cfg) {
  const auto inv = grouptheory::abelianization(grouptheory::parse_presentation(cfg.pres));
  if (cfg.json)
    emit(serialize::to_json(inv));
  else
    std::cout << inv.to_string() << "\n";
  return 0;
}

int run_perm_order(const Config& cfg) {
  const auto perms = grouptheory::PermutationSet::from_cycles(cfg.perms, cfg.degree);
  const auto fp = grouptheory::fingerprint(perms, cfg.max_size);
  if (cfg.json) {
    emit(serialize::to_json(fp));
  } else {
    std::cout << "order:          " << fp.order << "\n"
              << "abelian:        " << (fp.is_abelian ? "yes" : "no") << "\n"
              << "abelianization: " << fp.abelian.to_string() << "\n";
  }
  return 0;
}

int run_verify_action(const Config& cfg) {
  const auto rep = verify::verify_family(cfg.family, cfg.n, cfg.param, cfg.samples, cfg.seed);
  if (cfg.json) {
    Json checks = Json::array();
    for (const auto& c : rep.checks) {
      Json j;
      j["name"] = c.name;
      j["pass"] = c.pass;
      j["residual"] = c.residual;
      checks.push_back(std::move(j));
    }
    Json j;
    j["family"] = rep.family;
    j["equation"] = rep.equation;
    j["seed"] = cfg.seed;
    j["samples"] = cfg.samples;
    j["checks"] = std::move(checks);
    emit(j);
  } else {
    std::cout << rep.equation << "\n";
    for (const auto& c : rep.checks) {
      std::cout << (c.pass ? "PASS " : "FAIL ") << c.name;
      if (c.name.starts_with("residual")) std::cout << "  " << std::scientific << c.residual;
      std::cout << "\n";
    }
  }
  return rep.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Automorphism groups of cyclic covers of the Riemann sphere"};
  app.require_subcommand(1, 1);
  app.fallthrough();

  Config cfg;
  Int n_max = 0;
  app.add_flag("--json", cfg.json, "Print JSON instead of text");
  app.add_option("--seed", cfg.seed, "Random seed for sampling")->capture_default_str();
  app.add_option("--max-cosets", cfg.max_cosets, "Coset table limit")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--max-size", cfg.max_size, "Permutation group size limit")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  auto* n_max_opt = app.add_option("--n-max", n_max, "Upper end of the n range")->check(CLI::PositiveNumber);

  auto* classify = app.add_subcommand("classify", "Classify a curve or a belyi triple");
  auto* curve_opt = classify->add_option("--curve", cfg.curve, "Curve equation");
  auto* n_opt = classify->add_option("--n", cfg.n, "Degree");
  auto* a_opt = classify->add_option("--a", cfg.a);
  auto* b_opt = classify->add_option("--b", cfg.b);
  auto* c_opt = classify->add_option("--c", cfg.c);
  for (auto* o : {n_opt, a_opt, b_opt, c_opt}) {
    o->excludes(curve_opt);
    for (auto* other : {n_opt, a_opt, b_opt, c_opt})
      if (other != o) o->needs(other);
  }

  auto* lefschetz = app.add_subcommand("lefschetz", "Classify y^p = x^a (x+1)");
  lefschetz->add_option("--p", cfg.p, "Prime degree")->required();
  lefschetz->add_option("--a", cfg.a, "Exponent")->required();

  auto* fermat = app.add_subcommand("fermat", "Classify y^n + x^d = 1");
  fermat->add_option("--n", cfg.n)->required();
  fermat->add_option("--d", cfg.d)->required();

  auto* genus = app.add_subcommand("genus", "Genus of a cyclic cover");
  genus->add_option("--curve", cfg.curve, "Curve equation")->required();

  auto* enumerate = app.add_subcommand("enumerate", "Classes of belyi triples for one n, or for 4..n-max");
  enumerate->add_option("--n", cfg.n)->check(CLI::PositiveNumber);

  auto* cross = app.add_subcommand("cross-check", "Consistency checks over all belyi triples");
  cross->add_option("--records", cfg.records, "Enumeration JSON to check ('-' for standard input)");

  auto* gs = app.add_subcommand("gs-table", "Print the extension table");

  auto* coset = app.add_subcommand("coset-enum", "Order of a finitely presented group");
  coset->add_option("--pres", cfg.pres, "Presentation, e.g. \"<a,b | a^2, b^3, (a*b)^5>\"")->required();

  auto* abel = app.add_subcommand("abelianize", "Abelian invariants of a presentation");
  abel->add_option("--pres", cfg.pres)->required();

  auto* perm = app.add_subcommand("perm-order", "Order of a permutation group");
  perm->add_option("--perms", cfg.perms, "Generators in cycle notation, separated by ';'")->required();
  perm->add_option("--degree", cfg.degree)->check(CLI::NonNegativeNumber);

  auto* action = app.add_subcommand("verify-action", "Check explicit automorphisms on sampled points");
  action->add_option("--family", cfg.family)
      ->required()
      ->check(CLI::IsMember({"accola-maclachlan", "periodthree", "twistedz2"}));
  action->add_option("--n", cfg.n, "Curve degree")->required();
  action->add_option("--k", cfg.param, "Twist exponent (periodthree, twistedz2)");
  action->add_option("--samples", cfg.samples)->check(CLI::PositiveNumber)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }
  if (classify->parsed() && cfg.curve.empty() && !n_opt->count()) {
    std::cerr << "classify: give --curve or all of --n --a --b --c\n";
    return 2;
  }
  if (*n_max_opt) cfg.n_max = n_max;

  try {
    if (classify->parsed()) return run_classify(cfg);
    if (lefschetz->parsed()) {
      output(cfg, classifier::classify_lefschetz(cfg.p, cfg.a));
      return 0;
    }
    if (fermat->parsed()) {
      output(cfg, classifier::classify_fermat(cfg.n, cfg.d));
      return 0;
    }
    if (genus->parsed()) return run_genus(cfg);
    if (enumerate->parsed()) return run_enumerate(cfg);
    if (cross->parsed()) return run_cross_check(cfg);
    if (gs->parsed()) return run_gs_table(cfg);
    if (coset->parsed()) return run_coset_enum(cfg);
    if (abel->parsed()) return run_abelianize(cfg);
    if (perm->parsed()) return run_perm_order(cfg);
    if (action->parsed()) return run_verify_action(cfg);
  } catch (const CLI::Error& e) {
    std::cerr << "usage: " << e.what() << "\n";
    return 2;
  } catch (const BudgetExceeded& e) {
    std::cerr << "BUDGET_EXCEEDED: " << e.what() << "\n";
    return 1;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 1;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const nlohmann::ordered_json::exception& e) {
    std::cerr << "bad JSON: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
