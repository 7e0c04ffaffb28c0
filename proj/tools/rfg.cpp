// rfg: command-line front end.
//
// Exit codes: 0 success / verified, 1 property fails, 2 search exhausted,
// 3 input error.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "rfg/coset.hpp"
#include "rfg/error.hpp"
#include "rfg/magnus.hpp"
#include "rfg/nilq.hpp"
#include "rfg/report.hpp"
#include "rfg/resfree.hpp"
#include "rfg/sample_calc.hpp"
#include "rfg/subdirect.hpp"

using namespace rfg;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kFails = 1, kExhausted = 2, kInputError = 3 };

struct Outcome {
  RunReport report;
  std::string text;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string depth_text(const GammaDepth& d) { return (d.exact ? "" : ">= ") + std::to_string(d.depth); }

json depth_json(const GammaDepth& d) { return {{"depth", d.depth}, {"exact", d.exact}}; }

std::vector<Word> product_words(const SubdirectSpec& spec) {
  std::vector<Word> out;
  for (const Tuple& t : spec.generators) out.push_back(tuple_to_product_word(t));
  return out;
}

// ---------------------------------------------------------------------------

struct GammaTestArgs {
  std::string word;
  int depth = 2;
};

Outcome gamma_test(const GammaTestArgs& a) {
  const Alphabet ab = Alphabet::ab();
  const Word u = parse_word(a.word, ab);
  if (a.depth < 1) throw DomainError("depth must be at least 1");
  const bool member = in_gamma(u, a.depth);
  const GammaDepth d = gamma_depth(u, a.depth);
  Outcome o;
  o.report.command = "gamma-test";
  o.report.inputs = {{"word", a.word}, {"depth", std::to_string(a.depth)}};
  o.report.results = {{"in_gamma", member}, {"gamma_depth", depth_json(d)}};
  o.report.renderings["word"] = format_word(u, ab);
  std::ostringstream out;
  out << "word: " << format_word(u, ab) << "\n";
  out << "in gamma_" << a.depth << ": " << (member ? "true" : "false") << "\n";
  out << "gamma depth: " << depth_text(d) << "\n";
  if (d.exact) {
    const std::string leading = eta(u, d.depth).homogeneous_part(d.depth).to_string();
    o.report.renderings["leading_part"] = leading;
    out << "leading part of eta - 1: " << leading << "\n";
  }
  o.text = out.str();
  o.report.exit_code = member ? kOk : kFails;
  return o;
}

struct SampleCalcArgs {
  int example = 1;
  int m = 1;
};

Outcome sample_calc(const SampleCalcArgs& a) {
  Outcome o;
  o.report.command = "sample-calc";
  o.report.inputs = {{"example", std::to_string(a.example)}};
  if (a.example == 1) {
    o.report.inputs["m"] = std::to_string(a.m);
    const ChainReport r = analyze_commutator_chain(a.m);
    json top = json::object();
    for (const auto& [W, p] : r.top_coefficients) top[format_monomial(W)] = p.to_string();
    o.report.results = {{"low_degree_vanish", r.low_degree_vanish},
                        {"top_coefficients", top},
                        {"top_vanish_at_roots", r.top_vanish_at_roots},
                        {"top_nonzero", r.top_nonzero},
                        {"phi_trivial_below", r.phi_trivial_below},
                        {"depth_at_next", depth_json(r.depth_at_next)},
                        {"matches_displayed_formula", r.matches_displayed_formula},
                        {"verified", r.verified()}};
    o.report.renderings = {{"g", format_word(r.g, Alphabet::wxyz())},
                           {"displayed_formula", r.displayed_formula.to_string()}};
    o.text = format_chain_report(r);
    o.report.exit_code = r.verified() ? kOk : kFails;
  } else if (a.example == 2) {
    const ProductCommutatorReport r = analyze_product_commutator();
    const bool ok = r.degree1_vanishes && r.degree2_vanishes && r.has_non_integral_coefficient &&
                    r.coefficients_are_binomial_multiples;
    o.report.results = {{"degree1_vanishes", r.degree1_vanishes},
                        {"degree2_vanishes", r.degree2_vanishes},
                        {"matches_displayed_formula", r.matches_displayed_formula},
                        {"has_non_integral_coefficient", r.has_non_integral_coefficient},
                        {"coefficients_are_binomial_multiples", r.coefficients_are_binomial_multiples}};
    o.report.renderings = {{"U", format_word(r.U, Alphabet::wxyz())},
                           {"degree3", r.degree3.to_string()},
                           {"displayed_formula", r.displayed_formula.to_string()}};
    o.text = format_product_commutator_report(r);
    o.report.exit_code = ok ? kOk : kFails;
  } else {
    throw DomainError("--example must be 1 or 2");
  }
  return o;
}

struct FamilyArgs {
  std::string family = "S";
  std::string set;
  int c = 2;
  int factors = 0;
  std::vector<std::string> tuples;
  std::string spec_file;
};

SubdirectSpec make_spec(const FamilyArgs& a) {
  if (!a.spec_file.empty()) return parse_spec(read_file(a.spec_file));
  if (a.family == "S") {
    if (a.set.empty()) throw DomainError("--set is required for the S family");
    return build_S(parse_index_set(a.set), a.c);
  }
  if (a.family == "T") {
    std::vector<Tuple> g;
    for (const std::string& t : a.tuples) g.push_back(parse_tuple(t));
    return build_T(a.factors, g, a.c);
  }
  throw DomainError("--family must be S or T");
}

void describe_spec_inputs(RunReport& r, const FamilyArgs& a) {
  if (!a.spec_file.empty()) {
    r.inputs["spec"] = a.spec_file;
    return;
  }
  r.inputs["family"] = a.family;
  r.inputs["class"] = std::to_string(a.c);
  if (a.family == "S") r.inputs["set"] = a.set;
  if (a.family == "T") r.inputs["factors"] = std::to_string(a.factors);
}

struct BuildArgs {
  FamilyArgs family;
  std::string emit = "spec";
};

Outcome build(const BuildArgs& a) {
  const SubdirectSpec spec = make_spec(a.family);
  Outcome o;
  o.report.command = "build";
  describe_spec_inputs(o.report, a.family);
  o.report.inputs["emit"] = a.emit;
  json tuples = json::array();
  for (const Tuple& t : spec.generators) tuples.push_back(format_tuple(t));
  o.report.results = {{"E", format_index_set(spec.E)},
                      {"c", spec.c},
                      {"generator_count", spec.generators.size()},
                      {"contains_gamma_c", spec.contains_gamma_c},
                      {"generators", tuples}};
  if (a.emit == "spec") {
    o.text = format_spec(spec);
  } else if (a.emit == "tuples") {
    for (const Tuple& t : spec.generators) o.text += format_tuple(t) + "\n";
  } else if (a.emit == "words") {
    const Alphabet alphabet = Alphabet::product_ab(static_cast<int>(spec.E.size()));
    for (const Word& w : product_words(spec)) o.text += format_word(w, alphabet) + "\n";
  } else {
    throw DomainError("--emit must be spec, tuples or words");
  }
  return o;
}

Outcome vsp(const FamilyArgs& a) {
  const SubdirectSpec spec = make_spec(a);
  const VspReport r = vsp_check(spec);
  Outcome o;
  o.report.command = "vsp";
  describe_spec_inputs(o.report, a);
  json pairs = json::array();
  std::ostringstream out;
  out << "E = " << format_index_set(spec.E) << ", c = " << spec.c << "\n";
  out << "pair      finite  abelianized index\n";
  for (const PairReport& p : r.pairs) {
    const std::string index = p.abelianized_index ? p.abelianized_index->get_str() : "-";
    pairs.push_back({{"i", p.i},
                     {"j", p.j},
                     {"finite", p.finite},
                     {"abelianized_index", p.abelianized_index ? json(index) : json(nullptr)},
                     {"index_is_exact", p.index_is_exact}});
    std::ostringstream pair;
    pair << "{" << p.i << "," << p.j << "}";
    out << std::left << std::setw(10) << pair.str() << std::setw(8) << yes_no(p.finite) << index
        << (p.finite && p.index_is_exact ? " (exact)" : "") << "\n";
  }
  out << "VSP: " << (r.all_finite() ? "certified" : "not certified") << "\n";
  o.report.results = {{"pairs", pairs}, {"all_finite", r.all_finite()}};
  o.text = out.str();
  o.report.exit_code = r.all_finite() ? kOk : kFails;
  return o;
}

struct CosetArgs {
  std::string pres;
  std::string sub;
  FamilyArgs family;
  long limit = kDefaultCosetLimit;
};

// Either presentation and subgroup files, or an S-family spec enumerated in
// the direct product of |E| copies of F(a, b).
std::pair<Presentation, std::vector<Word>> coset_input(const CosetArgs& a, RunReport& r) {
  if (!a.pres.empty()) {
    r.inputs["pres"] = a.pres;
    Presentation p = parse_presentation(read_file(a.pres));
    std::vector<Word> sub;
    if (!a.sub.empty()) {
      r.inputs["sub"] = a.sub;
      sub = parse_subgroup(read_file(a.sub), p.generators);
    }
    return {std::move(p), std::move(sub)};
  }
  if (a.family.set.empty() && a.family.spec_file.empty())
    throw DomainError("give --pres (and optionally --sub), or --set / --spec");
  describe_spec_inputs(r, a.family);
  const SubdirectSpec spec = make_spec(a.family);
  return {direct_product_presentation(kFreeRank, static_cast<int>(spec.E.size())), product_words(spec)};
}

Outcome coset_enum(const CosetArgs& a) {
  Outcome o;
  o.report.command = "coset-enum";
  const auto [pres, sub] = coset_input(a, o.report);
  o.report.inputs["limit"] = std::to_string(a.limit);
  const CosetTable t = todd_coxeter(pres, sub, a.limit);
  std::ostringstream out;
  if (t.complete()) {
    out << "status: complete\nindex: " << index(t) << "\ncosets defined: " << t.cosets_defined() << "\n";
    out << "table:\n" << format_table(t);
    o.report.results = {{"status", "complete"}, {"index", index(t)}, {"cosets_defined", t.cosets_defined()}};
    o.report.renderings["table"] = format_table(t);
    o.report.exit_code = kOk;
  } else {
    out << "status: exhausted (limit " << a.limit << ")\ncosets defined: " << t.cosets_defined() << "\n";
    o.report.results = {{"status", "exhausted"}, {"cosets_defined", t.cosets_defined()}};
    o.report.exit_code = kExhausted;
  }
  o.text = out.str();
  return o;
}

Outcome rs(const CosetArgs& a) {
  Outcome o;
  o.report.command = "rs";
  const auto [pres, sub] = coset_input(a, o.report);
  o.report.inputs["limit"] = std::to_string(a.limit);
  const CosetTable t = todd_coxeter(pres, sub, a.limit);
  if (!t.complete()) {
    o.text = "status: exhausted (limit " + std::to_string(a.limit) + ")\n";
    o.report.results = {{"status", "exhausted"}, {"cosets_defined", t.cosets_defined()}};
    o.report.exit_code = kExhausted;
    return o;
  }
  const Presentation p = reidemeister_schreier(pres, t);
  o.text = "index: " + std::to_string(index(t)) + "\n" + format_presentation(p);
  o.report.results = {{"status", "complete"},
                      {"index", index(t)},
                      {"generator_count", p.generators.rank()},
                      {"relator_count", p.relators.size()}};
  o.report.renderings["presentation"] = format_presentation(p);
  return o;
}

struct WpArgs {
  std::string pres;
  std::string word;
  long budget = 100000;
};

Outcome wp(const WpArgs& a) {
  const Presentation pres = parse_presentation(read_file(a.pres));
  const Word u = parse_word(a.word, pres.generators);
  if (a.budget < 0) throw DomainError("budget must be nonnegative");
  const Verdict v = word_problem(pres, u, a.budget);
  Outcome o;
  o.report.command = "wp";
  o.report.inputs = {{"pres", a.pres}, {"word", a.word}, {"budget", std::to_string(a.budget)}};
  std::ostringstream out;
  if (const auto* t = std::get_if<TrivialWitness>(&v)) {
    json factors = json::array();
    out << "verdict: trivial\nwitness: product of " << t->factors.size() << " relator conjugate(s), r<i> = relator i\n";
    for (const ConjugateFactor& f : t->factors) {
      const std::string conj = format_word(f.conjugator, pres.generators);
      factors.push_back({{"conjugator", conj}, {"relator", f.relator}, {"sign", f.sign}});
      const std::string rel = "r" + std::to_string(f.relator) + (f.sign < 0 ? "^-1" : "");
      if (f.conjugator.empty())
        out << "  " << rel << "\n";
      else
        out << "  (" << conj << ") " << rel << " (" << conj << ")^-1\n";
    }
    out << "re-verified: " << yes_no(witness_holds(pres, u, *t)) << "\n";
    o.report.results = {{"verdict", "trivial"}, {"factors", factors}, {"verified", witness_holds(pres, u, *t)}};
  } else if (const auto* n = std::get_if<NontrivialWitness>(&v)) {
    const Alphabet target = target_alphabet();
    json images = json::object();
    out << "verdict: nontrivial\nwitness: map to F(x, y)\n";
    for (std::size_t g = 0; g < n->images.size(); ++g) {
      const std::string img = format_word(n->images[g], target);
      images[pres.generators.name(static_cast<int>(g))] = img;
      out << "  " << pres.generators.name(static_cast<int>(g)) << " -> " << img << "\n";
    }
    std::map<int, Word> map;
    for (std::size_t g = 0; g < n->images.size(); ++g) map.emplace(static_cast<int>(g), n->images[g]);
    const std::string image = format_word(substitute(u, map), target);
    out << "image of word: " << image << "\n";
    out << "re-verified: " << yes_no(witness_holds(pres, u, *n)) << "\n";
    o.report.results = {{"verdict", "nontrivial"}, {"images", images}, {"verified", witness_holds(pres, u, *n)}};
    o.report.renderings["image"] = image;
  } else {
    out << "verdict: unknown (budget of " << a.budget << " nodes exhausted)\n";
    o.report.results = {{"verdict", "exhausted"}};
    o.report.exit_code = kExhausted;
  }
  o.text = out.str();
  return o;
}

struct TheoremGArgs {
  std::string set;
  int c = 2;
  int coord = 0;
  std::string word;
};

Outcome verify_theorem_g(const TheoremGArgs& a) {
  const Alphabet gamma = Alphabet::wxyz();
  const IndexSet E = parse_index_set(a.set);
  const Word g = parse_word(a.word, gamma);
  const TheoremGCertificate cert = verify_theoremG_instance(E, a.c, a.coord, g);
  Outcome o;
  o.report.command = "verify-theoremG";
  o.report.inputs = {{"set", a.set}, {"class", std::to_string(a.c)}, {"coord", std::to_string(a.coord)}, {"word", a.word}};
  o.report.results = {{"hypothesis_met", cert.hypothesis_met},
                      {"vanishing_points", cert.vanishing_points},
                      {"low_degree_vanish_at_points", cert.low_degree_vanish_at_points},
                      {"low_degree_identically_zero", cert.low_degree_identically_zero},
                      {"conclusion_in_gamma", cert.conclusion_in_gamma},
                      {"certified", cert.certified()}};
  const Alphabet ab = Alphabet::ab();
  o.report.renderings = {{"g", format_word(g, gamma)}, {"image_at_n", format_word(cert.image_at_n, ab)}};
  std::ostringstream out;
  out << "g = " << format_word(g, gamma) << "\n";
  out << "phi_m(g) = 1 for m in E \\ {" << a.coord << "}: " << yes_no(cert.hypothesis_met) << "\n";
  out << "coefficients of length < " << a.c << " vanish at those points: " << yes_no(cert.low_degree_vanish_at_points)
      << "\n";
  out << "... and vanish identically: " << yes_no(cert.low_degree_identically_zero) << "\n";
  out << "phi_" << a.coord << "(g) = " << format_word(cert.image_at_n, ab) << "\n";
  out << "phi_" << a.coord << "(g) in gamma_" << a.c << ": " << yes_no(cert.conclusion_in_gamma) << "\n";
  out << "certified: " << yes_no(cert.certified()) << "\n";
  o.text = out.str();
  o.report.exit_code = cert.certified() ? kOk : kFails;
  return o;
}

void add_family_options(CLI::App* cmd, FamilyArgs& f, bool allow_spec) {
  cmd->add_option("--family", f.family, "S or T")->capture_default_str();
  cmd->add_option("--set", f.set, "index set E, e.g. 1,2,3,4");
  cmd->add_option("--class", f.c, "nilpotency class c")->capture_default_str();
  cmd->add_option("--factors", f.factors, "number of factors (T family)");
  cmd->add_option("--tuple", f.tuples, "generator tuple (T family), e.g. \"1: a ; 2: b\"");
  if (allow_spec) cmd->add_option("--spec", f.spec_file, "spec file");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Subdirect products of free groups: exact computations"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "text";
  app.add_option("--format", format, "text or structured")
      ->check(CLI::IsMember({"text", "structured"}))
      ->capture_default_str();

  std::function<Outcome()> run;

  GammaTestArgs gt;
  auto* c_gamma = app.add_subcommand("gamma-test", "lower central series membership of a word over {a, b}");
  c_gamma->add_option("--word", gt.word, "word over a, b")->required();
  c_gamma->add_option("--depth", gt.depth, "c")->required();
  c_gamma->callback([&] { run = [&] { return gamma_test(gt); }; });

  SampleCalcArgs sc;
  auto* c_sample = app.add_subcommand("sample-calc", "worked computations with the parametric Magnus map");
  c_sample->add_option("--example", sc.example, "1 or 2")->required();
  c_sample->add_option("--m", sc.m, "chain length for example 1 (0..4)")->capture_default_str();
  c_sample->callback([&] { run = [&] { return sample_calc(sc); }; });

  BuildArgs ba;
  auto* c_build = app.add_subcommand("build", "generators of an S- or T-family subgroup");
  add_family_options(c_build, ba.family, false);
  c_build->add_option("--emit", ba.emit, "spec, tuples or words")->capture_default_str();
  c_build->callback([&] { run = [&] { return build(ba); }; });

  FamilyArgs va;
  auto* c_vsp = app.add_subcommand("vsp", "pairwise finite-index (VSP) certificate");
  add_family_options(c_vsp, va, true);
  c_vsp->callback([&] { run = [&] { return vsp(va); }; });

  CosetArgs ca;
  auto* c_coset = app.add_subcommand("coset-enum", "Todd-Coxeter coset enumeration");
  CosetArgs ra;
  auto* c_rs = app.add_subcommand("rs", "Reidemeister-Schreier presentation of a finite-index subgroup");
  for (auto [cmd, args] : {std::pair{c_coset, &ca}, std::pair{c_rs, &ra}}) {
    cmd->add_option("--pres", args->pres, "presentation file");
    cmd->add_option("--sub", args->sub, "subgroup file");
    cmd->add_option("--limit", args->limit, "maximum number of cosets defined")->capture_default_str();
    add_family_options(cmd, args->family, true);
  }
  c_coset->callback([&] { run = [&] { return coset_enum(ca); }; });
  c_rs->callback([&] { run = [&] { return rs(ra); }; });

  WpArgs wa;
  auto* c_wp = app.add_subcommand("wp", "word problem in a residually free group");
  c_wp->add_option("--pres", wa.pres, "presentation file")->required();
  c_wp->add_option("--word", wa.word, "word")->required();
  c_wp->add_option("--budget", wa.budget, "search nodes")->capture_default_str();
  c_wp->callback([&] { run = [&] { return wp(wa); }; });

  TheoremGArgs ta;
  auto* c_thg = app.add_subcommand("verify-theoremG", "certify S(E, c) meet Phi_n = gamma_c(Phi_n) for one element");
  c_thg->add_option("--set", ta.set, "index set E")->required();
  c_thg->add_option("--class", ta.c, "c")->required();
  c_thg->add_option("--coord", ta.coord, "coordinate n in E")->required();
  c_thg->add_option("--word", ta.word, "word over w, x, y, z")->required();
  c_thg->callback([&] { run = [&] { return verify_theorem_g(ta); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    const Outcome o = run();
    if (format == "structured")
      std::cout << serialize_report(o.report);
    else
      std::cout << o.text;
    return o.report.exit_code;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
}
