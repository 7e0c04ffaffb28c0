#include "rfg/subdirect.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "rfg/error.hpp"
#include "rfg/magnus.hpp"

namespace rfg {

// ---------------------------------------------------------------------------
// Tuple

Tuple::Tuple(std::map<int, Word> components) : components_(std::move(components)) {
  for (const auto& [n, w] : components_)
    if (w.rank() != kFreeRank) throw MismatchError("tuple components must be words over {a, b}");
}

Tuple Tuple::identity(const IndexSet& E) {
  std::map<int, Word> comps;
  for (int n : E) comps.emplace(n, Word(kFreeRank));
  return Tuple(std::move(comps));
}

IndexSet Tuple::index_set() const {
  IndexSet E;
  for (const auto& [n, w] : components_) E.insert(n);
  return E;
}

const Word& Tuple::at(int n) const {
  auto it = components_.find(n);
  if (it == components_.end()) throw DomainError("tuple has no coordinate " + std::to_string(n));
  return it->second;
}

bool Tuple::is_identity() const {
  return std::all_of(components_.begin(), components_.end(), [](const auto& kv) { return kv.second.empty(); });
}

Tuple Tuple::restrict(const IndexSet& sub) const {
  std::map<int, Word> comps;
  for (int n : sub) comps.emplace(n, at(n));
  return Tuple(std::move(comps));
}

Tuple Tuple::shifted(int t) const {
  std::map<int, Word> comps;
  for (const auto& [n, w] : components_) comps.emplace(n + t, w);
  return Tuple(std::move(comps));
}

Tuple operator*(const Tuple& u, const Tuple& v) {
  if (u.index_set() != v.index_set()) throw MismatchError("tuples over different index sets");
  std::map<int, Word> comps;
  for (const auto& [n, w] : u.components_) comps.emplace(n, w * v.components_.at(n));
  return Tuple(std::move(comps));
}

Tuple Tuple::inverse() const {
  std::map<int, Word> comps;
  for (const auto& [n, w] : components_) comps.emplace(n, w.inverse());
  return Tuple(std::move(comps));
}

std::string_view provenance_name(Provenance p) {
  switch (p) {
    case Provenance::kSFamily: return "S";
    case Provenance::kTFamily: return "T";
    case Provenance::kCustom: return "custom";
  }
  return "custom";
}

// ---------------------------------------------------------------------------
// phi and the families

Word phi(const Word& g, int n) {
  if (g.rank() != kGammaRank) throw MismatchError("phi expects a word over {w, x, y, z}");
  const std::map<int, Word> images{
      {kW, Word::generator(kFreeRank, 0)},
      {kX, Word::generator(kFreeRank, 1)},
      {kY, Word::generator(kFreeRank, 0, n)},
      {kZ, Word::generator(kFreeRank, 1, n)},
  };
  return substitute(g, images);
}

Tuple phi_tuple(const Word& g, const IndexSet& E) {
  if (E.empty()) throw DomainError("phi_tuple: empty index set");
  std::map<int, Word> comps;
  for (int n : E) comps.emplace(n, phi(g, n));
  return Tuple(std::move(comps));
}

Tuple embed_at(const IndexSet& E, int n, const Word& r) {
  if (!E.contains(n)) throw DomainError("coordinate " + std::to_string(n) + " not in index set");
  std::map<int, Word> comps;
  for (int m : E) comps.emplace(m, m == n ? r : Word(kFreeRank));
  return Tuple(std::move(comps));
}

namespace {

void append_normal_generators(SubdirectSpec& spec) {
  const std::vector<Word> R = weight_c_normal_generators(kFreeRank, spec.c);
  for (int n : spec.E)
    for (const Word& r : R) spec.generators.push_back(embed_at(spec.E, n, r));
  spec.contains_gamma_c = true;
}

}  // namespace

bool has_gamma_c_witness(const SubdirectSpec& spec) {
  if (spec.c < 2) return false;
  const std::set<Tuple> present(spec.generators.begin(), spec.generators.end());
  for (int n : spec.E)
    for (const Word& r : weight_c_normal_generators(kFreeRank, spec.c))
      if (!present.contains(embed_at(spec.E, n, r))) return false;
  return true;
}

SubdirectSpec build_S(const IndexSet& E, int c) {
  if (E.size() < 2) throw DomainError("build_S: index set needs at least two elements");
  if (c < 2) throw DomainError("build_S: class must be at least 2");
  SubdirectSpec spec{E, c, {}, false, Provenance::kSFamily};
  for (int gen = 0; gen < kGammaRank; ++gen)
    spec.generators.push_back(phi_tuple(Word::generator(kGammaRank, gen), E));
  append_normal_generators(spec);
  return spec;
}

SubdirectSpec build_T(int n_factors, const std::vector<Tuple>& g_tuples, int c) {
  if (n_factors < 1) throw DomainError("build_T: need at least one factor");
  if (c < 2) throw DomainError("build_T: class must be at least 2");
  IndexSet E;
  for (int i = 1; i <= n_factors; ++i) E.insert(i);
  for (const Tuple& t : g_tuples)
    if (t.index_set() != E) throw MismatchError("build_T: tuple index set is not {1..n}");
  SubdirectSpec spec{E, c, g_tuples, false, Provenance::kTFamily};
  append_normal_generators(spec);
  return spec;
}

SubdirectSpec project(const SubdirectSpec& spec, const IndexSet& sub) {
  if (sub.empty()) throw DomainError("project: empty target index set");
  if (!std::includes(spec.E.begin(), spec.E.end(), sub.begin(), sub.end()))
    throw DomainError("project: target index set is not a subset");
  SubdirectSpec out{sub, spec.c, {}, spec.contains_gamma_c, spec.provenance};
  out.generators.reserve(spec.generators.size());
  for (const Tuple& t : spec.generators) out.generators.push_back(t.restrict(sub));
  return out;
}

IndexSet translate(const IndexSet& E, int t) {
  IndexSet out;
  for (int n : E) out.insert(n + t);
  return out;
}

SubdirectSpec translate_spec(const SubdirectSpec& spec, int t) {
  SubdirectSpec out{translate(spec.E, t), spec.c, {}, spec.contains_gamma_c, spec.provenance};
  for (const Tuple& g : spec.generators) out.generators.push_back(g.shifted(t));
  return out;
}

Word gamma_shift(const Word& g, int t) {
  if (g.rank() != kGammaRank) throw MismatchError("gamma_shift expects a word over {w, x, y, z}");
  const Word w = Word::generator(kGammaRank, kW);
  const Word x = Word::generator(kGammaRank, kX);
  const std::map<int, Word> images{
      {kW, w},
      {kX, x},
      {kY, Word::generator(kGammaRank, kY) * power(w, -t)},
      {kZ, Word::generator(kGammaRank, kZ) * power(x, -t)},
  };
  return substitute(g, images);
}

Word tuple_to_product_word(const Tuple& tuple) {
  const int factors = static_cast<int>(tuple.components().size());
  Word out(kFreeRank * factors);
  int slot = 0;
  for (const auto& [n, w] : tuple.components()) {
    std::vector<Letter> raw;
    for (const Letter& l : w.letters()) raw.push_back({l.gen + kFreeRank * slot, l.sign});
    out *= Word::reduce(out.rank(), raw);
    ++slot;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Theorem G instances

TheoremGCertificate verify_theoremG_instance(const IndexSet& E, int c, int n, const Word& g) {
  if (c < 1) throw DomainError("verify_theoremG_instance: c must be at least 1");
  if (static_cast<int>(E.size()) < c + 1)
    throw DomainError("verify_theoremG_instance: |E| must be at least c + 1");
  if (!E.contains(n)) throw DomainError("verify_theoremG_instance: n is not in E");

  TheoremGCertificate cert;
  for (int m : E)
    if (m != n) cert.vanishing_points.push_back(m);
  cert.image_at_n = phi(g, n);
  cert.hypothesis_met = std::all_of(cert.vanishing_points.begin(), cert.vanishing_points.end(),
                                    [&](int m) { return phi(g, m).empty(); });
  if (!cert.hypothesis_met) return cert;

  const auto polys = coefficient_polys(g, c);
  cert.low_degree_vanish_at_points = true;
  cert.low_degree_identically_zero = true;
  for (const auto& [W, p] : polys) {
    if (static_cast<int>(W.size()) >= c) continue;
    for (int m : cert.vanishing_points)
      if (p.evaluate(m) != 0) cert.low_degree_vanish_at_points = false;
    if (!p.is_zero()) cert.low_degree_identically_zero = false;
  }
  cert.conclusion_in_gamma = in_gamma(cert.image_at_n, c);
  return cert;
}

// ---------------------------------------------------------------------------
// Text formats

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

int parse_int(std::string_view s, std::string_view what) {
  s = trim(s);
  int v = 0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  if (first != last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last || first == last)
    throw ParseError("expected an integer for " + std::string(what) + ", got '" + std::string(s) + "'");
  return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

}  // namespace

std::string format_tuple(const Tuple& t) {
  const Alphabet ab = Alphabet::ab();
  std::string out;
  for (const auto& [n, w] : t.components()) {
    if (!out.empty()) out += " ; ";
    out += std::to_string(n) + ": " + format_word(w, ab);
  }
  return out;
}

Tuple parse_tuple(std::string_view text) {
  const Alphabet ab = Alphabet::ab();
  std::map<int, Word> comps;
  for (std::string_view part : split(text, ';')) {
    part = trim(part);
    if (part.empty()) throw ParseError("empty tuple component in '" + std::string(text) + "'");
    const auto colon = part.find(':');
    if (colon == std::string_view::npos) throw ParseError("tuple component without ':' in '" + std::string(part) + "'");
    const int n = parse_int(part.substr(0, colon), "tuple index");
    if (!comps.emplace(n, parse_word(part.substr(colon + 1), ab)).second)
      throw ParseError("duplicate tuple index " + std::to_string(n));
  }
  return Tuple(std::move(comps));
}

std::string format_index_set(const IndexSet& E) {
  std::string out = "{";
  bool first = true;
  for (int n : E) {
    if (!first) out += ",";
    out += std::to_string(n);
    first = false;
  }
  return out + "}";
}

IndexSet parse_index_set(std::string_view text) {
  text = trim(text);
  if (!text.empty() && text.front() == '{') {
    if (text.back() != '}') throw ParseError("unbalanced braces in index set");
    text = trim(text.substr(1, text.size() - 2));
  }
  IndexSet E;
  if (text.empty()) return E;
  for (std::string_view part : split(text, ',')) E.insert(parse_int(part, "index set element"));
  return E;
}

std::string format_spec(const SubdirectSpec& spec) {
  std::ostringstream out;
  out << "E = " << format_index_set(spec.E) << ", c = " << spec.c
      << ", family = " << provenance_name(spec.provenance);
  if (spec.contains_gamma_c) out << ", contains_gamma_c";
  out << '\n';
  for (const Tuple& t : spec.generators) out << format_tuple(t) << '\n';
  return out.str();
}

SubdirectSpec parse_spec(std::string_view text) {
  std::vector<std::string_view> lines;
  for (std::string_view line : split(text, '\n')) {
    line = trim(line);
    if (!line.empty() && line.front() != '#') lines.push_back(line);
  }
  if (lines.empty()) throw ParseError("spec file is empty");

  SubdirectSpec spec;
  std::string_view header = lines.front();
  if (header.substr(0, 1) != "E") throw ParseError("spec header must start with 'E = {...}'");
  const auto close = header.find('}');
  const auto eq = header.find('=');
  if (close == std::string_view::npos || eq == std::string_view::npos || eq > close)
    throw ParseError("malformed spec header");
  spec.E = parse_index_set(header.substr(eq + 1, close - eq));
  bool have_c = false;
  for (std::string_view field : split(header.substr(close + 1), ',')) {
    field = trim(field);
    if (field.empty()) continue;
    const auto feq = field.find('=');
    const std::string_view key = trim(field.substr(0, feq));
    const std::string_view value = feq == std::string_view::npos ? std::string_view{} : trim(field.substr(feq + 1));
    if (key == "c") {
      spec.c = parse_int(value, "c");
      have_c = true;
    } else if (key == "family") {
      if (value == "S")
        spec.provenance = Provenance::kSFamily;
      else if (value == "T")
        spec.provenance = Provenance::kTFamily;
      else if (value == "custom")
        spec.provenance = Provenance::kCustom;
      else
        throw ParseError("unknown family '" + std::string(value) + "'");
    } else if (key == "contains_gamma_c") {
      spec.contains_gamma_c = true;
    } else {
      throw ParseError("unknown spec header field '" + std::string(key) + "'");
    }
  }
  if (!have_c) throw ParseError("spec header lacks 'c = ...'");
  for (std::size_t i = 1; i < lines.size(); ++i) {
    Tuple t = parse_tuple(lines[i]);
    if (t.index_set() != spec.E) throw ParseError("tuple index set differs from header E");
    spec.generators.push_back(std::move(t));
  }
  if (spec.contains_gamma_c && !has_gamma_c_witness(spec))
    throw ParseError("contains_gamma_c claimed but the weight-c normal generators are missing");
  return spec;
}

}  // namespace rfg
