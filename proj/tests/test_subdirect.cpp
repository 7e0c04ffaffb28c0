#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "rfg/coset.hpp"
#include "rfg/error.hpp"
#include "rfg/magnus.hpp"
#include "rfg/subdirect.hpp"
#include "support.hpp"

using namespace rfg;

namespace {

const Alphabet kAb = Alphabet::ab();
const Alphabet kGamma = Alphabet::wxyz();

Word ab(const char* text) { return parse_word(text, kAb); }
Word gw(const char* text) { return parse_word(text, kGamma); }

std::vector<Word> product_words(const SubdirectSpec& spec) {
  std::vector<Word> out;
  for (const Tuple& t : spec.generators) out.push_back(tuple_to_product_word(t));
  return out;
}

// Every generator of `inner` fixes the subgroup coset of the table for
// `outer`, i.e. <inner> <= <outer> (the table must be complete).
bool contained_in(const SubdirectSpec& inner, const CosetTable& outer) {
  for (const Word& h : product_words(inner))
    if (outer.act(0, h) != 0) return false;
  return true;
}

}  // namespace

TEST_CASE("phi") {
  CHECK(phi(gw("y"), 2) == ab("a a"));
  CHECK(phi(gw("y"), 0).empty());
  CHECK(phi(gw("z"), -2) == ab("b^-2"));
  for (int n = -3; n <= 3; ++n)
    for (int m = -3; m <= 3; ++m) CHECK(phi(gw("y") * power(gw("w"), -m), n) == power(ab("a"), n - m));
  CHECK_THROWS_AS(phi(ab("a"), 1), MismatchError);
}

TEST_CASE("phi_tuple") {
  const IndexSet E{1, 2, 3, 4};
  CHECK(format_tuple(phi_tuple(gw("w"), E)) == "1: a ; 2: a ; 3: a ; 4: a");
  CHECK(format_tuple(phi_tuple(gw("y"), E)) == "1: a ; 2: a^2 ; 3: a^3 ; 4: a^4");
  CHECK(phi_tuple(gw("x y"), {0}).at(0) == phi(gw("x y"), 0));
  CHECK_THROWS_AS(phi_tuple(gw("w"), {}), DomainError);
}

TEST_CASE("build_S") {
  const SubdirectSpec s = build_S({1, 2, 3, 4}, 3);
  CHECK(s.generators.size() == 4 + 4 * 4);
  CHECK(s.contains_gamma_c);
  CHECK(has_gamma_c_witness(s));
  CHECK(format_tuple(s.generators[0]) == "1: a ; 2: a ; 3: a ; 4: a");
  CHECK(format_tuple(s.generators[1]) == "1: b ; 2: b ; 3: b ; 4: b");
  CHECK(format_tuple(s.generators[2]) == "1: a ; 2: a^2 ; 3: a^3 ; 4: a^4");
  CHECK(format_tuple(s.generators[3]) == "1: b ; 2: b^2 ; 3: b^3 ; 4: b^4");
  // The two normal generators listed for gamma_3 at each coordinate are present.
  const std::set<Tuple> gens(s.generators.begin(), s.generators.end());
  for (int n : s.E) {
    CHECK(gens.contains(embed_at(s.E, n, ab("[[a,b],a]"))));
    CHECK(gens.contains(embed_at(s.E, n, ab("[[a,b],b]"))));
  }
  for (std::size_t i = 4; i < s.generators.size(); ++i) {
    const Tuple& t = s.generators[i];
    int nontrivial = 0;
    for (const auto& [n, w] : t.components())
      if (!w.empty()) {
        ++nontrivial;
        CHECK(in_gamma(w, 3));
      }
    CHECK(nontrivial == 1);
  }

  CHECK(build_S({0, 1}, 2).generators.size() == 8);
  CHECK_THROWS_AS(build_S({0}, 2), DomainError);
  CHECK_THROWS_AS(build_S({0, 1}, 1), DomainError);
}

TEST_CASE("build_T") {
  const SubdirectSpec t = build_T(3, {}, 2);
  CHECK(t.generators.size() == 3 * 2);
  CHECK(t.contains_gamma_c);
  CHECK(t.provenance == Provenance::kTFamily);

  const IndexSet E{1, 2, 3};
  std::vector<Tuple> phis;
  for (const char* g : {"w", "x", "y", "z"}) phis.push_back(phi_tuple(gw(g), E));
  CHECK(build_T(3, phis, 3).generators == build_S(E, 3).generators);

  CHECK_THROWS_AS(build_T(2, {phi_tuple(gw("w"), E)}, 2), MismatchError);
}

TEST_CASE("project") {
  const SubdirectSpec s = build_S({1, 2, 3, 4}, 3);
  const SubdirectSpec p = project(s, {1, 2});
  CHECK(p.contains_gamma_c);
  const SubdirectSpec direct = build_S({1, 2}, 3);
  // Same phi-images; the extra R-tuples from coordinates 3, 4 become identities.
  CHECK(std::equal(direct.generators.begin(), direct.generators.begin() + 4, p.generators.begin()));
  std::set<Tuple> nonidentity;
  for (const Tuple& t : p.generators)
    if (!t.is_identity()) nonidentity.insert(t);
  CHECK(nonidentity == std::set<Tuple>(direct.generators.begin(), direct.generators.end()));

  CHECK(project(s, s.E).generators == s.generators);

  // Singleton projection: the phi-images generate F, since they include a, b.
  const SubdirectSpec single = project(s, {3});
  CHECK(single.generators[0].at(3) == ab("a"));
  CHECK(single.generators[1].at(3) == ab("b"));

  CHECK_THROWS_AS(project(s, {1, 7}), DomainError);
  CHECK_THROWS_AS(project(s, {}), DomainError);
}

TEST_CASE("translate") {
  CHECK(translate({0, 1}, 1) == IndexSet{1, 2});
  CHECK(translate({0, 1}, 0) == IndexSet{0, 1});
  const SubdirectSpec s = build_S({0, 2}, 2);
  CHECK(translate_spec(s, 0).generators == s.generators);

  // Re-indexed phi-images are phi-images of the shifted Gamma generators.
  const SubdirectSpec shifted = translate_spec(build_S({0, 1}, 2), 1);
  CHECK(shifted.E == IndexSet{1, 2});
  const char* names[] = {"w", "x", "y", "z"};
  for (int i = 0; i < 4; ++i)
    CHECK(shifted.generators[i] == phi_tuple(gamma_shift(gw(names[i]), 1), {1, 2}));
  const SubdirectSpec target = build_S({1, 2}, 2);
  CHECK(std::equal(shifted.generators.begin() + 4, shifted.generators.end(), target.generators.begin() + 4));

  auto rng = testing::make_rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    const Word g = testing::random_word(rng, 4, 8);
    const int t = static_cast<int>(rng() % 7) - 3;
    for (int n = -2; n <= 2; ++n) CHECK(phi(gamma_shift(g, t), n + t) == phi(g, n));
  }
}

TEST_CASE("translated S generates the same subgroup (finite-index check)") {
  // Both subgroups contain gamma_2 and have finite index in F x F, so
  // mutual containment can be read off complete coset tables.
  const SubdirectSpec shifted = translate_spec(build_S({0, 2}, 2), 1);
  const SubdirectSpec target = build_S({1, 3}, 2);
  const Presentation ff = direct_product_presentation(2, 2);
  const CosetTable t_shifted = todd_coxeter(ff, product_words(shifted));
  const CosetTable t_target = todd_coxeter(ff, product_words(target));
  REQUIRE(t_shifted.complete());
  REQUIRE(t_target.complete());
  CHECK(index(t_shifted) == 4);
  CHECK(contained_in(shifted, t_target));
  CHECK(contained_in(target, t_shifted));
}

TEST_CASE("verify_theoremG_instance") {
  const Word g = gw("[y, z x^-1]");
  const TheoremGCertificate cert = verify_theoremG_instance({0, 1, 2}, 2, 2, g);
  CHECK(phi(g, 0).empty());
  CHECK(phi(g, 1).empty());
  CHECK(cert.hypothesis_met);
  CHECK(cert.vanishing_points == std::vector<int>{0, 1});
  CHECK(cert.certified());
  CHECK(in_gamma(cert.image_at_n, 2));

  CHECK(verify_theoremG_instance({0, 1, 2, 3}, 3, 1, Word(4)).certified());

  const TheoremGCertificate fails = verify_theoremG_instance({0, 1, 2}, 2, 0, gw("w"));
  CHECK(!fails.hypothesis_met);
  CHECK(!fails.certified());

  CHECK_THROWS_AS(verify_theoremG_instance({0, 1}, 2, 0, g), DomainError);
  CHECK_THROWS_AS(verify_theoremG_instance({0, 1, 2}, 2, 5, g), DomainError);
}

TEST_CASE("text formats") {
  const SubdirectSpec s = build_S({-1, 2, 5}, 3);
  const SubdirectSpec back = parse_spec(format_spec(s));
  CHECK(back.E == s.E);
  CHECK(back.c == s.c);
  CHECK(back.generators == s.generators);
  CHECK(back.contains_gamma_c);
  CHECK(back.provenance == Provenance::kSFamily);

  CHECK(parse_tuple("2: a^2 ; 1: b") == Tuple({{1, ab("b")}, {2, ab("a a")}}));
  CHECK(parse_index_set("{0, -2, 3}") == IndexSet{-2, 0, 3});
  CHECK(parse_index_set("1,2") == IndexSet{1, 2});

  const SubdirectSpec custom = parse_spec("E = {0,1}, c = 2\n0: a ; 1: a\n");
  CHECK(!custom.contains_gamma_c);
  CHECK(custom.provenance == Provenance::kCustom);

  CHECK_THROWS_AS(parse_spec("E = {0,1}, c = 2, contains_gamma_c\n0: a ; 1: a\n"), ParseError);
  CHECK_THROWS_AS(parse_spec("E = {0,1}\n"), ParseError);
  CHECK_THROWS_AS(parse_spec("E = {0,1}, c = 2\n0: a\n"), ParseError);
  CHECK_THROWS_AS(parse_tuple("0 a"), ParseError);
}
