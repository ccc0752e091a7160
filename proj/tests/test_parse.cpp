#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mg/parse.hpp"

using namespace mg;

namespace {
const std::vector<std::string> ab = {"a", "b"};
const Word s1 = Word::letter(1);
const Word s2 = Word::letter(2);
}  // namespace

TEST_CASE("word syntax") {
  CHECK(parse_word("a b", ab) == s1 * s2);
  CHECK(parse_word("ab", ab) == s1 * s2);  // juxtaposition without spaces
  CHECK(parse_word("a^-1", ab) == s1.inverse());
  CHECK(parse_word("a^3", ab) == s1.pow(3));
  CHECK(parse_word("[a,b]", ab) == commutator(s1, s2));
  CHECK(parse_word("[a,b]^2 b", ab) == commutator(s1, s2).pow(2) * s2);
  CHECK(parse_word("(ab)^-2", ab) == (s1 * s2).pow(-2));
  CHECK(parse_word("", ab).empty());
  CHECK(parse_word("a a^-1", ab).empty());

  // multi-character names resolve greedily
  std::vector<std::string> longnames = {"s1", "s12"};
  CHECK(parse_word("s12", longnames) == Word::letter(2));
  CHECK(parse_word("s1 s12", longnames) == Word::letter(1) * Word::letter(2));

  CHECK_THROWS_AS(parse_word("c", ab), InputError);
  CHECK_THROWS_AS(parse_word("[a b]", ab), InputError);

  CHECK(print_word(s1.pow(3) * s2.inverse(), ab) == "a^3 b^-1");
  CHECK(print_word(Word(), ab) == "1");
}

TEST_CASE("sentence syntax") {
  UniversalSentence s = parse_sentence("forall x y : ([x,y]=1)");
  CHECK(s.arity == 2);
  REQUIRE(s.disjuncts.size() == 1);
  CHECK(s.disjuncts[0][0].first == commutator(s1, s2));
  CHECK(s.disjuncts[0][0].second);

  UniversalSentence t = parse_sentence("forall x y : ([x,y]=1) | (x=1 & y!=1)");
  CHECK(t.disjuncts.size() == 2);
  CHECK(t.disjuncts[1].size() == 2);
  CHECK_FALSE(t.disjuncts[1][1].second);

  CHECK_THROWS_AS(parse_sentence("exists x : (x=1)"), InputError);
}

TEST_CASE("spec files") {
  const std::string text = R"(
# groups
group F2 = free(a,b)
group Z  = free(s)
group A  = abelian(rows=[[5]])
group Z2 = abelian(rank=2)
group D  = amalgam(F2, F2; [a,b] = [a,b])
group E  = hnn(F2; [a,b] -> [a,b])
group Q  = quotient(F2; relators=["[a,b]"])
group P  = product(F2, Z)
group W  = double(F2; "a b^-1 a")
group C  = ec(F2; "[a,b]", 1)
group S  = surface(orientable=true, genus=2)
marking M = (Z; "s", "s^3")
hom h = (Q -> Z; a: "s", b: "")
sentence comm = forall x y : ([x,y]=1)
gog K = ( vertex A = free(a,b) ; vertex B = abelian(rank=2) ; edge e = A["a^2"] -- B["s1"] )
)";
  SpecFile spec = parse_spec(text);
  CHECK(spec.groups.size() == 12);
  CHECK(spec.groups.at("F2").group.arity() == 2);
  CHECK(spec.groups.at("A").group.oracle->kind() == Oracle::Kind::abelian);
  CHECK(relation_test(spec.groups.at("A").group, Word::letter(1).pow(5)));
  CHECK(spec.groups.at("D").group.arity() == 4);
  CHECK(spec.groups.at("D").names == std::vector<std::string>{"a", "b", "a'", "b'"});
  CHECK(spec.groups.at("E").names.back() == "t");
  CHECK(relation_test(spec.groups.at("Q").group, commutator(s1, s2)));
  CHECK(spec.groups.at("P").group.oracle->kind() == Oracle::Kind::product);
  CHECK(spec.groups.at("C").group.arity() == 3);
  CHECK(spec.groups.at("S").group.oracle->kind() == Oracle::Kind::dehn);

  // the marking (Z, (1,3)) has the expected relation
  const MarkedGroup& m = spec.groups.at("M").group;
  CHECK(relation_test(m, Word::letter(2) * Word::letter(1).pow(-3)));

  CHECK(apply(spec.homs.at("h"), s1) == Word::letter(1));
  CHECK(spec.sentences.at("comm").arity == 2);
  CHECK(spec.gogs.at("K").edges.size() == 1);

  CHECK_THROWS_AS(parse_spec("group X = amalgam(F2, F2; a = a)"), InputError);  // undefined
  CHECK_THROWS_AS(parse_spec("blah"), InputError);
}

TEST_CASE("inline group expressions") {
  SpecFile empty;
  SpecEntry e = parse_group_expr("free(x,y)", empty);
  CHECK(e.group.arity() == 2);
  CHECK(e.names == std::vector<std::string>{"x", "y"});
  CHECK_THROWS_AS(parse_group_expr("nosuch(1)", empty), InputError);
}
