#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mg/marked.hpp"

using namespace mg;

namespace {

const Word s1 = Word::letter(1);
const Word s2 = Word::letter(2);

MarkedGroup z_marked_1_i(long long i) {
  MarkedGroup z = std_abelian({1, {}});
  return mark(z.oracle, {Word::letter(1), Word::letter(1).pow(i)});
}

}  // namespace

TEST_CASE("relation tests") {
  MarkedGroup f2 = std_free(2);
  CHECK_FALSE(relation_test(f2, commutator(s1, s2)));

  MarkedGroup z13 = z_marked_1_i(3);
  CHECK(relation_test(z13, s2 * s1.pow(-3)));
  CHECK(relation_test(z13, commutator(s1, s2)));
  CHECK_FALSE(relation_test(z13, s2 * s1.pow(-2)));

  MarkedGroup z5 = finite_cyclic(5);
  CHECK(relation_test(z5, s1.pow(5)));
}

TEST_CASE("balls of small groups") {
  CHECK(ball(std_free(2), 1).verts.size() == 5);
  CHECK(ball(std_abelian({1, {}}), 2).verts.size() == 5);
  CHECK(ball(std_abelian({2, {}}), 2).verts.size() == 13);

  // no relation of length <= 2R+1 -> identical serializations; s^5 is a
  // relation of length 5 = 2*2+1, so Z/5 and Z differ at radius 2 but the
  // longer cycle Z/7 does not
  CHECK(ball(finite_cyclic(5), 1).serialize() == ball(std_abelian({1, {}}), 1).serialize());
  CHECK(ball(finite_cyclic(5), 2).serialize() != ball(std_abelian({1, {}}), 2).serialize());
  CHECK(ball(finite_cyclic(7), 2).serialize() == ball(std_abelian({1, {}}), 2).serialize());
  CHECK(ball(finite_cyclic(5), 2).verts.size() == 5);  // the whole group
}

TEST_CASE("balls are prefix closed and deterministic") {
  MarkedGroup z13 = z_marked_1_i(3);
  Ball b = ball(z13, 3);
  for (const Word& w : b.verts) {
    if (w.empty()) continue;
    Word prefix = concat_reduced_unchecked(
        std::vector<Let>(w.letters().begin(), w.letters().end() - 1));
    bool found = false;
    for (const Word& v : b.verts)
      if (v == prefix) found = true;
    CHECK(found);
  }
  CHECK(ball(z13, 3).serialize() == b.serialize());
}

TEST_CASE("keyed and generic ball paths agree") {
  // run the same marked group with the oracle's keys disabled via a wrapper
  MarkedGroup z13 = z_marked_1_i(3);
  Ball keyed = ball(z13, 3);

  struct NoKey final : Oracle {
    OraclePtr inner;
    NoKey(OraclePtr o) : Oracle(o->alphabet(), o->kind(), false), inner(std::move(o)) {}
    bool decide(const Word& w) const override { return inner->trivial(w); }
  };
  MarkedGroup opaque = z13;
  opaque.oracle = std::make_shared<NoKey>(z13.oracle);
  Ball generic = ball(opaque, 3);
  CHECK(keyed.serialize() == generic.serialize());
}

TEST_CASE("ball vertex cap") {
  BallOpts opts;
  opts.vertex_cap = 10;
  CHECK_THROWS_AS(ball(std_free(2), 4, opts), CapExceeded);
}

TEST_CASE("relation sets") {
  RelationSet rs = relations_upto(std_abelian({2, {}}), 4);
  bool has_comm = false;
  for (const Word& w : rs.words) {
    if (w == commutator(s1, s2)) has_comm = true;
    if (!w.empty()) CHECK(w.size() == 4);  // nothing shorter than the commutator
  }
  CHECK(has_comm);

  CHECK(relations_upto(std_free(2), 5).words.size() == 1);  // only the empty word

  RelationSet z13 = relations_upto(z_marked_1_i(3), 4);
  bool has_s2s1 = false;
  for (const Word& w : z13.words)
    if (w == s2 * s1.pow(-3)) has_s2s1 = true;
  CHECK(has_s2s1);
}

TEST_CASE("ball/relation duality") {
  // balls of radius L agree iff relations up to 2L+1 agree
  std::vector<std::pair<MarkedGroup, MarkedGroup>> pairs = {
      {finite_cyclic(5), std_abelian({1, {}})},
      {z_marked_1_i(4), std_abelian({2, {}})},
  };
  for (auto& [m1, m2] : pairs)
    for (int L = 1; L <= 2; ++L) {
      bool balls_eq = ball(m1, L).serialize() == ball(m2, L).serialize();
      bool rels_eq = relations_upto(m1, 2 * L + 1) == relations_upto(m2, 2 * L + 1);
      CHECK(balls_eq == rels_eq);
    }
}

TEST_CASE("remark subgroup") {
  MarkedGroup f2 = std_free(2);
  MarkedGroup squares = remark_subgroup(f2, std::vector<Word>{s1.pow(2), s2.pow(2)});
  CHECK(relations_upto(squares, 6).words.size() == 1);  // free of rank 2

  MarkedGroup same = remark_subgroup(f2, std::vector<Word>{s1, s2});
  CHECK(relations_upto(same, 4) == relations_upto(f2, 4));

  MarkedGroup zz = std_abelian({2, {}});
  MarkedGroup sub = remark_subgroup(zz, std::vector<Word>{s1});
  CHECK(sub.arity() == 1);
  CHECK_FALSE(relation_test(sub, s1.pow(3)));
}

TEST_CASE("marked quotient verification") {
  std::vector<Word> z5_pres = {s1.pow(5)};
  CHECK(verify_marked_quotient(z5_pres, finite_cyclic(5)));

  std::vector<Word> zz_pres = {commutator(s1, s2)};
  CHECK(verify_marked_quotient(zz_pres, z_marked_1_i(3)));
  CHECK_FALSE(verify_marked_quotient(zz_pres, std_free(2)));
}

TEST_CASE("centralizer traces") {
  auto tr = centralizer_trace(std_free(2), s1, 3);
  // exactly the powers a^k, |k| <= 3
  CHECK(tr.size() == 7);
  for (const Word& w : tr) {
    bool is_power = (w == s1.pow(static_cast<long long>(w.size()))) ||
                    (w == s1.pow(-static_cast<long long>(w.size())));
    CHECK(is_power);
  }

  auto tz = centralizer_trace(std_abelian({2, {}}), s1, 2);
  CHECK(tz.size() == ball(std_abelian({2, {}}), 2).verts.size());

  // closure under inversion and power containment
  for (const Word& w : tr) {
    bool found = false;
    for (const Word& v : tr)
      if (v == w.inverse()) found = true;
    CHECK(found);
  }
}

TEST_CASE("trace in a product") {
  MarkedGroup f2 = std_free(2);
  MarkedGroup z = std_abelian({1, {}});
  MarkedGroup fz = mark(make_product_oracle(f2.oracle, z.oracle),
                        {Word::letter(1), Word::letter(2), Word::letter(3)});
  auto tr = centralizer_trace(fz, s1, 2);
  for (const Word& w : tr) {
    // everything commuting with a is a^k z^l
    ZRow v = exponent_vector(w, 3);
    CHECK(v[1] == 0);
  }
  bool has_z = false;
  for (const Word& w : tr)
    if (w == Word::letter(3)) has_z = true;
  CHECK(has_z);
}

TEST_CASE("dot export") {
  std::string dot = ball(std_free(2), 1).dot();
  CHECK(dot.find("digraph") != std::string::npos);
  CHECK(dot.find("v0") != std::string::npos);
}
