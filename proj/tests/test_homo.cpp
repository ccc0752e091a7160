#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "mg/homo.hpp"
#include "mg/metric.hpp"

using namespace mg;

namespace {

const Word s1 = Word::letter(1);
const Word s2 = Word::letter(2);
const Word s3 = Word::letter(3);
const Word s4 = Word::letter(4);

MarkedGroup genus2_double() { return double_over(std_free(2), commutator(s1, s2)); }

Hom genus2_retraction() {
  return make_hom_exact(genus2_double(), std_free(2), {s1, s2, s1, s2});
}

}  // namespace

TEST_CASE("hom validation") {
  Hom h = genus2_retraction();
  CHECK(std::holds_alternative<Hom::ExactRelators>(h.validity));

  // Z^2 -> Z by s1 -> t, s2 -> t^3
  Hom z = make_hom_exact(std_abelian({2, {}}), std_abelian({1, {}}), {s1, s1.pow(3)});
  CHECK(apply(z, s2 * s1.inverse()) == s1.pow(2));

  // a claimed relator that is no relation of the source is rejected
  CHECK_THROWS_AS(make_hom_exact(std_free(2), std_abelian({2, {}}), {s1, s2},
                                 std::vector<Word>{commutator(s1, s2)}),
                  InputError);
  // and an image that fails to die is rejected
  CHECK_THROWS_AS(make_hom_exact(std_abelian({2, {}}), std_free(2), {s1, s2}), InputError);

  // checked-length validation catches surviving relations
  CHECK_THROWS_AS(make_hom_checked(std_abelian({2, {}}), std_free(2), {s1, s2}, 4), InputError);
  Hom ok = make_hom_checked(std_abelian({2, {}}), std_abelian({1, {}}), {s1, s1}, 4);
  CHECK(std::get<Hom::CheckedUpTo>(ok.validity).length == 4);
}

TEST_CASE("injectivity radii") {
  MarkedGroup dbl = genus2_double();
  Hom idm = identity_hom(dbl);
  CHECK_FALSE(injectivity_radius(idm, 2).found);

  Hom retr = genus2_retraction();
  Verdict v = injectivity_radius(retr, 2);
  REQUIRE(v.found);
  CHECK(v.witness[0] == s1 * s3.inverse());  // a abar^-1 dies first in shortlex

  Hom ab = make_hom_exact(std_free(2), std_abelian({2, {}}), {s1, s2});
  Verdict w = injectivity_radius(ab, 4);
  REQUIRE(w.found);
  CHECK(w.witness[0] == commutator(s1, s2));
  CHECK(injectivity_radius_value(ab, 6) == 3);
}

TEST_CASE("dehn twists") {
  MarkedGroup dbl = genus2_double();
  Word c = commutator(s1, s2);
  Hom tau = dehn_twist(dbl, c, 1);
  CHECK(tau.images[0] == s1);
  CHECK(tau.images[2] == c * s3 * c.inverse());

  MarkedGroup ec = extend_centralizer(std_free(2), commutator(s1, s2), 1);
  Hom tec = dehn_twist(ec, commutator(s1, s2), 2);
  CHECK(tec.images[2] == s3 * commutator(s1, s2).pow(2));

  // twist exponents compose to the identity on a ball
  Hom fwd = dehn_twist(dbl, c, 3);
  Hom bwd = dehn_twist(dbl, c, -3);
  Hom round = compose(bwd, fwd);
  CHECK_FALSE(injectivity_radius(round, 3).found);
  Ball b = ball(dbl, 2);
  for (const Word& w : b.verts)
    CHECK(relation_test(dbl, apply(round, w) * w.inverse()));

  CHECK_THROWS_AS(dehn_twist(dbl, s1, 1), InputError);  // a is not in the edge group
}

TEST_CASE("twisted retractions converge toward the identity") {
  MarkedGroup dbl = genus2_double();
  Hom retr = genus2_retraction();
  Word c = commutator(s1, s2);
  int prev = -1;
  bool reached2 = false;
  for (int mtw = 0; mtw <= 4; ++mtw) {
    Hom phi = compose(retr, dehn_twist(dbl, c, mtw));
    int r = injectivity_radius_value(phi, 2);
    CHECK(r >= prev);
    prev = r;
    if (r >= 2) reached2 = true;
  }
  CHECK(reached2);
}

TEST_CASE("baumslag window") {
  // no cancellation at all
  Verdict v = baumslag_window_check(2, std::vector<Word>{s2}, s1, 1, 3);
  CHECK_FALSE(v.found);

  // heavy interaction but the window keeps products alive
  Verdict w = baumslag_window_check(2, std::vector<Word>{s1.pow(-3) * s2}, s1, 1, 5);
  CHECK_FALSE(w.found);

  CHECK_THROWS_AS(baumslag_window_check(2, std::vector<Word>{s1.inverse()}, s1, 1, 3), InputError);

  // independent spot check by direct reduction
  std::mt19937 rng(97);
  std::uniform_int_distribution<long long> pick(2, 6);
  for (int i = 0; i < 100; ++i) {
    long long k0 = pick(rng), k1 = pick(rng);
    Word prod = s1.pow(k0) * s2 * s1.pow(k1);
    CHECK_FALSE(prod.empty());
  }
}

TEST_CASE("ec discriminators") {
  MarkedGroup ec = extend_centralizer(std_free(2), commutator(s1, s2), 1);
  Hom collapse = ec_discriminator(ec, std::vector<long long>{0});
  CHECK(apply(collapse, s3).empty());

  Hom k3 = ec_discriminator(ec, std::vector<long long>{3});
  CHECK(apply(k3, s3) == commutator(s1, s2).pow(3));
  // retraction property: identity on the base letters
  CHECK(apply(k3, s1) == s1);
  CHECK(apply(k3, s2) == s2);
  CHECK_FALSE(injectivity_radius(k3, 2).found);

  // growing exponents do not hurt the injectivity radius
  int r1 = injectivity_radius_value(ec_discriminator(ec, std::vector<long long>{1}), 2);
  int r10 = injectivity_radius_value(ec_discriminator(ec, std::vector<long long>{10}), 2);
  CHECK(r1 <= r10);
}

TEST_CASE("discriminating hom search") {
  // Z^2 separates (s1, s2, s1 s2^-1) into Z
  MarkedGroup z2 = std_abelian({2, {}});
  MarkedGroup z = std_abelian({1, {}});
  auto h = search_discriminating(z2, std::vector<Word>{s1, s2, s1 * s2.inverse()}, z, 3);
  REQUIRE(h.has_value());
  std::vector<Word> images = {apply(*h, s1), apply(*h, s2), apply(*h, s1 * s2.inverse())};
  for (const Word& w : images) CHECK_FALSE(relation_test(z, w));

  // F2 x Z cannot separate {[a,b], z}: every morphism to F2 kills one
  MarkedGroup fz = direct_product(std_free(2), std_abelian({1, {}}));
  auto none = search_discriminating(fz, std::vector<Word>{commutator(s1, s2), s3},
                                    std_free(2), 2);
  CHECK_FALSE(none.has_value());

  // the genus-2 double separates {a, abar, a abar^-1} into F2
  MarkedGroup dbl = genus2_double();
  auto g = search_discriminating(dbl, std::vector<Word>{s1, s3, s1 * s3.inverse()},
                                 std_free(2), 2);
  REQUIRE(g.has_value());
  MarkedGroup f2 = std_free(2);
  Word w1 = apply(*g, s1), w2 = apply(*g, s3), w3 = apply(*g, s1 * s3.inverse());
  CHECK_FALSE(relation_test(f2, w1));
  CHECK_FALSE(relation_test(f2, w2));
  CHECK_FALSE(relation_test(f2, w3));
  CHECK_FALSE(relation_test(f2, w1 * w2.inverse()));
}

TEST_CASE("sl2 certificates") {
  SL2Rep sanov;
  sanov.mats = {{1, 2, 0, 1}, {1, 0, 2, 1}};
  sanov.p = 2;

  // freeness evidence: no relation of length <= 8 among the two matrices
  const std::array<Int, 4> id = {1, 0, 0, 1};
  for (int l = 1; l <= 8; ++l) {
    bool any = false;
    reduced_words_of_length(2, l, [&](const Word& w) {
      if (sl2_evaluate(sanov, w) == id) any = true;
    });
    CHECK_FALSE(any);
  }

  Hom retr = genus2_retraction();
  std::vector<Word> witnesses = {s1, commutator(s1, s2)};
  CHECK(sl2_certify(retr, sanov, witnesses));

  // the plain retraction kills a abar^-1, so the twisted one is needed
  MarkedGroup dbl = genus2_double();
  Hom tau = dehn_twist(dbl, commutator(s1, s2), 1);
  Hom twisted = compose(retr, tau);
  std::vector<Word> more = {s1, commutator(s1, s2), s1 * s3.inverse(),
                            s2 * (s1 * s3.inverse()) * s2.inverse()};
  CHECK_FALSE(sl2_certify(retr, sanov, more));
  CHECK(sl2_certify(twisted, sanov, more));

  SL2Rep bad;
  bad.mats = {{2, 0, 0, 1}, {1, 0, 2, 1}};
  bad.p = 2;
  CHECK_THROWS_AS(sl2_certify(retr, bad, witnesses), InputError);

  SL2Rep notcong;
  notcong.mats = {{1, 1, 0, 1}, {1, 0, 2, 1}};
  notcong.p = 2;
  CHECK_THROWS_AS(sl2_certify(retr, notcong, witnesses), InputError);
}

TEST_CASE("alternating products of matrix powers stay alive") {
  // powers of non-commuting Sanov matrices: random alternating words of
  // length <= 8 map to non-identity
  SL2Rep sanov;
  sanov.mats = {{1, 2, 0, 1}, {1, 0, 2, 1}};
  sanov.p = 2;
  const std::array<Int, 4> id = {1, 0, 0, 1};
  std::mt19937 rng(55);
  std::uniform_int_distribution<long long> e(1, 4);
  std::uniform_int_distribution<int> first(0, 1);
  for (int i = 0; i < 200; ++i) {
    Word w;
    int side = first(rng);
    for (int j = 0; j < 4; ++j) {
      long long k = e(rng) * (first(rng) ? 1 : -1);
      w = w * Word::letter(side + 1).pow(k);
      side = 1 - side;
    }
    if (w.empty()) continue;
    CHECK(sl2_evaluate(sanov, w) != id);
  }
}
