#pragma once

#include "mg/marked.hpp"

namespace mg {

// Outcome of a finite-radius witness search. `found` means a witness tuple
// was exhibited (violating the property, or certifying it for the rank
// detector); otherwise nothing was found within the stated radius, which for
// open properties is explicitly inconclusive.
struct Verdict {
  bool found = false;
  int radius = 0;
  std::vector<Word> witness;
  std::string note;
};

enum class Prop {
  abelian,
  nilpotent,
  torsion,
  commutative_transitive,
  csa,
  rank_at_most,
};

struct DetectOpts {
  int nilpotency_class = 2;     // "class less than k" with k = this value
  long long torsion_max_exp = 6;
  int rank_k = 1;
  int rank_word_len = 4;
  // Optional exact pruning: images of the marking letters under morphisms to
  // free groups. Elements can only commute if their images commute, so a
  // pair whose image roots disagree is skipped without consulting the
  // oracle. Soundness does not depend on the filters; completeness does not
  // suffer because the pruning is a necessary condition.
  std::vector<std::vector<Word>> filter_homs;
  BallOpts ball;
};

Verdict detect(const MarkedGroup& m, Prop prop, int radius, const DetectOpts& opts = {});

// First Betti number of the presented group: n minus the rank of the relator
// exponent matrix.
long long betti(int n, std::span<const Word> relators);

// Prenex universal sentence: forall x_1..x_p, a disjunction of systems of
// equations (must_be_identity = true) and inequations.
struct UniversalSentence {
  int arity = 0;
  std::vector<std::vector<std::pair<Word, bool>>> disjuncts;
};

// Exhaustive search for a falsifying tuple in the radius-R ball.
Verdict falsify_universal(const MarkedGroup& m, const UniversalSentence& s, int radius,
                          const DetectOpts& opts = {});

}  // namespace mg
