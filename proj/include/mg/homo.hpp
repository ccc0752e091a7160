#pragma once

#include <array>
#include <variant>

#include "mg/construct.hpp"
#include "mg/detect.hpp"

namespace mg {

// A morphism of marked groups given by generator images (words over the
// target marking), with a validity certificate: either every listed relator
// of the source is killed exactly, or all source relations up to a stated
// length were checked.
struct Hom {
  MarkedGroup source, target;
  std::vector<Word> images;

  struct ExactRelators {
    std::vector<Word> relators;
  };
  struct CheckedUpTo {
    int length = 0;
  };
  std::variant<ExactRelators, CheckedUpTo> validity;
};

Word apply(const Hom& h, const Word& w);
Hom compose(const Hom& outer, const Hom& inner);
Hom identity_hom(const MarkedGroup& m);

// Validates against a finite relator set: each relator must be a relation of
// the source (sanity of the certificate) and must map to a relation of the
// target. If no set is passed, the source must carry one.
Hom make_hom_exact(const MarkedGroup& source, const MarkedGroup& target, std::vector<Word> images,
                   std::optional<std::vector<Word>> relators = std::nullopt);

// Validates on all source relations of length <= len.
Hom make_hom_checked(const MarkedGroup& source, const MarkedGroup& target,
                     std::vector<Word> images, int len);

// Searches ball(source, radius) for a nontrivial element with trivial image.
Verdict injectivity_radius(const Hom& h, int radius, const BallOpts& opts = {});

// Largest R <= rmax with no kernel element in the R-ball.
int injectivity_radius_value(const Hom& h, int rmax, const BallOpts& opts = {});

// Dehn twist of a one-edge splitting along an edge-group element c (a word
// over the marking letters): amalgams conjugate the second-factor letters by
// c^m, HNN extensions send t to t c^m.
Hom dehn_twist(const MarkedGroup& m, const Word& c, long long exponent);

// Nontriviality of c^{k0} a_1 c^{k1} ... a_q c^{kq} in a free group for all
// exponent tuples in [k, k+window]^{q+1}. The a_i and c are words over an
// n-generator free group; c must commute with no a_i.
Verdict baumslag_window_check(int n, std::span<const Word> a, const Word& c, long long k,
                              long long window);

// The retraction of an extension of centralizers fixing the base letters and
// sending the i-th new generator to z^{exponents[i]}.
Hom ec_discriminator(const MarkedGroup& m, std::span<const long long> exponents);

// Exhaustive/pruned search for a morphism to the target (free or Z) mapping
// all witnesses to pairwise distinct nontrivial elements. Image words range
// over length <= len; constructed twist families are tried when the source
// carries splitting data. Absence of a result is inconclusive.
std::optional<Hom> search_discriminating(const MarkedGroup& m, std::span<const Word> witnesses,
                                         const MarkedGroup& target, int len);

// Integral 2x2 representation of the target free group's letters; every
// matrix must have determinant 1 and reduce to the identity mod p.
struct SL2Rep {
  std::vector<std::array<Int, 4>> mats;  // row-major a,b,c,d per letter
  long long p = 2;
};

std::array<Int, 4> sl2_evaluate(const SL2Rep& rep, const Word& w);

// true iff every source relator of h maps to the identity matrix and every
// witness maps to a non-identity matrix.
bool sl2_certify(const Hom& h, const SL2Rep& rep, std::span<const Word> witnesses);

}  // namespace mg
