#pragma once

#include "mg/homo.hpp"

namespace mg {

// Closed surfaces: orientable of genus g, or non-orientable with k
// cross-caps.
struct SurfaceSpec {
  bool orientable = true;
  int genus = 2;  // cross-cap count when non-orientable
};

int euler_characteristic(const SurfaceSpec& s);

// Standard one-relator presentation word: [a1,b1]...[ag,bg] with letters
// (a1,b1,a2,b2,...), or a1^2...ak^2.
Word surface_relator(const SurfaceSpec& s);

// Word-problem oracle: Dehn's algorithm for chi <= -2, torus and Klein
// bottle as graph-of-groups cases, other exceptional surfaces rejected by
// name.
MarkedGroup surface_group(const SurfaceSpec& s);

struct PinchingHom {
  Hom hom;
  std::vector<Word> kernel_normal_gens;
};

// The standard maximal-pinching quotient onto a free group: a_i -> x_i,
// b_i -> 1 in the orientable case, paired a-letters onto x_i, x_i^-1 in the
// even-characteristic non-orientable case.
PinchingHom standard_pinching_hom(const SurfaceSpec& s);

// Number of maximal pinchings up to homeomorphism: 1 (orientable), 1 (odd
// characteristic), 1 - chi/2 (even characteristic, non-orientable).
int maximal_pinching_count(const SurfaceSpec& s);

// Exhaustive scan of the radius-L ball of F_2 for triples with
// a^2 b^2 c^2 = 1; a witness is a non-pairwise-commuting solution.
Verdict lyndon_scan(int L, const BallOpts& opts = {});

}  // namespace mg
