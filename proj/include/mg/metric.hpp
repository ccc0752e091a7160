#pragma once

#include "mg/marked.hpp"

namespace mg {

// Agreement radius between two marked groups: either the exact maximal radius
// v on which the relation sets coincide (with a shortest distinguishing
// relation as witness), or a lower bound when no discrepancy shows up within
// the cutoff. The metric distance is e^{-v}; only v is ever computed.
struct Agreement {
  bool exact = false;
  int v = 0;
  std::optional<Word> witness;  // length v+1, a relation of exactly one side

  int value() const { return v; }
};

Agreement agreement_radius(const MarkedGroup& a, const MarkedGroup& b, int rmax,
                           const EnumOpts& opts = {});

// Per-index agreement radii of a family against a limit. Pure reporting;
// indices may be evaluated in parallel, results keyed by index.
std::vector<std::pair<long long, Agreement>> converge_check(
    const std::function<MarkedGroup(long long)>& family, const MarkedGroup& limit,
    std::span<const long long> indices, int rmax, int threads = 1);

// A marked group with a distinguished subgroup given by a generating tuple
// over the marking letters.
struct SubgroupPair {
  MarkedGroup group;
  std::vector<Word> subgroup;
};

struct HausdorffAgreement {
  Agreement agreement;
  // Subgroup membership is decided by searching subgroup words up to
  // trace_word_bound; a discrepancy that rests on an unmatched vertex is only
  // valid relative to that bound.
  int trace_word_bound = 0;
  bool bound_sensitive = false;
};

HausdorffAgreement hausdorff_agreement(const SubgroupPair& a, const SubgroupPair& b, int rmax,
                                       int trace_word_bound, const BallOpts& opts = {});

}  // namespace mg
