#pragma once

#include "mg/graph_oracle.hpp"
#include "mg/marked.hpp"

namespace mg {

// How a marked group was built. Twists and discriminating retractions need
// the splitting data back.
struct ConstructionMeta {
  enum class Kind {
    free_product,
    direct_product,
    amalgam,
    hnn,
    double_of,
    extend_centralizer,
    quotient,
  };
  Kind kind;
  std::vector<MarkedGroup> factors;
  // Edge tuples over the factors' marking letters (amalgam: u in factor 0,
  // v in factor 1; hnn: both in factor 0).
  std::vector<Word> edge_u, edge_v;
  // extend_centralizer bookkeeping
  Word ec_element;  // z, over the base marking
  Word ec_root;     // generator of Z(z) as a marking word
  int ec_rank = 0;  // p
};

MarkedGroup free_product(const MarkedGroup& a, const MarkedGroup& b);
MarkedGroup direct_product(const MarkedGroup& a, const MarkedGroup& b);

// a *_{<u>=<v>} b with the gluing u_i -> v_i. Tuples are words over the
// respective markings and must land in the supported edge fragment.
MarkedGroup amalgam(const MarkedGroup& a, const MarkedGroup& b, std::vector<Word> u,
                    std::vector<Word> v);

// <a, t | t u_i t^-1 = v_i>, stable letter appended to the marking.
MarkedGroup hnn(const MarkedGroup& a, std::vector<Word> u, std::vector<Word> v);

// G *_{Z(z)} (Z(z) x Z^p), marking extended by the p new free-abelian
// generators. z over the marking letters, nontrivial.
MarkedGroup extend_centralizer(const MarkedGroup& g, const Word& z, int p);

// Double of g over u (u not a proper power), marking S followed by the
// mirror copy.
MarkedGroup double_over(const MarkedGroup& g, const Word& u);

// Marked quotient of a free group by the given relators, when a supported
// oracle exists: all-commutators presentations become abelian, single
// generators become cyclic, and C'(1/6) sets get Dehn's algorithm.
MarkedGroup quotient(int n, std::vector<Word> relators);

}  // namespace mg
