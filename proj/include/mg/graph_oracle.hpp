#pragma once

#include "mg/oracle.hpp"

namespace mg {

// One-edge splittings over a free abelian edge group of rank k.
//
// Supported edge embeddings:
//   k = 0           : trivial edge (free product), any vertex oracle
//   free vertex     : k = 1, image a nontrivial word (cyclic subgroup)
//   abelian vertex  : images of the edge basis as exponent vectors
//
// Anything else is rejected with a diagnostic naming the offending end.

// Amalgam  left *_{E} right ; alphabet = left's then right's (shifted).
struct AmalgamSpec {
  OraclePtr left, right;
  std::vector<Word> left_images;   // edge basis images, words over left's alphabet
  std::vector<Word> right_images;  // over right's alphabet
};
OraclePtr make_amalgam_oracle(AmalgamSpec spec);

// HNN  <base, t | t u_j t^-1 = v_j> ; alphabet = base's plus t as last letter.
struct HnnSpec {
  OraclePtr base;
  std::vector<Word> u_images, v_images;
};
OraclePtr make_hnn_oracle(HnnSpec spec);

struct AmalgamParts {
  OraclePtr left, right;
  std::vector<Word> left_images, right_images;
};
std::optional<AmalgamParts> amalgam_oracle_parts(const OraclePtr& o);

struct HnnParts {
  OraclePtr base;
  std::vector<Word> u_images, v_images;
};
std::optional<HnnParts> hnn_oracle_parts(const OraclePtr& o);

// Coordinates of an ambient vertex-group element in the edge subgroup, if it
// lies there. For amalgams, side 0 expects a word over the left vertex
// alphabet (unshifted) and side 1 over the right one; for HNN extensions the
// flag picks the u or v end.
std::optional<ZRow> amalgam_edge_coords(const OraclePtr& o, int side, const Word& w);
std::optional<ZRow> hnn_edge_coords(const OraclePtr& o, bool u_side, const Word& w);

}  // namespace mg
