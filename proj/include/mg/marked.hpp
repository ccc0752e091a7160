#pragma once

#include <functional>
#include <span>

#include "mg/oracle.hpp"

namespace mg {

struct ConstructionMeta;

// A point of the space of marked groups: a word-problem oracle for an ambient
// group together with an ordered marking tuple of words over the ambient
// alphabet. The marking need not generate the ambient group; the marked group
// is the subgroup it generates, with the relation test delegated through
// substitution.
struct MarkedGroup {
  OraclePtr oracle;
  std::vector<Word> marking;
  // Finite presentation over the marking letters, when one is known exactly.
  std::optional<std::vector<Word>> relators;
  std::shared_ptr<const ConstructionMeta> meta;

  int arity() const { return static_cast<int>(marking.size()); }
};

MarkedGroup std_free(int n);
MarkedGroup std_abelian(AbelianData data);
MarkedGroup finite_cyclic(long long m);  // (Z/m, (1))
MarkedGroup mark(OraclePtr oracle, std::vector<Word> marking);

// Word over the marking letters -> word over the ambient alphabet.
Word to_ambient(const MarkedGroup& m, const Word& w);

// true iff w (over the marking letters) is a relation of m.
bool relation_test(const MarkedGroup& m, const Word& w);

// Radius-R ball of the labeled Cayley graph, with shortlex-minimal vertex
// representatives, identity first, deterministic serialization.
struct Ball {
  int arity = 0;
  int radius = 0;
  std::vector<Word> verts;              // shortlex order, prefix-closed
  std::vector<std::vector<int>> edges;  // per vertex, 2*arity targets (g1, g1^-1, g2, ...); -1 = outside

  std::string serialize() const;
  std::string dot(const std::vector<std::string>* names = nullptr) const;
};

struct BallOpts {
  std::size_t vertex_cap = 2'000'000;
};
Ball ball(const MarkedGroup& m, int radius, const BallOpts& opts = {});

// All reduced relations of length <= L, shortlex order (the empty word
// included).
struct RelationSet {
  int length_bound = 0;
  std::vector<Word> words;
  bool operator==(const RelationSet&) const = default;
};
struct EnumOpts {
  unsigned long long word_cap = 400'000'000ull;
};
RelationSet relations_upto(const MarkedGroup& m, int L, const EnumOpts& opts = {});

// The marked subgroup (<T as words in the marking>, T).
MarkedGroup remark_subgroup(const MarkedGroup& m, std::span<const Word> t);

// Every relator is a relation of h; certifies h as a marked quotient of the
// group the relators present.
bool verify_marked_quotient(std::span<const Word> relators, const MarkedGroup& h);

// Vertices v of ball(m, radius) with [v, x] a relation. Sorted shortlex.
std::vector<Word> centralizer_trace(const MarkedGroup& m, const Word& x, int radius,
                                    const BallOpts& opts = {});

}  // namespace mg
