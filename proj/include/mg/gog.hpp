#pragma once

#include <array>

#include "mg/construct.hpp"

namespace mg {

// Finite graphs of groups with free abelian edge groups, vertex groups free
// or finitely generated abelian. Edge monomorphisms are given by images of
// the edge basis: a single word into a free vertex (cyclic edge only),
// exponent words into an abelian vertex.
struct GraphOfGroups {
  struct Vertex {
    std::string name;
    bool free_kind = true;
    int free_rank = 0;
    AbelianData ab;
    std::vector<std::string> gen_names;  // for printing; defaults when empty
  };
  struct Edge {
    std::string name;
    std::array<int, 2> ends{0, 0};
    int rank = 1;  // 0 = trivial edge (free product)
    std::array<std::vector<Word>, 2> images;
  };
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;
};

// Fragment and injectivity checks; throws InputError naming the offence.
void validate(const GraphOfGroups& g);

// The cylinder graph: same edges, edge ends identified at a vertex when the
// edge-group images have commuting conjugates; cylinder vertex groups are
// the maximal abelian overgroups. Trivial edges carry no commutation
// constraint and are left out.
struct CylinderGraph {
  struct CylVertex {
    int gamma_vertex = 0;
    bool free_kind = true;
    Word root;        // free vertex: generator of the maximal cyclic overgroup
    int ab_rank = 0;  // abelian vertex: the whole group
  };
  std::vector<CylVertex> verts;
  std::vector<std::array<int, 2>> end_vertex;  // per edge; {-1,-1} for trivial edges
  std::vector<int> component;                  // per edge; -1 for trivial edges
  int component_count = 0;
};
CylinderGraph cylinder_graph(const GraphOfGroups& g);

struct CsaReport {
  bool pass = false;
  std::string detail;
};

// PASS iff the vertex groups are CSA (free / torsion-free abelian) and every
// cylinder component is a tree with edge maps isomorphisms away from some
// base vertex, or a circle of isomorphisms with identity holonomy.
CsaReport csa_criterion(const GraphOfGroups& g);

// Pulling the centralizer of the edge group across the oriented edge: the
// edge group grows to its maximal abelian overgroup at the origin end, the
// terminal vertex absorbs the enlargement. Fundamental group unchanged.
GraphOfGroups pull_centralizers(const GraphOfGroups& g, int edge, int origin_end);

struct PullResult {
  GraphOfGroups graph;
  int pulls = 0;
};
PullResult pull_all(const GraphOfGroups& g, int max_rounds = 64);

// One-edge graphs (and edgeless free products) compile to a marked group.
MarkedGroup gog_group(const GraphOfGroups& g);

// Dichotomy for the cyclic HNN <F, t | t u t^-1 = v> over a free group:
// either no conjugate of <v> meets <u> (the splitting is 1-acylindrical), or
// it rewrites so the two embeddings coincide, or the conjugacy inverts the
// generator.
struct HnnDichotomy {
  bool one_acylindrical = false;
  bool rewritable = false;
  bool orientation_reversing = false;
  std::optional<Word> conjugator;  // a with a.root(v).a^-1 = root(u)^{+-1}
  std::optional<Word> rewritten_u; // both embeddings after replacing t by (conjugator t)
};
HnnDichotomy hnn_rewrite_dichotomy(const Word& u, const Word& v);

}  // namespace mg
