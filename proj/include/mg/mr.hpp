#pragma once

#include "mg/surface.hpp"

namespace mg {

// Rooted tree of marked groups with morphism-labeled edges. Downward edges
// are epimorphisms (images generate, certified), upward edges are
// monomorphisms; no builder here emits upward edges, the type allows them so
// serialized diagrams with free-decomposition edges parse.
struct Diagram {
  struct Vertex {
    std::string label;
    MarkedGroup group;
  };
  struct Edge {
    int parent = 0;
    int child = 0;
    std::vector<Word> images;        // generator images of the edge morphism
    bool downward = true;
    std::vector<Word> kernel_gens;   // normal generators of the kernel, when stored
    std::vector<Word> sections;      // parent words mapping onto each child letter
    // The child's modular group is its full automorphism group, so
    // factorization through this edge is up to automorphisms of the child.
    bool full_modular = false;
  };
  std::vector<Vertex> vertices;  // index 0 is the root
  std::vector<Edge> edges;

  std::string dot() const;
};

// G -> G/torsion -> Z for a finitely generated abelian group; degenerate
// shapes (finite, virtually cyclic, free) collapse as appropriate.
Diagram abelian_mr(const AbelianData& g);

// chi <= -2: root -> same group -> one free quotient per maximal pinching
// class; chi >= -1: root -> torsion-free part of the abelianization.
Diagram surface_mr(const SurfaceSpec& s);

// Minimum over basis changes of the maximal generator image length for a
// morphism Z^p -> Z; equals the gcd of the image vector.
long long abelian_shortest_length(std::span<const long long> images);

struct FactorResult {
  bool ok = false;
  std::vector<int> path;            // vertex indices from the root
  int modular_used = -1;            // index into the supplied modulars, -1 = identity
  std::optional<Word> surviving;    // a kernel element the morphism fails to kill
  std::string note;
};

// Does the morphism (given by images root -> target) factor through a
// maximal path of the diagram, possibly after precomposition by one of the
// supplied modular automorphisms of the root?
FactorResult factor_through(const std::vector<Word>& h_images, const MarkedGroup& target,
                            const Diagram& d, std::span<const Hom> modulars = {});

}  // namespace mg
