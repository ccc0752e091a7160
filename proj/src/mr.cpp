#include "mg/mr.hpp"

#include <numeric>
#include <sstream>

namespace mg {

namespace {

Word vector_word(const ZRow& v) {
  std::vector<Let> ls;
  for (std::size_t j = 0; j < v.size(); ++j) {
    long long e = v[j].convert_to<long long>();
    for (long long t = 0; t < std::llabs(e); ++t) ls.push_back(e > 0 ? Let(j + 1) : -Let(j + 1));
  }
  return Word(std::span<const Let>(ls));
}

std::string abelian_label(const std::vector<Int>& diag, int free_rank) {
  std::ostringstream os;
  bool first = true;
  if (free_rank > 0) {
    os << (free_rank == 1 ? "Z" : "Z^" + std::to_string(free_rank));
    first = false;
  }
  for (const Int& d : diag)
    if (d >= 2) {
      if (!first) os << " x ";
      os << "Z/" << d;
      first = false;
    }
  if (first) os << "1";
  return os.str();
}

}  // namespace

Diagram abelian_mr(const AbelianData& g) {
  Diagram d;
  const int n = g.rank;
  ZMat rows;
  for (const auto& r : g.rows) rows.push_back(ZRow(r.begin(), r.end()));
  if (rows.empty()) rows.push_back(ZRow(n, 0));
  Smith sm = smith_normal_form(rows);

  int r = 0;
  std::vector<Int> torsion;
  for (std::size_t i = 0; i < std::min(rows.size(), static_cast<std::size_t>(n)); ++i)
    if (sm.d[i][i] != 0) {
      ++r;
      torsion.push_back(sm.d[i][i]);
    }
  const int b = n - r;

  d.vertices.push_back({abelian_label(torsion, b), std_abelian(g)});

  Diagram::Edge e0;
  e0.parent = 0;
  e0.child = 1;
  if (b == 0) {
    d.vertices.push_back({"1", std_abelian({0, {}})});
    e0.images.assign(n, Word());
    for (int i = 1; i <= n; ++i) e0.kernel_gens.push_back(Word::letter(i));
    d.edges.push_back(std::move(e0));
    return d;
  }

  // the torsion-free quotient in the Smith coordinates
  d.vertices.push_back({abelian_label({}, b), std_abelian({b, {}})});
  for (int i = 0; i < n; ++i) {
    ZRow img(b);
    for (int j = 0; j < b; ++j) img[j] = sm.v[i][r + j];
    e0.images.push_back(vector_word(img));
  }
  for (int i = 0; i < r; ++i) e0.kernel_gens.push_back(vector_word(sm.vinv[i]));
  for (int j = 0; j < b; ++j) {
    ZRow sec(n);
    for (int i = 0; i < n; ++i) sec[i] = sm.vinv[r + j][i];
    e0.sections.push_back(vector_word(sec));
  }
  const bool root_is_free_leaf = (r == 0 && b >= 1);
  d.edges.push_back(std::move(e0));

  if (b >= 2 || root_is_free_leaf) {
    // all epimorphisms onto Z agree up to an automorphism of Z^b
    if (b >= 2) {
      d.vertices.push_back({"Z", std_abelian({1, {}})});
      Diagram::Edge e1;
      e1.parent = 1;
      e1.child = 2;
      e1.images.push_back(Word::letter(1));
      for (int j = 2; j <= b; ++j) {
        e1.images.push_back(Word());
        e1.kernel_gens.push_back(Word::letter(j));
      }
      e1.sections.push_back(Word::letter(1));
      e1.full_modular = true;
      d.edges.push_back(std::move(e1));
    }
  }
  return d;
}

namespace {

// N_3 = <a,b,c | a^2 b^2 c^2> as the amalgam F(a,b) *_{a^2 b^2 = c^-2} <c>,
// which stays inside the supported one-edge fragment.
MarkedGroup n3_group() {
  MarkedGroup f2 = std_free(2);
  MarkedGroup z = std_free(1);
  Word u = Word::letter(1).pow(2) * Word::letter(2).pow(2);
  Word v = Word::letter(1).pow(-2);
  return amalgam(f2, z, {u}, {v});
}

}  // namespace

Diagram surface_mr(const SurfaceSpec& s) {
  const int chi = euler_characteristic(s);
  Diagram d;

  if (chi <= -2) {
    MarkedGroup g = surface_group(s);
    std::string name = (s.orientable ? "S_" : "N_") + std::to_string(s.genus);
    d.vertices.push_back({name, g});
    d.vertices.push_back({name, g});
    Diagram::Edge id;
    id.parent = 0;
    id.child = 1;
    for (int i = 1; i <= g.arity(); ++i) {
      id.images.push_back(Word::letter(i));
      id.sections.push_back(Word::letter(i));
    }
    d.edges.push_back(std::move(id));

    const int c = maximal_pinching_count(s);
    if (s.orientable) {
      PinchingHom ph = standard_pinching_hom(s);
      d.vertices.push_back({"F_" + std::to_string(s.genus), ph.hom.target});
      Diagram::Edge e;
      e.parent = 1;
      e.child = 2;
      e.images = ph.hom.images;
      e.kernel_gens = ph.kernel_normal_gens;
      for (int i = 0; i < s.genus; ++i) e.sections.push_back(Word::letter(2 * i + 1));
      d.edges.push_back(std::move(e));
    } else {
      const int m = s.genus / 2;
      for (int variant = 0; variant < c; ++variant) {
        d.vertices.push_back({"F_" + std::to_string(m), std_free(m)});
        Diagram::Edge e;
        e.parent = 1;
        e.child = static_cast<int>(d.vertices.size()) - 1;
        Word w0 = Word::letter(1);
        if (variant > 0 && m >= 2) w0 = Word::letter(1) * Word::letter(2).pow(variant);
        e.images.push_back(w0);
        e.images.push_back(w0.inverse());
        for (int i = 2; i <= m; ++i) {
          e.images.push_back(Word::letter(i));
          e.images.push_back(Word::letter(i).inverse());
        }
        for (int i = 0; i < m; ++i)
          e.kernel_gens.push_back(Word::letter(2 * i + 1) * Word::letter(2 * i + 2));
        e.sections.push_back(Word::letter(1));
        for (int i = 2; i <= m; ++i) e.sections.push_back(Word::letter(2 * i - 1));
        d.edges.push_back(std::move(e));
      }
    }
    return d;
  }

  // chi >= -1: the maximal limit quotient is the torsion-free part of the
  // abelianization
  MarkedGroup root;
  std::string name;
  if (s.orientable && s.genus == 1) {
    root = surface_group(s);
    name = "T^2";
  } else if (!s.orientable && s.genus == 2) {
    root = surface_group(s);
    name = "K";
  } else if (!s.orientable && s.genus == 3) {
    root = n3_group();
    name = "N_3";
  } else {
    throw InputError("no diagram for this exceptional surface; use abelian_mr for its abelianization");
  }
  d.vertices.push_back({name, root});
  const int n = root.arity();
  ZMat rows;
  for (const Word& r : *root.relators) rows.push_back(exponent_vector(r, n));
  if (rows.empty()) rows.push_back(ZRow(n, 0));
  Smith sm = smith_normal_form(rows);
  int rk = 0;
  for (std::size_t i = 0; i < std::min(rows.size(), static_cast<std::size_t>(n)); ++i)
    if (sm.d[i][i] != 0) ++rk;
  const int b = n - rk;
  d.vertices.push_back({abelian_label({}, b), std_abelian({b, {}})});
  Diagram::Edge e;
  e.parent = 0;
  e.child = 1;
  for (int i = 0; i < n; ++i) {
    ZRow img(b);
    for (int j = 0; j < b; ++j) img[j] = sm.v[i][rk + j];
    e.images.push_back(vector_word(img));
  }
  for (int i = 0; i < rk; ++i) e.kernel_gens.push_back(vector_word(sm.vinv[i]));
  for (int j = 0; j < b; ++j) {
    ZRow sec(n);
    for (int i = 0; i < n; ++i) sec[i] = sm.vinv[rk + j][i];
    e.sections.push_back(vector_word(sec));
  }
  d.edges.push_back(std::move(e));
  return d;
}

long long abelian_shortest_length(std::span<const long long> images) {
  long long g = 0;
  for (long long x : images) g = std::gcd(g, x);
  if (g == 0) throw InputError("the zero morphism has no length");
  return g;
}

FactorResult factor_through(const std::vector<Word>& h_images, const MarkedGroup& target,
                            const Diagram& d, std::span<const Hom> modulars) {
  if (d.vertices.empty()) throw InputError("empty diagram");
  const int n = d.vertices[0].group.arity();
  if (static_cast<int>(h_images.size()) != n)
    throw InputError("morphism arity differs from the diagram root");

  // maximal downward paths from the root
  std::vector<std::vector<int>> paths;
  std::vector<std::vector<int>> children(d.vertices.size());
  for (std::size_t ei = 0; ei < d.edges.size(); ++ei)
    children[d.edges[ei].parent].push_back(static_cast<int>(ei));
  std::function<void(int, std::vector<int>&)> dfs = [&](int v, std::vector<int>& cur) {
    if (children[v].empty()) {
      paths.push_back(cur);
      return;
    }
    for (int ei : children[v]) {
      cur.push_back(ei);
      dfs(d.edges[ei].child, cur);
      cur.pop_back();
    }
  };
  std::vector<int> cur;
  dfs(0, cur);

  FactorResult res;
  for (int mi = -1; mi < static_cast<int>(modulars.size()); ++mi) {
    std::vector<Word> base = h_images;
    if (mi >= 0) {
      const Hom& tau = modulars[mi];
      if (static_cast<int>(tau.images.size()) != n)
        throw InputError("modular automorphism arity differs from the root");
      base.clear();
      for (const Word& w : tau.images) base.push_back(substitute(w, h_images));  // h o tau
    }
    for (const auto& path : paths) {
      std::vector<Word> cur_images = base;  // morphism from the current vertex
      bool ok = true;
      std::optional<Word> surviving;
      for (int ei : path) {
        const auto& edge = d.edges[ei];
        if (edge.full_modular) {
          // factoring through this edge is up to automorphisms of the child:
          // only non-vanishing of the induced morphism is required
          bool nonzero = false;
          for (const Word& w : cur_images)
            if (!relation_test(target, w)) nonzero = true;
          if (!nonzero) {
            ok = false;
            surviving = std::nullopt;
            break;
          }
          cur_images.assign(edge.sections.size(), Word());  // leaf reached, images unused below
          continue;
        }
        for (const Word& k : edge.kernel_gens)
          if (!relation_test(target, substitute(k, cur_images))) {
            ok = false;
            surviving = k;
            break;
          }
        if (!ok) break;
        std::vector<Word> next;
        for (const Word& sec : edge.sections) next.push_back(substitute(sec, cur_images));
        cur_images = std::move(next);
      }
      if (ok) {
        res.ok = true;
        res.modular_used = mi;
        res.path.push_back(0);
        for (int ei : path) res.path.push_back(d.edges[ei].child);
        res.note = mi < 0 ? "factors directly" : "factors after modular precomposition";
        return res;
      }
      if (!res.surviving && surviving) res.surviving = surviving;
    }
  }
  res.ok = false;
  res.note = "no maximal path admits the morphism (within the supplied modular set)";
  return res;
}

std::string Diagram::dot() const {
  std::ostringstream os;
  os << "digraph mr {\n  node [shape=box];\n";
  for (std::size_t i = 0; i < vertices.size(); ++i)
    os << "  v" << i << " [label=\"" << vertices[i].label << "\"];\n";
  for (const auto& e : edges) {
    os << "  v" << e.parent << " -> v" << e.child;
    if (!e.downward) os << " [style=dashed, dir=back]";
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace mg
