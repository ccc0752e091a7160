#include "mg/gog.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace mg {

namespace {

std::string edge_where(const GraphOfGroups::Edge& e, int end) {
  return "edge " + (e.name.empty() ? "?" : e.name) + " end " + std::to_string(end);
}

ZMat vertex_lattice(const GraphOfGroups::Vertex& v) {
  ZMat rows;
  for (const auto& r : v.ab.rows) rows.push_back(ZRow(r.begin(), r.end()));
  return rows;
}

// conjugacy-class key of a primitive element, up to inversion: the least
// cyclic rotation among the core and its inverse
std::string conjugacy_key(const Word& root) {
  auto least_rot = [](const Word& w) {
    const auto& c = w.letters();
    std::vector<Let> best(c.begin(), c.end());
    for (std::size_t s = 1; s < c.size(); ++s) {
      std::vector<Let> rot;
      for (std::size_t i = 0; i < c.size(); ++i) rot.push_back(c[(s + i) % c.size()]);
      Word a = concat_reduced_unchecked(std::vector<Let>(best));
      Word b = concat_reduced_unchecked(std::vector<Let>(rot));
      if (shortlex_less(b, a)) best = std::move(rot);
    }
    return best;
  };
  Word core = cyclically_reduce(root).core;
  auto r1 = least_rot(core);
  auto r2 = least_rot(core.inverse());
  const auto& r = shortlex_less(concat_reduced_unchecked(std::vector<Let>(r2)),
                                concat_reduced_unchecked(std::vector<Let>(r1)))
                      ? r2
                      : r1;
  std::string s;
  for (Let l : r) {
    s += std::to_string(l);
    s += ' ';
  }
  return s;
}

bool vertex_torsion_free(const GraphOfGroups::Vertex& v) {
  if (v.free_kind) return true;
  Smith sm = smith_normal_form(vertex_lattice(v));
  for (const Int& d : sm.diagonal())
    if (d >= 2) return false;
  return true;
}

}  // namespace

void validate(const GraphOfGroups& g) {
  for (const auto& e : g.edges) {
    for (int end = 0; end < 2; ++end) {
      if (e.ends[end] < 0 || e.ends[end] >= static_cast<int>(g.vertices.size()))
        throw InputError("dangling " + edge_where(e, end));
      const auto& v = g.vertices[e.ends[end]];
      if (static_cast<int>(e.images[end].size()) != e.rank)
        throw InputError("image tuple size differs from the edge rank at " + edge_where(e, end));
      if (e.rank == 0) continue;
      if (v.free_kind) {
        if (e.rank != 1)
          throw InputError("edge of rank " + std::to_string(e.rank) +
                           " into a free vertex at " + edge_where(e, end));
        if (e.images[end][0].empty())
          throw InputError("trivial edge generator image at " + edge_where(e, end));
        if (e.images[end][0].max_index() > v.free_rank)
          throw InputError("image outside the vertex alphabet at " + edge_where(e, end));
      } else {
        ZMat stacked;
        for (const Word& w : e.images[end]) {
          if (w.max_index() > v.ab.rank)
            throw InputError("image outside the vertex alphabet at " + edge_where(e, end));
          stacked.push_back(exponent_vector(w, v.ab.rank));
        }
        const std::size_t k = stacked.size();
        for (const auto& r : vertex_lattice(v)) stacked.push_back(r);
        for (const auto& kr : left_kernel_rows(stacked))
          for (std::size_t i = 0; i < k; ++i)
            if (kr[i] != 0)
              throw InputError("edge map not injective at " + edge_where(e, end));
      }
    }
  }
}

CylinderGraph cylinder_graph(const GraphOfGroups& g) {
  validate(g);
  CylinderGraph cyl;
  cyl.end_vertex.assign(g.edges.size(), {-1, -1});
  cyl.component.assign(g.edges.size(), -1);

  // group the nontrivial edge ends at each vertex
  std::map<std::pair<int, std::string>, int> free_classes;  // (vertex, root class) -> cyl vertex
  std::map<int, int> abelian_classes;                       // vertex -> cyl vertex
  for (std::size_t ei = 0; ei < g.edges.size(); ++ei) {
    const auto& e = g.edges[ei];
    if (e.rank == 0) continue;
    for (int end = 0; end < 2; ++end) {
      const int gv = e.ends[end];
      const auto& v = g.vertices[gv];
      int id;
      if (v.free_kind) {
        Word root = primitive_root(e.images[end][0]).root;
        auto key = std::make_pair(gv, conjugacy_key(root));
        auto it = free_classes.find(key);
        if (it == free_classes.end()) {
          id = static_cast<int>(cyl.verts.size());
          cyl.verts.push_back({gv, true, root, 0});
          free_classes.emplace(key, id);
        } else {
          id = it->second;
        }
      } else {
        auto it = abelian_classes.find(gv);
        if (it == abelian_classes.end()) {
          id = static_cast<int>(cyl.verts.size());
          cyl.verts.push_back({gv, false, Word(), v.ab.rank});
          abelian_classes.emplace(gv, id);
        } else {
          id = it->second;
        }
      }
      cyl.end_vertex[ei][end] = id;
    }
  }

  // connected components of the cylinder graph
  std::vector<int> comp(cyl.verts.size(), -1);
  int next = 0;
  for (std::size_t start = 0; start < cyl.verts.size(); ++start) {
    if (comp[start] >= 0) continue;
    std::vector<int> stack = {static_cast<int>(start)};
    comp[start] = next;
    while (!stack.empty()) {
      int cur = stack.back();
      stack.pop_back();
      for (std::size_t ei = 0; ei < g.edges.size(); ++ei) {
        if (g.edges[ei].rank == 0) continue;
        for (int end = 0; end < 2; ++end)
          if (cyl.end_vertex[ei][end] == cur) {
            int other = cyl.end_vertex[ei][1 - end];
            if (comp[other] < 0) {
              comp[other] = next;
              stack.push_back(other);
            }
          }
      }
    }
    ++next;
  }
  cyl.component_count = next;
  for (std::size_t ei = 0; ei < g.edges.size(); ++ei)
    if (g.edges[ei].rank != 0) cyl.component[ei] = comp[cyl.end_vertex[ei][0]];
  return cyl;
}

namespace {

// Signed power d with image = root^d at a free cylinder vertex, or the whole
// map at an abelian one. iso means the edge group surjects onto the cylinder
// vertex group.
struct EndMap {
  bool iso = false;
  long long d = 0;  // rank-1 case
};

EndMap end_map(const GraphOfGroups& g, const CylinderGraph& cyl, std::size_t ei, int end) {
  const auto& e = g.edges[ei];
  const auto& cv = cyl.verts[cyl.end_vertex[ei][end]];
  EndMap out;
  if (cv.free_kind) {
    auto rp = primitive_root(e.images[end][0]);
    out.d = rp.power;
    if (!conjugate_in_free(rp.root, cv.root)) out.d = -out.d;  // conjugate to the inverse instead
    out.iso = (rp.power == 1);
    return out;
  }
  const auto& v = g.vertices[cv.gamma_vertex];
  ZMat rows;
  for (const Word& w : e.images[end]) rows.push_back(exponent_vector(w, v.ab.rank));
  for (const auto& r : vertex_lattice(v)) rows.push_back(r);
  ZMat h = hnf_rows(rows);
  out.iso = true;
  for (int j = 0; j < v.ab.rank && out.iso; ++j) {
    ZRow basis(v.ab.rank, 0);
    basis[j] = 1;
    if (!in_row_lattice(h, basis)) out.iso = false;
  }
  if (e.rank == 1 && cv.free_kind) out.d = 0;
  return out;
}

}  // namespace

CsaReport csa_criterion(const GraphOfGroups& g) {
  validate(g);
  for (const auto& v : g.vertices)
    if (!vertex_torsion_free(v))
      return {false, "vertex group " + v.name + " has torsion; outside the torsion-free fragment"};

  CylinderGraph cyl = cylinder_graph(g);
  for (int c = 0; c < cyl.component_count; ++c) {
    std::vector<std::size_t> comp_edges;
    std::vector<int> comp_verts;
    for (std::size_t ei = 0; ei < g.edges.size(); ++ei)
      if (cyl.component[ei] == c) comp_edges.push_back(ei);
    for (std::size_t vi = 0; vi < cyl.verts.size(); ++vi) {
      bool in = false;
      for (std::size_t ei : comp_edges)
        if (cyl.end_vertex[ei][0] == static_cast<int>(vi) ||
            cyl.end_vertex[ei][1] == static_cast<int>(vi))
          in = true;
      if (in) comp_verts.push_back(static_cast<int>(vi));
    }
    if (comp_edges.empty()) continue;
    const long long beta =
        static_cast<long long>(comp_edges.size()) - static_cast<long long>(comp_verts.size()) + 1;
    const std::string cname = "cylinder component " + std::to_string(c);
    if (beta >= 2)
      return {false, cname + " has first Betti number " + std::to_string(beta) +
                         "; its fundamental group cannot be abelian"};

    // distances from a candidate base over the component
    auto distances = [&](int base) {
      std::map<int, int> dist;
      dist[base] = 0;
      bool grew = true;
      while (grew) {
        grew = false;
        for (std::size_t ei : comp_edges) {
          int a = cyl.end_vertex[ei][0], b = cyl.end_vertex[ei][1];
          if (dist.count(a) && !dist.count(b)) dist[b] = dist[a] + 1, grew = true;
          else if (dist.count(b) && !dist.count(a)) dist[a] = dist[b] + 1, grew = true;
        }
      }
      return dist;
    };

    if (beta == 0) {
      bool some_base_works = false;
      for (int base : comp_verts) {
        auto dist = distances(base);
        bool ok = true;
        for (std::size_t ei : comp_edges) {
          int a = cyl.end_vertex[ei][0], b = cyl.end_vertex[ei][1];
          int far_end = dist[a] < dist[b] ? 1 : 0;
          if (!end_map(g, cyl, ei, far_end).iso) ok = false;
        }
        if (ok) {
          some_base_works = true;
          break;
        }
      }
      if (!some_base_works)
        return {false, cname + " is a tree with no base vertex seeing isomorphisms outward"};
      continue;
    }

    // beta == 1: strip hanging trees to expose the circle; each stripped
    // edge must be an isomorphism into its leaf side
    std::map<int, int> degree;
    std::vector<char> alive(comp_edges.size(), 1);
    for (std::size_t i = 0; i < comp_edges.size(); ++i) {
      ++degree[cyl.end_vertex[comp_edges[i]][0]];
      ++degree[cyl.end_vertex[comp_edges[i]][1]];
    }
    bool stripped = true;
    while (stripped) {
      stripped = false;
      for (std::size_t i = 0; i < comp_edges.size(); ++i) {
        if (!alive[i]) continue;
        std::size_t ei = comp_edges[i];
        int a = cyl.end_vertex[ei][0], b = cyl.end_vertex[ei][1];
        if (a == b) continue;
        int leaf_end = degree[a] == 1 ? 0 : (degree[b] == 1 ? 1 : -1);
        if (leaf_end < 0) continue;
        if (!end_map(g, cyl, ei, leaf_end).iso)
          return {false, cname + " has a non-isomorphic edge map off its circle"};
        alive[i] = 0;
        --degree[a];
        --degree[b];
        stripped = true;
      }
    }
    // the surviving edges form the circle: every map must be iso and the
    // rank-1 holonomy signs must multiply to the identity
    long long sign = 1;
    bool rank_one = true;
    for (std::size_t i = 0; i < comp_edges.size(); ++i) {
      if (!alive[i]) continue;
      std::size_t ei = comp_edges[i];
      EndMap m0 = end_map(g, cyl, ei, 0);
      EndMap m1 = end_map(g, cyl, ei, 1);
      if (!m0.iso || !m1.iso)
        return {false, cname + " is a circle with a non-isomorphic edge map"};
      if (g.edges[ei].rank != 1) rank_one = false;
      if (cyl.verts[cyl.end_vertex[ei][0]].free_kind && cyl.verts[cyl.end_vertex[ei][1]].free_kind)
        sign *= (m0.d * m1.d < 0 ? -1 : 1);
      else if (!cyl.verts[cyl.end_vertex[ei][0]].free_kind &&
               !cyl.verts[cyl.end_vertex[ei][1]].free_kind && g.edges[ei].rank == 1 &&
               g.vertices[cyl.verts[cyl.end_vertex[ei][0]].gamma_vertex].ab.rank == 1 &&
               g.vertices[cyl.verts[cyl.end_vertex[ei][1]].gamma_vertex].ab.rank == 1) {
        // rank-1 edge between infinite cyclic vertices: orientation is the
        // product of the image signs
        ZRow ia = exponent_vector(g.edges[ei].images[0][0], 1);
        ZRow ib = exponent_vector(g.edges[ei].images[1][0], 1);
        sign *= ((ia[0] < 0) != (ib[0] < 0)) ? -1 : 1;
      } else {
        rank_one = false;
      }
    }
    if (!rank_one)
      return {false, cname + ": circle holonomy outside the rank-1 fragment; cannot certify"};
    if (sign != 1)
      return {false, cname + " is a circle whose holonomy is inversion, not the identity"};
  }
  return {true, "vertex groups CSA and every cylinder component is a based tree of isomorphisms "
                "or a circle with identity holonomy"};
}

GraphOfGroups pull_centralizers(const GraphOfGroups& g, int edge, int origin_end) {
  validate(g);
  if (edge < 0 || edge >= static_cast<int>(g.edges.size())) throw InputError("no such edge");
  if (origin_end != 0 && origin_end != 1) throw InputError("orientation must be 0 or 1");
  GraphOfGroups out = g;
  auto& e = out.edges[edge];
  if (e.rank == 0) return out;  // nothing to pull across a trivial edge
  const int u = e.ends[origin_end];
  const int v = e.ends[1 - origin_end];
  const auto& uv = out.vertices[u];

  if (uv.free_kind) {
    auto rp = primitive_root(e.images[origin_end][0]);
    if (rp.power == 1) return out;  // already maximal
    const long long d = rp.power;
    e.images[origin_end][0] = rp.root;
    auto& tv = out.vertices[v];
    const Word z = e.images[1 - origin_end][0];
    if (tv.free_kind) {
      auto rz = primitive_root(z);
      if (rz.power % d != 0)
        throw InputError("unsupported centralizer computation: the terminal image has no " +
                         std::to_string(d) + "-th root in the free vertex group");
      e.images[1 - origin_end][0] = rz.root.pow(rz.power / d);
      return out;
    }
    ZRow m = exponent_vector(z, tv.ab.rank);
    bool divisible = std::all_of(m.begin(), m.end(), [&](const Int& x) { return x % d == 0; });
    if (divisible) {
      std::vector<Let> ls;
      for (std::size_t j = 0; j < m.size(); ++j) {
        long long q = (m[j] / d).convert_to<long long>();
        for (long long t = 0; t < std::llabs(q); ++t) ls.push_back(q > 0 ? Let(j + 1) : -Let(j + 1));
      }
      e.images[1 - origin_end][0] = Word(std::span<const Let>(ls));
      return out;
    }
    // enlarge the abelian terminal vertex by a d-th root of z
    const int oldrank = tv.ab.rank;
    tv.ab.rank += 1;
    std::vector<long long> newrow(tv.ab.rank, 0);
    for (int j = 0; j < oldrank; ++j) newrow[j] = m[j].convert_to<long long>();
    newrow[oldrank] = -d;
    for (auto& row : tv.ab.rows) row.push_back(0);
    tv.ab.rows.push_back(newrow);
    if (!vertex_torsion_free(tv))
      throw InputError("unsupported centralizer computation: the enlargement introduces torsion");
    e.images[1 - origin_end][0] = Word::letter(oldrank + 1);
    return out;
  }

  // abelian origin: saturate the image lattice
  ZMat erows;
  for (const Word& w : e.images[origin_end]) erows.push_back(exponent_vector(w, uv.ab.rank));
  ZMat sat = saturation_rows(erows, uv.ab.rank);
  if (hnf_rows(erows) == sat) return out;  // already saturated
  if (static_cast<int>(sat.size()) != e.rank)
    throw InputError("unsupported centralizer computation: saturation changes the edge rank");
  const auto& tv = out.vertices[v];
  if (tv.free_kind)
    throw InputError("unsupported centralizer computation: free terminal vertex for a lattice pull");
  // old edge basis in terms of the saturated one: erows = m * sat
  ZMat m;
  for (int i = 0; i < e.rank; ++i) {
    auto sol = solve_row_system(sat, erows[i]);
    if (!sol) throw InputError("saturation solve failed");
    m.push_back(*sol);
  }
  ZMat old_t;
  for (const Word& w : e.images[1 - origin_end]) old_t.push_back(exponent_vector(w, tv.ab.rank));
  // terminal images y with m * y = old_t, solved columnwise
  ZMat mt(m[0].size(), ZRow(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[0].size(); ++j) mt[j][i] = m[i][j];
  ZMat y(e.rank, ZRow(tv.ab.rank, 0));
  for (int col = 0; col < tv.ab.rank; ++col) {
    ZRow rhs(e.rank);
    for (int i = 0; i < e.rank; ++i) rhs[i] = old_t[i][col];
    auto sol = solve_row_system(mt, rhs);
    if (!sol)
      throw InputError("unsupported centralizer computation: the terminal side has no root");
    for (int i = 0; i < e.rank; ++i) y[i][col] = (*sol)[i];
  }
  for (int end_i = 0; end_i < e.rank; ++end_i) {
    std::vector<Let> ls;
    for (int j = 0; j < uv.ab.rank; ++j) {
      long long q = sat[end_i][j].convert_to<long long>();
      for (long long t = 0; t < std::llabs(q); ++t) ls.push_back(q > 0 ? Let(j + 1) : -Let(j + 1));
    }
    out.edges[edge].images[origin_end][end_i] = Word(std::span<const Let>(ls));
    std::vector<Let> lt;
    for (int j = 0; j < tv.ab.rank; ++j) {
      long long q = y[end_i][j].convert_to<long long>();
      for (long long t = 0; t < std::llabs(q); ++t) lt.push_back(q > 0 ? Let(j + 1) : -Let(j + 1));
    }
    out.edges[edge].images[1 - origin_end][end_i] = Word(std::span<const Let>(lt));
  }
  return out;
}

PullResult pull_all(const GraphOfGroups& g, int max_rounds) {
  PullResult res;
  res.graph = g;
  for (int round = 0; round < max_rounds; ++round) {
    bool changed = false;
    for (std::size_t ei = 0; ei < res.graph.edges.size(); ++ei)
      for (int end = 0; end < 2; ++end) {
        GraphOfGroups next = pull_centralizers(res.graph, static_cast<int>(ei), end);
        bool same = true;
        for (int e2 = 0; e2 < 2; ++e2)
          if (next.edges[ei].images[e2] != res.graph.edges[ei].images[e2]) same = false;
        if (next.vertices.size() != res.graph.vertices.size()) same = false;
        if (!same) {
          res.graph = std::move(next);
          ++res.pulls;
          changed = true;
        }
      }
    if (!changed) return res;
  }
  throw InputError("pulling centralizers did not stabilize");
}

MarkedGroup gog_group(const GraphOfGroups& g) {
  validate(g);
  auto vertex_group = [&](int vi) {
    const auto& v = g.vertices[vi];
    return v.free_kind ? std_free(v.free_rank) : std_abelian(v.ab);
  };
  if (g.edges.empty()) {
    if (g.vertices.empty()) throw InputError("empty graph of groups");
    MarkedGroup m = vertex_group(0);
    for (std::size_t i = 1; i < g.vertices.size(); ++i) m = free_product(m, vertex_group(static_cast<int>(i)));
    return m;
  }
  if (g.edges.size() > 1)
    throw InputError("only one-edge graphs of groups compile to an oracle in this fragment");
  const auto& e = g.edges[0];
  if (e.ends[0] == e.ends[1]) {
    MarkedGroup base = vertex_group(e.ends[0]);
    return hnn(base, e.images[0], e.images[1]);
  }
  MarkedGroup a = vertex_group(e.ends[0]);
  MarkedGroup b = vertex_group(e.ends[1]);
  return amalgam(a, b, e.images[0], e.images[1]);
}

HnnDichotomy hnn_rewrite_dichotomy(const Word& u, const Word& v) {
  if (u.empty() || v.empty()) throw InputError("trivial associated subgroup");
  HnnDichotomy out;
  auto ru = primitive_root(u);
  auto rv = primitive_root(v);
  CyclicForm cu = cyclically_reduce(ru.root);
  CyclicForm cv = cyclically_reduce(rv.root);
  const auto& pu = cu.core.letters();

  for (int invert = 0; invert < 2; ++invert) {
    Word base = invert ? cv.core.inverse() : cv.core;
    const auto& pv = base.letters();
    if (pv.size() != pu.size()) continue;
    for (std::size_t s = 0; s < pv.size(); ++s) {
      bool match = true;
      for (std::size_t i = 0; i < pv.size() && match; ++i) match = (pv[(s + i) % pv.size()] == pu[i]);
      if (!match) continue;
      // rot_s(base) = q^-1 base q with q its length-s prefix, so
      // a = gu q^-1 gv^-1 conjugates root(v) onto root(u)^{+-1}
      Word q = concat_reduced_unchecked(std::vector<Let>(pv.begin(), pv.begin() + s));
      Word a = cu.conjugator * q.inverse() * cv.conjugator.inverse();
      out.conjugator = a;
      out.orientation_reversing = invert;
      out.rewritable = (!invert && ru.power == rv.power);
      out.one_acylindrical = false;
      if (out.rewritable) out.rewritten_u = u;
      return out;
    }
  }
  out.one_acylindrical = true;
  return out;
}

}  // namespace mg
