#include "mg/marked.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

namespace mg {

MarkedGroup std_free(int n) {
  MarkedGroup m;
  m.oracle = make_free_oracle(n);
  for (int i = 1; i <= n; ++i) m.marking.push_back(Word::letter(i));
  m.relators = std::vector<Word>{};
  return m;
}

MarkedGroup std_abelian(AbelianData data) {
  MarkedGroup m;
  const int n = data.rank;
  std::vector<Word> rel;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) rel.push_back(commutator(Word::letter(i), Word::letter(j)));
  for (const auto& row : data.rows) {
    std::vector<Let> ls;
    for (int j = 0; j < n; ++j)
      for (long long t = 0; t < std::llabs(row[j]); ++t) ls.push_back(row[j] > 0 ? Let(j + 1) : -Let(j + 1));
    rel.push_back(Word(std::span<const Let>(ls)));
  }
  m.oracle = make_abelian_oracle(std::move(data));
  for (int i = 1; i <= n; ++i) m.marking.push_back(Word::letter(i));
  m.relators = std::move(rel);
  return m;
}

MarkedGroup finite_cyclic(long long mod) {
  AbelianData d;
  d.rank = 1;
  d.rows = {{mod}};
  return std_abelian(std::move(d));
}

MarkedGroup mark(OraclePtr oracle, std::vector<Word> marking) {
  for (const auto& w : marking)
    if (w.max_index() > oracle->alphabet()) throw InputError("marking word outside the ambient alphabet");
  MarkedGroup m;
  m.oracle = std::move(oracle);
  m.marking = std::move(marking);
  return m;
}

Word to_ambient(const MarkedGroup& m, const Word& w) { return substitute(w, m.marking); }

bool relation_test(const MarkedGroup& m, const Word& w) {
  if (w.max_index() > m.arity()) throw InputError("word letter outside the marking arity");
  return m.oracle->trivial(to_ambient(m, w));
}

namespace {

Let dir_letter(int d) { return (d % 2 == 0) ? Let(d / 2 + 1) : -Let(d / 2 + 1); }

}  // namespace

Ball ball(const MarkedGroup& m, int radius, const BallOpts& opts) {
  if (radius < 0) throw InputError("negative ball radius");
  const int n = m.arity();
  Ball b;
  b.arity = n;
  b.radius = radius;
  b.verts.push_back(Word());

  const bool keyed = m.oracle->has_element_keys();
  std::unordered_map<std::string, int> by_key;
  if (keyed) by_key.emplace(*m.oracle->element_key(Word()), 0);

  auto find_vertex = [&](const Word& w) -> int {
    if (keyed) {
      auto it = by_key.find(*m.oracle->element_key(to_ambient(m, w)));
      return it == by_key.end() ? -1 : it->second;
    }
    for (std::size_t i = 0; i < b.verts.size(); ++i)
      if (relation_test(m, w * b.verts[i].inverse())) return static_cast<int>(i);
    return -1;
  };

  std::size_t level_begin = 0;
  for (int depth = 0; depth < radius; ++depth) {
    const std::size_t level_end = b.verts.size();
    for (std::size_t vi = level_begin; vi < level_end; ++vi) {
      for (int d = 0; d < 2 * n; ++d) {
        Word cand = b.verts[vi] * Word::letter(dir_letter(d));
        if (cand.size() != b.verts[vi].size() + 1) continue;  // prefix, already present
        if (find_vertex(cand) >= 0) continue;
        if (b.verts.size() >= opts.vertex_cap)
          throw CapExceeded("ball vertex cap of " + std::to_string(opts.vertex_cap) + " exceeded");
        if (keyed) by_key.emplace(*m.oracle->element_key(to_ambient(m, cand)), static_cast<int>(b.verts.size()));
        b.verts.push_back(std::move(cand));
      }
    }
    level_begin = level_end;
    if (level_begin == b.verts.size()) break;  // group exhausted before the radius
  }

  b.edges.assign(b.verts.size(), std::vector<int>(2 * n, -1));
  for (std::size_t vi = 0; vi < b.verts.size(); ++vi)
    for (int d = 0; d < 2 * n; ++d)
      b.edges[vi][d] = find_vertex(b.verts[vi] * Word::letter(dir_letter(d)));
  return b;
}

std::string Ball::serialize() const {
  std::ostringstream os;
  os << "mgball 1\n";
  os << "arity " << arity << " radius " << radius << "\n";
  os << "vertices " << verts.size() << "\n";
  for (const auto& w : verts) {
    if (w.empty()) {
      os << ".\n";
      continue;
    }
    for (std::size_t i = 0; i < w.size(); ++i) os << (i ? " " : "") << w[i];
    os << "\n";
  }
  os << "edges\n";
  for (const auto& row : edges) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? " " : "") << row[i];
    os << "\n";
  }
  return os.str();
}

std::string Ball::dot(const std::vector<std::string>* names) const {
  auto letter_name = [&](int j) {
    if (names && j - 1 < static_cast<int>(names->size())) return (*names)[j - 1];
    return std::string("s") + std::to_string(j);
  };
  std::ostringstream os;
  os << "digraph ball {\n  rankdir=LR;\n";
  for (std::size_t i = 0; i < verts.size(); ++i) {
    std::string label = "1";
    for (Let l : verts[i].letters()) {
      if (label == "1")
        label.clear();
      else
        label += " ";
      label += letter_name(std::abs(l)) + (l < 0 ? "^-1" : "");
    }
    os << "  v" << i << " [label=\"" << label << "\"];\n";
  }
  for (std::size_t i = 0; i < edges.size(); ++i)
    for (int j = 1; j <= arity; ++j) {
      int fwd = edges[i][2 * (j - 1)];
      int bwd = edges[i][2 * (j - 1) + 1];
      if (fwd >= 0)
        os << "  v" << i << " -> v" << fwd << " [label=\"" << letter_name(j) << "\"];\n";
      else if (bwd >= 0)
        os << "  v" << i << " -> v" << bwd << " [label=\"" << letter_name(j) << "^-1\"];\n";
    }
  os << "}\n";
  return os.str();
}

RelationSet relations_upto(const MarkedGroup& m, int L, const EnumOpts& opts) {
  RelationSet rs;
  rs.length_bound = L;
  rs.words.push_back(Word());
  unsigned long long seen = 0;
  for (int len = 1; len <= L; ++len) {
    reduced_words_of_length(m.arity(), len, [&](const Word& w) {
      if (++seen > opts.word_cap) throw CapExceeded("relation enumeration cap exceeded");
      if (relation_test(m, w)) rs.words.push_back(w);
    });
  }
  return rs;
}

MarkedGroup remark_subgroup(const MarkedGroup& m, std::span<const Word> t) {
  MarkedGroup out;
  out.oracle = m.oracle;
  for (const Word& w : t) out.marking.push_back(to_ambient(m, w));
  return out;
}

bool verify_marked_quotient(std::span<const Word> relators, const MarkedGroup& h) {
  for (const Word& r : relators)
    if (!relation_test(h, r)) return false;
  return true;
}

std::vector<Word> centralizer_trace(const MarkedGroup& m, const Word& x, int radius, const BallOpts& opts) {
  if (relation_test(m, x)) throw InputError("centralizer of a trivial element");
  Ball b = ball(m, radius, opts);
  std::vector<Word> out;
  for (const Word& v : b.verts)
    if (relation_test(m, commutator(v, x))) out.push_back(v);
  return out;
}

}  // namespace mg
