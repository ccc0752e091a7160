#include "mg/construct.hpp"

#include <algorithm>

#include "mg/dehn.hpp"

namespace mg {

namespace {

Word shift_word(const Word& w, int offset) {
  std::vector<Let> ls;
  ls.reserve(w.size());
  for (Let l : w.letters()) ls.push_back(l > 0 ? l + offset : l - offset);
  return concat_reduced_unchecked(std::move(ls));
}

std::optional<std::vector<Word>> joint_relators(const MarkedGroup& a, const MarkedGroup& b) {
  if (!a.relators || !b.relators) return std::nullopt;
  std::vector<Word> rel = *a.relators;
  for (const Word& r : *b.relators) rel.push_back(shift_word(r, a.arity()));
  return rel;
}

bool is_standard_free(const MarkedGroup& g) {
  if (g.oracle->kind() != Oracle::Kind::free_group) return false;
  if (g.arity() != g.oracle->alphabet()) return false;
  for (int i = 0; i < g.arity(); ++i)
    if (g.marking[i] != Word::letter(i + 1)) return false;
  return true;
}

}  // namespace

MarkedGroup free_product(const MarkedGroup& a, const MarkedGroup& b) {
  MarkedGroup m;
  m.oracle = make_amalgam_oracle({a.oracle, b.oracle, {}, {}});
  m.marking = a.marking;
  for (const Word& w : b.marking) m.marking.push_back(shift_word(w, a.oracle->alphabet()));
  m.relators = joint_relators(a, b);
  auto meta = std::make_shared<ConstructionMeta>();
  meta->kind = ConstructionMeta::Kind::free_product;
  meta->factors = {a, b};
  m.meta = meta;
  return m;
}

MarkedGroup direct_product(const MarkedGroup& a, const MarkedGroup& b) {
  MarkedGroup m;
  m.oracle = make_product_oracle(a.oracle, b.oracle);
  m.marking = a.marking;
  for (const Word& w : b.marking) m.marking.push_back(shift_word(w, a.oracle->alphabet()));
  if (auto rel = joint_relators(a, b)) {
    for (int i = 1; i <= a.arity(); ++i)
      for (int j = a.arity() + 1; j <= a.arity() + b.arity(); ++j)
        rel->push_back(commutator(Word::letter(i), Word::letter(j)));
    m.relators = std::move(rel);
  }
  auto meta = std::make_shared<ConstructionMeta>();
  meta->kind = ConstructionMeta::Kind::direct_product;
  meta->factors = {a, b};
  m.meta = meta;
  return m;
}

MarkedGroup amalgam(const MarkedGroup& a, const MarkedGroup& b, std::vector<Word> u,
                    std::vector<Word> v) {
  if (u.size() != v.size()) throw InputError("amalgam edge tuples of different lengths");
  std::vector<Word> ua, vb;
  for (const Word& w : u) ua.push_back(to_ambient(a, w));
  for (const Word& w : v) vb.push_back(to_ambient(b, w));
  MarkedGroup m;
  m.oracle = make_amalgam_oracle({a.oracle, b.oracle, std::move(ua), std::move(vb)});
  m.marking = a.marking;
  for (const Word& w : b.marking) m.marking.push_back(shift_word(w, a.oracle->alphabet()));
  if (auto rel = joint_relators(a, b)) {
    for (std::size_t j = 0; j < u.size(); ++j)
      rel->push_back(u[j] * shift_word(v[j], a.arity()).inverse());
    m.relators = std::move(rel);
  }
  auto meta = std::make_shared<ConstructionMeta>();
  meta->kind = ConstructionMeta::Kind::amalgam;
  meta->factors = {a, b};
  meta->edge_u = std::move(u);
  meta->edge_v = std::move(v);
  m.meta = meta;
  return m;
}

MarkedGroup hnn(const MarkedGroup& a, std::vector<Word> u, std::vector<Word> v) {
  if (u.size() != v.size()) throw InputError("hnn edge tuples of different lengths");
  std::vector<Word> ua, va;
  for (const Word& w : u) ua.push_back(to_ambient(a, w));
  for (const Word& w : v) va.push_back(to_ambient(a, w));
  MarkedGroup m;
  m.oracle = make_hnn_oracle({a.oracle, std::move(ua), std::move(va)});
  m.marking = a.marking;
  m.marking.push_back(Word::letter(a.oracle->alphabet() + 1));
  if (a.relators) {
    std::vector<Word> rel = *a.relators;
    const Word t = Word::letter(a.arity() + 1);
    for (std::size_t j = 0; j < u.size(); ++j)
      rel.push_back(t * u[j] * t.inverse() * v[j].inverse());
    m.relators = std::move(rel);
  }
  auto meta = std::make_shared<ConstructionMeta>();
  meta->kind = ConstructionMeta::Kind::hnn;
  meta->factors = {a};
  meta->edge_u = std::move(u);
  meta->edge_v = std::move(v);
  m.meta = meta;
  return m;
}

MarkedGroup extend_centralizer(const MarkedGroup& g, const Word& z, int p) {
  if (p < 1) throw InputError("extension of centralizers needs rank >= 1");
  if (relation_test(g, z)) throw InputError("extend_centralizer of a trivial element");

  if (g.oracle->kind() == Oracle::Kind::abelian) {
    // the centralizer is the whole group: G x Z^p
    AbelianData free_part;
    free_part.rank = p;
    MarkedGroup m = direct_product(g, std_abelian(std::move(free_part)));
    auto meta = std::make_shared<ConstructionMeta>();
    meta->kind = ConstructionMeta::Kind::extend_centralizer;
    meta->factors = {g};
    meta->ec_element = z;
    meta->ec_root = z;
    meta->ec_rank = p;
    m.meta = meta;
    return m;
  }

  if (!is_standard_free(g))
    throw InputError("centralizer outside the supported fragment (free with standard marking, or abelian)");
  const Word root = primitive_root(to_ambient(g, z)).root;

  MarkedGroup m;
  if (p == 1) {
    m = hnn(g, {root}, {root});
  } else {
    AbelianData ab;
    ab.rank = 1 + p;
    MarkedGroup cyl = std_abelian(std::move(ab));
    m.oracle = make_amalgam_oracle({g.oracle, cyl.oracle, {root}, {Word::letter(1)}});
    m.marking = g.marking;
    for (int i = 2; i <= 1 + p; ++i)
      m.marking.push_back(Word::letter(g.oracle->alphabet() + i));  // skip the glued coordinate
    if (g.relators) {
      std::vector<Word> rel = *g.relators;
      const int n = g.arity();
      for (int i = 1; i <= p; ++i) {
        rel.push_back(commutator(Word::letter(n + i), root));
        for (int j = i + 1; j <= p; ++j)
          rel.push_back(commutator(Word::letter(n + i), Word::letter(n + j)));
      }
      m.relators = std::move(rel);
    }
  }
  auto meta = std::make_shared<ConstructionMeta>();
  meta->kind = ConstructionMeta::Kind::extend_centralizer;
  meta->factors = {g};
  meta->edge_u = {root};
  meta->edge_v = {root};
  meta->ec_element = z;
  meta->ec_root = root;
  meta->ec_rank = p;
  m.meta = meta;
  return m;
}

MarkedGroup double_over(const MarkedGroup& g, const Word& u) {
  if (relation_test(g, u)) throw InputError("double over a trivial element");
  if (g.oracle->kind() == Oracle::Kind::free_group) {
    auto rp = primitive_root(to_ambient(g, u));
    if (rp.power > 1)
      throw InputError("double over a proper power: the element is (" + rp.root.str() + ")^" +
                       std::to_string(rp.power));
  }
  MarkedGroup m = amalgam(g, g, {u}, {u});
  auto meta = std::make_shared<ConstructionMeta>(*m.meta);
  meta->kind = ConstructionMeta::Kind::double_of;
  m.meta = meta;
  return m;
}

MarkedGroup quotient(int n, std::vector<Word> relators) {
  std::vector<Word> rel;
  for (const Word& r : relators) {
    if (r.max_index() > n) throw InputError("relator outside the generator alphabet");
    if (!r.empty()) rel.push_back(r);
  }

  MarkedGroup m;
  auto finish = [&](OraclePtr o) {
    m.oracle = std::move(o);
    for (int i = 1; i <= n; ++i) m.marking.push_back(Word::letter(i));
    m.relators = relators;
    auto meta = std::make_shared<ConstructionMeta>();
    meta->kind = ConstructionMeta::Kind::quotient;
    m.meta = meta;
    return m;
  };

  if (rel.empty()) return finish(make_free_oracle(n));

  if (n == 1) {
    AbelianData d;
    d.rank = 1;
    for (const Word& r : rel) d.rows.push_back({static_cast<long long>(exponent_vector(r, 1)[0].convert_to<long long>())});
    return finish(make_abelian_oracle(std::move(d)));
  }

  // abelian route: every pairwise commutator appears among the relators
  bool abelian = true;
  for (int i = 1; i <= n && abelian; ++i)
    for (int j = i + 1; j <= n && abelian; ++j) {
      Word c = commutator(Word::letter(i), Word::letter(j));
      bool found = false;
      for (const Word& r : rel)
        if (conjugate_in_free(r, c) || conjugate_in_free(r, c.inverse())) found = true;
      abelian = found;
    }
  if (abelian) {
    AbelianData d;
    d.rank = n;
    for (const Word& r : rel) {
      ZRow v = exponent_vector(r, n);
      std::vector<long long> row;
      for (const auto& x : v) row.push_back(x.convert_to<long long>());
      if (std::any_of(row.begin(), row.end(), [](long long x) { return x != 0; })) d.rows.push_back(row);
    }
    return finish(make_abelian_oracle(std::move(d)));
  }

  // small-cancellation route
  std::vector<Word> cyc;
  for (const Word& r : rel) cyc.push_back(cyclically_reduce(r).core);
  try {
    return finish(make_dehn_oracle(n, cyc, 1, 6));
  } catch (const InputError& e) {
    throw InputError(std::string("no supported oracle for this quotient: ") + e.what());
  }
}

}  // namespace mg
