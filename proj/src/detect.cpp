#include "mg/detect.hpp"

#include <algorithm>
#include <unordered_map>

#include "mg/zlin.hpp"

namespace mg {

namespace {

std::string root_key(const Word& w) {
  auto rp = primitive_root(w);
  const Word inv = rp.root.inverse();
  const Word& r = shortlex_less(rp.root, inv) ? rp.root : inv;
  std::string s;
  for (Let l : r.letters()) {
    s += std::to_string(l);
    s += ' ';
  }
  return s;
}

// Commutation pre-filter built from morphisms to free groups: two elements
// can commute only if, in every image, either one dies or the primitive
// roots agree.
class CommFilter {
 public:
  CommFilter(const MarkedGroup& m, const std::vector<Word>& verts,
             const std::vector<std::vector<Word>>& homs) {
    const std::size_t v = verts.size();
    for (const auto& images : homs) {
      if (static_cast<int>(images.size()) != m.arity())
        throw InputError("filter hom image count differs from the marking arity");
      std::vector<std::string> keys(v);
      for (std::size_t i = 0; i < v; ++i) {
        Word img = substitute(verts[i], images);
        keys[i] = img.empty() ? std::string() : root_key(img);
      }
      keys_.push_back(std::move(keys));
    }
    if (!keys_.empty()) {
      for (std::size_t i = 1; i < v; ++i) {
        if (keys_[0][i].empty())
          wildcard0_.push_back(static_cast<int>(i));
        else
          bucket0_[keys_[0][i]].push_back(static_cast<int>(i));
      }
    }
  }

  bool active() const { return !keys_.empty(); }

  bool compatible(int a, int b) const {
    for (const auto& keys : keys_) {
      const auto& ka = keys[a];
      const auto& kb = keys[b];
      if (!ka.empty() && !kb.empty() && ka != kb) return false;
    }
    return true;
  }

  // Ascending candidate commuting partners for a (a sound superset).
  std::vector<int> candidates(int a, std::size_t v) const {
    if (!active()) {
      std::vector<int> all;
      all.reserve(v - 1);
      for (std::size_t i = 1; i < v; ++i) all.push_back(static_cast<int>(i));
      return all;
    }
    std::vector<int> out;
    if (keys_[0][a].empty()) {
      for (std::size_t i = 1; i < v; ++i)
        if (compatible(a, static_cast<int>(i))) out.push_back(static_cast<int>(i));
      return out;
    }
    auto it = bucket0_.find(keys_[0][a]);
    std::vector<int> merged;
    if (it != bucket0_.end()) merged = it->second;
    std::vector<int> all;
    all.resize(merged.size() + wildcard0_.size());
    std::merge(merged.begin(), merged.end(), wildcard0_.begin(), wildcard0_.end(), all.begin());
    for (int i : all)
      if (compatible(a, i)) out.push_back(i);
    return out;
  }

 private:
  std::vector<std::vector<std::string>> keys_;
  std::unordered_map<std::string, std::vector<int>> bucket0_;
  std::vector<int> wildcard0_;
};

Verdict no_witness(int radius, std::string note = {}) {
  Verdict v;
  v.found = false;
  v.radius = radius;
  v.note = std::move(note);
  return v;
}

Verdict detect_abelian(const MarkedGroup& m, int radius) {
  for (int i = 1; i <= m.arity(); ++i)
    for (int j = i + 1; j <= m.arity(); ++j) {
      Word c = commutator(Word::letter(i), Word::letter(j));
      if (!relation_test(m, c)) {
        Verdict v;
        v.found = true;
        v.radius = radius;
        v.witness = {c};
        v.note = "generator commutator is not a relation";
        return v;
      }
    }
  return no_witness(radius, "all generator commutators vanish; the marked group is abelian");
}

Verdict detect_nilpotent(const MarkedGroup& m, int radius, int k) {
  if (k < 1) throw InputError("nilpotency class bound must be >= 1");
  const int n = m.arity();
  std::vector<int> ix(k, 1);
  while (true) {
    Word w = Word::letter(ix[0]);
    for (int t = 1; t < k; ++t) w = commutator(w, Word::letter(ix[t]));
    if (!relation_test(m, w)) {
      Verdict v;
      v.found = true;
      v.radius = radius;
      v.witness = {w};
      v.note = "weight-" + std::to_string(k) + " left-normed generator commutator survives";
      return v;
    }
    int t = k - 1;
    while (t >= 0 && ix[t] == n) ix[t--] = 1;
    if (t < 0) break;
    ++ix[t];
  }
  return no_witness(radius, "nilpotent of class below " + std::to_string(k) + " on generators");
}

Verdict detect_torsion(const MarkedGroup& m, int radius, long long emax, const DetectOpts& opts) {
  Ball b = ball(m, radius, opts.ball);
  for (std::size_t i = 1; i < b.verts.size(); ++i)
    for (long long e = 2; e <= emax; ++e)
      if (relation_test(m, b.verts[i].pow(e))) {
        Verdict v;
        v.found = true;
        v.radius = radius;
        v.witness = {b.verts[i]};
        v.note = "element of order dividing " + std::to_string(e);
        return v;
      }
  return no_witness(radius, "no torsion of exponent <= " + std::to_string(emax));
}

// Lazily computed commuting sets over the filter candidates, shared by the
// triple and pair searches.
class CommuterCache {
 public:
  CommuterCache(const MarkedGroup& m, const Ball& b, const CommFilter& filter)
      : m_(m), b_(b), filter_(filter), sets_(b.verts.size()) {}

  const std::vector<int>& of(int i) {
    if (!sets_[i]) {
      std::vector<int> out;
      for (int x : filter_.candidates(i, b_.verts.size()))
        if (relation_test(m_, commutator(b_.verts[i], b_.verts[x]))) out.push_back(x);
      sets_[i] = std::move(out);
    }
    return *sets_[i];
  }

 private:
  const MarkedGroup& m_;
  const Ball& b_;
  const CommFilter& filter_;
  std::vector<std::optional<std::vector<int>>> sets_;
};

Verdict detect_ct(const MarkedGroup& m, int radius, const Ball& b, CommuterCache& comm) {
  const std::size_t v = b.verts.size();
  std::vector<char> in_za(v, 0);
  for (std::size_t a = 1; a < v; ++a) {
    const auto& za = comm.of(static_cast<int>(a));
    for (int x : za) in_za[x] = 1;
    for (int bb : za) {
      if (bb == static_cast<int>(a)) continue;
      for (int c : comm.of(bb)) {
        if (in_za[c]) continue;                                      // [a,c] = 1
        if (relation_test(m, commutator(b.verts[a], b.verts[c]))) continue;  // safety
        Verdict out;
        out.found = true;
        out.radius = radius;
        out.witness = {b.verts[a], b.verts[bb], b.verts[c]};
        out.note = "commutation fails to be transitive";
        for (int x : za) in_za[x] = 0;
        return out;
      }
    }
    for (int x : za) in_za[x] = 0;
  }
  return no_witness(radius, "no commutative-transitivity witness");
}

Verdict detect_ct(const MarkedGroup& m, int radius, const DetectOpts& opts) {
  Ball b = ball(m, radius, opts.ball);
  CommFilter filter(m, b.verts, opts.filter_homs);
  CommuterCache comm(m, b, filter);
  return detect_ct(m, radius, b, comm);
}

Verdict detect_csa(const MarkedGroup& m, int radius, const DetectOpts& opts) {
  Ball b = ball(m, radius, opts.ball);
  CommFilter filter(m, b.verts, opts.filter_homs);
  CommuterCache comm(m, b, filter);

  Verdict ct = detect_ct(m, radius, b, comm);
  if (ct.found) return ct;

  const std::size_t v = b.verts.size();
  std::vector<char> commutes(v, 0);
  for (std::size_t g = 1; g < v; ++g) {
    // [h, ghg^-1] = 1 forces the images of g and h onto a common root, so the
    // commutation filter applies to (g, h) as well
    const auto& cg = comm.of(static_cast<int>(g));
    for (int x : cg) commutes[x] = 1;
    for (int h : filter.candidates(static_cast<int>(g), v)) {
      if (h == static_cast<int>(g) || commutes[h]) continue;
      const Word& wg = b.verts[g];
      const Word& wh = b.verts[h];
      if (!relation_test(m, commutator(wh, wg * wh * wg.inverse()))) continue;
      if (relation_test(m, commutator(wg, wh))) continue;  // safety
      Verdict out;
      out.found = true;
      out.radius = radius;
      out.witness = {wg, wh};
      out.note = "maximal abelian subgroup fails malnormality";
      return out;
    }
    for (int x : cg) commutes[x] = 0;
  }
  return no_witness(radius, "no CSA witness");
}

Verdict detect_rank(const MarkedGroup& m, int radius, const DetectOpts& opts) {
  const int k = opts.rank_k;
  const int len = opts.rank_word_len;
  if (k < 1) throw InputError("rank bound must be >= 1");
  Ball b = ball(m, radius, opts.ball);
  const std::size_t v = b.verts.size();

  std::vector<Word> cand_words;
  for (int l = 1; l <= len; ++l)
    reduced_words_of_length(k, l, [&](const Word& w) { cand_words.push_back(w); });

  std::vector<std::size_t> tuple(k, 1);
  if (v <= 1) return no_witness(radius, "ball too small for a generating tuple");
  while (true) {
    std::vector<Word> gens;
    for (int i = 0; i < k; ++i) gens.push_back(b.verts[tuple[i]]);
    bool all_expressed = true;
    for (int i = 1; i <= m.arity() && all_expressed; ++i) {
      bool expressed = false;
      for (const Word& w : cand_words) {
        Word val = substitute(w, gens);
        if (relation_test(m, val * Word::letter(i).inverse())) {
          expressed = true;
          break;
        }
      }
      all_expressed = expressed;
    }
    if (all_expressed) {
      Verdict out;
      out.found = true;
      out.radius = radius;
      out.witness = gens;
      out.note = "tuple generates: every marking letter is a word of length <= " +
                 std::to_string(len) + " in it";
      return out;
    }
    int t = k - 1;
    while (t >= 0 && tuple[t] == v - 1) tuple[t--] = 1;
    if (t < 0) break;
    ++tuple[t];
  }
  return no_witness(radius, "no generating tuple found (inconclusive: the property is open)");
}

}  // namespace

Verdict detect(const MarkedGroup& m, Prop prop, int radius, const DetectOpts& opts) {
  if (radius < 1 && prop != Prop::abelian && prop != Prop::nilpotent)
    throw InputError("detector radius must be >= 1");
  switch (prop) {
    case Prop::abelian:
      return detect_abelian(m, radius);
    case Prop::nilpotent:
      return detect_nilpotent(m, radius, opts.nilpotency_class);
    case Prop::torsion:
      return detect_torsion(m, radius, opts.torsion_max_exp, opts);
    case Prop::commutative_transitive:
      return detect_ct(m, radius, opts);
    case Prop::csa:
      return detect_csa(m, radius, opts);
    case Prop::rank_at_most:
      return detect_rank(m, radius, opts);
  }
  throw InputError("unknown property");
}

long long betti(int n, std::span<const Word> relators) {
  ZMat rows;
  for (const Word& r : relators) rows.push_back(exponent_vector(r, n));
  return n - static_cast<long long>(mat_rank(rows));
}

Verdict falsify_universal(const MarkedGroup& m, const UniversalSentence& s, int radius,
                          const DetectOpts& opts) {
  if (s.arity < 1) throw InputError("sentence without bound variables");
  Ball b = ball(m, radius, opts.ball);
  const std::size_t v = b.verts.size();
  std::vector<std::size_t> tuple(s.arity, 0);
  while (true) {
    std::vector<Word> assign;
    for (int i = 0; i < s.arity; ++i) assign.push_back(b.verts[tuple[i]]);
    bool some_disjunct_holds = false;
    for (const auto& system : s.disjuncts) {
      bool holds = true;
      for (const auto& [w, must_eq] : system) {
        bool is_rel = relation_test(m, substitute(w, assign));
        if (is_rel != must_eq) {
          holds = false;
          break;
        }
      }
      if (holds) {
        some_disjunct_holds = true;
        break;
      }
    }
    if (!some_disjunct_holds) {
      Verdict out;
      out.found = true;
      out.radius = radius;
      out.witness = assign;
      out.note = "tuple falsifies every disjunct";
      return out;
    }
    int t = s.arity - 1;
    while (t >= 0 && tuple[t] == v - 1) tuple[t--] = 0;
    if (t < 0) break;
    ++tuple[t];
  }
  return no_witness(radius, "sentence holds on the ball");
}

}  // namespace mg
