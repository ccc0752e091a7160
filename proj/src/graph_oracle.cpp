#include "mg/graph_oracle.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace mg {

namespace {

std::string word_bytes(const Word& w) {
  std::string s;
  for (Let l : w.letters()) {
    s += std::to_string(l);
    s += ' ';
  }
  return s;
}

// How a rank-k free abelian edge group sits inside one vertex group.
struct EdgeEnd {
  enum class Kind { trivial, cyclic, lattice };
  Kind kind = Kind::trivial;
  OraclePtr side;
  int k = 0;

  // cyclic (free vertex)
  Word u, u_root, u_root_inv;
  long long u_pow = 1;
  std::size_t u_core_len = 1, u_conj_len = 0;

  // lattice (abelian vertex)
  ZMat erows;      // k x rank, images of edge basis
  ZMat memb_hnf;   // hnf of (erows ; vertex relator rows)
  ZMat stacked;    // (erows ; vertex relator rows), for coordinate solving
  ZMat vertex_hnf; // hnf of vertex relator rows alone

  struct Decomp {
    bool in_edge = false;   // rep is the identity
    Word rep_word;          // canonical left-coset representative
    ZRow coords;            // edge coordinates pushed to the right
  };

  Decomp decompose(const Word& x) const;
  Word image_word(const ZRow& coords) const;  // edge element as a word on this side
  bool supports_keys() const {
    return kind != Kind::trivial || side->has_element_keys();
  }
  std::string rep_key(const Word& rep) const {
    if (kind == Kind::trivial) return *side->element_key(rep);
    if (kind == Kind::lattice) {
      std::ostringstream os;
      for (const auto& v : reduce_by_hnf(vertex_hnf, exponent_vector(rep, side->alphabet()))) os << v << ',';
      return os.str();
    }
    return word_bytes(rep);
  }
};

EdgeEnd::Decomp EdgeEnd::decompose(const Word& x) const {
  Decomp d;
  switch (kind) {
    case Kind::trivial:
      d.in_edge = side->trivial(x);
      d.rep_word = x;
      return d;
    case Kind::cyclic: {
      // canonical representative of the coset x<u>: minimize x*u^-k; a
      // candidate can only undercut x while k * |core| <= 2|x| + 2|conj|
      long long bound =
          (2 * static_cast<long long>(x.size()) + 2 * static_cast<long long>(u_conj_len)) /
              static_cast<long long>(u_core_len) +
          2;
      Word best = x;
      long long best_k = 0;
      Word cur = x;
      for (long long k = 1; k <= bound; ++k) {
        cur = cur * u.inverse();
        if (cur.size() < best.size() || (cur.size() == best.size() && shortlex_less(cur, best))) {
          best = cur;
          best_k = k;
        }
      }
      cur = x;
      for (long long k = 1; k <= bound; ++k) {
        cur = cur * u;
        if (cur.size() < best.size() || (cur.size() == best.size() && shortlex_less(cur, best))) {
          best = cur;
          best_k = -k;
        }
      }
      d.rep_word = best;
      d.coords = ZRow{Int(best_k)};
      d.in_edge = best.empty();
      return d;
    }
    case Kind::lattice: {
      ZRow xv = exponent_vector(x, side->alphabet());
      ZRow rep = reduce_by_hnf(memb_hnf, xv);
      ZRow diff(xv.size());
      for (std::size_t i = 0; i < xv.size(); ++i) diff[i] = xv[i] - rep[i];
      auto sol = solve_row_system(stacked, diff);
      assert(sol.has_value());
      d.coords.assign(sol->begin(), sol->begin() + k);
      std::vector<Let> rw;
      for (std::size_t j = 0; j < rep.size(); ++j) {
        long long e = rep[j].convert_to<long long>();
        for (long long t = 0; t < std::llabs(e); ++t) rw.push_back(e > 0 ? Let(j + 1) : -Let(j + 1));
      }
      d.rep_word = Word(std::span<const Let>(rw));
      d.in_edge = d.rep_word.empty();
      return d;
    }
  }
  return d;
}

Word EdgeEnd::image_word(const ZRow& coords) const {
  switch (kind) {
    case Kind::trivial:
      return Word();
    case Kind::cyclic:
      return u.pow(coords.at(0).convert_to<long long>());
    case Kind::lattice: {
      ZRow x = row_mat_mul(coords, erows);
      std::vector<Let> rw;
      for (std::size_t j = 0; j < x.size(); ++j) {
        long long e = x[j].convert_to<long long>();
        for (long long t = 0; t < std::llabs(e); ++t) rw.push_back(e > 0 ? Let(j + 1) : -Let(j + 1));
      }
      return Word(std::span<const Let>(rw));
    }
  }
  return Word();
}

EdgeEnd compile_end(OraclePtr side, const std::vector<Word>& images, const std::string& where) {
  EdgeEnd end;
  end.side = side;
  end.k = static_cast<int>(images.size());
  for (const auto& w : images)
    if (w.max_index() > side->alphabet())
      throw InputError("edge image outside the vertex alphabet at " + where);
  if (end.k == 0) {
    end.kind = EdgeEnd::Kind::trivial;
    return end;
  }
  if (side->kind() == Oracle::Kind::free_group) {
    if (end.k != 1)
      throw InputError("edge group of rank " + std::to_string(end.k) +
                       " into a free vertex group at " + where + "; only cyclic edges are supported there");
    if (images[0].empty()) throw InputError("trivial cyclic edge generator at " + where);
    end.kind = EdgeEnd::Kind::cyclic;
    end.u = images[0];
    auto rp = primitive_root(end.u);
    end.u_root = rp.root;
    end.u_root_inv = rp.root.inverse();
    end.u_pow = rp.power;
    CyclicForm cf = cyclically_reduce(end.u);
    end.u_core_len = cf.core.size();
    end.u_conj_len = cf.conjugator.size();
    return end;
  }
  if (side->kind() == Oracle::Kind::abelian) {
    const AbelianData* ad = side->abelian_data();
    end.kind = EdgeEnd::Kind::lattice;
    for (const auto& w : images) end.erows.push_back(exponent_vector(w, ad->rank));
    ZMat lam;
    for (const auto& r : ad->rows) lam.push_back(ZRow(r.begin(), r.end()));
    end.vertex_hnf = hnf_rows(lam);
    end.stacked = end.erows;
    for (const auto& r : lam) end.stacked.push_back(r);
    end.memb_hnf = hnf_rows(end.stacked);
    // injectivity: no nonzero edge vector maps into the vertex lattice
    for (const auto& kr : left_kernel_rows(end.stacked))
      for (int i = 0; i < end.k; ++i)
        if (kr[i] != 0)
          throw InputError("edge map not injective at " + where);
    return end;
  }
  throw InputError("unsupported vertex group for a nontrivial edge at " + where +
                   "; the edge-membership problem falls outside the supported fragment");
}

// ---------------------------------------------------------------------------

struct Syllable {
  int side;  // 0 or 1
  Word w;
};

class AmalgamOracle final : public Oracle {
 public:
  explicit AmalgamOracle(AmalgamSpec spec)
      : Oracle(spec.left->alphabet() + spec.right->alphabet(), Kind::graph_of_groups, true),
        spec_(std::move(spec)) {
    if (spec_.left_images.size() != spec_.right_images.size())
      throw InputError("edge image tuples of different ranks");
    end_[0] = compile_end(spec_.left, spec_.left_images, "the left end");
    end_[1] = compile_end(spec_.right, spec_.right_images, "the right end");
    has_keys_ = end_[0].supports_keys() && end_[1].supports_keys() &&
                spec_.left->has_element_keys() && spec_.right->has_element_keys();
  }

  const AmalgamSpec& spec() const { return spec_; }
  const EdgeEnd& end(int side) const { return end_[side]; }

  std::optional<std::string> element_key(const Word& w) const override {
    if (!has_keys_) return std::nullopt;
    auto sys = split(w);
    std::vector<std::pair<int, Word>> stack;  // (side, canonical rep word)
    ZRow carry(end_[0].k, 0);
    for (auto& s : sys) {
      Word v = end_[s.side].image_word(carry) * s.w;
      std::fill(carry.begin(), carry.end(), Int(0));
      if (!stack.empty() && stack.back().first == s.side) {
        v = stack.back().second * v;
        stack.pop_back();
      }
      auto d = end_[s.side].decompose(v);
      carry = d.coords.empty() ? ZRow(end_[0].k, 0) : d.coords;
      if (!d.in_edge) stack.emplace_back(s.side, d.rep_word);
    }
    std::ostringstream os;
    for (auto& [side, rep] : stack) os << (side ? 'R' : 'L') << '{' << end_[side].rep_key(rep) << '}';
    os << '#';
    for (const auto& c : carry) os << c << ',';
    return os.str();
  }

 protected:
  bool decide(const Word& w) const override {
    auto sys = split(w);
    while (true) {
      if (sys.empty()) return true;
      if (sys.size() == 1) return side_trivial(sys[0]);
      bool replaced = false;
      for (std::size_t i = 0; i < sys.size(); ++i) {
        auto d = end_[sys[i].side].decompose(sys[i].w);
        if (!d.in_edge) continue;
        const int other = 1 - sys[i].side;
        sys[i].side = other;
        sys[i].w = end_[other].image_word(d.coords);
        merge(sys);
        replaced = true;
        break;
      }
      if (!replaced) return false;
    }
  }

 private:
  bool side_trivial(const Syllable& s) const {
    return (s.side == 0 ? spec_.left : spec_.right)->trivial(s.w);
  }

  std::vector<Syllable> split(const Word& w) const {
    const int m = spec_.left->alphabet();
    std::vector<Syllable> out;
    for (Let l : w.letters()) {
      int side = std::abs(l) <= m ? 0 : 1;
      Let ll = side == 0 ? l : (l > 0 ? l - m : l + m);
      if (out.empty() || out.back().side != side) out.push_back({side, Word::letter(ll)});
      else out.back().w = out.back().w * Word::letter(ll);
    }
    return out;
  }

  // Drop empty syllables and concatenate same-side neighbours until stable.
  static void merge(std::vector<Syllable>& sys) {
    bool changed = true;
    while (changed) {
      changed = false;
      std::vector<Syllable> out;
      for (auto& s : sys) {
        if (s.w.empty()) {
          changed = true;
          continue;
        }
        if (!out.empty() && out.back().side == s.side) {
          out.back().w = out.back().w * s.w;
          changed = true;
          continue;
        }
        out.push_back(std::move(s));
      }
      sys = std::move(out);
    }
  }

  AmalgamSpec spec_;
  EdgeEnd end_[2];
};

class HnnOracle final : public Oracle {
 public:
  explicit HnnOracle(HnnSpec spec)
      : Oracle(spec.base->alphabet() + 1, Kind::graph_of_groups, true), spec_(std::move(spec)) {
    if (spec_.u_images.size() != spec_.v_images.size())
      throw InputError("edge image tuples of different ranks");
    if (spec_.u_images.empty())
      throw InputError("HNN extension needs a nontrivial associated subgroup");
    uend_ = compile_end(spec_.base, spec_.u_images, "the u end");
    vend_ = compile_end(spec_.base, spec_.v_images, "the v end");
    has_keys_ = uend_.supports_keys() && vend_.supports_keys() && spec_.base->has_element_keys();
  }

  const HnnSpec& spec() const { return spec_; }
  const EdgeEnd& u_end() const { return uend_; }
  const EdgeEnd& v_end() const { return vend_; }

  std::optional<std::string> element_key(const Word& w) const override {
    if (!has_keys_) return std::nullopt;
    struct Tok {
      bool is_t;
      int eps = 0;
      Word a;
    };
    std::vector<Tok> toks;
    Word cur;
    ZRow carry;            // pending edge coordinates
    const EdgeEnd* carry_end = nullptr;  // side the carry enters on

    auto flush_carry = [&]() {
      if (carry_end) cur = carry_end->image_word(carry) * cur;
      carry.clear();
      carry_end = nullptr;
    };

    const int t_ix = alphabet();
    for (Let l : w.letters()) {
      if (std::abs(l) != t_ix) {
        cur = cur * Word::letter(l);
        continue;
      }
      const int eps = l > 0 ? 1 : -1;
      flush_carry();
      const EdgeEnd& dec_end = (eps > 0) ? vend_ : uend_;   // x t = r t u^k with x = r v^k, and dually
      const EdgeEnd& img_end = (eps > 0) ? uend_ : vend_;
      auto d = dec_end.decompose(cur);
      if (d.in_edge && !toks.empty() && toks.back().is_t && toks.back().eps == -eps) {
        toks.pop_back();  // pinch: t^-e c t^e = mapped(c)
        cur = img_end.image_word(d.coords);
        if (!toks.empty() && !toks.back().is_t) {
          cur = toks.back().a * cur;
          toks.pop_back();
        }
        continue;
      }
      toks.push_back({false, 0, d.rep_word});
      toks.push_back({true, eps, Word()});
      carry = d.coords;
      carry_end = &img_end;
      cur = Word();
    }
    flush_carry();
    toks.push_back({false, 0, cur});

    std::ostringstream os;
    for (auto& t : toks) {
      if (t.is_t) os << (t.eps > 0 ? "t+" : "t-");
      else os << "A{" << base_key(t.a) << '}';
    }
    return os.str();
  }

 protected:
  bool decide(const Word& w) const override {
    struct Tok {
      bool is_t;
      int eps = 0;
      Word a;
    };
    std::vector<Tok> toks;
    Word cur;
    const int t_ix = alphabet();
    for (Let l : w.letters()) {
      if (std::abs(l) != t_ix) {
        cur = cur * Word::letter(l);
        continue;
      }
      const int eps = l > 0 ? 1 : -1;
      const EdgeEnd& dec_end = (eps > 0) ? vend_ : uend_;
      const EdgeEnd& img_end = (eps > 0) ? uend_ : vend_;
      auto d = dec_end.decompose(cur);
      if (d.in_edge && !toks.empty() && toks.back().is_t && toks.back().eps == -eps) {
        toks.pop_back();
        cur = img_end.image_word(d.coords);
        if (!toks.empty() && !toks.back().is_t) {
          cur = toks.back().a * cur;
          toks.pop_back();
        }
        continue;
      }
      toks.push_back({false, 0, cur});
      toks.push_back({true, eps, Word()});
      cur = Word();
    }
    for (auto& t : toks)
      if (t.is_t) return false;  // Britton: a pinch-free word with stable letters is nontrivial
    Word total;
    for (auto& t : toks) total = total * t.a;
    total = total * cur;
    return spec_.base->trivial(total);
  }

 private:
  std::string base_key(const Word& a) const {
    if (uend_.kind == EdgeEnd::Kind::lattice) return uend_.rep_key(a);
    auto k = spec_.base->element_key(a);
    return k ? *k : word_bytes(a);
  }

  HnnSpec spec_;
  EdgeEnd uend_, vend_;
};

}  // namespace

OraclePtr make_amalgam_oracle(AmalgamSpec spec) { return std::make_shared<AmalgamOracle>(std::move(spec)); }

OraclePtr make_hnn_oracle(HnnSpec spec) { return std::make_shared<HnnOracle>(std::move(spec)); }

std::optional<AmalgamParts> amalgam_oracle_parts(const OraclePtr& o) {
  if (auto p = std::dynamic_pointer_cast<const AmalgamOracle>(o))
    return AmalgamParts{p->spec().left, p->spec().right, p->spec().left_images, p->spec().right_images};
  return std::nullopt;
}

std::optional<HnnParts> hnn_oracle_parts(const OraclePtr& o) {
  if (auto p = std::dynamic_pointer_cast<const HnnOracle>(o))
    return HnnParts{p->spec().base, p->spec().u_images, p->spec().v_images};
  return std::nullopt;
}

std::optional<ZRow> amalgam_edge_coords(const OraclePtr& o, int side, const Word& w) {
  auto p = std::dynamic_pointer_cast<const AmalgamOracle>(o);
  if (!p) throw InputError("not an amalgam oracle");
  auto d = p->end(side).decompose(w);
  if (!d.in_edge) return std::nullopt;
  return d.coords;
}

std::optional<ZRow> hnn_edge_coords(const OraclePtr& o, bool u_side, const Word& w) {
  auto p = std::dynamic_pointer_cast<const HnnOracle>(o);
  if (!p) throw InputError("not an HNN oracle");
  auto d = (u_side ? p->u_end() : p->v_end()).decompose(w);
  if (!d.in_edge) return std::nullopt;
  return d.coords;
}

}  // namespace mg
