#include "mg/homo.hpp"

#include <algorithm>

namespace mg {

Word apply(const Hom& h, const Word& w) { return substitute(w, h.images); }

Hom compose(const Hom& outer, const Hom& inner) {
  if (inner.target.arity() != outer.source.arity())
    throw InputError("compose: inner target arity differs from outer source arity");
  Hom h;
  h.source = inner.source;
  h.target = outer.target;
  for (const Word& w : inner.images) h.images.push_back(substitute(w, outer.images));
  if (auto* ex = std::get_if<Hom::ExactRelators>(&inner.validity))
    h.validity = Hom::ExactRelators{ex->relators};
  else
    h.validity = inner.validity;
  return h;
}

Hom identity_hom(const MarkedGroup& m) {
  Hom h;
  h.source = m;
  h.target = m;
  for (int i = 1; i <= m.arity(); ++i) h.images.push_back(Word::letter(i));
  if (m.relators)
    h.validity = Hom::ExactRelators{*m.relators};
  else
    h.validity = Hom::CheckedUpTo{0};
  return h;
}

Hom make_hom_exact(const MarkedGroup& source, const MarkedGroup& target, std::vector<Word> images,
                   std::optional<std::vector<Word>> relators) {
  if (static_cast<int>(images.size()) != source.arity())
    throw InputError("image count differs from the source arity");
  if (!relators) relators = source.relators;
  if (!relators)
    throw InputError("no relator set available; use a checked-length validation instead");
  for (const Word& r : *relators) {
    if (!relation_test(source, r))
      throw InputError("claimed relator is not a relation of the source: " + r.str());
    if (!relation_test(target, substitute(r, images)))
      throw InputError("relator survives in the target: " + r.str());
  }
  Hom h;
  h.source = source;
  h.target = target;
  h.images = std::move(images);
  h.validity = Hom::ExactRelators{std::move(*relators)};
  return h;
}

Hom make_hom_checked(const MarkedGroup& source, const MarkedGroup& target,
                     std::vector<Word> images, int len) {
  if (static_cast<int>(images.size()) != source.arity())
    throw InputError("image count differs from the source arity");
  std::optional<Word> bad;
  for (int l = 1; l <= len && !bad; ++l)
    reduced_words_of_length(source.arity(), l, [&](const Word& w) {
      if (bad) return;
      if (relation_test(source, w) && !relation_test(target, substitute(w, images))) bad = w;
    });
  if (bad) throw InputError("source relation survives in the target: " + bad->str());
  Hom h;
  h.source = source;
  h.target = target;
  h.images = std::move(images);
  h.validity = Hom::CheckedUpTo{len};
  return h;
}

Verdict injectivity_radius(const Hom& h, int radius, const BallOpts& opts) {
  Ball b = ball(h.source, radius, opts);
  for (std::size_t i = 1; i < b.verts.size(); ++i)
    if (relation_test(h.target, apply(h, b.verts[i]))) {
      Verdict v;
      v.found = true;
      v.radius = radius;
      v.witness = {b.verts[i]};
      v.note = "nontrivial element with trivial image";
      return v;
    }
  Verdict v;
  v.found = false;
  v.radius = radius;
  v.note = "injective on the ball";
  return v;
}

int injectivity_radius_value(const Hom& h, int rmax, const BallOpts& opts) {
  for (int r = 1; r <= rmax; ++r)
    if (injectivity_radius(h, r, opts).found) return r - 1;
  return rmax;
}

namespace {

// c as an element of the splitting's edge group, verified through the
// oracle-side membership machinery.
void check_edge_membership(const MarkedGroup& m, const Word& c) {
  const auto& meta = *m.meta;
  Word c_amb = to_ambient(m, c);
  if (auto parts = amalgam_oracle_parts(m.oracle)) {
    if (c_amb.max_index() > parts->left->alphabet() ||
        !amalgam_edge_coords(m.oracle, 0, c_amb))
      throw InputError("twist element lies outside the edge group: " + c.str());
    return;
  }
  if (auto parts = hnn_oracle_parts(m.oracle)) {
    if (c_amb.max_index() > parts->base->alphabet() || !hnn_edge_coords(m.oracle, true, c_amb))
      throw InputError("twist element lies outside the edge group: " + c.str());
    return;
  }
  // direct-product extension over an abelian base: the edge group is the base
  if (meta.kind == ConstructionMeta::Kind::extend_centralizer) {
    if (c.max_index() > meta.factors[0].arity())
      throw InputError("twist element lies outside the base group: " + c.str());
    return;
  }
  throw InputError("no splitting data for a Dehn twist");
}

}  // namespace

Hom dehn_twist(const MarkedGroup& m, const Word& c, long long exponent) {
  if (!m.meta) throw InputError("Dehn twists need a constructed one-edge splitting");
  const auto& meta = *m.meta;
  using K = ConstructionMeta::Kind;
  if (meta.kind != K::amalgam && meta.kind != K::double_of && meta.kind != K::hnn &&
      meta.kind != K::extend_centralizer)
    throw InputError("Dehn twists need a constructed one-edge splitting");
  check_edge_membership(m, c);

  const Word cm = c.pow(exponent);
  std::vector<Word> images;
  if (meta.kind == K::amalgam || meta.kind == K::double_of) {
    const int n1 = meta.factors[0].arity();
    for (int i = 1; i <= m.arity(); ++i) {
      Word s = Word::letter(i);
      images.push_back(i <= n1 ? s : cm * s * cm.inverse());
    }
  } else {
    // hnn-shaped: fix the vertex letters, send each stable letter to t c^m
    const int nbase = meta.factors[0].arity();
    for (int i = 1; i <= m.arity(); ++i) {
      Word s = Word::letter(i);
      images.push_back(i <= nbase ? s : s * cm);
    }
  }
  if (m.relators) return make_hom_exact(m, m, std::move(images));
  return make_hom_checked(m, m, std::move(images), 4);
}

Verdict baumslag_window_check(int n, std::span<const Word> a, const Word& c, long long k,
                              long long window) {
  if (c.empty()) throw InputError("the twisting element is trivial");
  for (std::size_t i = 0; i < a.size(); ++i)
    if (commutator(c, a[i]).empty())
      throw InputError("c commutes with a_" + std::to_string(i + 1));
  for (const Word& w : a)
    if (w.max_index() > n || c.max_index() > n) throw InputError("word outside the free alphabet");

  const long long q = static_cast<long long>(a.size());
  std::vector<long long> exps(q + 1, k);
  while (true) {
    Word w = c.pow(exps[0]);
    for (long long i = 0; i < q; ++i) w = w * a[i] * c.pow(exps[i + 1]);
    if (w.empty()) {
      Verdict v;
      v.found = true;
      v.witness = {w};
      v.note = "vanishing exponent tuple:";
      for (long long e : exps) v.note += " " + std::to_string(e);
      return v;
    }
    long long t = q;
    while (t >= 0 && exps[t] == k + window) exps[t--] = k;
    if (t < 0) break;
    ++exps[t];
  }
  Verdict v;
  v.found = false;
  v.note = "all products over the window are nontrivial";
  return v;
}

Hom ec_discriminator(const MarkedGroup& m, std::span<const long long> exponents) {
  if (!m.meta || m.meta->kind != ConstructionMeta::Kind::extend_centralizer)
    throw InputError("ec_discriminator needs an extension of centralizers");
  const auto& meta = *m.meta;
  if (static_cast<int>(exponents.size()) != meta.ec_rank)
    throw InputError("one exponent per extension generator expected");
  const MarkedGroup& base = meta.factors[0];
  std::vector<Word> images;
  for (int i = 1; i <= base.arity(); ++i) images.push_back(Word::letter(i));
  for (int i = 0; i < meta.ec_rank; ++i) images.push_back(meta.ec_element.pow(exponents[i]));
  if (m.relators) return make_hom_exact(m, base, std::move(images));
  return make_hom_checked(m, base, std::move(images), 4);
}

namespace {

bool abelianization_compatible(const MarkedGroup& source, const std::vector<Word>& images,
                               int target_arity) {
  if (!source.relators) return true;
  for (const Word& r : *source.relators) {
    ZRow v = exponent_vector(substitute(r, images), target_arity);
    if (std::any_of(v.begin(), v.end(), [](const Int& x) { return x != 0; })) return false;
  }
  return true;
}

std::optional<Hom> validate_candidate(const MarkedGroup& m, std::span<const Word> witnesses,
                                      const MarkedGroup& target, const std::vector<Word>& images) {
  if (!abelianization_compatible(m, images, target.arity())) return std::nullopt;
  Hom h;
  try {
    if (m.relators)
      h = make_hom_exact(m, target, images);
    else
      h = make_hom_checked(m, target, images, 4);
  } catch (const InputError&) {
    return std::nullopt;
  }
  std::vector<Word> vals;
  for (const Word& w : witnesses) {
    Word img = apply(h, w);
    if (relation_test(target, img)) return std::nullopt;
    for (const Word& prev : vals)
      if (relation_test(target, img * prev.inverse())) return std::nullopt;
    vals.push_back(img);
  }
  return h;
}

}  // namespace

std::optional<Hom> search_discriminating(const MarkedGroup& m, std::span<const Word> witnesses,
                                         const MarkedGroup& target, int len) {
  for (const Word& w : witnesses)
    if (relation_test(m, w)) throw InputError("witness is trivial in the source: " + w.str());

  // brute-force stream: all image assignments with words of length <= len
  std::vector<Word> cand;
  cand.push_back(Word());
  for (int l = 1; l <= len; ++l)
    reduced_words_of_length(target.arity(), l, [&](const Word& w) { cand.push_back(w); });
  const int n = m.arity();
  std::vector<std::size_t> pick(n, 0);
  while (true) {
    std::vector<Word> images;
    for (int i = 0; i < n; ++i) images.push_back(cand[pick[i]]);
    if (auto h = validate_candidate(m, witnesses, target, images)) return h;
    int t = n - 1;
    while (t >= 0 && pick[t] == cand.size() - 1) pick[t--] = 0;
    if (t < 0) break;
    ++pick[t];
  }

  // twisted-retraction stream for constructed splittings
  if (m.meta) {
    const auto& meta = *m.meta;
    using K = ConstructionMeta::Kind;
    if ((meta.kind == K::double_of || meta.kind == K::extend_centralizer) &&
        meta.factors[0].arity() == target.arity()) {
      std::vector<Word> retraction;
      if (meta.kind == K::double_of) {
        const int n1 = meta.factors[0].arity();
        for (int i = 1; i <= m.arity(); ++i)
          retraction.push_back(Word::letter(i <= n1 ? i : i - n1));
      } else {
        for (int i = 1; i <= meta.factors[0].arity(); ++i) retraction.push_back(Word::letter(i));
        for (int i = 0; i < meta.ec_rank; ++i) retraction.push_back(meta.ec_element);
      }
      for (int twist = 0; twist <= len + 4; ++twist) {
        try {
          Hom tau = dehn_twist(m, meta.edge_u.at(0), twist);
          std::vector<Word> images;
          for (const Word& w : tau.images) images.push_back(substitute(w, retraction));
          if (auto h = validate_candidate(m, witnesses, target, images)) return h;
        } catch (const InputError&) {
          break;
        }
      }
    }
  }
  return std::nullopt;
}

std::array<Int, 4> sl2_evaluate(const SL2Rep& rep, const Word& w) {
  std::array<Int, 4> m = {1, 0, 0, 1};
  auto mul = [](const std::array<Int, 4>& x, const std::array<Int, 4>& y) {
    return std::array<Int, 4>{x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3],
                              x[2] * y[0] + x[3] * y[2], x[2] * y[1] + x[3] * y[3]};
  };
  for (Let l : w.letters()) {
    std::size_t i = static_cast<std::size_t>(std::abs(l)) - 1;
    if (i >= rep.mats.size()) throw InputError("letter outside the representation");
    std::array<Int, 4> g = rep.mats[i];
    if (l < 0) g = {g[3], -g[1], -g[2], g[0]};  // inverse of a determinant-1 matrix
    m = mul(m, g);
  }
  return m;
}

bool sl2_certify(const Hom& h, const SL2Rep& rep, std::span<const Word> witnesses) {
  if (h.target.oracle->kind() != Oracle::Kind::free_group)
    throw InputError("sl2_certify needs a free target");
  if (static_cast<int>(rep.mats.size()) != h.target.arity())
    throw InputError("one matrix per target letter expected");
  if (rep.p < 2) throw InputError("modulus must be >= 2");
  const std::array<Int, 4> id = {1, 0, 0, 1};
  for (const auto& g : rep.mats) {
    if (g[0] * g[3] - g[1] * g[2] != 1) throw InputError("matrix with determinant != 1");
    std::array<Int, 4> d = {g[0] - 1, g[1], g[2], g[3] - 1};
    for (const Int& x : d)
      if (x % rep.p != 0) throw InputError("matrix does not reduce to the identity mod p");
  }
  const std::vector<Word>* relators = nullptr;
  if (auto* ex = std::get_if<Hom::ExactRelators>(&h.validity)) relators = &ex->relators;
  else if (h.source.relators) relators = &*h.source.relators;
  else throw InputError("sl2_certify needs the source relators");
  for (const Word& r : *relators)
    if (sl2_evaluate(rep, apply(h, r)) != id) return false;
  for (const Word& w : witnesses)
    if (sl2_evaluate(rep, apply(h, w)) == id) return false;
  return true;
}

}  // namespace mg
