#include "mg/surface.hpp"

#include <map>

#include "mg/dehn.hpp"

namespace mg {

int euler_characteristic(const SurfaceSpec& s) {
  return s.orientable ? 2 - 2 * s.genus : 2 - s.genus;
}

Word surface_relator(const SurfaceSpec& s) {
  Word r;
  if (s.orientable) {
    for (int i = 0; i < s.genus; ++i)
      r = r * commutator(Word::letter(2 * i + 1), Word::letter(2 * i + 2));
  } else {
    for (int i = 1; i <= s.genus; ++i) r = r * Word::letter(i).pow(2);
  }
  return r;
}

MarkedGroup surface_group(const SurfaceSpec& s) {
  const int chi = euler_characteristic(s);
  if (s.orientable) {
    if (s.genus == 0) throw InputError("the sphere has trivial group; nothing to mark");
    if (s.genus == 1) return std_abelian({2, {}});  // torus
    MarkedGroup m;
    m.oracle = make_dehn_oracle(2 * s.genus, {surface_relator(s)}, 1, 6);
    for (int i = 1; i <= 2 * s.genus; ++i) m.marking.push_back(Word::letter(i));
    m.relators = std::vector<Word>{surface_relator(s)};
    return m;
  }
  if (s.genus == 1) throw InputError("the projective plane has torsion; unsupported exceptional surface");
  if (s.genus == 2) {
    // Klein bottle <a, t | t a t^-1 = a^-1>
    MarkedGroup z = std_abelian({1, {}});
    MarkedGroup m = hnn(z, {Word::letter(1)}, {Word::letter(1).inverse()});
    return m;
  }
  if (s.genus == 3)
    throw InputError(
        "the non-orientable surface of characteristic -1 is outside the small-cancellation fragment");
  if (chi > -2) throw InputError("unsupported exceptional surface");
  MarkedGroup m;
  m.oracle = make_dehn_oracle(s.genus, {surface_relator(s)}, 1, 6);
  for (int i = 1; i <= s.genus; ++i) m.marking.push_back(Word::letter(i));
  m.relators = std::vector<Word>{surface_relator(s)};
  return m;
}

PinchingHom standard_pinching_hom(const SurfaceSpec& s) {
  const int chi = euler_characteristic(s);
  PinchingHom out;
  if (s.orientable && s.genus >= 2) {
    MarkedGroup src = surface_group(s);
    MarkedGroup tgt = std_free(s.genus);
    std::vector<Word> images;  // marking order (a1, b1, a2, b2, ...)
    for (int i = 0; i < s.genus; ++i) {
      images.push_back(Word::letter(i + 1));  // a_i -> x_i
      images.push_back(Word());               // b_i -> 1
      out.kernel_normal_gens.push_back(Word::letter(2 * i + 2));
    }
    out.hom = make_hom_exact(src, tgt, std::move(images));
    return out;
  }
  if (!s.orientable && chi <= -2 && chi % 2 == 0) {
    MarkedGroup src = surface_group(s);
    const int m = s.genus / 2;
    MarkedGroup tgt = std_free(m);
    std::vector<Word> images;
    for (int i = 0; i < m; ++i) {
      images.push_back(Word::letter(i + 1));
      images.push_back(Word::letter(i + 1).inverse());
      out.kernel_normal_gens.push_back(Word::letter(2 * i + 1) * Word::letter(2 * i + 2));
    }
    out.hom = make_hom_exact(src, tgt, std::move(images));
    return out;
  }
  throw InputError(
      "no standard pinching here: odd characteristic has a cyclic pinching quotient only "
      "(see maximal_pinching_count)");
}

int maximal_pinching_count(const SurfaceSpec& s) {
  const int chi = euler_characteristic(s);
  if (s.orientable) return 1;
  if (chi % 2 != 0) return 1;
  return 1 - chi / 2;
}

Verdict lyndon_scan(int L, const BallOpts& opts) {
  if (L < 1) throw InputError("scan radius must be >= 1");
  MarkedGroup f2 = std_free(2);
  Ball b = ball(f2, L, opts);
  const std::size_t v = b.verts.size();

  std::vector<Word> squares(v);
  std::map<ZRow, std::vector<std::size_t>> by_abelianization;
  for (std::size_t i = 0; i < v; ++i) {
    squares[i] = b.verts[i].pow(2);
    by_abelianization[exponent_vector(b.verts[i], 2)].push_back(i);
  }

  long long solutions = 0;
  for (std::size_t i = 0; i < v; ++i)
    for (std::size_t j = 0; j < v; ++j) {
      Word ab = squares[i] * squares[j];
      ZRow need = exponent_vector(ab, 2);
      bool integral = true;
      for (auto& x : need) {
        if (x % 2 != 0) integral = false;
        x = -x / 2;  // 2*(va+vb+vc) = 0
      }
      if (!integral) continue;
      auto it = by_abelianization.find(need);
      if (it == by_abelianization.end()) continue;
      for (std::size_t k : it->second) {
        if (!(ab * squares[k]).empty()) continue;
        ++solutions;
        const Word &wa = b.verts[i], &wb = b.verts[j], &wc = b.verts[k];
        if (!commutator(wa, wb).empty() || !commutator(wa, wc).empty() ||
            !commutator(wb, wc).empty()) {
          Verdict out;
          out.found = true;
          out.radius = L;
          out.witness = {wa, wb, wc};
          out.note = "solution triple with a non-commuting pair";
          return out;
        }
      }
    }
  Verdict out;
  out.found = false;
  out.radius = L;
  out.note = "all " + std::to_string(solutions) + " solution triples commute pairwise";
  return out;
}

}  // namespace mg
