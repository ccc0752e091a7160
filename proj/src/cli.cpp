#include "mg/cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "mg/emit.hpp"
#include "mg/gog.hpp"
#include "mg/surface.hpp"

namespace mg {

namespace {

struct Ctx {
  SpecFile spec;
  bool json = false;
  bool dot = false;
  bool timing = false;
  int threads = 1;
  std::string expect;
  std::string outcome = "ok";
  std::ostream* out = nullptr;
};

std::vector<std::string> split_list(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

SpecEntry resolve_group(Ctx& ctx, const std::string& expr) { return parse_group_expr(expr, ctx.spec); }

std::vector<Word> parse_words(const std::string& packed, std::span<const std::string> names) {
  std::vector<Word> out;
  for (const std::string& part : split_list(packed, ';')) out.push_back(parse_word(part, names));
  return out;
}

SurfaceSpec surface_arg(bool orientable, int genus) { return SurfaceSpec{orientable, genus}; }

void emit_verdict(Ctx& ctx, const Verdict& v, std::span<const std::string> names) {
  ctx.outcome = v.found ? "violated" : "no-witness";
  if (ctx.json) {
    *ctx.out << verdict_json(v, names).dump(2) << "\n";
    return;
  }
  if (v.found) {
    *ctx.out << "violated within radius " << v.radius << "\n";
    for (std::size_t i = 0; i < v.witness.size(); ++i)
      *ctx.out << "  witness[" << i << "] = " << print_word(v.witness[i], names) << "\n";
  } else {
    *ctx.out << "no witness within radius " << v.radius << "\n";
  }
  if (!v.note.empty()) *ctx.out << "  " << v.note << "\n";
}

void emit_agreement(Ctx& ctx, const Agreement& a, std::span<const std::string> names) {
  ctx.outcome = (a.exact ? "exact:" : "atleast:") + std::to_string(a.v);
  if (ctx.json) {
    *ctx.out << agreement_json(a, names).dump(2) << "\n";
    return;
  }
  if (a.exact) {
    *ctx.out << "v = " << a.v << " (exact)\n";
    *ctx.out << "witness = " << print_word(*a.witness, names) << "\n";
    *ctx.out << "d = e^-" << a.v << "\n";
  } else {
    *ctx.out << "v >= " << a.v << " (no discrepancy up to the cutoff)\n";
    *ctx.out << "d <= e^-" << a.v << "\n";
  }
}

GraphOfGroups& lookup_gog(Ctx& ctx, const std::string& name) {
  auto it = ctx.spec.gogs.find(name);
  if (it == ctx.spec.gogs.end()) throw InputError("no gog named '" + name + "' in the spec");
  return it->second;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"marked-group computations"};
  app.require_subcommand(1);

  Ctx ctx;
  ctx.out = &out;
  std::string spec_path;
  app.add_option("--spec", spec_path, "definition file (.gg)");
  app.add_flag("--json", ctx.json, "JSON output");
  app.add_flag("--dot", ctx.dot, "DOT output");
  app.add_flag("--timing", ctx.timing, "print elapsed time to stderr");
  app.add_option("--threads", ctx.threads, "internal parallelism cap")->check(CLI::PositiveNumber);
  app.add_option("--expect", ctx.expect, "fail (exit 1) unless the outcome matches");

  // ball
  auto* c_ball = app.add_subcommand("ball", "canonical Cayley ball");
  std::string ball_group;
  int ball_r = 2;
  std::size_t ball_cap = 2'000'000;
  c_ball->add_option("--group", ball_group)->required();
  c_ball->add_option("-R,--radius", ball_r);
  c_ball->add_option("--cap", ball_cap);

  // dist
  auto* c_dist = app.add_subcommand("dist", "agreement radius of two marked groups");
  std::string dist_a, dist_b;
  int dist_rmax = 8;
  c_dist->add_option("--a", dist_a)->required();
  c_dist->add_option("--b", dist_b)->required();
  c_dist->add_option("--rmax", dist_rmax);

  // converge
  auto* c_conv = app.add_subcommand("converge", "per-index agreement radii of a family");
  std::string conv_family, conv_limit;
  long long conv_from = 2, conv_to = 6;
  int conv_rmax = 8;
  c_conv->add_option("--family", conv_family, "zmod (Z/i) or zmark (Z,(1,i))")->required();
  c_conv->add_option("--limit", conv_limit);
  c_conv->add_option("--from", conv_from);
  c_conv->add_option("--to", conv_to);
  c_conv->add_option("--rmax", conv_rmax);

  // detect
  auto* c_det = app.add_subcommand("detect", "finite-radius property detector");
  std::string det_group, det_prop;
  int det_r = 4;
  int det_class = 2;
  long long det_exp = 6;
  int det_rank = 1, det_ranklen = 4;
  std::vector<std::string> det_filters;
  c_det->add_option("--group", det_group)->required();
  c_det->add_option("--prop", det_prop, "abelian|nilpotent|torsion|ct|csa|rank")->required();
  c_det->add_option("-R,--radius", det_r);
  c_det->add_option("--class", det_class);
  c_det->add_option("--max-exp", det_exp);
  c_det->add_option("--rank-k", det_rank);
  c_det->add_option("--rank-len", det_ranklen);
  c_det->add_option("--filter", det_filters, "semicolon-separated images of a pruning morphism");

  // betti
  auto* c_betti = app.add_subcommand("betti", "first Betti number of a presentation");
  std::string betti_group, betti_relators, betti_names;
  int betti_gens = 0;
  c_betti->add_option("--group", betti_group, "a constructed group carrying relators");
  c_betti->add_option("--gens", betti_gens);
  c_betti->add_option("--relators", betti_relators, "semicolon-separated");
  c_betti->add_option("--names", betti_names, "comma-separated generator names");

  // falsify
  auto* c_fal = app.add_subcommand("falsify", "universal-sentence falsifier");
  std::string fal_group, fal_sentence;
  int fal_r = 3;
  c_fal->add_option("--group", fal_group)->required();
  c_fal->add_option("--sentence", fal_sentence, "forall x y : ([x,y]=1) | ... or a spec name")
      ->required();
  c_fal->add_option("-R,--radius", fal_r);

  // construct
  auto* c_con = app.add_subcommand("construct", "build a group and report its relations");
  std::string con_name;
  int con_len = 0, con_ball = -1;
  c_con->add_option("--name", con_name, "group name in the spec, or an inline expression")
      ->required();
  c_con->add_option("-L,--relations", con_len);
  c_con->add_option("--ball", con_ball);

  // twist
  auto* c_twist = app.add_subcommand("twist", "Dehn twist of a one-edge splitting");
  std::string twist_group, twist_c;
  long long twist_m = 1;
  c_twist->add_option("--group", twist_group)->required();
  c_twist->add_option("--c", twist_c, "edge-group element")->required();
  c_twist->add_option("-m,--exponent", twist_m);

  // baumslag
  auto* c_baum = app.add_subcommand("baumslag", "window check for twisted products");
  int baum_rank = 2;
  std::vector<std::string> baum_a;
  std::string baum_c;
  long long baum_k = 1, baum_w = 4;
  c_baum->add_option("--rank", baum_rank);
  c_baum->add_option("--a", baum_a)->required();
  c_baum->add_option("--c", baum_c)->required();
  c_baum->add_option("-K", baum_k);
  c_baum->add_option("-W", baum_w);

  // discriminate
  auto* c_disc = app.add_subcommand("discriminate", "search a witness-separating morphism");
  std::string disc_group, disc_target = "free(x,y)", disc_witnesses;
  int disc_len = 2;
  c_disc->add_option("--group", disc_group)->required();
  c_disc->add_option("--witness", disc_witnesses, "semicolon-separated")->required();
  c_disc->add_option("--target", disc_target);
  c_disc->add_option("-L,--length", disc_len);

  // sl2
  auto* c_sl2 = app.add_subcommand("sl2", "integral 2x2 certificate for witnesses");
  std::string sl2_source, sl2_target = "free(x,y)", sl2_images, sl2_rep, sl2_witnesses;
  long long sl2_p = 2;
  c_sl2->add_option("--source", sl2_source)->required();
  c_sl2->add_option("--target", sl2_target);
  c_sl2->add_option("--images", sl2_images, "semicolon-separated generator images")->required();
  c_sl2->add_option("--rep", sl2_rep, "a,b,c,d per letter, letters separated by ';'")->required();
  c_sl2->add_option("-p", sl2_p);
  c_sl2->add_option("--witness", sl2_witnesses)->required();

  // surface / pinch / lyndon
  auto* c_surf = app.add_subcommand("surface", "surface group");
  bool surf_orient = true;
  int surf_genus = 2, surf_ball = -1;
  c_surf->add_option("--orientable", surf_orient);
  c_surf->add_option("-g,--genus", surf_genus);
  c_surf->add_option("--ball", surf_ball);

  auto* c_pinch = app.add_subcommand("pinch", "standard pinching quotient");
  bool pinch_orient = true;
  int pinch_genus = 2;
  c_pinch->add_option("--orientable", pinch_orient);
  c_pinch->add_option("-g,--genus", pinch_genus);

  auto* c_lyn = app.add_subcommand("lyndon", "scan a^2 b^2 c^2 = 1 in a ball of F2");
  int lyn_l = 3;
  c_lyn->add_option("-L", lyn_l);

  // mr / factor
  auto* c_mr = app.add_subcommand("mr", "Makanin-Razborov diagram");
  std::string mr_rows;
  bool mr_surface = false, mr_orient = true;
  int mr_genus = 2;
  c_mr->add_option("--abelian-rows", mr_rows, "[[...],...] relator rows");
  c_mr->add_flag("--surface", mr_surface);
  c_mr->add_option("--orientable", mr_orient);
  c_mr->add_option("-g,--genus", mr_genus);

  auto* c_fac = app.add_subcommand("factor", "factor a morphism through a diagram");
  std::string fac_rows, fac_images, fac_target;
  bool fac_surface = false, fac_orient = true;
  int fac_genus = 2;
  c_fac->add_option("--abelian-rows", fac_rows);
  c_fac->add_flag("--surface", fac_surface);
  c_fac->add_option("--orientable", fac_orient);
  c_fac->add_option("-g,--genus", fac_genus);
  c_fac->add_option("--images", fac_images, "semicolon-separated")->required();
  c_fac->add_option("--target", fac_target);

  // gog analyses
  auto* c_cyl = app.add_subcommand("cyl", "cylinder graph of a graph of groups");
  std::string cyl_name;
  c_cyl->add_option("--gog", cyl_name)->required();

  auto* c_csa = app.add_subcommand("csa", "CSA criterion for a graph of groups");
  std::string csa_name;
  c_csa->add_option("--gog", csa_name)->required();

  auto* c_pull = app.add_subcommand("pull", "pull centralizers across an edge");
  std::string pull_name;
  int pull_edge = 0, pull_end = 0;
  bool pull_everything = false;
  c_pull->add_option("--gog", pull_name)->required();
  c_pull->add_option("--edge", pull_edge);
  c_pull->add_option("--end", pull_end);
  c_pull->add_flag("--all", pull_everything);

  // global flags may follow the subcommand
  for (CLI::App* sc : app.get_subcommands([](const CLI::App*) { return true; })) sc->fallthrough();

  std::vector<const char*> argv;
  std::string prog = "mg";
  argv.push_back(prog.c_str());
  for (const auto& a : args) argv.push_back(a.c_str());

  auto t0 = std::chrono::steady_clock::now();
  try {
    try {
      app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
      int code = app.exit(e, out, err);
      return code == 0 ? 0 : 3;
    }

    if (!spec_path.empty()) {
      std::ifstream in(spec_path);
      if (!in) throw InputError("cannot open spec file " + spec_path);
      std::stringstream ss;
      ss << in.rdbuf();
      ctx.spec = parse_spec(ss.str());
    }

    if (*c_ball) {
      SpecEntry e = resolve_group(ctx, ball_group);
      BallOpts opts;
      opts.vertex_cap = ball_cap;
      Ball b = ball(e.group, ball_r, opts);
      if (ctx.dot)
        out << b.dot(&e.names);
      else if (ctx.json)
        out << ball_json(b, e.names).dump(2) << "\n";
      else {
        out << "vertices " << b.verts.size() << "\n" << b.serialize();
      }
    } else if (*c_dist) {
      SpecEntry a = resolve_group(ctx, dist_a);
      SpecEntry b = resolve_group(ctx, dist_b);
      emit_agreement(ctx, agreement_radius(a.group, b.group, dist_rmax), a.names);
    } else if (*c_conv) {
      std::function<MarkedGroup(long long)> family;
      MarkedGroup limit;
      std::vector<std::string> names;
      if (conv_family == "zmod") {
        family = [](long long i) { return finite_cyclic(i); };
        limit = std_abelian({1, {}});
        names = {"s"};
      } else if (conv_family == "zmark") {
        family = [](long long i) {
          MarkedGroup z = std_abelian({1, {}});
          return mark(z.oracle, {Word::letter(1), Word::letter(1).pow(i)});
        };
        limit = std_abelian({2, {}});
        names = {"s1", "s2"};
      } else {
        throw InputError("unknown family '" + conv_family + "' (zmod, zmark)");
      }
      if (!conv_limit.empty()) limit = resolve_group(ctx, conv_limit).group;
      std::vector<long long> idx;
      for (long long i = conv_from; i <= conv_to; ++i) idx.push_back(i);
      auto table = converge_check(family, limit, idx, conv_rmax, ctx.threads);
      if (ctx.json) {
        Json j = Json::array();
        for (auto& [i, agr] : table) {
          Json row = agreement_json(agr, names);
          row["index"] = i;
          j.push_back(row);
        }
        out << j.dump(2) << "\n";
      } else {
        for (auto& [i, agr] : table) {
          out << "i=" << i << "  ";
          if (agr.exact)
            out << "v=" << agr.v << "  witness=" << print_word(*agr.witness, names) << "\n";
          else
            out << "v>=" << agr.v << "\n";
        }
      }
    } else if (*c_det) {
      SpecEntry e = resolve_group(ctx, det_group);
      DetectOpts opts;
      opts.nilpotency_class = det_class;
      opts.torsion_max_exp = det_exp;
      opts.rank_k = det_rank;
      opts.rank_word_len = det_ranklen;
      for (const std::string& f : det_filters) opts.filter_homs.push_back(parse_words(f, e.names));
      Prop prop;
      if (det_prop == "abelian") prop = Prop::abelian;
      else if (det_prop == "nilpotent") prop = Prop::nilpotent;
      else if (det_prop == "torsion") prop = Prop::torsion;
      else if (det_prop == "ct" || det_prop == "commutative-transitive")
        prop = Prop::commutative_transitive;
      else if (det_prop == "csa") prop = Prop::csa;
      else if (det_prop == "rank") prop = Prop::rank_at_most;
      else throw InputError("unknown property '" + det_prop + "'");
      emit_verdict(ctx, detect(e.group, prop, det_r, opts), e.names);
    } else if (*c_betti) {
      long long value = 0;
      if (!betti_group.empty()) {
        SpecEntry e = resolve_group(ctx, betti_group);
        if (!e.group.relators) throw InputError("the group carries no finite relator set");
        value = betti(e.group.arity(), *e.group.relators);
      } else {
        std::vector<std::string> names = betti_names.empty()
                                             ? std::vector<std::string>{}
                                             : split_list(betti_names, ',');
        if (names.empty())
          for (int i = 1; i <= betti_gens; ++i) names.push_back("s" + std::to_string(i));
        std::vector<Word> rel = parse_words(betti_relators, names);
        value = betti(static_cast<int>(names.size()), rel);
      }
      ctx.outcome = "betti:" + std::to_string(value);
      if (ctx.json) {
        Json j;
        j["betti"] = value;
        out << j.dump(2) << "\n";
      } else {
        out << value << "\n";
      }
    } else if (*c_fal) {
      SpecEntry e = resolve_group(ctx, fal_group);
      UniversalSentence s;
      auto it = ctx.spec.sentences.find(fal_sentence);
      s = it != ctx.spec.sentences.end() ? it->second : parse_sentence(fal_sentence);
      emit_verdict(ctx, falsify_universal(e.group, s, fal_r), e.names);
    } else if (*c_con) {
      SpecEntry e = resolve_group(ctx, con_name);
      out << "arity " << e.group.arity() << "\n";
      out << "generators";
      for (const auto& n : e.names) out << " " << n;
      out << "\n";
      if (e.group.relators) {
        out << "relators";
        for (const Word& r : *e.group.relators) out << " " << print_word(r, e.names);
        out << "\n";
      }
      if (con_len > 0) {
        RelationSet rs = relations_upto(e.group, con_len);
        out << "relations up to length " << con_len << ": " << rs.words.size() - 1
            << " nontrivial\n";
        for (const Word& w : rs.words)
          if (!w.empty()) out << "  " << print_word(w, e.names) << "\n";
      }
      if (con_ball >= 0) out << "ball " << con_ball << ": "
                             << ball(e.group, con_ball).verts.size() << " vertices\n";
    } else if (*c_twist) {
      SpecEntry e = resolve_group(ctx, twist_group);
      Hom tau = dehn_twist(e.group, parse_word(twist_c, e.names), twist_m);
      if (ctx.json)
        out << hom_json(tau, e.names, e.names).dump(2) << "\n";
      else
        for (std::size_t i = 0; i < tau.images.size(); ++i)
          out << e.names[i] << " -> " << print_word(tau.images[i], e.names) << "\n";
    } else if (*c_baum) {
      std::vector<std::string> names;
      for (int i = 0; i < baum_rank; ++i) names.push_back(std::string(1, static_cast<char>('a' + i)));
      std::vector<Word> a;
      for (const std::string& s : baum_a) a.push_back(parse_word(s, names));
      Word cw = parse_word(baum_c, names);
      emit_verdict(ctx, baumslag_window_check(baum_rank, a, cw, baum_k, baum_w), names);
    } else if (*c_disc) {
      SpecEntry e = resolve_group(ctx, disc_group);
      SpecEntry t = resolve_group(ctx, disc_target);
      std::vector<Word> ws = parse_words(disc_witnesses, e.names);
      auto h = search_discriminating(e.group, ws, t.group, disc_len);
      if (h) {
        ctx.outcome = "found";
        if (ctx.json)
          out << hom_json(*h, e.names, t.names).dump(2) << "\n";
        else
          for (std::size_t i = 0; i < h->images.size(); ++i)
            out << e.names[i] << " -> " << print_word(h->images[i], t.names) << "\n";
      } else {
        ctx.outcome = "not-found";
        out << "no discriminating morphism within the search bounds (inconclusive)\n";
      }
    } else if (*c_sl2) {
      SpecEntry src = resolve_group(ctx, sl2_source);
      SpecEntry tgt = resolve_group(ctx, sl2_target);
      Hom h = src.group.relators
                  ? make_hom_exact(src.group, tgt.group, parse_words(sl2_images, tgt.names))
                  : make_hom_checked(src.group, tgt.group, parse_words(sl2_images, tgt.names), 4);
      SL2Rep rep;
      rep.p = sl2_p;
      for (const std::string& m : split_list(sl2_rep, ';')) {
        auto ent = split_list(m, ',');
        if (ent.size() != 4) throw InputError("each matrix needs 4 entries");
        rep.mats.push_back({Int(ent[0]), Int(ent[1]), Int(ent[2]), Int(ent[3])});
      }
      bool okc = sl2_certify(h, rep, parse_words(sl2_witnesses, src.names));
      ctx.outcome = okc ? "true" : "false";
      out << (okc ? "certified: relators die, witnesses survive\n"
                  : "not certified\n");
    } else if (*c_surf) {
      SurfaceSpec sp = surface_arg(surf_orient, surf_genus);
      MarkedGroup g = surface_group(sp);
      std::vector<std::string> names;
      for (int i = 1; i <= g.arity(); ++i) names.push_back("s" + std::to_string(i));
      out << "chi " << euler_characteristic(sp) << ", arity " << g.arity() << "\n";
      if (g.relators && !g.relators->empty())
        out << "relator " << print_word((*g.relators)[0], names) << "\n";
      if (surf_ball >= 0) {
        Ball b = ball(g, surf_ball);
        if (ctx.dot)
          out << b.dot(&names);
        else
          out << "ball " << surf_ball << ": " << b.verts.size() << " vertices\n";
      }
    } else if (*c_pinch) {
      SurfaceSpec sp = surface_arg(pinch_orient, pinch_genus);
      out << "maximal pinching classes: " << maximal_pinching_count(sp) << "\n";
      PinchingHom p = standard_pinching_hom(sp);
      std::vector<std::string> src_names, tgt_names;
      for (int i = 1; i <= p.hom.source.arity(); ++i) src_names.push_back("s" + std::to_string(i));
      for (int i = 1; i <= p.hom.target.arity(); ++i) tgt_names.push_back("x" + std::to_string(i));
      for (std::size_t i = 0; i < p.hom.images.size(); ++i)
        out << src_names[i] << " -> " << print_word(p.hom.images[i], tgt_names) << "\n";
      out << "kernel normal generators:";
      for (const Word& k : p.kernel_normal_gens) out << " " << print_word(k, src_names);
      out << "\n";
    } else if (*c_lyn) {
      std::vector<std::string> names = {"a", "b"};
      emit_verdict(ctx, lyndon_scan(lyn_l), names);
    } else if (*c_mr) {
      Diagram d;
      if (mr_surface) {
        d = surface_mr(surface_arg(mr_orient, mr_genus));
      } else {
        SpecFile empty;
        auto rows_entry = parse_group_expr("abelian(rows=" + mr_rows + ")", empty);
        const AbelianData* ad = rows_entry.group.oracle->abelian_data();
        d = abelian_mr(*ad);
      }
      if (ctx.dot)
        out << d.dot();
      else if (ctx.json)
        out << diagram_json(d).dump(2) << "\n";
      else {
        for (std::size_t i = 0; i < d.vertices.size(); ++i)
          out << "v" << i << ": " << d.vertices[i].label << "\n";
        for (const auto& e : d.edges)
          out << "v" << e.parent << " -> v" << e.child << "\n";
      }
    } else if (*c_fac) {
      Diagram d;
      if (fac_surface)
        d = surface_mr(surface_arg(fac_orient, fac_genus));
      else {
        SpecFile empty;
        auto rows_entry = parse_group_expr("abelian(rows=" + fac_rows + ")", empty);
        d = abelian_mr(*rows_entry.group.oracle->abelian_data());
      }
      SpecEntry tgt;
      if (!fac_target.empty())
        tgt = resolve_group(ctx, fac_target);
      else if (fac_surface) {
        tgt.group = std_free(2);
        tgt.names = {"x1", "x2"};
      } else {
        tgt.group = std_abelian({1, {}});
        tgt.names = {"z"};
      }
      std::vector<std::string> src_names;
      for (int i = 1; i <= d.vertices[0].group.arity(); ++i)
        src_names.push_back("s" + std::to_string(i));
      std::vector<Word> images = parse_words(fac_images, tgt.names);
      FactorResult r = factor_through(images, tgt.group, d);
      ctx.outcome = r.ok ? "factors" : "fails";
      if (r.ok) {
        out << "factors through path";
        for (int v : r.path) out << " v" << v;
        out << "\n";
      } else {
        out << "does not factor";
        if (r.surviving) out << "; surviving kernel element " << print_word(*r.surviving, src_names);
        out << "\n";
      }
    } else if (*c_cyl) {
      GraphOfGroups& g = lookup_gog(ctx, cyl_name);
      if (ctx.dot) {
        out << gog_dot(g);
      } else {
        CylinderGraph cyl = cylinder_graph(g);
        out << "cylinder vertices: " << cyl.verts.size() << ", components: "
            << cyl.component_count << "\n";
        for (std::size_t e = 0; e < g.edges.size(); ++e) {
          out << "edge " << g.edges[e].name << ": ";
          if (cyl.component[e] < 0)
            out << "trivial edge, outside the cylinder graph\n";
          else
            out << "ends at cylinder vertices " << cyl.end_vertex[e][0] << ", "
                << cyl.end_vertex[e][1] << " in component " << cyl.component[e] << "\n";
        }
      }
    } else if (*c_csa) {
      CsaReport r = csa_criterion(lookup_gog(ctx, csa_name));
      ctx.outcome = r.pass ? "pass" : "fail";
      out << (r.pass ? "PASS" : "FAIL") << ": " << r.detail << "\n";
    } else if (*c_pull) {
      GraphOfGroups g = lookup_gog(ctx, pull_name);
      GraphOfGroups result = pull_everything ? pull_all(g).graph
                                             : pull_centralizers(g, pull_edge, pull_end);
      for (std::size_t e = 0; e < result.edges.size(); ++e) {
        const auto& edge = result.edges[e];
        out << "edge " << edge.name << ":";
        for (int end = 0; end < 2; ++end) {
          const auto& v = result.vertices[edge.ends[end]];
          std::vector<std::string> names = v.gen_names;
          int n = v.free_kind ? v.free_rank : v.ab.rank;
          for (int i = static_cast<int>(names.size()) + 1; i <= n; ++i)
            names.push_back("s" + std::to_string(i));
          out << (end ? " -- " : " ");
          out << v.name << "[";
          for (std::size_t k = 0; k < edge.images[end].size(); ++k)
            out << (k ? ", " : "") << print_word(edge.images[end][k], names);
          out << "]";
        }
        out << "\n";
      }
    }

    if (ctx.timing) {
      auto dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      err << "elapsed " << dt << " s\n";
    }
    if (!ctx.expect.empty() && ctx.expect != ctx.outcome) {
      err << "expected outcome '" << ctx.expect << "' but got '" << ctx.outcome << "'\n";
      return 1;
    }
    return 0;
  } catch (const CapExceeded& e) {
    err << "resource cap: " << e.what() << "\n";
    return 2;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  }
}

}  // namespace mg
