#include "mg/emit.hpp"

#include <sstream>

#include "mg/gog.hpp"

namespace mg {

Json ball_json(const Ball& b, std::span<const std::string> names) {
  Json j;
  j["arity"] = b.arity;
  j["radius"] = b.radius;
  j["vertices"] = Json::array();
  for (const Word& w : b.verts) j["vertices"].push_back(print_word(w, names));
  j["edges"] = b.edges;
  return j;
}

Json agreement_json(const Agreement& a, std::span<const std::string> names) {
  Json j;
  if (a.exact) {
    j["v"] = a.v;
    j["exact"] = true;
  } else {
    j["v_at_least"] = a.v;
    j["exact"] = false;
  }
  std::ostringstream os;
  os << "e^-" << a.v;
  j["distance"] = a.exact ? os.str() : ("<= " + os.str());
  if (a.witness) j["witness"] = print_word(*a.witness, names);
  return j;
}

Json verdict_json(const Verdict& v, std::span<const std::string> names) {
  Json j;
  j["status"] = v.found ? "violated" : "no-witness-within";
  j["radius"] = v.radius;
  if (v.found) {
    j["witness"] = Json::array();
    for (const Word& w : v.witness) j["witness"].push_back(print_word(w, names));
  }
  if (!v.note.empty()) j["note"] = v.note;
  return j;
}

Json diagram_json(const Diagram& d) {
  Json j;
  j["vertices"] = Json::array();
  for (const auto& v : d.vertices) {
    Json jv;
    jv["label"] = v.label;
    jv["arity"] = v.group.arity();
    j["vertices"].push_back(jv);
  }
  j["edges"] = Json::array();
  for (const auto& e : d.edges) {
    Json je;
    je["parent"] = e.parent;
    je["child"] = e.child;
    je["direction"] = e.downward ? "down" : "up";
    std::vector<std::string> tgt_names;
    for (int i = 1; i <= d.vertices[e.child].group.arity(); ++i)
      tgt_names.push_back("s" + std::to_string(i));
    je["images"] = Json::array();
    for (const Word& w : e.images) je["images"].push_back(print_word(w, tgt_names));
    std::vector<std::string> src_names;
    for (int i = 1; i <= d.vertices[e.parent].group.arity(); ++i)
      src_names.push_back("s" + std::to_string(i));
    je["kernel_generators"] = Json::array();
    for (const Word& w : e.kernel_gens) je["kernel_generators"].push_back(print_word(w, src_names));
    j["edges"].push_back(je);
  }
  return j;
}

Json hom_json(const Hom& h, std::span<const std::string> src_names,
              std::span<const std::string> tgt_names) {
  Json j;
  j["source_arity"] = h.source.arity();
  j["target_arity"] = h.target.arity();
  j["images"] = Json::object();
  for (std::size_t i = 0; i < h.images.size(); ++i) {
    std::string key = i < src_names.size() ? src_names[i] : "g" + std::to_string(i + 1);
    j["images"][key] = print_word(h.images[i], tgt_names);
  }
  if (auto* ex = std::get_if<Hom::ExactRelators>(&h.validity)) {
    j["validity"] = "exact";
    j["relators_checked"] = ex->relators.size();
  } else {
    j["validity"] = "checked-up-to";
    j["length"] = std::get<Hom::CheckedUpTo>(h.validity).length;
  }
  return j;
}

std::string gog_dot(const GraphOfGroups& g) {
  static const char* palette[] = {"red", "blue", "darkgreen", "orange", "purple", "brown"};
  CylinderGraph cyl = cylinder_graph(g);
  std::ostringstream os;
  os << "graph gog {\n  node [shape=box];\n";
  for (std::size_t i = 0; i < g.vertices.size(); ++i) {
    const auto& v = g.vertices[i];
    os << "  v" << i << " [label=\"" << v.name
       << (v.free_kind ? " (free rank " + std::to_string(v.free_rank) + ")"
                       : " (abelian rank " + std::to_string(v.ab.rank) + ")")
       << "\"];\n";
  }
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    os << "  v" << g.edges[e].ends[0] << " -- v" << g.edges[e].ends[1] << " [label=\""
       << g.edges[e].name << "\"";
    if (cyl.component[e] >= 0)
      os << ", color=" << palette[cyl.component[e] % 6];
    os << "];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace mg
