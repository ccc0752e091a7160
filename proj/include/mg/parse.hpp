#pragma once

#include <map>

#include "mg/detect.hpp"
#include "mg/gog.hpp"
#include "mg/homo.hpp"

namespace mg {

// Textual word syntax: generator names are identifiers resolved greedily
// against the declared list; inverses are ^-1, powers a^3, commutator sugar
// [x,y], parentheses group, juxtaposition concatenates.
Word parse_word(const std::string& text, std::span<const std::string> names);
std::string print_word(const Word& w, std::span<const std::string> names);

// forall x y : ([x,y]=1) | (x=1 & y!=1)
UniversalSentence parse_sentence(const std::string& text);

struct SpecEntry {
  MarkedGroup group;
  std::vector<std::string> names;
};

struct SpecFile {
  std::map<std::string, SpecEntry> groups;
  std::map<std::string, Hom> homs;
  std::map<std::string, UniversalSentence> sentences;
  std::map<std::string, GraphOfGroups> gogs;
  std::vector<std::pair<std::string, std::string>> order;  // (kind, name)
};

// Parses a .gg spec: one definition per statement, # comments, forms
//   group F2 = free(a,b)
//   group A  = abelian(rows=[[5]])
//   group A2 = abelian(rank=2)
//   group D  = amalgam(F2, F2; [a,b] = [a,b])
//   group E  = hnn(F2; [a,b] -> [a,b])
//   group Q  = quotient(F2; relators=["[a,b]"])
//   group P  = product(F2, Z)
//   group W  = double(F2; "[a,b]")
//   group C  = ec(F2; "[a,b]", 1)
//   group S  = surface(orientable=true, genus=2)
//   marking M = (Z; "s", "s^3")
//   hom h = (G -> F; a: "x", b: "")
//   sentence s = forall x y : ([x,y]=1)
//   gog K = ( vertex A = free(a,b) ; vertex B = abelian(rank=2) ;
//             edge e = A["[a,b]"] -- B["s1"] )
SpecFile parse_spec(const std::string& text);

// A single right-hand side (e.g. "free(a,b)") resolved against an existing
// spec context; used for inline groups on the command line.
SpecEntry parse_group_expr(const std::string& text, const SpecFile& ctx);

}  // namespace mg
