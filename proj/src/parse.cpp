#include "mg/parse.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "mg/surface.hpp"

namespace mg {

namespace {

struct Cursor {
  const std::string& s;
  std::size_t i = 0;

  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool eat(char c) {
    skip_ws();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }
  bool peek(char c) {
    skip_ws();
    return i < s.size() && s[i] == c;
  }
  bool done() {
    skip_ws();
    return i >= s.size();
  }
  [[noreturn]] void fail(const std::string& why) const {
    std::size_t line = 1, col = 1;
    for (std::size_t k = 0; k < i && k < s.size(); ++k) {
      if (s[k] == '\n') {
        ++line;
        col = 1;
      } else
        ++col;
    }
    throw InputError(why + " at line " + std::to_string(line) + ", column " + std::to_string(col));
  }

  long long integer() {
    skip_ws();
    std::size_t start = i;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    std::size_t digits = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == digits) fail("expected an integer");
    return std::stoll(s.substr(start, i - start));
  }

  std::string identifier() {
    skip_ws();
    std::size_t start = i;
    while (i < s.size() &&
           (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_' || s[i] == '\''))
      ++i;
    if (start == i) fail("expected an identifier");
    return s.substr(start, i - start);
  }

  std::string quoted() {
    skip_ws();
    if (i >= s.size() || s[i] != '"') fail("expected a quoted string");
    std::size_t start = ++i;
    while (i < s.size() && s[i] != '"') ++i;
    if (i >= s.size()) fail("unterminated string");
    return s.substr(start, i++ - start);
  }
};

// ---- word grammar -----------------------------------------------------

class WordParser {
 public:
  WordParser(Cursor& c, std::span<const std::string> names) : c_(c), names_(names) {}

  Word expression() {
    Word out;
    while (true) {
      c_.skip_ws();
      if (c_.i >= c_.s.size()) break;
      char ch = c_.s[c_.i];
      if (ch == ')' || ch == ',' || ch == ']' || ch == '=' || ch == '-' || ch == '!') break;
      out = out * factor();
    }
    return out;
  }

 private:
  Word factor() {
    Word base = atom();
    c_.skip_ws();
    if (c_.i < c_.s.size() && c_.s[c_.i] == '^') {
      ++c_.i;
      return base.pow(c_.integer());
    }
    return base;
  }

  Word atom() {
    c_.skip_ws();
    if (c_.eat('(')) {
      Word w = expression();
      c_.expect(')');
      return w;
    }
    if (c_.eat('[')) {
      Word x = expression();
      c_.expect(',');
      Word y = expression();
      c_.expect(']');
      return commutator(x, y);
    }
    // longest declared-name match
    std::size_t best = 0;
    int best_ix = -1;
    for (std::size_t n = 0; n < names_.size(); ++n) {
      const std::string& name = names_[n];
      if (name.size() > best && c_.s.compare(c_.i, name.size(), name) == 0) {
        best = name.size();
        best_ix = static_cast<int>(n);
      }
    }
    if (best_ix < 0) c_.fail("unknown generator name");
    c_.i += best;
    return Word::letter(best_ix + 1);
  }

  Cursor& c_;
  std::span<const std::string> names_;
};

Word parse_word_at(Cursor& c, std::span<const std::string> names) {
  return WordParser(c, names).expression();
}

std::vector<std::string> default_names(const std::string& stem, int n) {
  std::vector<std::string> out;
  for (int i = 1; i <= n; ++i) out.push_back(stem + std::to_string(i));
  return out;
}

std::vector<std::string> join_names(std::vector<std::string> a, const std::vector<std::string>& b) {
  for (const std::string& n : b) {
    std::string cand = n;
    while (std::find(a.begin(), a.end(), cand) != a.end()) cand += '\'';
    a.push_back(cand);
  }
  return a;
}

}  // namespace

Word parse_word(const std::string& text, std::span<const std::string> names) {
  Cursor c{text};
  Word w = parse_word_at(c, names);
  if (!c.done()) c.fail("trailing input in word");
  return w;
}

std::string print_word(const Word& w, std::span<const std::string> names) {
  if (w.empty()) return "1";
  std::ostringstream os;
  const auto& ls = w.letters();
  for (std::size_t i = 0; i < ls.size();) {
    std::size_t j = i;
    while (j < ls.size() && ls[j] == ls[i]) ++j;
    long long e = static_cast<long long>(j - i) * (ls[i] > 0 ? 1 : -1);
    int ix = std::abs(ls[i]) - 1;
    if (i) os << ' ';
    if (ix < static_cast<int>(names.size()))
      os << names[ix];
    else
      os << "g" << (ix + 1);
    if (e != 1) os << '^' << e;
    i = j;
  }
  return os.str();
}

UniversalSentence parse_sentence(const std::string& text) {
  Cursor c{text};
  c.skip_ws();
  if (c.s.compare(c.i, 6, "forall") != 0) c.fail("a sentence starts with 'forall'");
  c.i += 6;
  std::vector<std::string> vars;
  while (!c.peek(':')) vars.push_back(c.identifier());
  c.expect(':');
  if (vars.empty()) c.fail("no bound variables");

  UniversalSentence s;
  s.arity = static_cast<int>(vars.size());
  while (true) {
    c.expect('(');
    std::vector<std::pair<Word, bool>> system;
    while (true) {
      Word w = parse_word_at(c, vars);
      bool equal = true;
      c.skip_ws();
      if (c.s.compare(c.i, 2, "!=") == 0) {
        equal = false;
        c.i += 2;
      } else {
        c.expect('=');
      }
      c.skip_ws();
      if (c.i >= c.s.size() || c.s[c.i] != '1') c.fail("equations compare against 1");
      ++c.i;
      system.emplace_back(w, equal);
      if (!c.eat('&')) break;
    }
    c.expect(')');
    s.disjuncts.push_back(std::move(system));
    if (!c.eat('|')) break;
  }
  if (!c.done()) c.fail("trailing input in sentence");
  return s;
}

namespace {

const SpecEntry& lookup_group(const SpecFile& spec, const std::string& name, Cursor& c) {
  auto it = spec.groups.find(name);
  if (it == spec.groups.end()) c.fail("undefined group '" + name + "'");
  return it->second;
}

std::vector<std::vector<long long>> parse_rows(Cursor& c) {
  std::vector<std::vector<long long>> rows;
  c.expect('[');
  if (!c.peek(']')) {
    do {
      c.expect('[');
      std::vector<long long> row;
      if (!c.peek(']')) {
        do {
          row.push_back(c.integer());
        } while (c.eat(','));
      }
      c.expect(']');
      rows.push_back(std::move(row));
    } while (c.eat(','));
  }
  c.expect(']');
  return rows;
}

SpecEntry parse_group_rhs(Cursor& c, const SpecFile& spec) {
  std::string kind = c.identifier();
  SpecEntry out;
  if (kind == "free") {
    c.expect('(');
    std::vector<std::string> names;
    if (!c.peek(')')) {
      do {
        names.push_back(c.identifier());
      } while (c.eat(','));
    }
    c.expect(')');
    out.group = std_free(static_cast<int>(names.size()));
    out.names = std::move(names);
    return out;
  }
  if (kind == "abelian") {
    c.expect('(');
    AbelianData d;
    std::string key = c.identifier();
    if (key == "rows") {
      c.expect('=');
      d.rows = parse_rows(c);
      d.rank = d.rows.empty() ? 0 : static_cast<int>(d.rows[0].size());
    } else if (key == "rank") {
      c.expect('=');
      d.rank = static_cast<int>(c.integer());
      if (c.eat(',')) {
        std::string k2 = c.identifier();
        if (k2 != "rows") c.fail("expected rows=...");
        c.expect('=');
        d.rows = parse_rows(c);
      }
    } else {
      c.fail("abelian(...) takes rows=... or rank=...");
    }
    c.expect(')');
    out.group = std_abelian(d);
    out.names = default_names("s", d.rank);
    return out;
  }
  if (kind == "amalgam" || kind == "product") {
    c.expect('(');
    std::string n1 = c.identifier();
    c.expect(',');
    std::string n2 = c.identifier();
    const SpecEntry& g1 = lookup_group(spec, n1, c);
    const SpecEntry& g2 = lookup_group(spec, n2, c);
    if (kind == "product") {
      c.expect(')');
      out.group = direct_product(g1.group, g2.group);
      out.names = join_names(g1.names, g2.names);
      return out;
    }
    c.expect(';');
    std::vector<Word> u, v;
    do {
      u.push_back(parse_word_at(c, g1.names));
      c.expect('=');
      v.push_back(parse_word_at(c, g2.names));
    } while (c.eat(','));
    c.expect(')');
    out.group = amalgam(g1.group, g2.group, std::move(u), std::move(v));
    out.names = join_names(g1.names, g2.names);
    return out;
  }
  if (kind == "freeprod") {
    c.expect('(');
    std::string n1 = c.identifier();
    c.expect(',');
    std::string n2 = c.identifier();
    const SpecEntry& g1 = lookup_group(spec, n1, c);
    const SpecEntry& g2 = lookup_group(spec, n2, c);
    c.expect(')');
    out.group = free_product(g1.group, g2.group);
    out.names = join_names(g1.names, g2.names);
    return out;
  }
  if (kind == "hnn") {
    c.expect('(');
    std::string n1 = c.identifier();
    const SpecEntry& g1 = lookup_group(spec, n1, c);
    c.expect(';');
    std::vector<Word> u, v;
    do {
      u.push_back(parse_word_at(c, g1.names));
      c.skip_ws();
      if (c.s.compare(c.i, 2, "->") != 0) c.fail("expected '->'");
      c.i += 2;
      v.push_back(parse_word_at(c, g1.names));
    } while (c.eat(','));
    c.expect(')');
    out.group = hnn(g1.group, std::move(u), std::move(v));
    out.names = join_names(g1.names, {"t"});
    return out;
  }
  if (kind == "quotient") {
    c.expect('(');
    std::string n1 = c.identifier();
    const SpecEntry& g1 = lookup_group(spec, n1, c);
    c.expect(';');
    std::string key = c.identifier();
    if (key != "relators") c.fail("expected relators=[...]");
    c.expect('=');
    c.expect('[');
    std::vector<Word> rel;
    if (!c.peek(']')) {
      do {
        std::string w = c.quoted();
        rel.push_back(parse_word(w, g1.names));
      } while (c.eat(','));
    }
    c.expect(']');
    c.expect(')');
    if (g1.group.oracle->kind() != Oracle::Kind::free_group)
      c.fail("quotient(...) expects a free base");
    out.group = quotient(g1.group.arity(), std::move(rel));
    out.names = g1.names;
    return out;
  }
  if (kind == "double") {
    c.expect('(');
    std::string n1 = c.identifier();
    const SpecEntry& g1 = lookup_group(spec, n1, c);
    c.expect(';');
    Word u = parse_word(c.quoted(), g1.names);
    c.expect(')');
    out.group = double_over(g1.group, u);
    out.names = join_names(g1.names, g1.names);
    return out;
  }
  if (kind == "ec") {
    c.expect('(');
    std::string n1 = c.identifier();
    const SpecEntry& g1 = lookup_group(spec, n1, c);
    c.expect(';');
    Word z = parse_word(c.quoted(), g1.names);
    c.expect(',');
    int p = static_cast<int>(c.integer());
    c.expect(')');
    out.group = extend_centralizer(g1.group, z, p);
    out.names = g1.names;
    for (int i = 1; i <= p; ++i) out.names = join_names(out.names, {"t" + std::to_string(i)});
    return out;
  }
  if (kind == "surface") {
    c.expect('(');
    SurfaceSpec sp;
    do {
      std::string key = c.identifier();
      c.expect('=');
      if (key == "orientable") {
        std::string v = c.identifier();
        sp.orientable = (v == "true");
      } else if (key == "genus" || key == "crosscaps") {
        sp.genus = static_cast<int>(c.integer());
      } else {
        c.fail("surface(...) takes orientable= and genus=");
      }
    } while (c.eat(','));
    c.expect(')');
    out.group = surface_group(sp);
    if (sp.orientable) {
      for (int i = 1; i <= sp.genus; ++i) {
        out.names.push_back("a" + std::to_string(i));
        out.names.push_back("b" + std::to_string(i));
      }
    } else if (sp.genus == 2) {
      out.names = {"a", "t"};
    } else {
      out.names = default_names("a", sp.genus);
    }
    return out;
  }
  c.fail("unknown group constructor '" + kind + "'");
}

GraphOfGroups parse_gog_rhs(Cursor& c, const SpecFile& spec) {
  (void)spec;
  GraphOfGroups g;
  std::map<std::string, int> vertex_ix;
  std::vector<std::vector<std::string>> vertex_names;
  c.expect('(');
  while (!c.peek(')')) {
    std::string kw = c.identifier();
    if (kw == "vertex") {
      std::string name = c.identifier();
      c.expect('=');
      std::string kind = c.identifier();
      GraphOfGroups::Vertex v;
      v.name = name;
      if (kind == "free") {
        c.expect('(');
        std::vector<std::string> names;
        if (!c.peek(')')) {
          do {
            names.push_back(c.identifier());
          } while (c.eat(','));
        }
        c.expect(')');
        v.free_kind = true;
        v.free_rank = static_cast<int>(names.size());
        v.gen_names = names;
        vertex_names.push_back(names);
      } else if (kind == "abelian") {
        c.expect('(');
        std::string key = c.identifier();
        c.expect('=');
        if (key == "rank") {
          v.ab.rank = static_cast<int>(c.integer());
        } else if (key == "rows") {
          v.ab.rows = parse_rows(c);
          v.ab.rank = v.ab.rows.empty() ? 0 : static_cast<int>(v.ab.rows[0].size());
        } else {
          c.fail("vertex abelian(...) takes rank= or rows=");
        }
        c.expect(')');
        v.free_kind = false;
        v.gen_names = default_names("s", v.ab.rank);
        vertex_names.push_back(v.gen_names);
      } else {
        c.fail("vertex kinds are free(...) and abelian(...)");
      }
      vertex_ix[name] = static_cast<int>(g.vertices.size());
      g.vertices.push_back(std::move(v));
    } else if (kw == "edge") {
      GraphOfGroups::Edge e;
      e.name = c.identifier();
      c.expect('=');
      auto read_end = [&](int end) {
        std::string vn = c.identifier();
        auto it = vertex_ix.find(vn);
        if (it == vertex_ix.end()) c.fail("undefined vertex '" + vn + "'");
        e.ends[end] = it->second;
        if (c.eat('[')) {
          if (!c.peek(']')) {
            do {
              std::string w = c.quoted();
              e.images[end].push_back(parse_word(w, vertex_names[it->second]));
            } while (c.eat(','));
          }
          c.expect(']');
        }
      };
      read_end(0);
      c.skip_ws();
      if (c.s.compare(c.i, 2, "--") != 0) c.fail("expected '--' between edge ends");
      c.i += 2;
      read_end(1);
      if (e.images[0].size() != e.images[1].size())
        c.fail("edge image tuples of different sizes");
      e.rank = static_cast<int>(e.images[0].size());
      g.edges.push_back(std::move(e));
    } else {
      c.fail("gog blocks contain vertex and edge declarations");
    }
    c.eat(';');
  }
  c.expect(')');
  validate(g);
  return g;
}

}  // namespace

SpecFile parse_spec(const std::string& text) {
  SpecFile spec;
  // strip comments by masking to spaces
  std::string clean = text;
  bool in_comment = false, in_string = false;
  for (std::size_t i = 0; i < clean.size(); ++i) {
    if (in_comment) {
      if (clean[i] == '\n')
        in_comment = false;
      else
        clean[i] = ' ';
    } else if (in_string) {
      if (clean[i] == '"') in_string = false;
    } else if (clean[i] == '"') {
      in_string = true;
    } else if (clean[i] == '#') {
      in_comment = true;
      clean[i] = ' ';
    }
  }
  Cursor cc{clean};
  while (!cc.done()) {
    std::string kw = cc.identifier();
    if (kw == "group") {
      std::string name = cc.identifier();
      cc.expect('=');
      SpecEntry e = parse_group_rhs(cc, spec);
      spec.groups[name] = std::move(e);
      spec.order.emplace_back("group", name);
    } else if (kw == "marking") {
      std::string name = cc.identifier();
      cc.expect('=');
      cc.expect('(');
      std::string base = cc.identifier();
      const SpecEntry& g = lookup_group(spec, base, cc);
      cc.expect(';');
      std::vector<Word> tuple;
      do {
        tuple.push_back(parse_word(cc.quoted(), g.names));
      } while (cc.eat(','));
      cc.expect(')');
      SpecEntry e;
      e.group = remark_subgroup(g.group, tuple);
      e.names = default_names("m", static_cast<int>(tuple.size()));
      spec.groups[name] = std::move(e);
      spec.order.emplace_back("marking", name);
    } else if (kw == "hom") {
      std::string name = cc.identifier();
      cc.expect('=');
      cc.expect('(');
      std::string sname = cc.identifier();
      cc.skip_ws();
      if (cc.s.compare(cc.i, 2, "->") != 0) cc.fail("expected '->'");
      cc.i += 2;
      std::string tname = cc.identifier();
      const SpecEntry& src = lookup_group(spec, sname, cc);
      const SpecEntry& tgt = lookup_group(spec, tname, cc);
      cc.expect(';');
      std::vector<Word> images(src.names.size());
      std::vector<char> seen(src.names.size(), 0);
      do {
        std::string gen = cc.identifier();
        auto it = std::find(src.names.begin(), src.names.end(), gen);
        if (it == src.names.end()) cc.fail("unknown source generator '" + gen + "'");
        cc.expect(':');
        std::size_t ix = static_cast<std::size_t>(it - src.names.begin());
        images[ix] = parse_word(cc.quoted(), tgt.names);  // "" is the identity
        seen[ix] = 1;
      } while (cc.eat(','));
      cc.expect(')');
      for (std::size_t i = 0; i < seen.size(); ++i)
        if (!seen[i]) cc.fail("missing image for generator '" + src.names[i] + "'");
      Hom h = src.group.relators ? make_hom_exact(src.group, tgt.group, std::move(images))
                                 : make_hom_checked(src.group, tgt.group, std::move(images), 4);
      spec.homs.emplace(name, std::move(h));
      spec.order.emplace_back("hom", name);
    } else if (kw == "sentence") {
      std::string name = cc.identifier();
      cc.expect('=');
      std::size_t eol = cc.s.find('\n', cc.i);
      std::string body =
          cc.s.substr(cc.i, eol == std::string::npos ? std::string::npos : eol - cc.i);
      spec.sentences[name] = parse_sentence(body);
      cc.i = eol == std::string::npos ? cc.s.size() : eol;
      spec.order.emplace_back("sentence", name);
    } else if (kw == "gog") {
      std::string name = cc.identifier();
      cc.expect('=');
      spec.gogs[name] = parse_gog_rhs(cc, spec);
      spec.order.emplace_back("gog", name);
    } else {
      cc.fail("unknown definition keyword '" + kw + "'");
    }
  }
  return spec;
}

SpecEntry parse_group_expr(const std::string& text, const SpecFile& ctx) {
  auto it = ctx.groups.find(text);
  if (it != ctx.groups.end()) return it->second;
  Cursor c{text};
  SpecEntry e = parse_group_rhs(c, ctx);
  if (!c.done()) c.fail("trailing input in group expression");
  return e;
}

}  // namespace mg
