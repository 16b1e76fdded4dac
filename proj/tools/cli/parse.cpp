#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <utility>

#include "segal/cli.hpp"

namespace segal::cli {

ParseError::ParseError(const std::string& file, int line, const std::string& message)
    : InputError(file + (line > 0 ? ":" + std::to_string(line) : std::string()) + ": " + message), line_(line) {}

namespace {

struct Line {
  int number;
  std::vector<std::string> tokens;
};

// Splits into whitespace-separated tokens, dropping `#` comments and blank lines.
// `:`, `=`, `[`, `]` and `.` surrounded by spaces are kept as separate tokens by the callers' grammar.
std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> out;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string line(text.substr(pos, end - pos));
    ++number;
    pos = end + 1;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream in(line);
    Line l{number, {}};
    for (std::string t; in >> t;) l.tokens.push_back(t);
    if (!l.tokens.empty()) out.push_back(std::move(l));
    if (end == text.size()) break;
  }
  return out;
}

int to_int(const std::string& s, const std::string& file, int line, const char* what) {
  try {
    std::size_t used = 0;
    int v = std::stoi(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ParseError(file, line, std::string("expected ") + what + ", got '" + s + "'");
  }
}

// Parses `[x1 x2 ...] base` starting at tokens[from]; brackets may be glued to neighbours.
struct Word {
  std::vector<std::string> letters;
  std::string base;
};
Word parse_word(const Line& l, std::size_t from, const std::string& file) {
  std::string rest;
  for (std::size_t i = from; i < l.tokens.size(); ++i) rest += (i > from ? " " : "") + l.tokens[i];
  auto open = rest.find('[');
  auto close = rest.find(']');
  if (open != 0 || close == std::string::npos) throw ParseError(file, l.number, "expected '[word] base'");
  Word w;
  std::istringstream letters(rest.substr(1, close - 1));
  for (std::string t; letters >> t;) w.letters.push_back(t);
  std::istringstream base(rest.substr(close + 1));
  if (!(base >> w.base)) throw ParseError(file, l.number, "missing base identifier");
  if (std::string extra; base >> extra) throw ParseError(file, l.number, "unexpected '" + extra + "'");
  return w;
}

std::vector<int> degeneracy_letters(const Word& w, char letter, const std::string& file, int line) {
  std::vector<int> out;
  for (const auto& t : w.letters) {
    if (t.size() < 2 || t[0] != letter) throw ParseError(file, line, "bad degeneracy '" + t + "'");
    out.push_back(to_int(t.substr(1), file, line, "a degeneracy index"));
  }
  return out;
}

void expect_size(const Line& l, std::size_t n, const std::string& file, const char* form) {
  if (l.tokens.size() != n) throw ParseError(file, l.number, std::string("expected '") + form + "'");
}

template <class F>
auto wrap_invariants(const std::string& file, F&& f) {
  try {
    return f();
  } catch (const InputError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(file, 0, e.what());
  }
}

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

fincat::FinCat parse_fincat(std::string_view text, const std::string& file) {
  fincat::CategorySpec spec;
  std::set<std::string> objects, arrows;
  std::vector<std::pair<int, fincat::CategorySpec::Comp>> comps;
  for (const auto& l : tokenize(text)) {
    const auto& t = l.tokens;
    if (t[0] == "obj") {
      if (t.size() < 2) throw ParseError(file, l.number, "expected 'obj <id>...'");
      for (std::size_t i = 1; i < t.size(); ++i) {
        if (!objects.insert(t[i]).second) throw ParseError(file, l.number, "duplicate object " + t[i]);
        spec.objects.push_back(t[i]);
      }
    } else if (t[0] == "mor") {
      // mor f: a -> b   (the colon may be glued to the id)
      std::vector<std::string> u(t.begin() + 1, t.end());
      if (!u.empty() && u[0].size() > 1 && u[0].back() == ':') {
        u[0].pop_back();
        u.insert(u.begin() + 1, ":");
      }
      if (u.size() != 5 || u[1] != ":" || u[3] != "->") throw ParseError(file, l.number, "expected 'mor <id>: <src> -> <tgt>'");
      if (!objects.count(u[2])) throw ParseError(file, l.number, "unknown object " + u[2]);
      if (!objects.count(u[4])) throw ParseError(file, l.number, "unknown object " + u[4]);
      if (u[0].rfind("id_", 0) == 0) throw ParseError(file, l.number, "identities are implicit; '" + u[0] + "' is reserved");
      if (!arrows.insert(u[0]).second) throw ParseError(file, l.number, "duplicate morphism " + u[0]);
      spec.arrows.push_back({u[0], u[2], u[4]});
    } else if (t[0] == "comp") {
      expect_size(l, 6, file, "comp <g> . <f> = <h>");
      if (t[2] != "." || t[4] != "=") throw ParseError(file, l.number, "expected 'comp <g> . <f> = <h>'");
      comps.push_back({l.number, {t[1], t[3], t[5]}});
    } else {
      throw ParseError(file, l.number, "unknown directive '" + t[0] + "'");
    }
  }
  auto known = [&](const std::string& m) {
    return arrows.count(m) || (m.rfind("id_", 0) == 0 && objects.count(m.substr(3)));
  };
  for (const auto& [line, c] : comps) {
    for (const auto* m : {&c.g, &c.f, &c.h})
      if (!known(*m)) throw ParseError(file, line, "unknown morphism " + *m);
    spec.comps.push_back(c);
  }
  return wrap_invariants(file, [&] { return fincat::make_category(spec); });
}

namespace {

struct Flags {
  int cosk = -1, det = -1;
};

Flags parse_flags(const Line& l, const std::string& file) {
  expect_size(l, 3, file, "coskeletal <c> <d>");
  return {to_int(l.tokens[1], file, l.number, "a level"), to_int(l.tokens[2], file, l.number, "a level")};
}

}  // namespace

sset::TruncSSet parse_sset(std::string_view text, const std::string& file) {
  sset::Presentation pr;
  bool have_dim = false;
  Flags flags;
  std::map<std::string, std::pair<int, int>> gen_line;  // id -> (level, line)
  std::map<std::string, std::map<int, int>> face_line;
  for (const auto& l : tokenize(text)) {
    const auto& t = l.tokens;
    if (t[0] == "dim") {
      expect_size(l, 2, file, "dim <d>");
      if (have_dim) throw ParseError(file, l.number, "dim given twice");
      pr.dim = to_int(t[1], file, l.number, "a dimension");
      if (pr.dim < 0) throw ParseError(file, l.number, "dimension must be non-negative");
      pr.gens.assign(pr.dim + 1, {});
      have_dim = true;
    } else if (t[0] == "coskeletal") {
      flags = parse_flags(l, file);
    } else if (t[0] == "gen") {
      if (!have_dim) throw ParseError(file, l.number, "'dim' must come first");
      expect_size(l, 3, file, "gen <level> <id>");
      int k = to_int(t[1], file, l.number, "a level");
      if (k < 0 || k > pr.dim) throw ParseError(file, l.number, "level " + t[1] + " outside 0.." + std::to_string(pr.dim));
      if (!gen_line.emplace(t[2], std::make_pair(k, l.number)).second) throw ParseError(file, l.number, "duplicate generator " + t[2]);
      pr.gens[k].push_back(t[2]);
    } else if (t[0] == "face") {
      if (t.size() < 5 || t[3] != "=") throw ParseError(file, l.number, "expected 'face <id> <i> = [s<j> ...] <id>'");
      auto g = gen_line.find(t[1]);
      if (g == gen_line.end()) throw ParseError(file, l.number, "face of undeclared generator " + t[1]);
      int k = g->second.first;
      int i = to_int(t[2], file, l.number, "a face index");
      if (k == 0) throw ParseError(file, l.number, "vertex " + t[1] + " has no faces");
      if (i < 0 || i > k) throw ParseError(file, l.number, "face index " + t[2] + " outside 0.." + std::to_string(k));
      if (!face_line[t[1]].emplace(i, l.number).second) throw ParseError(file, l.number, "face " + t[2] + " of " + t[1] + " given twice");
      auto w = parse_word(l, 4, file);
      auto& faces = pr.faces[t[1]];
      faces.resize(k + 1);
      faces[i] = {degeneracy_letters(w, 's', file, l.number), w.base};
    } else {
      throw ParseError(file, l.number, "unknown directive '" + t[0] + "'");
    }
  }
  if (!have_dim) throw ParseError(file, 0, "missing 'dim' line");
  for (const auto& [id, at] : gen_line)
    for (int i = 0; at.first > 0 && i <= at.first; ++i)
      if (!face_line[id].count(i)) throw ParseError(file, at.second, "generator " + id + " is missing face " + std::to_string(i));
  for (const auto& [id, faces] : pr.faces)
    for (std::size_t i = 0; i < faces.size(); ++i)
      if (!gen_line.count(faces[i].base))
        throw ParseError(file, face_line[id][static_cast<int>(i)], "unknown base " + faces[i].base + " in face " + std::to_string(i) + " of " + id);
  auto x = wrap_invariants(file, [&] { return sset::from_presentation(pr); });
  if (flags.cosk >= 0) x.set_coskeletal(flags.cosk, flags.det);
  return x;
}

bisset::TruncBiSSet parse_bisset(std::string_view text, const std::string& file) {
  bisset::Presentation pr;
  bool have_window = false;
  Flags flags;
  std::map<std::string, std::tuple<int, int, int>> gen_line;  // id -> (n, m, line)
  std::map<std::string, std::map<int, int>> hline, vline;
  for (const auto& l : tokenize(text)) {
    const auto& t = l.tokens;
    if (t[0] == "window") {
      expect_size(l, 3, file, "window <p> <q>");
      if (have_window) throw ParseError(file, l.number, "window given twice");
      pr.p = to_int(t[1], file, l.number, "a degree");
      pr.q = to_int(t[2], file, l.number, "a degree");
      if (pr.p < 0 || pr.q < 0) throw ParseError(file, l.number, "window must be non-negative");
      have_window = true;
    } else if (t[0] == "coskeletal") {
      flags = parse_flags(l, file);
    } else if (t[0] == "gen") {
      if (!have_window) throw ParseError(file, l.number, "'window' must come first");
      expect_size(l, 4, file, "gen <n> <m> <id>");
      int n = to_int(t[1], file, l.number, "a degree"), m = to_int(t[2], file, l.number, "a degree");
      if (n < 0 || m < 0 || n > pr.p || m > pr.q) throw ParseError(file, l.number, "bidegree outside the window");
      if (!gen_line.emplace(t[3], std::make_tuple(n, m, l.number)).second) throw ParseError(file, l.number, "duplicate generator " + t[3]);
      pr.gens[{n, m}].push_back(t[3]);
    } else if (t[0] == "hface" || t[0] == "vface") {
      const bool h = t[0] == "hface";
      if (t.size() < 5 || t[3] != "=") throw ParseError(file, l.number, "expected '" + t[0] + " <id> <i> = [h<j> v<j> ...] <id>'");
      auto g = gen_line.find(t[1]);
      if (g == gen_line.end()) throw ParseError(file, l.number, "face of undeclared generator " + t[1]);
      int k = h ? std::get<0>(g->second) : std::get<1>(g->second);
      int i = to_int(t[2], file, l.number, "a face index");
      if (k == 0) throw ParseError(file, l.number, t[1] + " has no " + (h ? "horizontal" : "vertical") + " faces");
      if (i < 0 || i > k) throw ParseError(file, l.number, "face index " + t[2] + " outside 0.." + std::to_string(k));
      if (!(h ? hline : vline)[t[1]].emplace(i, l.number).second)
        throw ParseError(file, l.number, t[0] + " " + t[2] + " of " + t[1] + " given twice");
      auto w = parse_word(l, 4, file);
      bisset::BiExpr e;
      e.base = w.base;
      for (const auto& letter : w.letters) {
        if (letter.size() < 2 || (letter[0] != 'h' && letter[0] != 'v')) throw ParseError(file, l.number, "bad degeneracy '" + letter + "'");
        (letter[0] == 'h' ? e.hword : e.vword).push_back(to_int(letter.substr(1), file, l.number, "a degeneracy index"));
      }
      auto& faces = (h ? pr.hfaces : pr.vfaces)[t[1]];
      faces.resize(k + 1);
      faces[i] = e;
    } else {
      throw ParseError(file, l.number, "unknown directive '" + t[0] + "'");
    }
  }
  if (!have_window) throw ParseError(file, 0, "missing 'window' line");
  for (const auto& [id, at] : gen_line) {
    auto [n, m, line] = at;
    for (int i = 0; n > 0 && i <= n; ++i)
      if (!hline[id].count(i)) throw ParseError(file, line, "generator " + id + " is missing hface " + std::to_string(i));
    for (int i = 0; m > 0 && i <= m; ++i)
      if (!vline[id].count(i)) throw ParseError(file, line, "generator " + id + " is missing vface " + std::to_string(i));
  }
  for (auto* table : {&pr.hfaces, &pr.vfaces})
    for (const auto& [id, faces] : *table)
      for (const auto& e : faces)
        if (!gen_line.count(e.base)) throw ParseError(file, 0, "unknown base " + e.base + " in a face of " + id);
  auto x = wrap_invariants(file, [&] { return bisset::from_presentation(pr); });
  if (flags.cosk >= 0) x.set_coskeletal(flags.cosk, flags.det);
  return x;
}

sset::SSetMap parse_sset_map(std::string_view text, const sset::SSetPtr& src, const sset::SSetPtr& tgt, const std::string& file) {
  std::map<std::string, sset::DegenerateExpr> assignment;
  for (const auto& l : tokenize(text)) {
    if (l.tokens.size() < 3 || l.tokens[1] != "->") throw ParseError(file, l.number, "expected '<generator> -> [s<j> ...] <id>'");
    auto w = parse_word(l, 2, file);
    if (!assignment.emplace(l.tokens[0], sset::DegenerateExpr{degeneracy_letters(w, 's', file, l.number), w.base}).second)
      throw ParseError(file, l.number, "generator " + l.tokens[0] + " assigned twice");
  }
  return wrap_invariants(file, [&] { return sset::map_from_assignment(src, tgt, assignment); });
}

bisset::BiSSetMap parse_bisset_map(std::string_view text, const bisset::BiSSetPtr& src, const bisset::BiSSetPtr& tgt,
                                   const std::string& file) {
  std::map<std::string, bisset::BiExpr> assignment;
  for (const auto& l : tokenize(text)) {
    if (l.tokens.size() < 3 || l.tokens[1] != "->") throw ParseError(file, l.number, "expected '<generator> -> [h<j> v<j> ...] <id>'");
    auto w = parse_word(l, 2, file);
    bisset::BiExpr e;
    e.base = w.base;
    for (const auto& letter : w.letters) {
      if (letter.size() < 2 || (letter[0] != 'h' && letter[0] != 'v')) throw ParseError(file, l.number, "bad degeneracy '" + letter + "'");
      (letter[0] == 'h' ? e.hword : e.vword).push_back(to_int(letter.substr(1), file, l.number, "a degeneracy index"));
    }
    if (!assignment.emplace(l.tokens[0], e).second) throw ParseError(file, l.number, "generator " + l.tokens[0] + " assigned twice");
  }
  return wrap_invariants(file, [&] { return bisset::map_from_assignment(src, tgt, assignment); });
}

std::string write_sset_map(const sset::SSetMap& f) {
  std::ostringstream out;
  for (const auto& [g, e] : f.assignment()) {
    out << g << " -> [";
    for (std::size_t i = 0; i < e.word.size(); ++i) out << (i ? " " : "") << 's' << e.word[i];
    out << "] " << e.base << '\n';
  }
  return out.str();
}

std::string write_bisset_map(const bisset::BiSSetMap& f) {
  std::ostringstream out;
  for (const auto& [g, e] : f.assignment()) {
    out << g << " -> [";
    bool first = true;
    for (int j : e.hword) out << (std::exchange(first, false) ? "" : " ") << 'h' << j;
    for (int j : e.vword) out << (std::exchange(first, false) ? "" : " ") << 'v' << j;
    out << "] " << e.base << '\n';
  }
  return out.str();
}

namespace {

std::string with_flags(std::string text, int cosk, int det) {
  if (cosk < 0) return text;
  auto nl = text.find('\n');
  return text.insert(nl + 1, "coskeletal " + std::to_string(cosk) + " " + std::to_string(det) + "\n");
}

}  // namespace

std::string write_sset_file(const sset::TruncSSet& x) {
  return with_flags(sset::write_sset(x), x.coskeletal_level(), x.determined_level());
}

std::string write_bisset_file(const bisset::TruncBiSSet& x) {
  return with_flags(bisset::write_bisset(x), x.coskeletal_level(), x.determined_level());
}

}  // namespace segal::cli
