#include <regex>

#include "segal/cli.hpp"

namespace segal::cli {

namespace {

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

std::pair<std::string, std::string> split_prefix(const std::string& id) {
  auto colon = id.find(':');
  if (colon == std::string::npos) return {id, ""};
  return {id.substr(0, colon), id.substr(colon + 1)};
}

std::pair<std::string, std::string> split_pair(const std::string& args, const std::string& id) {
  auto bar = args.find('|');
  if (bar == std::string::npos) throw InputError("expected two operands separated by '|' in " + id);
  return {args.substr(0, bar), args.substr(bar + 1)};
}

int small_int(const std::string& s, const std::string& id) {
  static const std::regex digits("[0-9]{1,2}");
  if (!std::regex_match(s, digits)) throw InputError("expected a small non-negative integer in " + id);
  return std::stoi(s);
}

fincat::FinCat single_category(const std::string& s) {
  static const std::regex ordinal(R"(\[([0-9]{1,2})\])");
  static const std::regex groupoid(R"(I\[?([0-9]{1,2})\]?)");
  std::smatch m;
  if (std::regex_match(s, m, ordinal)) return fincat::interval(std::stoi(m[1]));
  if (std::regex_match(s, m, groupoid)) return fincat::groupoid_interval(std::stoi(m[1]));
  if (s == "E") return fincat::walking_idempotent();
  throw InputError("unknown category '" + s + "'");
}

}  // namespace

const std::vector<std::string>& corpus_categories() {
  static const std::vector<std::string> names{"[0]", "[1]", "[2]", "I1", "I2", "E", "[1]xI1"};
  return names;
}

Kind kind_of(const std::string& id) {
  if (ends_with(id, ".fincat")) return Kind::fincat;
  if (ends_with(id, ".sset")) return Kind::sset;
  if (ends_with(id, ".bisset")) return Kind::bisset;
  auto [prefix, rest] = split_prefix(id);
  if (rest.empty() && prefix == id) {
    if (id == "point") return Kind::sset;
    if (id == "terminal") return Kind::bisset;
    return Kind::fincat;
  }
  if (prefix == "functor") return Kind::functor;
  if (prefix == "classify" || prefix == "box" || prefix == "tshriek") return Kind::bisset;
  if (prefix == "nerve" || prefix == "simplex" || prefix == "boundary" || prefix == "horn" || prefix == "spine" ||
      prefix == "j" || prefix == "product")
    return Kind::sset;
  throw InputError("unknown input kind '" + prefix + "'");
}

fincat::FinCat load_fincat(const std::string& id) {
  if (ends_with(id, ".fincat")) return parse_fincat(read_file(id), id);
  std::vector<std::string> parts;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= id.size(); ++i)
    if (i == id.size() || id[i] == 'x') {
      parts.push_back(id.substr(start, i - start));
      start = i + 1;
    }
  fincat::FinCat c = single_category(parts[0]);
  for (std::size_t i = 1; i < parts.size(); ++i) c = fincat::product(c, single_category(parts[i]));
  return c;
}

sset::SSetPtr load_sset(const std::string& id, const Options& opt) {
  if (ends_with(id, ".sset")) return sset::share(parse_sset(read_file(id), id));
  if (id == "point") return sset::share(sset::point(opt.dim));
  auto [prefix, rest] = split_prefix(id);
  const int d = opt.dim;
  if (prefix == "nerve") return sset::share(sset::nerve(load_fincat(rest), d));
  if (prefix == "simplex") return sset::share(sset::standard_simplex(small_int(rest, id), d));
  if (prefix == "boundary") return sset::share(sset::boundary(small_int(rest, id), d));
  if (prefix == "spine") return sset::share(sset::spine(small_int(rest, id), d));
  if (prefix == "j") return sset::share(sset::j_space(small_int(rest, id), d));
  if (prefix == "horn") {
    auto comma = rest.find(',');
    if (comma == std::string::npos) throw InputError("expected horn:<n>,<k> in " + id);
    int n = small_int(rest.substr(0, comma), id), k = small_int(rest.substr(comma + 1), id);
    if (k > n) throw InputError("horn index above the dimension in " + id);
    return sset::share(sset::horn(n, k, d));
  }
  if (prefix == "product") {
    auto [a, b] = split_pair(rest, id);
    return sset::share(sset::product(*load_sset(a, opt), *load_sset(b, opt)));
  }
  throw InputError("'" + id + "' does not name a simplicial set");
}

bisset::BiSSetPtr load_bisset(const std::string& id, const Options& opt) {
  if (ends_with(id, ".bisset")) return bisset::share(parse_bisset(read_file(id), id));
  if (id == "terminal") return bisset::share(bisset::terminal(opt.p, opt.q));
  auto [prefix, rest] = split_prefix(id);
  if (prefix == "classify") return bisset::share(bisset::classifying_diagram(load_fincat(rest), opt.p, opt.q));
  if (prefix == "box") {
    auto [a, b] = split_pair(rest, id);
    Options oa = opt, ob = opt;
    oa.dim = opt.p;
    ob.dim = opt.q;
    return bisset::share(bisset::box(*load_sset(a, oa), *load_sset(b, ob)));
  }
  if (prefix == "tshriek") return bisset::share(totalize::t_upper(*load_sset(rest, opt), opt.p, opt.q));
  throw InputError("'" + id + "' does not name a bisimplicial set");
}

fincat::Functor load_functor(const std::string& id) {
  auto [prefix, rest] = split_prefix(id);
  if (prefix != "functor") throw InputError("'" + id + "' does not name a functor");
  auto arrow = rest.find("->");
  if (arrow == std::string::npos) throw InputError("expected functor:<cat>-><cat>@<objects> in " + id);
  auto at = rest.find('@', arrow);
  auto c = fincat::share(load_fincat(rest.substr(0, arrow)));
  auto d = fincat::share(load_fincat(rest.substr(arrow + 2, at == std::string::npos ? std::string::npos : at - arrow - 2)));
  std::vector<int> images;
  if (at != std::string::npos) {
    std::string list = rest.substr(at + 1);
    std::size_t start = 0;
    for (std::size_t i = 0; i <= list.size(); ++i)
      if (i == list.size() || list[i] == ',') {
        auto name = list.substr(start, i - start);
        int o = d->object_index(name);
        if (o < 0) throw InputError("unknown object '" + name + "' in " + id);
        images.push_back(o);
        start = i + 1;
      }
    if (static_cast<int>(images.size()) != c->num_objects()) throw InputError("expected one object image per source object in " + id);
  }
  fincat::SearchOptions opts;
  if (!images.empty()) opts.object_filter = [&](int x, int y) { return images[x] == y; };
  std::vector<fincat::FunctorData> found;
  fincat::search_functors(*c, *d, opts, [&](const fincat::FunctorData& f) {
    found.push_back(f);
    return found.size() < 2;
  });
  if (found.empty()) throw InputError("no functor matches " + id);
  if (found.size() > 1) throw InputError("several functors match " + id + ": the object images do not determine a unique functor");
  return fincat::Functor{c, d, found.front()};
}

}  // namespace segal::cli
