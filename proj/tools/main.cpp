#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "json.hpp"
#include "segal/cli.hpp"

using namespace segal;
using namespace segal::cli;

namespace {

struct Global {
  int dim = Options{}.dim;
  std::pair<int, int> window{Options{}.p, Options{}.q};
  std::string out;
  std::string format = "human";
  bool timing = false;

  Options options() const {
    Options o;
    o.dim = dim;
    o.p = window.first;
    o.q = window.second;
    return o;
  }
  bool structured() const { return format == "structured"; }
  std::string window_text() const { return "(" + std::to_string(window.first) + "," + std::to_string(window.second) + ")"; }
};

void emit(const Global& g, const std::string& text) {
  if (g.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(g.out);
  if (!f) throw InputError("cannot write " + g.out);
  f << text;
}

// Output of a construction: the object in its file format, or a JSON wrapper.
int emit_object(const Global& g, const std::string& command, const std::vector<std::string>& inputs,
                const std::string& window, const std::string& text, const nlohmann::ordered_json& extra = {}) {
  if (!g.structured()) {
    emit(g, text);
    return 0;
  }
  nlohmann::ordered_json j;
  j["command"] = command;
  j["inputs"] = inputs;
  j["window"] = window;
  for (auto it = extra.begin(); extra.is_object() && it != extra.end(); ++it) j[it.key()] = it.value();
  j["result"] = text;
  emit(g, j.dump(2) + "\n");
  return 0;
}

int emit_report(const Global& g, const VerificationReport& r) {
  emit(g, g.structured() ? to_json(r, g.timing) : to_human(r, g.timing));
  return exit_code(r.verdict);
}

std::string fincat_window(const Global& g) { return "dim " + std::to_string(g.dim); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite truncated models of quasicategories and complete Segal spaces"};
  app.require_subcommand(1);
  Global g;
  // Global flags are registered on every subcommand as well, so they may
  // appear before or after it.
  auto add_globals = [&g](CLI::App* a) {
    a->add_option("--dim", g.dim, "truncation level of generated simplicial sets")->check(CLI::Range(1, 6));
    a->add_option("--window", g.window, "window P Q of generated bisimplicial sets")->check(CLI::Range(0, 6));
    a->add_option("--out", g.out, "write the result to a file");
    a->add_option("--format", g.format, "human or structured (JSON)")->check(CLI::IsMember({"human", "structured"}));
    a->add_flag("--timing", g.timing, "include wall times in reports");
  };
  add_globals(&app);

  std::function<int()> action;
  std::vector<std::string> args;
  std::string config;

  // Inputs are taken as raw extras: CLI11 would otherwise read ids such as
  // [1] as list literals and strip the brackets.
  auto take_inputs = [&](CLI::App* sub, std::size_t min, std::size_t max) {
    args = sub->remaining();
    for (const auto& a : args)
      if (a.rfind("--", 0) == 0) throw InputError("unknown option " + a);
    if (args.size() < min || args.size() > max)
      throw InputError(sub->get_name() + " expects " +
                       (min == max ? std::to_string(min) : std::to_string(min) + " or more") + " input(s), got " +
                       std::to_string(args.size()));
  };
  auto simple = [&](const char* name, const char* help, const char* arg_help, std::size_t n, std::function<int()> f) {
    auto* sub = app.add_subcommand(name, help);
    sub->allow_extras();
    add_globals(sub);
    sub->footer(std::string("Inputs: ") + arg_help);
    sub->callback([&action, &take_inputs, sub, n, f] {
      action = [&take_inputs, sub, n, f] {
        take_inputs(sub, n > 0 ? n : 1, n > 0 ? n : static_cast<std::size_t>(-1));
        return f();
      };
    });
    return sub;
  };
  auto report_of = [&](const std::string& check) { return [&, check] { return emit_report(g, run_check(check, args, g.options())); }; };

  simple("tau1", "fundamental category of a simplicial set", "<sset>", 1, [&] {
    auto x = load_sset(args[0], g.options());
    return emit_object(g, "tau1", args, "dim " + std::to_string(x->dim()), fincat::write_fincat(sset::tau1(*x)));
  });
  simple("nerve", "nerve of a category at --dim", "<category>", 1, [&] {
    return emit_object(g, "nerve", args, fincat_window(g), write_sset_file(sset::nerve(load_fincat(args[0]), g.dim)));
  });
  simple("classify", "classifying diagram of a category at --window", "<category>", 1, [&] {
    return emit_object(g, "classify", args, g.window_text(),
                       write_bisset_file(bisset::classifying_diagram(load_fincat(args[0]), g.window.first, g.window.second)));
  });
  simple("segal", "strict Segal condition", "<bisset>", 1, report_of("strict-segal"));
  simple("complete", "completeness at the 1-truncated level", "<bisset>", 1, report_of("complete-1trunc"));
  simple("ho", "homotopy category of a Segal space", "<bisset>", 1, [&] {
    auto y = load_bisset(args[0], g.options());
    return emit_object(g, "ho", args, g.window_text(), fincat::write_fincat(bisset::ho(*y)));
  });
  simple("jfun", "the functor from tau1 of column 0 to Ho", "<bisset>", 1, [&] {
    auto y = load_bisset(args[0], g.options());
    auto j = bisset::j_functor(*y);
    std::string text;
    for (int f = 0; f < j.src->num_morphisms(); ++f)
      text += j.src->morphism(f).id + " -> " + j.tgt->morphism(j.mor(f)).id + "\n";
    return emit_object(g, "jfun", args, g.window_text(), text);
  });
  simple("tshriek", "t_upper of a simplicial set at --window", "<sset>", 1, [&] {
    auto x = load_sset(args[0], g.options());
    return emit_object(g, "tshriek", args, g.window_text(), write_bisset_file(totalize::t_upper(*x, g.window.first, g.window.second)));
  });
  simple("tlower", "t_lower of a bisimplicial set at --dim", "<bisset>", 1, [&] {
    auto y = load_bisset(args[0], g.options());
    if (y->coskeletal_level() >= 0)
      std::cerr << "warning: " << args[0]
                << " is coskeletal, so t_lower is a windowed approximation; tau1 is cross-checked against tau1 of the input\n";
    auto low = totalize::t_lower(*y, g.dim);
    const bool agree = fincat::isomorphic(sset::tau1(low), bisset::tau1_bisset(*y));
    if (!agree) {
      std::cerr << "error: tau1 of t_lower disagrees with tau1 of the input; enlarge the window\n";
      return 1;
    }
    nlohmann::ordered_json extra;
    extra["cross_check"] = "agree";
    return emit_object(g, "tlower", args, g.window_text() + " dim " + std::to_string(g.dim), write_sset_file(low), extra);
  });
  simple("counit-check", "counit of the totalization adjunction", "<sset>", 1, report_of("counit-tau1-iso"));
  simple("homcat", "hom-category of the homotopy 2-category", "<source> <target>", 2, [&] {
    const Kind k = kind_of(args[0]);
    if (kind_of(args[1]) != k || (k != Kind::sset && k != Kind::bisset))
      throw InputError("homcat expects two simplicial sets or two bisimplicial sets");
    bicat::HomCat2 h = k == Kind::sset
                           ? bicat::hom_category_qcat(load_sset(args[0], g.options()), load_sset(args[1], g.options()))
                           : bicat::hom_category_css(load_bisset(args[0], g.options()), load_bisset(args[1], g.options()),
                                                     g.window.first, g.window.second);
    nlohmann::ordered_json extra;
    extra["maps"] = h.num_maps();
    extra["cells"] = h.num_cells();
    const std::string window = k == Kind::sset ? "exponential level 2" : g.window_text();
    return emit_object(g, "homcat", args, window, fincat::write_fincat(*h.carrier), extra);
  });
  simple("equiv-search", "search for an inverse up to invertible 2-cells", "<functor> | <source> <target> <map file>", 0,
         report_of("equiv-search"));
  simple("bridge-check", "compare the two homotopy 2-categories on a pair", "<sset> <sset>", 2, report_of("bridge"));
  simple("dk-equiv", "Dwyer-Kan equivalence test", "<functor> | <source> <target> <map file>", 0, report_of("dk-equiv"));

  auto* check = app.add_subcommand("check", "run any registered check");
  check->allow_extras();
  add_globals(check);
  check->footer("Inputs: <check name> <inputs...>");
  check->callback([&] {
    action = [&] {
      take_inputs(check, 1, static_cast<std::size_t>(-1));
      const std::string name = args.front();
      const std::vector<std::string> inputs(args.begin() + 1, args.end());
      return emit_report(g, run_check(name, inputs, g.options()));
    };
  });

  auto* list = app.add_subcommand("checks", "list registered checks");
  add_globals(list);
  list->callback([&] {
    action = [&] {
      std::string text;
      for (const auto& c : registered_checks()) text += c.name + "  [" + c.anchor + "]  " + c.signature + "\n    " + c.statement + "\n";
      emit(g, text);
      return 0;
    };
  });

  auto* verify = app.add_subcommand("verify", "run a suite of checks (the bundled suite by default)");
  add_globals(verify);
  verify->add_option("--config", config, "JSON suite description");
  verify->callback([&] {
    action = [&] {
      auto entries = config.empty() ? default_suite() : parse_suite(read_file(config), config);
      auto s = verify_suite(entries);
      emit(g, g.structured() ? to_json(s, g.timing) : to_human(s, g.timing));
      return s.exit_code();
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kInputErrorExit;
  }
  try {
    return action();
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputErrorExit;
  } catch (const WindowError& e) {
    std::cerr << "window insufficient: " << e.what() << "; requires " << e.requirement() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
