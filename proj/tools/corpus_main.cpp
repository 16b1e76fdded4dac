// Regenerates the shipped corpus directory from the built-in constructions.
#include <filesystem>
#include <fstream>
#include <iostream>

#include "segal/cli.hpp"

using namespace segal;

namespace {

std::string file_stem(const std::string& id) {
  std::string out;
  for (char c : id) {
    if (c == '[') out += "ord";
    else if (c == ']') continue;
    else if (c == 'I') out += "iso";
    else if (c == 'E') out += "idem";
    else if (c == 'x') out += "_x_";
    else out += c;
  }
  return out;
}

void write(const std::filesystem::path& p, const std::string& text) {
  std::ofstream f(p);
  if (!f) throw cli::InputError("cannot write " + p.string());
  f << text;
  std::cout << p.string() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: segal_corpus <output directory>\n";
    return cli::kInputErrorExit;
  }
  const std::filesystem::path dir(argv[1]);
  try {
    std::filesystem::create_directories(dir);
    for (const auto& id : cli::corpus_categories()) {
      const auto stem = file_stem(id);
      auto c = cli::load_fincat(id);
      write(dir / (stem + ".fincat"), fincat::write_fincat(c));
      write(dir / ("nerve_" + stem + ".sset"), cli::write_sset_file(sset::nerve(c, 3)));
      // Groupoid entries grow like 2^((n+1)(m+1)), so those files stop at vertical level 1
      // (and skip the (2,2) copy when it would exceed a megabyte).
      const bool groupoid = id == "I1" || id == "I2" || id == "[1]xI1";
      const int q = groupoid ? 1 : 3;
      write(dir / ("classify_" + stem + "_3" + std::to_string(q) + ".bisset"),
            cli::write_bisset_file(bisset::classifying_diagram(c, 3, q)));
      if (id != "I2" && id != "[1]xI1")
        write(dir / ("classify_" + stem + "_22.bisset"), cli::write_bisset_file(bisset::classifying_diagram(c, 2, 2)));
      write(dir / ("box_nerve_" + stem + "_point.bisset"),
            cli::write_bisset_file(bisset::box(sset::nerve(c, 3), sset::point(3))));
    }
    for (int m = 0; m <= 2; ++m) write(dir / ("j" + std::to_string(m) + ".sset"), cli::write_sset_file(sset::j_space(m, 3)));
    for (int n = 0; n <= 2; ++n)
      for (int m = 0; m <= 2; ++m)
        write(dir / ("box_simplex" + std::to_string(n) + "_simplex" + std::to_string(m) + ".bisset"),
              cli::write_bisset_file(bisset::box(sset::standard_simplex(n, 3), sset::standard_simplex(m, 3))));
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
