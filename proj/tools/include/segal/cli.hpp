#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "segal/bicat.hpp"
#include "segal/bisset.hpp"
#include "segal/fincat.hpp"
#include "segal/sset.hpp"
#include "segal/totalize.hpp"

namespace segal::cli {

/// Bad input: unreadable file, syntax error, unknown identifier. Exit code 3.
class InputError : public Error {
 public:
  using Error::Error;
};

/// Syntax or invariant error in a text file; `line` is 0 when the error
/// concerns the file as a whole.
class ParseError : public InputError {
 public:
  ParseError(const std::string& file, int line, const std::string& message);
  int line() const noexcept { return line_; }

 private:
  int line_;
};

fincat::FinCat parse_fincat(std::string_view text, const std::string& file = "<input>");
sset::TruncSSet parse_sset(std::string_view text, const std::string& file = "<input>");
bisset::TruncBiSSet parse_bisset(std::string_view text, const std::string& file = "<input>");
/// `.map` files: one `<generator> -> [s1 s0] <target>` line per generator of
/// the source (`[h0 v1]` words for bisimplicial maps).
sset::SSetMap parse_sset_map(std::string_view text, const sset::SSetPtr& src, const sset::SSetPtr& tgt,
                             const std::string& file = "<input>");
bisset::BiSSetMap parse_bisset_map(std::string_view text, const bisset::BiSSetPtr& src, const bisset::BiSSetPtr& tgt,
                                   const std::string& file = "<input>");
std::string write_sset_map(const sset::SSetMap& f);
std::string write_bisset_map(const bisset::BiSSetMap& f);
/// Writes `coskeletal <c> <d>` after the header when the flags are set.
std::string write_sset_file(const sset::TruncSSet& x);
std::string write_bisset_file(const bisset::TruncBiSSet& x);

std::string read_file(const std::string& path);

struct Options {
  int dim = 2;       // truncation of generated simplicial sets
  int p = 3, q = 3;  // window of generated bisimplicial sets
};

enum class Kind { fincat, sset, bisset, functor };

/// Input identifiers are file paths (.fincat, .sset, .bisset) or generated
/// objects:
///   categories  [n]  I<m>  E  A x B (written AxB, e.g. [1]xI1)
///   sset        nerve:<cat> simplex:<n> boundary:<n> horn:<n>,<k> spine:<n>
///               j:<m> point product:<sset>|<sset>
///   bisset      classify:<cat> box:<sset>|<sset> terminal tshriek:<sset>
///   functor     functor:<cat>-><cat>@<object images, comma separated>
Kind kind_of(const std::string& id);
fincat::FinCat load_fincat(const std::string& id);
sset::SSetPtr load_sset(const std::string& id, const Options& opt);
bisset::BiSSetPtr load_bisset(const std::string& id, const Options& opt);
fincat::Functor load_functor(const std::string& id);
/// The shipped corpus of categories.
const std::vector<std::string>& corpus_categories();

enum class Status { pass, fail, window_insufficient };
std::string to_string(Status s);
int exit_code(Status s);
constexpr int kInputErrorExit = 3;

struct Detail {
  std::string key, value;
};

struct VerificationReport {
  std::string check;
  std::string anchor;
  std::vector<std::string> inputs;
  std::string window;
  Status verdict = Status::fail;
  std::string witness;  // failure witness or window requirement
  std::vector<Detail> details;
  double wall_ms = 0;
};

struct CheckInfo {
  std::string name;
  std::string anchor;
  std::string signature;  // expected inputs
  std::string statement;
};
const std::vector<CheckInfo>& registered_checks();

/// Runs a named check. Throws InputError for unknown checks or bad inputs.
VerificationReport run_check(const std::string& name, const std::vector<std::string>& inputs, const Options& opt);

struct SuiteEntry {
  std::string check;
  std::vector<std::string> inputs;
  Options options;
};
std::vector<SuiteEntry> default_suite();
/// JSON config: {"checks": [{"check": ..., "inputs": [...], "dim": d, "window": [p, q]}]}.
std::vector<SuiteEntry> parse_suite(std::string_view json_text, const std::string& file = "<config>");

struct SuiteReport {
  std::vector<VerificationReport> reports;  // ordered by check name, then inputs
  int exit_code() const;
};
/// Input errors inside a suite become failing reports naming the error.
SuiteReport verify_suite(const std::vector<SuiteEntry>& entries);

/// Wall times are left out unless `timing` is set, keeping reports byte-identical across runs.
std::string to_json(const VerificationReport& r, bool timing = false);
std::string to_json(const SuiteReport& r, bool timing = false);
std::string to_human(const VerificationReport& r, bool timing = false);
std::string to_human(const SuiteReport& r, bool timing = false);

}  // namespace segal::cli
