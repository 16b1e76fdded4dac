#pragma once

#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace segal {

// Raised for malformed input or violated preconditions.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised when a computation would need simplices above the stored truncation.
class WindowError : public Error {
 public:
  WindowError(const std::string& what, std::string requirement)
      : Error(what), requirement_(std::move(requirement)) {}
  const std::string& requirement() const noexcept { return requirement_; }

 private:
  std::string requirement_;
};

// Raised when a check's hypotheses could not be certified (e.g. non-Kan input
// handed to a procedure that is only exact for Kan complexes).
class UncertifiedError : public Error {
 public:
  using Error::Error;
};

struct Verdict {
  bool ok = false;
  std::string witness;  // empty on success unless the procedure reports one
};

/// Deduplicating store of fixed-length vectors of small non-negative ints,
/// packed into 1, 2 or 4 bytes per entry depending on `max_value`.
class PackedKeys {
 public:
  PackedKeys() = default;
  PackedKeys(int length, int max_value);

  int length() const { return length_; }
  int size() const { return static_cast<int>(keys_.size()); }
  /// Index of an existing key or of the newly added one.
  int add(const int* v);
  int find(const int* v) const;  // -1 if absent
  std::vector<int> get(int i) const;

 private:
  std::string encode(const int* v) const;
  int length_ = 0;
  int width_ = 4;
  std::vector<std::string> keys_;
  std::unordered_map<std::string, int> index_;
};

std::string join(const std::vector<std::string>& parts, const std::string& sep);

}  // namespace segal
