#include "segal/common.hpp"

namespace segal {

PackedKeys::PackedKeys(int length, int max_value)
    : length_(length), width_(max_value <= 0xff ? 1 : max_value <= 0xffff ? 2 : 4) {}

std::string PackedKeys::encode(const int* v) const {
  std::string key(static_cast<std::size_t>(length_) * width_, '\0');
  for (int i = 0; i < length_; ++i) {
    auto x = static_cast<unsigned>(v[i]);
    for (int b = 0; b < width_; ++b) key[static_cast<std::size_t>(i) * width_ + b] = static_cast<char>((x >> (8 * b)) & 0xff);
  }
  return key;
}

int PackedKeys::add(const int* v) {
  auto key = encode(v);
  auto [it, fresh] = index_.emplace(key, size());
  if (fresh) keys_.push_back(std::move(key));
  return it->second;
}

int PackedKeys::find(const int* v) const {
  auto it = index_.find(encode(v));
  return it == index_.end() ? -1 : it->second;
}

std::vector<int> PackedKeys::get(int i) const {
  const auto& key = keys_[i];
  std::vector<int> v(length_);
  for (int t = 0; t < length_; ++t) {
    unsigned x = 0;
    for (int b = 0; b < width_; ++b)
      x |= static_cast<unsigned>(static_cast<unsigned char>(key[static_cast<std::size_t>(t) * width_ + b])) << (8 * b);
    v[t] = static_cast<int>(x);
  }
  return v;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

}  // namespace segal
