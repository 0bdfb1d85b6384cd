#include "cobweb/fseq.hpp"

#include <algorithm>
#include <numeric>

#include "cobweb/error.hpp"

namespace cobweb {

FSequence::FSequence(std::vector<std::size_t> values, std::optional<std::string> name)
    : values_(std::move(values)), name_(std::move(name)) {
  if (values_.empty()) throw InvalidSequenceError("F-sequence must be non-empty");
  for (std::size_t k = 0; k < values_.size(); ++k) {
    if (values_[k] == 0) {
      throw InvalidSequenceError("F-sequence entry " + std::to_string(k) + " is zero");
    }
  }
}

FSequence FSequence::naturals(std::size_t length) {
  std::vector<std::size_t> v(length);
  std::iota(v.begin(), v.end(), std::size_t{1});
  return FSequence(std::move(v), "naturals");
}

FSequence FSequence::fibonacci(std::size_t length) {
  std::vector<std::size_t> v;
  v.reserve(length);
  std::size_t a = 1, b = 1;
  for (std::size_t k = 0; k < length; ++k) {
    v.push_back(a);
    a = std::exchange(b, a + b);
  }
  return FSequence(std::move(v), "fibonacci");
}

FSequence FSequence::constant(std::size_t value, std::size_t length) {
  return FSequence(std::vector<std::size_t>(length, value), "constant");
}

bool FSequence::contains(std::size_t value) const {
  return std::find(values_.begin(), values_.end(), value) != values_.end();
}

FSequence make_fsequence(Preset kind, std::size_t length, std::size_t constant_value,
                         const std::vector<std::size_t>& params) {
  switch (kind) {
    case Preset::naturals:
      return FSequence::naturals(length);
    case Preset::fibonacci:
      return FSequence::fibonacci(length);
    case Preset::constant:
      return FSequence::constant(constant_value, length);
    case Preset::explicit_list:
      return FSequence(params);
  }
  throw InvalidSequenceError("unknown preset");
}

LevelPartition::LevelPartition(std::vector<std::size_t> sizes) : sizes_(std::move(sizes)) {
  offsets_.reserve(sizes_.size());
  for (std::size_t s : sizes_) {
    if (s == 0) throw InvalidSequenceError("level size must be positive");
    offsets_.push_back(total_);
    total_ += s;
  }
}

Level LevelPartition::level_of(Vertex v) const {
  if (v >= total_) {
    throw RangeError("vertex " + std::to_string(v) + " outside [0, " + std::to_string(total_) + ")");
  }
  auto it = std::upper_bound(offsets_.begin(), offsets_.end(), v);
  return static_cast<Level>(std::distance(offsets_.begin(), it) - 1);
}

LevelPartition partition_of(const FSequence& f, std::size_t levels) {
  if (levels > f.size()) {
    throw RangeError("requested " + std::to_string(levels) + " levels from a sequence of length " +
                     std::to_string(f.size()));
  }
  return LevelPartition(std::vector<std::size_t>(f.values().begin(), f.values().begin() + levels));
}

}  // namespace cobweb
