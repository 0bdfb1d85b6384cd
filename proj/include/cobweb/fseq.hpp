#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace cobweb {

using Vertex = std::size_t;
using Level = std::size_t;

/// Finite, positive-integer-valued sequence of level cardinalities.
class FSequence {
 public:
  explicit FSequence(std::vector<std::size_t> values, std::optional<std::string> name = {});

  static FSequence naturals(std::size_t length);
  static FSequence fibonacci(std::size_t length);
  static FSequence constant(std::size_t value, std::size_t length);

  const std::vector<std::size_t>& values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }
  std::size_t operator[](std::size_t k) const { return values_.at(k); }
  const std::optional<std::string>& name() const noexcept { return name_; }

  bool contains(std::size_t value) const;

  friend bool operator==(const FSequence& a, const FSequence& b) { return a.values_ == b.values_; }

 private:
  std::vector<std::size_t> values_;
  std::optional<std::string> name_;
};

enum class Preset { naturals, fibonacci, constant, explicit_list };

/// `params` is the explicit list for `explicit_list`, otherwise ignored.
FSequence make_fsequence(Preset kind, std::size_t length, std::size_t constant_value = 1,
                         const std::vector<std::size_t>& params = {});

/// Ordered partition of [0, total) into consecutive levels.
class LevelPartition {
 public:
  LevelPartition() = default;
  explicit LevelPartition(std::vector<std::size_t> sizes);

  std::size_t levels() const noexcept { return sizes_.size(); }
  std::size_t size(Level k) const { return sizes_.at(k); }
  std::size_t offset(Level k) const { return offsets_.at(k); }
  std::size_t total() const noexcept { return total_; }
  const std::vector<std::size_t>& sizes() const noexcept { return sizes_; }
  const std::vector<std::size_t>& offsets() const noexcept { return offsets_; }

  Level level_of(Vertex v) const;
  Level top() const noexcept { return sizes_.empty() ? 0 : sizes_.size() - 1; }

  friend bool operator==(const LevelPartition&, const LevelPartition&) = default;

 private:
  std::vector<std::size_t> sizes_;
  std::vector<std::size_t> offsets_;
  std::size_t total_ = 0;
};

LevelPartition partition_of(const FSequence& f, std::size_t levels);

inline Level level_of(const LevelPartition& p, Vertex v) { return p.level_of(v); }

}  // namespace cobweb
