#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace schur {

/// Default cap on partition weight for enumeration-style operations.
inline constexpr int kDefaultWeightCap = 20;

/// An integer partition: a weakly decreasing sequence of positive parts.
/// The empty partition (weight 0) is valid. Instances are immutable.
class Partition {
public:
  Partition() = default;

  /// Validates: parts positive and weakly decreasing. Throws ArgumentError.
  explicit Partition(std::vector<int> parts);

  /// The r x c rectangular shape (c repeated r times). Degenerate
  /// rectangles (r = 0 or c = 0) give the empty partition.
  static Partition rectangle(int rows, int cols);

  /// Accepts "3,2,1", "[3,2,1]" and "(3,2,1)"; empty, "()" and "[]" give the
  /// empty partition. Throws ParseError with a byte offset.
  static Partition parse(std::string_view text);

  int weight() const { return weight_; }
  int rows() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }

  /// Part at 0-based row i; zero beyond the last row.
  int part(int i) const {
    return (i >= 0 && i < rows()) ? parts_[static_cast<std::size_t>(i)] : 0;
  }

  const std::vector<int>& parts() const { return parts_; }

  /// Conjugate diagram (columns become rows). An involution.
  Partition transposed() const;

  /// Diagram containment: mu fits inside this shape row by row.
  bool contains(const Partition& mu) const;

  /// "(3,2,1)"; the empty partition prints "()".
  std::string to_string() const;

  auto operator<=>(const Partition&) const = default;

private:
  std::vector<int> parts_;
  int weight_ = 0;
};

/// Orders partitions reverse-lexicographically: (4) < (3,1) < (2,2) < ...
/// within a fixed weight, which is the canonical listing order everywhere
/// in this library.
struct RevLexLess {
  bool operator()(const Partition& a, const Partition& b) const {
    return a.parts() > b.parts();
  }
};

struct RevLexPairLess {
  bool operator()(const std::pair<Partition, Partition>& a,
                  const std::pair<Partition, Partition>& b) const {
    if (a.first.parts() != b.first.parts())
      return a.first.parts() > b.first.parts();
    return a.second.parts() > b.second.parts();
  }
};

/// All partitions of n in reverse-lexicographic order.
/// Throws SizeLimitError when n exceeds the cap, ArgumentError when n < 0.
std::vector<Partition> partitions_of(int n, int cap = kDefaultWeightCap);

}  // namespace schur
