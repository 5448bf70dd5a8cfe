#include "schur/partition.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "schur/error.hpp"

namespace schur {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0)
      throw ArgumentError("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw ArgumentError("partition parts must be weakly decreasing");
  }
  weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::rectangle(int rows, int cols) {
  if (rows < 0 || cols < 0)
    throw ArgumentError("rectangle dimensions must be nonnegative");
  if (rows == 0 || cols == 0) return Partition();
  return Partition(std::vector<int>(static_cast<std::size_t>(rows), cols));
}

Partition Partition::parse(std::string_view text) {
  std::size_t pos = 0;
  std::size_t end = text.size();
  auto skip_ws = [&] {
    while (pos < end && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  char close = 0;
  if (pos < end && (text[pos] == '[' || text[pos] == '(')) {
    close = text[pos] == '[' ? ']' : ')';
    ++pos;
  }
  std::vector<int> parts;
  skip_ws();
  while (pos < end && std::isdigit(static_cast<unsigned char>(text[pos]))) {
    long v = 0;
    std::size_t start = pos;
    while (pos < end && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      v = v * 10 + (text[pos] - '0');
      if (v > 1000000) throw ParseError("partition part too large", start);
      ++pos;
    }
    parts.push_back(static_cast<int>(v));
    skip_ws();
    if (pos < end && text[pos] == ',') {
      ++pos;
      skip_ws();
      if (pos >= end || !std::isdigit(static_cast<unsigned char>(text[pos])))
        throw ParseError("expected a part after ','", pos);
    }
  }
  if (close != 0) {
    if (pos >= end || text[pos] != close)
      throw ParseError(std::string("expected '") + close + "'", pos);
    ++pos;
  }
  skip_ws();
  if (pos != end) throw ParseError("trailing characters after partition", pos);
  try {
    return Partition(std::move(parts));
  } catch (const ArgumentError& e) {
    throw ParseError(e.what(), 0);
  }
}

Partition Partition::transposed() const {
  if (parts_.empty()) return Partition();
  std::vector<int> t(static_cast<std::size_t>(parts_[0]), 0);
  for (int p : parts_)
    for (int j = 0; j < p; ++j) ++t[static_cast<std::size_t>(j)];
  return Partition(std::move(t));
}

bool Partition::contains(const Partition& mu) const {
  if (mu.rows() > rows()) return false;
  for (int i = 0; i < mu.rows(); ++i)
    if (mu.part(i) > part(i)) return false;
  return true;
}

std::string Partition::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(parts_[i]);
  }
  out += ')';
  return out;
}

namespace {

void emit_partitions(int n, int max_part, std::vector<int>& prefix,
                     std::vector<Partition>& out) {
  if (n == 0) {
    out.push_back(Partition(prefix));
    return;
  }
  for (int first = std::min(n, max_part); first >= 1; --first) {
    prefix.push_back(first);
    emit_partitions(n - first, first, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n, int cap) {
  if (n < 0) throw ArgumentError("cannot enumerate partitions of a negative number");
  if (n > cap)
    throw SizeLimitError("partition weight " + std::to_string(n) +
                         " exceeds the cap of " + std::to_string(cap));
  std::vector<Partition> out;
  std::vector<int> prefix;
  emit_partitions(n, n, prefix, out);
  return out;
}

}  // namespace schur
