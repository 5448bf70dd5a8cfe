#include "schur/permutation.hpp"

#include <algorithm>
#include <numeric>

#include "schur/error.hpp"

namespace schur {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int v : images_) {
    if (v < 0 || v >= size() || seen[static_cast<std::size_t>(v)])
      throw ArgumentError("one-line notation is not a bijection");
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  if (n < 0) throw ArgumentError("negative permutation degree");
  std::vector<int> img(static_cast<std::size_t>(n));
  std::iota(img.begin(), img.end(), 0);
  return Permutation(std::move(img));
}

Permutation Permutation::transposition(int n, int i, int j) {
  if (i < 0 || j < 0 || i >= n || j >= n || i == j)
    throw ArgumentError("invalid transposition");
  Permutation p = identity(n);
  std::swap(p.images_[static_cast<std::size_t>(i)],
            p.images_[static_cast<std::size_t>(j)]);
  return p;
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  if (size() != rhs.size())
    throw ArgumentError("composing permutations of different degrees");
  std::vector<int> img(images_.size());
  for (int i = 0; i < size(); ++i)
    img[static_cast<std::size_t>(i)] = (*this)(rhs(i));
  return Permutation(std::move(img));
}

Permutation Permutation::inverse() const {
  std::vector<int> img(images_.size());
  for (int i = 0; i < size(); ++i)
    img[static_cast<std::size_t>((*this)(i))] = i;
  return Permutation(std::move(img));
}

bool Permutation::is_identity() const {
  for (int i = 0; i < size(); ++i)
    if ((*this)(i) != i) return false;
  return true;
}

int Permutation::sign() const {
  // (-1)^(n - #cycles), counting fixed points as cycles.
  std::vector<bool> seen(images_.size(), false);
  int cycles = 0;
  for (int i = 0; i < size(); ++i) {
    if (seen[static_cast<std::size_t>(i)]) continue;
    ++cycles;
    for (int j = i; !seen[static_cast<std::size_t>(j)]; j = (*this)(j))
      seen[static_cast<std::size_t>(j)] = true;
  }
  return ((size() - cycles) % 2 == 0) ? 1 : -1;
}

Partition Permutation::cycle_type() const {
  std::vector<bool> seen(images_.size(), false);
  std::vector<int> lengths;
  for (int i = 0; i < size(); ++i) {
    if (seen[static_cast<std::size_t>(i)]) continue;
    int len = 0;
    for (int j = i; !seen[static_cast<std::size_t>(j)]; j = (*this)(j)) {
      seen[static_cast<std::size_t>(j)] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.begin(), lengths.end(), std::greater<int>());
  return Partition(std::move(lengths));
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<bool> seen(images_.size(), false);
  std::vector<std::vector<int>> out;
  for (int i = 0; i < size(); ++i) {
    if (seen[static_cast<std::size_t>(i)]) continue;
    std::vector<int> cyc;
    for (int j = i; !seen[static_cast<std::size_t>(j)]; j = (*this)(j)) {
      seen[static_cast<std::size_t>(j)] = true;
      cyc.push_back(j);
    }
    if (cyc.size() >= 2) out.push_back(std::move(cyc));
  }
  return out;
}

std::string Permutation::to_cycle_string() const {
  auto cs = cycles();
  if (cs.empty()) return "e";
  std::string out;
  for (const auto& cyc : cs) {
    out += '(';
    for (std::size_t k = 0; k < cyc.size(); ++k) {
      if (k > 0) out += ' ';
      out += std::to_string(cyc[k] + 1);
    }
    out += ')';
  }
  return out;
}

std::vector<Permutation> all_permutations(int n) {
  if (n < 0) throw ArgumentError("negative permutation degree");
  std::vector<int> img(static_cast<std::size_t>(n));
  std::iota(img.begin(), img.end(), 0);
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation(img));
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

}  // namespace schur
