#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace hhh {

class Permutation {
 public:
  /// Identity of S_n.
  explicit Permutation(int n);
  /// images[i-1] = w(i).
  explicit Permutation(std::vector<int> images);

  /// Cycle notation, e.g. "(1 2 3)(4)"; unlisted points are fixed.
  /// "()" and "" denote the identity.
  static Permutation parse(std::string_view text, int n);
  /// The representative (1..m_1)(m_1+1..m_2)... of a cycle type, longest cycles first.
  static Permutation special(const std::vector<int>& cycle_type);

  int n() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[i - 1]; }
  const std::vector<int>& images() const { return images_; }

  Permutation inverse() const;
  /// (this * o)(i) = this(o(i)).
  Permutation operator*(const Permutation& o) const;
  bool operator==(const Permutation& o) const = default;

  std::vector<std::vector<int>> cycles() const;  // including fixed points
  /// Cycle lengths, weakly decreasing.
  std::vector<int> cycle_type() const;
  int num_cycles() const { return static_cast<int>(cycles().size()); }
  bool is_identity() const;

  std::string str() const;

 private:
  std::vector<int> images_;
};

/// Parses "3,1" style partitions (any order, sorted decreasingly).
std::vector<int> parse_cycle_type(std::string_view text, int n);

/// All partitions of n, in decreasing lexicographic order.
std::vector<std::vector<int>> partitions(int n);

/// All permutations of S_n in lexicographic order of images.
std::vector<Permutation> all_permutations(int n);

}  // namespace hhh
