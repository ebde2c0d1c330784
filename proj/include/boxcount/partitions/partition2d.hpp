#pragma once

#include <string>
#include <vector>

namespace boxcount {

// Weakly decreasing positive parts; rows and columns are 1-based.
class Partition2D {
 public:
  Partition2D() = default;
  // Throws std::invalid_argument unless parts are positive and weakly decreasing.
  explicit Partition2D(std::vector<int> parts);

  // "8,6,4,3,1,1"; the empty string is the empty partition. Throws ParseError.
  static Partition2D parse(const std::string& text);
  std::string to_string() const;

  const std::vector<int>& parts() const noexcept { return parts_; }
  int size() const noexcept { return size_; }
  int length() const noexcept { return static_cast<int>(parts_.size()); }
  bool empty() const noexcept { return parts_.empty(); }
  // lambda_i, zero beyond the last part.
  int part(int row) const noexcept;
  bool contains(int row, int column) const noexcept { return column >= 1 && column <= part(row); }

  Partition2D conjugate() const;

  // Defined for every box (i, j) with i, j >= 1, inside the diagram or not.
  int arm(int row, int column) const noexcept { return part(row) - column; }
  int leg(int row, int column) const noexcept;

  // Boxes (row, column) in row-major order.
  std::vector<std::pair<int, int>> boxes() const;

  friend bool operator==(const Partition2D&, const Partition2D&) = default;
  friend auto operator<=>(const Partition2D& a, const Partition2D& b) { return a.parts_ <=> b.parts_; }

 private:
  std::vector<int> parts_;
  std::vector<int> conjugate_parts_;
  int size_ = 0;
};

// All partitions of n, in reverse lexicographic order of parts.
std::vector<Partition2D> enumerate_partitions(int n);

// All partitions of size at most n, by size then reverse lexicographic.
std::vector<Partition2D> enumerate_partitions_up_to(int n);

}  // namespace boxcount
