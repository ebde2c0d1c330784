#pragma once

#include <array>
#include <string>
#include <vector>

#include <json.hpp>

#include "boxcount/partitions/partition2d.hpp"

namespace boxcount {

// 0-based lattice point (a, b, c) in Z^3_{>=0}.
using Box = std::array<int, 3>;

// Finite order ideal; boxes sorted lexicographically.
struct Partition3D {
  std::vector<Box> boxes;
  int size() const noexcept { return static_cast<int>(boxes.size()); }
  friend bool operator==(const Partition3D&, const Partition3D&) = default;
};

// Order ideal asymptotic to three cylinders. The leg along axis e has
// cross-section coordinates (column, row) on the axes (e+1, e+2) mod 3,
// so the box (a, b, c) lies in the cylinder along
//   axis 0 iff (row c+1, column b+1) is in legs[0],
//   axis 1 iff (row a+1, column c+1) is in legs[1],
//   axis 2 iff (row b+1, column a+1) is in legs[2].
// The deviation is disjoint from the cylinder union and sorted.
class LeggedPartition3D {
 public:
  LeggedPartition3D() = default;
  // Validates disjointness and the order-ideal property; throws std::invalid_argument.
  LeggedPartition3D(std::array<Partition2D, 3> legs, std::vector<Box> deviation);

  const std::array<Partition2D, 3>& legs() const noexcept { return legs_; }
  const std::vector<Box>& deviation() const noexcept { return deviation_; }

  // Number of cylinders containing the box (0..3).
  int cylinder_count(const Box& box) const noexcept;
  bool in_cylinder(int axis, const Box& box) const noexcept;
  bool contains(const Box& box) const noexcept;

  // Boxes lying in at least two cylinders; finite.
  std::vector<Box> overlap_boxes() const;
  // Strict bound: every coordinate of a box outside the leg cylinders'
  // unbounded directions is below this.
  int extent() const noexcept;

  // Regularized size: deviation minus pairwise overlaps plus the triple overlap.
  int regularized_size() const;
  // Box count in [0,N)^3 minus N times the total leg size.
  long truncated_count(int n) const;

  nlohmann::json to_json() const;
  static LeggedPartition3D from_json(const nlohmann::json& j);

  friend bool operator==(const LeggedPartition3D&, const LeggedPartition3D&) = default;

 private:
  std::array<Partition2D, 3> legs_;
  std::vector<Box> deviation_;
};

// Boxes that can be added keeping the order-ideal property, sorted.
std::vector<Box> addable_boxes(const LeggedPartition3D& pi);

// All legged partitions with deviation size <= max_deviation, sorted by
// (deviation size, lexicographic deviation).
std::vector<LeggedPartition3D> enumerate_legged(const std::array<Partition2D, 3>& legs,
                                                int max_deviation);

// All plane partitions of n, sorted lexicographically by box list.
std::vector<Partition3D> enumerate_plane_partitions(int n);

// Minimal regularized size over all configurations with these legs; the
// empty-deviation configuration attains it since deviation boxes only add.
int minimal_regularized_size(const std::array<Partition2D, 3>& legs);

// "l;m;n" with comma-separated parts; empty slots allowed. Throws ParseError.
std::array<Partition2D, 3> parse_legs(const std::string& text);
std::string legs_to_string(const std::array<Partition2D, 3>& legs);

}  // namespace boxcount
