#include "boxcount/partitions/partition3d.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "boxcount/errors.hpp"

namespace boxcount {

namespace {

int leg_extent(const std::array<Partition2D, 3>& legs) {
  int e = 0;
  for (const auto& leg : legs) e = std::max({e, leg.part(1), leg.length()});
  return e;
}

bool has_box(const std::vector<Box>& sorted, const Box& b) {
  return std::binary_search(sorted.begin(), sorted.end(), b);
}

bool cylinder_hit(const std::array<Partition2D, 3>& legs, int axis, const Box& x) {
  switch (axis) {
    case 0: return legs[0].contains(x[2] + 1, x[1] + 1);
    case 1: return legs[1].contains(x[0] + 1, x[2] + 1);
    default: return legs[2].contains(x[1] + 1, x[0] + 1);
  }
}

bool in_union(const std::array<Partition2D, 3>& legs, const Box& x) {
  return cylinder_hit(legs, 0, x) || cylinder_hit(legs, 1, x) || cylinder_hit(legs, 2, x);
}

// Addable boxes for a sorted deviation; see the bound argument in addable_boxes.
std::vector<Box> addable_for(const std::array<Partition2D, 3>& legs, const std::vector<Box>& dev) {
  int bound = leg_extent(legs);
  for (const auto& b : dev) bound = std::max({bound, b[0] + 1, b[1] + 1, b[2] + 1});
  auto present = [&](const Box& x) { return in_union(legs, x) || has_box(dev, x); };
  std::vector<Box> out;
  for (int a = 0; a <= bound; ++a)
    for (int b = 0; b <= bound; ++b)
      for (int c = 0; c <= bound; ++c) {
        const Box x{a, b, c};
        if (present(x)) continue;
        if (a > 0 && !present({a - 1, b, c})) continue;
        if (b > 0 && !present({a, b - 1, c})) continue;
        if (c > 0 && !present({a, b, c - 1})) continue;
        out.push_back(x);
      }
  return out;
}

std::vector<std::vector<std::vector<Box>>> deviation_levels(const std::array<Partition2D, 3>& legs,
                                                            int max_deviation) {
  std::vector<std::vector<std::vector<Box>>> levels;
  levels.push_back({{}});
  for (int d = 1; d <= max_deviation; ++d) {
    std::set<std::vector<Box>> next;
    for (const auto& dev : levels.back()) {
      for (const auto& x : addable_for(legs, dev)) {
        std::vector<Box> grown = dev;
        grown.insert(std::upper_bound(grown.begin(), grown.end(), x), x);
        next.insert(std::move(grown));
      }
    }
    levels.emplace_back(next.begin(), next.end());
  }
  return levels;
}

}  // namespace

LeggedPartition3D::LeggedPartition3D(std::array<Partition2D, 3> legs, std::vector<Box> deviation)
    : legs_(std::move(legs)), deviation_(std::move(deviation)) {
  std::sort(deviation_.begin(), deviation_.end());
  if (std::adjacent_find(deviation_.begin(), deviation_.end()) != deviation_.end())
    throw std::invalid_argument("repeated deviation box");
  for (const auto& x : deviation_) {
    if (x[0] < 0 || x[1] < 0 || x[2] < 0) throw std::invalid_argument("negative box coordinate");
    if (in_union(legs_, x)) throw std::invalid_argument("deviation box lies in a leg cylinder");
    for (int axis = 0; axis < 3; ++axis) {
      Box p = x;
      if (--p[static_cast<std::size_t>(axis)] < 0) continue;
      if (!contains(p)) throw std::invalid_argument("deviation is not an order ideal");
    }
  }
}

bool LeggedPartition3D::in_cylinder(int axis, const Box& box) const noexcept {
  return cylinder_hit(legs_, axis, box);
}

int LeggedPartition3D::cylinder_count(const Box& box) const noexcept {
  return int(in_cylinder(0, box)) + int(in_cylinder(1, box)) + int(in_cylinder(2, box));
}

bool LeggedPartition3D::contains(const Box& box) const noexcept {
  return in_union(legs_, box) || has_box(deviation_, box);
}

int LeggedPartition3D::extent() const noexcept {
  int e = leg_extent(legs_);
  for (const auto& b : deviation_) e = std::max({e, b[0] + 1, b[1] + 1, b[2] + 1});
  return e;
}

std::vector<Box> LeggedPartition3D::overlap_boxes() const {
  const int e = leg_extent(legs_);
  std::vector<Box> out;
  for (int a = 0; a < e; ++a)
    for (int b = 0; b < e; ++b)
      for (int c = 0; c < e; ++c)
        if (cylinder_count({a, b, c}) >= 2) out.push_back({a, b, c});
  return out;
}

int LeggedPartition3D::regularized_size() const {
  int size = static_cast<int>(deviation_.size());
  for (const auto& b : overlap_boxes()) size -= cylinder_count(b) - 1;
  return size;
}

long LeggedPartition3D::truncated_count(int n) const {
  long count = 0;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (contains({a, b, c})) ++count;
  long legs = 0;
  for (const auto& leg : legs_) legs += leg.size();
  return count - static_cast<long>(n) * legs;
}

nlohmann::json LeggedPartition3D::to_json() const {
  nlohmann::json legs = nlohmann::json::array();
  for (const auto& leg : legs_) legs.push_back(leg.parts());
  nlohmann::json dev = nlohmann::json::array();
  for (const auto& b : deviation_) dev.push_back({b[0], b[1], b[2]});
  return {{"legs", legs}, {"deviation", dev}};
}

LeggedPartition3D LeggedPartition3D::from_json(const nlohmann::json& j) {
  try {
    if (!j.contains("legs") || j["legs"].size() != 3) throw ParseError("\"legs\" must list three partitions");
    std::array<Partition2D, 3> legs;
    for (std::size_t i = 0; i < 3; ++i) legs[i] = Partition2D(j["legs"][i].get<std::vector<int>>());
    std::vector<Box> dev;
    if (j.contains("deviation")) {
      for (const auto& b : j["deviation"]) {
        if (b.size() != 3) throw ParseError("deviation boxes need three coordinates");
        dev.push_back({b[0].get<int>(), b[1].get<int>(), b[2].get<int>()});
      }
    }
    return LeggedPartition3D(std::move(legs), std::move(dev));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("legged partition JSON: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("legged partition JSON: ") + e.what());
  }
}

std::vector<Box> addable_boxes(const LeggedPartition3D& pi) {
  return addable_for(pi.legs(), pi.deviation());
}

std::vector<LeggedPartition3D> enumerate_legged(const std::array<Partition2D, 3>& legs,
                                                int max_deviation) {
  std::vector<LeggedPartition3D> out;
  if (max_deviation < 0) return out;
  for (auto& level : deviation_levels(legs, max_deviation))
    for (auto& dev : level) out.emplace_back(legs, std::move(dev));
  return out;
}

std::vector<Partition3D> enumerate_plane_partitions(int n) {
  if (n < 0) return {};
  auto levels = deviation_levels({}, n);
  std::vector<Partition3D> out;
  for (auto& boxes : levels.back()) out.push_back(Partition3D{std::move(boxes)});
  return out;
}

int minimal_regularized_size(const std::array<Partition2D, 3>& legs) {
  return LeggedPartition3D(legs, {}).regularized_size();
}

std::array<Partition2D, 3> parse_legs(const std::string& text) {
  std::vector<std::string> slots{""};
  for (char ch : text) {
    if (ch == ';') {
      slots.emplace_back();
    } else {
      slots.back() += ch;
    }
  }
  if (slots.size() != 3) throw ParseError("legs need the form \"l;m;n\", got \"" + text + "\"");
  return {Partition2D::parse(slots[0]), Partition2D::parse(slots[1]), Partition2D::parse(slots[2])};
}

std::string legs_to_string(const std::array<Partition2D, 3>& legs) {
  return legs[0].to_string() + ";" + legs[1].to_string() + ";" + legs[2].to_string();
}

}  // namespace boxcount
