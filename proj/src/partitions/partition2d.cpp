#include "boxcount/partitions/partition2d.hpp"

#include <algorithm>
#include <stdexcept>

#include "boxcount/errors.hpp"

namespace boxcount {

Partition2D::Partition2D(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
    size_ += parts_[i];
  }
  if (!parts_.empty()) {
    conjugate_parts_.assign(static_cast<std::size_t>(parts_.front()), 0);
    for (int p : parts_)
      for (int j = 0; j < p; ++j) ++conjugate_parts_[static_cast<std::size_t>(j)];
  }
}

Partition2D Partition2D::parse(const std::string& text) {
  std::vector<int> parts;
  std::string token;
  auto flush = [&](bool final) {
    if (token.empty()) {
      if (final && parts.empty()) return;
      throw ParseError("empty part in partition \"" + text + "\"");
    }
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(token, &used);
    } catch (const std::exception&) {
      throw ParseError("bad part \"" + token + "\" in partition \"" + text + "\"");
    }
    if (used != token.size()) throw ParseError("bad part \"" + token + "\" in partition \"" + text + "\"");
    parts.push_back(value);
    token.clear();
  };
  for (char ch : text) {
    if (ch == ' ') continue;
    if (ch == ',') {
      flush(false);
    } else {
      token += ch;
    }
  }
  flush(true);
  try {
    return Partition2D(std::move(parts));
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string(e.what()) + ": \"" + text + "\"");
  }
}

std::string Partition2D::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(parts_[i]);
  }
  return out;
}

int Partition2D::part(int row) const noexcept {
  if (row < 1 || row > length()) return 0;
  return parts_[static_cast<std::size_t>(row - 1)];
}

int Partition2D::leg(int row, int column) const noexcept {
  const int height =
      column >= 1 && column <= static_cast<int>(conjugate_parts_.size())
          ? conjugate_parts_[static_cast<std::size_t>(column - 1)]
          : 0;
  return height - row;
}

Partition2D Partition2D::conjugate() const { return Partition2D(conjugate_parts_); }

std::vector<std::pair<int, int>> Partition2D::boxes() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(static_cast<std::size_t>(size_));
  for (int i = 1; i <= length(); ++i)
    for (int j = 1; j <= part(i); ++j) out.emplace_back(i, j);
  return out;
}

namespace {

void extend(int remaining, int cap, std::vector<int>& current, std::vector<Partition2D>& out) {
  if (remaining == 0) {
    out.emplace_back(current);
    return;
  }
  for (int p = std::min(remaining, cap); p >= 1; --p) {
    current.push_back(p);
    extend(remaining - p, p, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<Partition2D> enumerate_partitions(int n) {
  if (n < 0) return {};
  std::vector<Partition2D> out;
  std::vector<int> current;
  extend(n, n, current, out);
  return out;
}

std::vector<Partition2D> enumerate_partitions_up_to(int n) {
  std::vector<Partition2D> out;
  for (int k = 0; k <= n; ++k) {
    auto level = enumerate_partitions(k);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

}  // namespace boxcount
