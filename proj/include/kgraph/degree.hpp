#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace kg {

/// An element of N^k. Ordering via <=> is lexicographic and only used for
/// canonical sorting; the partial order of N^k is `leq`.
class Degree {
 public:
  Degree() = default;
  explicit Degree(std::size_t rank) : coords_(rank, 0) {}
  explicit Degree(std::vector<std::uint32_t> coords) : coords_(std::move(coords)) {}
  Degree(std::initializer_list<std::uint32_t> coords) : coords_(coords) {}

  static Degree unit(std::size_t rank, std::size_t color) {
    Degree d(rank);
    d.coords_[color] = 1;
    return d;
  }

  /// Every coordinate equal to `value`.
  static Degree broadcast(std::size_t rank, std::uint32_t value) {
    return Degree(std::vector<std::uint32_t>(rank, value));
  }

  std::size_t rank() const { return coords_.size(); }
  std::span<const std::uint32_t> coords() const { return coords_; }
  std::uint32_t operator[](std::size_t i) const { return coords_[i]; }
  std::uint32_t& operator[](std::size_t i) { return coords_[i]; }

  bool is_zero() const;
  std::uint64_t total() const;

  /// Coordinatewise m <= n.
  bool leq(const Degree& other) const;

  Degree join(const Degree& other) const;
  Degree meet(const Degree& other) const;
  Degree operator+(const Degree& other) const;
  /// Requires other.leq(*this).
  Degree operator-(const Degree& other) const;

  std::string str() const;

  auto operator<=>(const Degree&) const = default;
  bool operator==(const Degree&) const = default;

 private:
  std::vector<std::uint32_t> coords_;
};

/// All n with 0 <= n <= cap, in lexicographic order.
std::vector<Degree> degrees_up_to(const Degree& cap);

/// All n with lo <= n <= hi.
std::vector<Degree> degrees_between(const Degree& lo, const Degree& hi);

}  // namespace kg
