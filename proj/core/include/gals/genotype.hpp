#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace gals {

/// Fitness values are signed: feasible genotypes carry their objective value
/// (a non-negative integer), infeasible ones a negative penalty.
using Fitness = std::int64_t;

/// Fixed-length bitstring with a lazily cached fitness value.
///
/// The cache belongs to whichever problem last evaluated the genotype and is
/// dropped on any bit mutation; code that moves a genotype between problems
/// must call clear_cached_fitness().
class Genotype {
 public:
  Genotype() = default;
  explicit Genotype(std::vector<std::uint8_t> bits);

  static Genotype zeros(int n);
  static Genotype ones(int n);
  /// Parses a string like "0110".
  static Genotype from_string(std::string_view s);

  int size() const { return static_cast<int>(bits_.size()); }
  std::uint8_t bit(int i) const { return bits_[static_cast<std::size_t>(i)]; }
  const std::vector<std::uint8_t>& bits() const { return bits_; }

  void set_bit(int i, std::uint8_t value) {
    bits_[static_cast<std::size_t>(i)] = value;
    cached_.reset();
  }
  void flip_bit(int i) {
    bits_[static_cast<std::size_t>(i)] ^= 1u;
    cached_.reset();
  }

  std::string to_string() const;

  std::optional<Fitness> cached_fitness() const { return cached_; }
  void set_cached_fitness(Fitness f) const { cached_ = f; }
  void clear_cached_fitness() const { cached_.reset(); }

  friend bool operator==(const Genotype& a, const Genotype& b) { return a.bits_ == b.bits_; }
  friend bool operator!=(const Genotype& a, const Genotype& b) { return !(a == b); }

 private:
  std::vector<std::uint8_t> bits_;
  mutable std::optional<Fitness> cached_;
};

/// Number of positions where x and y differ. Lengths must match.
int hamming_distance(const Genotype& x, const Genotype& y);

}  // namespace gals
