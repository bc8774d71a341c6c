#include "gals/genotype.hpp"

#include <stdexcept>

namespace gals {

Genotype::Genotype(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
  for (const auto b : bits_) {
    if (b > 1) throw std::invalid_argument("Genotype: bit values must be 0 or 1");
  }
}

Genotype Genotype::zeros(int n) {
  if (n < 0) throw std::invalid_argument("Genotype::zeros: negative length");
  return Genotype(std::vector<std::uint8_t>(static_cast<std::size_t>(n), 0));
}

Genotype Genotype::ones(int n) {
  if (n < 0) throw std::invalid_argument("Genotype::ones: negative length");
  return Genotype(std::vector<std::uint8_t>(static_cast<std::size_t>(n), 1));
}

Genotype Genotype::from_string(std::string_view s) {
  std::vector<std::uint8_t> bits;
  bits.reserve(s.size());
  for (const char c : s) {
    if (c != '0' && c != '1') throw std::invalid_argument("Genotype::from_string: expected only '0'/'1'");
    bits.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  return Genotype(std::move(bits));
}

std::string Genotype::to_string() const {
  std::string s;
  s.reserve(bits_.size());
  for (const auto b : bits_) s.push_back(static_cast<char>('0' + b));
  return s;
}

int hamming_distance(const Genotype& x, const Genotype& y) {
  if (x.size() != y.size()) throw std::invalid_argument("hamming_distance: length mismatch");
  int d = 0;
  for (int i = 0; i < x.size(); ++i) d += x.bit(i) != y.bit(i);
  return d;
}

}  // namespace gals
