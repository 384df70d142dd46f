#pragma once

#include <array>
#include <cstdint>
#include <functional>

namespace egp {

/// A 2x2 matrix over Z_n with determinant 1, i.e. an element of SL(2, Z_n).
/// Entries are kept reduced to [0, n) at all times.
struct ModMatrix {
  std::int64_t a = 1, b = 0, c = 0, d = 1;
  std::int64_t n = 2;

  bool operator==(const ModMatrix&) const = default;

  static ModMatrix identity(std::int64_t n);

  /// Validating constructor: reduces entries mod n and checks det == 1.
  /// Throws std::invalid_argument on n < 2 or determinant != 1.
  static ModMatrix make(std::int64_t a, std::int64_t b, std::int64_t c,
                        std::int64_t d, std::int64_t n);

  std::int64_t det_mod_n() const;
};

/// Matrix product reduced mod n. Throws on modulus mismatch.
ModMatrix compose(const ModMatrix& g, const ModMatrix& h);

/// Group inverse: [[d, -b], [-c, a]] mod n (valid since det == 1).
ModMatrix inverse(const ModMatrix& g);

/// The generating set S_n in the fixed slot order
///   [s1, s2, s1^-1, s2^-1],
/// s1 = [[1,1],[0,1]], s2 = [[1,0],[1,1]] mod n. The slot order is a
/// contract relied upon by the Cayley BFS; for n = 2 the slots for an
/// element and its inverse coincide as group elements but stay distinct
/// slots (edge multiplicity).
struct GeneratorSet {
  std::array<ModMatrix, 4> elements;

  static GeneratorSet standard(std::int64_t n);

  /// Slot of the inverse generator: 0<->2, 1<->3.
  static constexpr int inverse_slot(int slot) { return (slot + 2) % 4; }
};

/// |SL(2, Z_n)| = n^3 * prod_{prime p | n} (1 - 1/p^2), evaluated exactly
/// in integer arithmetic via trial-division factorization.
/// Throws std::invalid_argument for n < 2 (or n beyond the 10^6 use range).
std::uint64_t group_order(std::int64_t n);

/// Operator norm of both generators of SL(2, Z): (1 + sqrt(5)) / 2.
double operator_norm_generator();

}  // namespace egp

template <>
struct std::hash<egp::ModMatrix> {
  std::size_t operator()(const egp::ModMatrix& m) const noexcept {
    // Entries are reduced, so packing base n is collision-free per modulus.
    std::uint64_t key = ((static_cast<std::uint64_t>(m.a) * m.n + m.b) * m.n + m.c) * m.n + m.d;
    return std::hash<std::uint64_t>{}(key);
  }
};
