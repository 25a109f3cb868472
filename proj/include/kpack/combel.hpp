#pragma once

// Combinatorial building blocks: exponent vectors, subsets, integer
// partitions, hook lengths, and irreducible characters of the symmetric group.

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace kpack {

/// Exponent vector of a monomial in n variables.
struct MultiIndex {
  std::vector<int> exponents;

  std::size_t size() const noexcept { return exponents.size(); }
  int operator[](std::size_t i) const { return exponents[i]; }
  int degree() const;

  friend auto operator<=>(const MultiIndex&, const MultiIndex&) = default;
};

/// Subset of {0, ..., n-1} stored as a bit set; element k is printed as k+1.
struct SubsetMask {
  std::uint32_t bits = 0;

  static SubsetMask of(const std::vector<int>& zero_based);

  int size() const noexcept;
  bool contains(int k) const noexcept { return (bits >> k) & 1U; }
  /// Elements in ascending order (zero based).
  std::vector<int> elements() const;
  /// Number of elements strictly below k; the sign exponent for moving a
  /// factor with index k to its sorted position in the wedge.
  int count_below(int k) const noexcept;

  friend bool operator==(const SubsetMask&, const SubsetMask&) = default;
  /// Ascending lexicographic order of the sorted element lists.
  friend std::strong_ordering operator<=>(const SubsetMask& a, const SubsetMask& b);
};

/// Weakly decreasing list of positive parts.
struct Partition {
  std::vector<int> parts;

  Partition() = default;
  explicit Partition(std::vector<int> p);

  int size() const;  ///< |lambda|
  int length() const noexcept { return static_cast<int>(parts.size()); }
  /// Part i (zero based), 0 beyond the length.
  int part(std::size_t i) const noexcept { return i < parts.size() ? parts[i] : 0; }
  Partition conjugate() const;
  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  /// Lexicographic on parts; the canonical class order is the reverse of it.
  friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts <=> b.parts; }
};

/// Parses "3,1,1" or "(3,1,1)"; empty string / "()" / "0" is the empty partition.
Partition parse_partition(const std::string& text);

std::int64_t binomial(int n, int k);
std::int64_t factorial(int n);

/// All exponent vectors of length n and total degree m, starting from
/// (m,0,...,0) and decreasing lexicographically.
std::vector<MultiIndex> compositions(int n, int m);

/// All k-subsets of an n-set in ascending lexicographic order.
std::vector<SubsetMask> subsets(int n, int k);

/// All partitions of n in reverse lexicographic order: (n), (n-1,1), ..., (1^n).
std::vector<Partition> partitions_of(int n);

/// f^lambda by the hook-length formula.
std::int64_t standard_tableaux_count(const Partition& lambda);

/// z_mu = prod i^{m_i} m_i!, the centralizer order of cycle type mu.
std::int64_t centralizer_size(const Partition& mu);

/// Number of permutations of cycle type mu.
std::int64_t class_size(const Partition& mu);

/// A permutation of {0..n-1} (as an image vector) of cycle type mu, built from
/// consecutive cycles (0 1 ... mu_1-1)(mu_1 ...)...
std::vector<int> class_representative(const Partition& mu);

Partition cycle_type(const std::vector<int>& perm);

/// chi^lambda(mu) by the Murnaghan-Nakayama rule. Throws SizeMismatch.
std::int64_t mn_character(const Partition& lambda, const Partition& mu);

/// Class function on S_n, indexed by partitions_of(n).
struct CharVector {
  int n = 0;
  std::vector<std::int64_t> values;

  static CharVector zero(int n);
  /// Value at the identity class (1^n), which is last in canonical order.
  std::int64_t degree() const { return values.empty() ? 0 : values.back(); }
  friend bool operator==(const CharVector&, const CharVector&) = default;
};

CharVector operator+(const CharVector& a, const CharVector& b);
CharVector operator-(const CharVector& a, const CharVector& b);
/// Pointwise product: the character of the tensor product.
CharVector operator*(const CharVector& a, const CharVector& b);
CharVector operator*(std::int64_t s, const CharVector& a);

/// The full character table of S_n. Rows are irreducibles, columns are
/// classes, both in partitions_of(n) order.
struct CharacterTable {
  int n = 0;
  std::vector<Partition> partitions;
  std::vector<std::int64_t> class_sizes;
  std::vector<std::vector<std::int64_t>> values;

  std::size_t index_of(const Partition& p) const;
  CharVector irreducible(const Partition& lambda) const;
  /// Index of the class of the identity (1^n), the last column.
  std::size_t identity_class() const { return partitions.size() - 1; }
};

/// Built once per n on first use and shared read-only afterwards.
const CharacterTable& character_table(int n);

}  // namespace kpack
