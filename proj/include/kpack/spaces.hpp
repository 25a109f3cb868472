#pragma once

// The three graded spaces carrying an equivariant sl2 action:
//
//   Poly      H_{n,m}:  degree -m+2i piece D^i (x) R^{m-i}, basis d^a (x) x^b
//   Ext       H'_{n,m}: degree -m+2i piece L^i (x) L*^{m-i}, basis th_S (x) xi_T
//   ExtUsual  H_n:      degree -n+j+k pieces L^j (x) L*^k
//
// together with the raising operator L, lowering operator F, grading h, the
// Poincare pairing and the S_n action, all as exact matrices per degree.

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "kpack/combel.hpp"
#include "kpack/ratlin.hpp"

namespace kpack {

enum class CaseTag { Poly, Ext, ExtUsual };

std::string_view to_string(CaseTag c);
/// Accepts "poly", "ext", "ext-usual" (also "ext_usual", "extusual").
CaseTag parse_case(std::string_view text);

/// d^alpha (x) x^beta. The pairing, not the basis, carries factorials.
struct MonomialPair {
  MultiIndex d;
  MultiIndex x;
  friend auto operator<=>(const MonomialPair&, const MonomialPair&) = default;
};

/// theta_S (x) xi_T with both wedges in ascending index order.
struct WedgePair {
  SubsetMask theta;
  SubsetMask xi;
  friend auto operator<=>(const WedgePair&, const WedgePair&) = default;
};

using BasisVector = std::variant<MonomialPair, WedgePair>;

std::string to_string(const BasisVector& b);

struct SpaceLimits {
  std::size_t max_total_dim = 200000;
  std::size_t max_degree_dim = 5000;
};

/// Closed-form dimension of the piece of a given degree (0 when absent).
std::size_t expected_dimension(CaseTag c, int n, int m, int degree);

class GradedSpace {
 public:
  /// Throws OutOfRange for invalid (case, n, m) and DimensionCap when the
  /// closed-form dimensions exceed `limits`. For ExtUsual `m` is ignored.
  static GradedSpace build(CaseTag c, int n, int m, const SpaceLimits& limits = {});

  CaseTag kind() const noexcept { return kind_; }
  int n() const noexcept { return n_; }
  int m() const noexcept { return m_; }

  /// All formal degrees in increasing order, including empty pieces.
  const std::vector<int>& degrees() const noexcept { return degrees_; }
  bool has_degree(int degree) const { return pieces_.count(degree) != 0; }
  std::size_t dim(int degree) const;
  std::size_t total_dim() const;
  /// Most negative degree with a nonzero piece.
  std::optional<int> lowest_nonzero_degree() const;

  const std::vector<BasisVector>& basis(int degree) const;
  std::optional<std::size_t> position(int degree, const BasisVector& b) const;
  int degree_of(const BasisVector& b) const;

 private:
  CaseTag kind_ = CaseTag::Poly;
  int n_ = 0;
  int m_ = 0;
  std::vector<int> degrees_;
  std::map<int, std::vector<BasisVector>> pieces_;
  std::map<int, std::map<BasisVector, std::size_t>> index_;
};

/// A degree-indexed family of matrices; blocks[d] maps the basis of degree d
/// (columns) to the basis of degree d + shift (rows). A block is stored only
/// when both sides are nonzero.
struct DegreeBlockMap {
  int shift = 0;
  std::map<int, RatMatrix> blocks;

  /// The stored block, or a correctly shaped zero matrix.
  RatMatrix block_or_zero(const GradedSpace& space, int degree) const;
};

/// Gram blocks of the Poincare pairing: blocks[d](a, b) = <e_a, f_b> for e_a in
/// the basis of degree d and f_b in the basis of degree -d.
struct PairingGram {
  std::map<int, RatMatrix> blocks;
  RatMatrix block_or_zero(const GradedSpace& space, int degree) const;
};

DegreeBlockMap raising_L(const GradedSpace& space);
DegreeBlockMap lowering_F(const GradedSpace& space);
DegreeBlockMap grading_h(const GradedSpace& space);
PairingGram pairing_gram(const GradedSpace& space);

/// The global sign correction of the exterior pairing for H'_{n,m}.
int ext_sign_correction(int n, int m);

/// Action of a permutation (image vector over {0..n-1}); shift 0.
DegreeBlockMap sn_action(const GradedSpace& space, const std::vector<int>& perm);

/// Trace of the action of `perm` on one piece, without forming the block.
std::int64_t action_trace(const GradedSpace& space, int degree, const std::vector<int>& perm);

/// Adjacent transposition s_i = (i, i+1), zero based, as an image vector.
std::vector<int> adjacent_transposition(int n, int i);

// One-factor exterior algebra primitives. A result with sign 0 is the zero
// vector.
struct SignedSubset {
  int sign = 0;
  SubsetMask set;
};

/// e_k(w_S) = w_k ^ w_S.
SignedSubset wedge_left(SubsetMask s, int k);
/// Contraction of w_S against the dual basis element k.
SignedSubset contract(SubsetMask s, int k);
/// w_S ^ w_T as a multiple of w_{S u T}.
SignedSubset wedge_product(SubsetMask s, SubsetMask t);
/// g(w_S) = w_{g(s_1)} ^ ... ^ w_{g(s_r)} as a multiple of w_{g(S)}.
SignedSubset permute(SubsetMask s, const std::vector<int>& perm);

/// Matrices on the whole exterior algebra Lambda(V), dim 2^n, in the basis of
/// all subsets ordered by size then lexicographically.
namespace exterior {
std::vector<SubsetMask> full_basis(int n);
RatMatrix wedge_matrix(int n, int k);
RatMatrix contraction_matrix(int n, int k);
/// (u, v*) = det(v*_k(u_l)) between Lambda(V) (rows) and Lambda(V*) (cols).
RatMatrix dual_pairing_matrix(int n);
}  // namespace exterior

}  // namespace kpack
