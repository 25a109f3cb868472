#pragma once

// S_n characters of graded pieces, irreducible multiplicities and
// equivariant log-concavity (plain and along the strong chain), plus the
// coinvariant-ring and tableau-count conjecture experiments.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "kpack/combel.hpp"
#include "kpack/spaces.hpp"

namespace kpack {

using GradedCharacter = std::map<int, CharVector>;
/// Multiplicity of each irreducible, indexed like partitions_of(n).
using MultiplicityVector = std::vector<std::int64_t>;

CharVector character_of_piece(const GradedSpace& space, int degree);
GradedCharacter graded_character(const GradedSpace& space);

/// Throws NotACharacter on a negative or non-integral multiplicity.
MultiplicityVector irr_multiplicities(const CharVector& chi);

struct SubrepResult {
  bool pass = false;
  /// mult(big) - mult(small) per irreducible.
  std::vector<std::int64_t> slack;
};

SubrepResult check_subrepresentation(const CharVector& small, const CharVector& big);

struct LogConcavityStep {
  int degree = 0;  ///< the middle index i
  bool pass = false;
  std::vector<std::int64_t> slack;
};

struct LogConcavityResult {
  bool pass = true;
  std::vector<LogConcavityStep> steps;
};

/// chi_{i-1} chi_{i+1} <= chi_i^2 at every i strictly between the smallest
/// and largest key. Missing keys count as zero.
LogConcavityResult verify_equivariant_logconcavity(const GradedCharacter& chi);

struct ChainStep {
  int from_degree = 0;  ///< H^d -> H^{d+2}
  bool multiplicity_pass = false;
  bool rank_pass = false;
  std::vector<std::int64_t> slack;
};

struct StrongChainResult {
  bool pass = true;
  bool agree = true;
  std::vector<ChainStep> steps;
};

/// The chain H^{-m} -> H^{-m+2} -> ... up to the middle degree, checked by
/// multiplicities and by rank of L. Poly and Ext only.
StrongChainResult verify_strong_chain(const GradedSpace& space);

struct ClebschGordanResult {
  bool pass = false;
  std::vector<int> tensor_weights;
  std::vector<int> sum_weights;
};

/// V(k) (x) V(l) against V(k+l) + ... + V(k-l), and for l >= 1 also against
/// (V(k+1) (x) V(l-1)) + V(k-l).
ClebschGordanResult clebsch_gordan_check(int k, int l);

/// Graded character of R[t_1..t_n] / (e_1, ..., e_n). Throws DimensionCap
/// when n > cap.
GradedCharacter coinvariant_graded_character(int n, int cap = 5);

struct ConjectureResult {
  int n = 0;
  GradedCharacter characters;
  LogConcavityResult log_concavity;
};

ConjectureResult verify_flag_conjecture(int n, int cap = 5);
/// V_n^k = sum over l(lambda) = k of f^lambda V^lambda, k = 1..n.
ConjectureResult verify_novak_conjecture(int n, int cap = 7);

/// Header "degree,<partition>,..." then one row of multiplicities per degree.
std::string multiplicity_csv(const GradedCharacter& chi);

nlohmann::json to_json(const LogConcavityResult& r);
nlohmann::json to_json(const StrongChainResult& r);
nlohmann::json to_json(const ConjectureResult& r);

}  // namespace kpack
