#pragma once

// Schur polynomials, Littlewood-Richardson coefficients, Pieri rules and the
// Schur log-concavity checks built on them.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "kpack/combel.hpp"

namespace kpack {

/// s_nu -> coefficient. Zero coefficients are never stored.
using SchurExpansion = std::map<Partition, std::int64_t>;

/// Polynomial in n variables as exponent vector -> coefficient.
struct MonomialPoly {
  int n = 0;
  std::map<MultiIndex, std::int64_t> terms;

  bool is_symmetric() const;
  friend bool operator==(const MonomialPoly&, const MonomialPoly&) = default;
};

MonomialPoly operator*(const MonomialPoly& a, const MonomialPoly& b);
MonomialPoly operator+(const MonomialPoly& a, const MonomialPoly& b);
MonomialPoly operator*(std::int64_t s, const MonomialPoly& a);

/// Sum of x^content(T) over semistandard tableaux T of shape lambda with
/// entries in 1..n. Throws TooManyRows when l(lambda) > n.
MonomialPoly schur_monomial_expansion(const Partition& lambda, int n);

/// Coefficients of s_lambda s_mu by Littlewood-Richardson tableaux.
SchurExpansion lr_coefficients(const Partition& lambda, const Partition& mu);

SchurExpansion operator+(const SchurExpansion& a, const SchurExpansion& b);
SchurExpansion operator-(const SchurExpansion& a, const SchurExpansion& b);
/// Drops every s_nu with more than n rows (they vanish in n variables).
SchurExpansion truncate_rows(const SchurExpansion& e, int n);
bool is_nonnegative(const SchurExpansion& e);
/// a <= b coefficientwise.
bool dominated_by(const SchurExpansion& a, const SchurExpansion& b);

enum class StripMode { Row, Column };

/// All nu with nu / lambda a horizontal (Row) or vertical (Column) strip of
/// size k, in increasing order.
std::vector<Partition> strips(const Partition& lambda, int k, StripMode mode);

struct PieriResult {
  bool pass = false;
  SchurExpansion expansion;
  std::vector<Partition> predicted;
};

/// s_lambda s_(k) (Row) or s_lambda s_(1^k) (Column) against the strip rule.
PieriResult verify_pieri(const Partition& lambda, int k, StripMode mode);

struct DifferenceResult {
  bool pass = false;
  /// The expansion that must be Schur non-negative.
  SchurExpansion difference;
};

/// s_(i)^2 - s_(i-1) s_(i+1), or its column analogue with (1^i). i >= 1.
DifferenceResult verify_pieri_logconcavity(int i, StripMode mode);

/// s_kappa^2 - s_lambda s_mu with kappa = (lambda + mu) / 2 after zero
/// padding. Throws OddParts when lambda + mu has an odd part.
DifferenceResult verify_schur_nonneg(const Partition& lambda, const Partition& mu);

struct LineStep {
  int index = 0;
  bool pass = false;
  SchurExpansion difference;
};

struct LineResult {
  bool pass = true;
  /// Number of variables: the common padded length of start and step.
  int n = 0;
  /// Constant added to every entry to make all weights non-negative.
  int shift = 0;
  std::vector<std::vector<int>> weights;
  std::vector<LineStep> steps;
};

/// Weights w_j = start + j * step for 0 <= j < count. Throws NotDominant when
/// some w_j is not weakly decreasing.
LineResult verify_line_logconcavity(const std::vector<int>& start, const std::vector<int>& step, int count);

std::string to_string(const SchurExpansion& e);
nlohmann::json to_json(const SchurExpansion& e);
/// Header "partition,coefficient".
std::string expansion_csv(const SchurExpansion& e);

}  // namespace kpack
