#include "kpack/snrep.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include <gmpxx.h>

#include "kpack/error.hpp"
#include "kpack/ratlin.hpp"

namespace kpack {

using nlohmann::json;

CharVector character_of_piece(const GradedSpace& space, int degree) {
  const CharacterTable& table = character_table(space.n());
  CharVector chi = CharVector::zero(space.n());
  for (std::size_t c = 0; c < table.partitions.size(); ++c)
    chi.values[c] = action_trace(space, degree, class_representative(table.partitions[c]));
  return chi;
}

GradedCharacter graded_character(const GradedSpace& space) {
  GradedCharacter out;
  for (int d : space.degrees()) out[d] = character_of_piece(space, d);
  return out;
}

MultiplicityVector irr_multiplicities(const CharVector& chi) {
  const CharacterTable& table = character_table(chi.n);
  if (chi.values.size() != table.partitions.size())
    throw Error(ErrorKind::SizeMismatch, "character has the wrong number of classes");
  const mpz_class order = factorial(chi.n);
  MultiplicityVector out;
  for (std::size_t l = 0; l < table.partitions.size(); ++l) {
    mpz_class acc = 0;
    for (std::size_t c = 0; c < table.partitions.size(); ++c)
      acc += mpz_class(static_cast<long>(table.class_sizes[c])) * static_cast<long>(chi.values[c]) *
             static_cast<long>(table.values[l][c]);
    if (!mpz_divisible_p(acc.get_mpz_t(), order.get_mpz_t()))
      throw Error(ErrorKind::NotACharacter, "non-integral multiplicity of " + table.partitions[l].to_string());
    acc /= order;
    if (sgn(acc) < 0)
      throw Error(ErrorKind::NotACharacter, "negative multiplicity of " + table.partitions[l].to_string());
    out.push_back(acc.get_si());
  }
  return out;
}

SubrepResult check_subrepresentation(const CharVector& small, const CharVector& big) {
  if (small.n != big.n) throw Error(ErrorKind::SizeMismatch, "characters of different groups");
  const auto a = irr_multiplicities(small);
  const auto b = irr_multiplicities(big);
  SubrepResult r{true, {}};
  for (std::size_t i = 0; i < a.size(); ++i) {
    r.slack.push_back(b[i] - a[i]);
    if (b[i] < a[i]) r.pass = false;
  }
  return r;
}

LogConcavityResult verify_equivariant_logconcavity(const GradedCharacter& chi) {
  LogConcavityResult r;
  if (chi.empty()) return r;
  const int n = chi.begin()->second.n;
  const int lo = chi.begin()->first, hi = chi.rbegin()->first;
  auto at = [&](int i) {
    auto it = chi.find(i);
    return it == chi.end() ? CharVector::zero(n) : it->second;
  };
  for (int i = lo + 1; i < hi; ++i) {
    const CharVector mid = at(i);
    const auto sub = check_subrepresentation(at(i - 1) * at(i + 1), mid * mid);
    r.steps.push_back({i, sub.pass, sub.slack});
    r.pass = r.pass && sub.pass;
  }
  return r;
}

StrongChainResult verify_strong_chain(const GradedSpace& space) {
  if (space.kind() == CaseTag::ExtUsual)
    throw Error(ErrorKind::InvalidArgument, "strong chain is defined for poly and ext only");
  StrongChainResult r;
  const DegreeBlockMap L = raising_L(space);
  for (int d = -space.m(); d + 2 <= 0; d += 2) {
    ChainStep step;
    step.from_degree = d;
    const auto sub = check_subrepresentation(character_of_piece(space, d), character_of_piece(space, d + 2));
    step.multiplicity_pass = sub.pass;
    step.slack = sub.slack;
    step.rank_pass = rank(L.block_or_zero(space, d)) == space.dim(d);
    r.pass = r.pass && step.multiplicity_pass && step.rank_pass;
    r.agree = r.agree && step.multiplicity_pass == step.rank_pass;
    r.steps.push_back(std::move(step));
  }
  return r;
}

namespace {

std::vector<int> irrep_weights(int k) {
  std::vector<int> w;
  for (int j = -k; j <= k; j += 2) w.push_back(j);
  return w;
}

std::vector<int> tensor_weights(int k, int l) {
  std::vector<int> w;
  for (int a : irrep_weights(k))
    for (int b : irrep_weights(l)) w.push_back(a + b);
  std::sort(w.begin(), w.end());
  return w;
}

}  // namespace

ClebschGordanResult clebsch_gordan_check(int k, int l) {
  if (l < 0 || k < l) throw Error(ErrorKind::InvalidArgument, "clebsch-gordan needs k >= l >= 0");
  ClebschGordanResult r;
  r.tensor_weights = tensor_weights(k, l);
  for (int j = 0; j <= l; ++j) {
    const auto w = irrep_weights(k + l - 2 * j);
    r.sum_weights.insert(r.sum_weights.end(), w.begin(), w.end());
  }
  std::sort(r.sum_weights.begin(), r.sum_weights.end());
  r.pass = r.tensor_weights == r.sum_weights;
  if (l >= 1) {
    auto regrouped = tensor_weights(k + 1, l - 1);
    const auto tail = irrep_weights(k - l);
    regrouped.insert(regrouped.end(), tail.begin(), tail.end());
    std::sort(regrouped.begin(), regrouped.end());
    r.pass = r.pass && regrouped == r.tensor_weights;
  }
  return r;
}

// ---------------------------------------------------------------------------
// Coinvariants

namespace {

struct MonomialSpace {
  std::vector<MultiIndex> basis;
  std::map<MultiIndex, std::size_t> index;

  MonomialSpace(int n, int d) : basis(compositions(n, d)) {
    for (std::size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i], i);
  }
};

MultiIndex permute_exponents(const MultiIndex& b, const std::vector<int>& perm) {
  MultiIndex out{std::vector<int>(b.size(), 0)};
  for (std::size_t i = 0; i < b.size(); ++i) out.exponents[static_cast<std::size_t>(perm[i])] = b[i];
  return out;
}

}  // namespace

GradedCharacter coinvariant_graded_character(int n, int cap) {
  if (n < 1) throw Error(ErrorKind::OutOfRange, "coinvariants need n >= 1");
  if (n > cap) throw Error(ErrorKind::DimensionCap, "coinvariant ring above the configured cap");
  const CharacterTable& table = character_table(n);
  const int top = n * (n - 1) / 2;
  GradedCharacter out;
  // I_d = x_1 I_{d-1} + ... + x_n I_{d-1} + R e_d, carried as the reduced
  // echelon rows of the previous degree.
  RatMatrix prev_rows;
  for (int d = 0; d <= top; ++d) {
    const MonomialSpace R(n, d);
    const MonomialSpace Rprev(n, std::max(d - 1, 0));
    std::vector<std::vector<std::pair<std::size_t, Rational>>> gens;
    for (std::size_t r = 0; d > 0 && r < prev_rows.rows(); ++r) {
      for (int i = 0; i < n; ++i) {
        std::vector<std::pair<std::size_t, Rational>> g;
        for (std::size_t c = 0; c < prev_rows.cols(); ++c) {
          if (sgn(prev_rows(r, c)) == 0) continue;
          MultiIndex m = Rprev.basis[c];
          ++m.exponents[static_cast<std::size_t>(i)];
          g.emplace_back(R.index.at(m), prev_rows(r, c));
        }
        gens.push_back(std::move(g));
      }
    }
    if (d >= 1 && d <= n) {
      std::vector<std::pair<std::size_t, Rational>> e;
      for (SubsetMask s : subsets(n, d)) {
        MultiIndex m{std::vector<int>(static_cast<std::size_t>(n), 0)};
        for (int k : s.elements()) m.exponents[static_cast<std::size_t>(k)] = 1;
        e.emplace_back(R.index.at(m), Rational(1));
      }
      gens.push_back(std::move(e));
    }
    RatMatrix G(gens.size(), R.basis.size());
    for (std::size_t r = 0; r < gens.size(); ++r)
      for (const auto& [c, v] : gens[r]) G(r, c) = v;
    const RowEchelon ech = row_echelon(G);

    CharVector chi = CharVector::zero(n);
    for (std::size_t cls = 0; cls < table.partitions.size(); ++cls) {
      const auto g = class_representative(table.partitions[cls]);
      std::vector<std::size_t> image(R.basis.size());
      std::int64_t tr = 0;
      for (std::size_t c = 0; c < R.basis.size(); ++c) {
        image[c] = R.index.at(permute_exponents(R.basis[c], g));
        if (image[c] == c) ++tr;
      }
      Rational ideal_tr = 0;
      for (std::size_t k = 0; k < ech.pivots.size(); ++k)
        for (std::size_t c = 0; c < R.basis.size(); ++c)
          if (image[c] == ech.pivots[k] && sgn(ech.rows(k, c)) != 0) ideal_tr += ech.rows(k, c);
      const Rational q = Rational(tr) - ideal_tr;
      if (q.get_den() != 1) throw Error(ErrorKind::NotACharacter, "non-integral quotient trace");
      chi.values[cls] = q.get_num().get_si();
    }
    out[d] = chi;
    prev_rows = ech.rows;
  }
  return out;
}

ConjectureResult verify_flag_conjecture(int n, int cap) {
  ConjectureResult r{n, coinvariant_graded_character(n, cap), {}};
  r.log_concavity = verify_equivariant_logconcavity(r.characters);
  return r;
}

ConjectureResult verify_novak_conjecture(int n, int cap) {
  if (n < 1) throw Error(ErrorKind::OutOfRange, "novak experiment needs n >= 1");
  if (n > cap) throw Error(ErrorKind::DimensionCap, "novak experiment above the configured cap");
  const CharacterTable& table = character_table(n);
  ConjectureResult r{n, {}, {}};
  for (int k = 1; k <= n; ++k) r.characters[k] = CharVector::zero(n);
  for (const auto& lambda : table.partitions)
    r.characters[lambda.length()] =
        r.characters[lambda.length()] + standard_tableaux_count(lambda) * table.irreducible(lambda);
  r.log_concavity = verify_equivariant_logconcavity(r.characters);
  return r;
}

std::string multiplicity_csv(const GradedCharacter& chi) {
  std::ostringstream os;
  if (chi.empty()) return "degree\n";
  const CharacterTable& table = character_table(chi.begin()->second.n);
  os << "degree";
  for (const auto& p : table.partitions) os << ",\"" << p.to_string() << '"';
  os << '\n';
  for (const auto& [d, c] : chi) {
    os << d;
    for (auto m : irr_multiplicities(c)) os << ',' << m;
    os << '\n';
  }
  return os.str();
}

namespace {

json partition_labels(int n) {
  json labels = json::array();
  for (const auto& p : character_table(n).partitions) labels.push_back(p.to_string());
  return labels;
}

}  // namespace

json to_json(const LogConcavityResult& r) {
  json steps = json::array();
  for (const auto& s : r.steps) steps.push_back({{"index", s.degree}, {"pass", s.pass}, {"slack", s.slack}});
  return {{"pass", r.pass}, {"steps", steps}};
}

json to_json(const StrongChainResult& r) {
  json steps = json::array();
  for (const auto& s : r.steps)
    steps.push_back({{"from_degree", s.from_degree},
                     {"multiplicity_pass", s.multiplicity_pass},
                     {"rank_pass", s.rank_pass},
                     {"slack", s.slack}});
  return {{"pass", r.pass}, {"agree", r.agree}, {"steps", steps}};
}

json to_json(const ConjectureResult& r) {
  json mult = json::object();
  for (const auto& [k, c] : r.characters) mult[std::to_string(k)] = irr_multiplicities(c);
  return {{"n", r.n},
          {"partitions", partition_labels(r.n)},
          {"multiplicities", mult},
          {"log_concavity", to_json(r.log_concavity)}};
}

}  // namespace kpack
