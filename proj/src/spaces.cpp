#include "kpack/spaces.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <utility>

#include "kpack/error.hpp"

namespace kpack {

std::string_view to_string(CaseTag c) {
  switch (c) {
    case CaseTag::Poly: return "poly";
    case CaseTag::Ext: return "ext";
    case CaseTag::ExtUsual: return "ext-usual";
  }
  return "?";
}

CaseTag parse_case(std::string_view text) {
  if (text == "poly") return CaseTag::Poly;
  if (text == "ext") return CaseTag::Ext;
  if (text == "ext-usual" || text == "ext_usual" || text == "extusual") return CaseTag::ExtUsual;
  throw Error(ErrorKind::InvalidArgument, "unknown case '" + std::string(text) + "'");
}

namespace {

std::string monomial_string(char var, const MultiIndex& a) {
  std::ostringstream os;
  bool any = false;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k] == 0) continue;
    if (any) os << '*';
    os << var << (k + 1);
    if (a[k] > 1) os << '^' << a[k];
    any = true;
  }
  return any ? os.str() : "1";
}

std::string wedge_string(const char* var, SubsetMask s) {
  const auto el = s.elements();
  if (el.empty()) return "1";
  std::ostringstream os;
  for (std::size_t i = 0; i < el.size(); ++i) os << (i ? "^" : "") << var << (el[i] + 1);
  return os.str();
}

}  // namespace

std::string to_string(const BasisVector& b) {
  if (const auto* p = std::get_if<MonomialPair>(&b))
    return monomial_string('d', p->d) + " (x) " + monomial_string('x', p->x);
  const auto& w = std::get<WedgePair>(b);
  return wedge_string("th", w.theta) + " (x) " + wedge_string("xi", w.xi);
}

// ---------------------------------------------------------------------------
// Exterior algebra primitives

SignedSubset wedge_left(SubsetMask s, int k) {
  if (s.contains(k)) return {};
  SubsetMask t = s;
  t.bits |= 1U << k;
  return {s.count_below(k) % 2 == 0 ? 1 : -1, t};
}

SignedSubset contract(SubsetMask s, int k) {
  if (!s.contains(k)) return {};
  SubsetMask t = s;
  t.bits &= ~(1U << k);
  return {s.count_below(k) % 2 == 0 ? 1 : -1, t};
}

SignedSubset wedge_product(SubsetMask s, SubsetMask t) {
  if ((s.bits & t.bits) != 0) return {};
  int inversions = 0;
  for (int a : s.elements()) inversions += t.count_below(a);
  return {inversions % 2 == 0 ? 1 : -1, SubsetMask{s.bits | t.bits}};
}

SignedSubset permute(SubsetMask s, const std::vector<int>& perm) {
  std::vector<int> images;
  for (int a : s.elements()) images.push_back(perm[static_cast<std::size_t>(a)]);
  int inversions = 0;
  for (std::size_t i = 0; i < images.size(); ++i)
    for (std::size_t j = i + 1; j < images.size(); ++j)
      if (images[i] > images[j]) ++inversions;
  return {inversions % 2 == 0 ? 1 : -1, SubsetMask::of(images)};
}

namespace exterior {

std::vector<SubsetMask> full_basis(int n) {
  std::vector<SubsetMask> out;
  for (int k = 0; k <= n; ++k)
    for (auto s : subsets(n, k)) out.push_back(s);
  return out;
}

namespace {
template <class Op>
RatMatrix one_factor(int n, Op op) {
  const auto basis = full_basis(n);
  std::map<std::uint32_t, std::size_t> pos;
  for (std::size_t i = 0; i < basis.size(); ++i) pos[basis[i].bits] = i;
  RatMatrix m(basis.size(), basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j) {
    const SignedSubset r = op(basis[j]);
    if (r.sign != 0) m(pos.at(r.set.bits), j) = r.sign;
  }
  return m;
}
}  // namespace

RatMatrix wedge_matrix(int n, int k) {
  return one_factor(n, [k](SubsetMask s) { return wedge_left(s, k); });
}

RatMatrix contraction_matrix(int n, int k) {
  return one_factor(n, [k](SubsetMask s) { return contract(s, k); });
}

RatMatrix dual_pairing_matrix(int n) {
  const auto basis = full_basis(n);
  RatMatrix m(basis.size(), basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) m(i, i) = 1;
  return m;
}

}  // namespace exterior

// ---------------------------------------------------------------------------
// Dimensions and bases

namespace {

std::optional<int> balanced_index(int m, int degree) {
  if ((degree + m) % 2 != 0) return std::nullopt;
  const int i = (degree + m) / 2;
  if (i < 0 || i > m) return std::nullopt;
  return i;
}

void validate(CaseTag c, int n, int m) {
  if (n < 1) throw Error(ErrorKind::OutOfRange, "n must be at least 1");
  if (c == CaseTag::ExtUsual) {
    if (n > 16) throw Error(ErrorKind::OutOfRange, "n too large for exterior bases");
    return;
  }
  if (m < 0) throw Error(ErrorKind::OutOfRange, "m must be non-negative");
  if (c == CaseTag::Ext) {
    if (m > 2 * n)
      throw Error(ErrorKind::OutOfRange,
                  "exterior case requires m <= 2n (got n=" + std::to_string(n) + ", m=" + std::to_string(m) + ")");
    if (n > 16) throw Error(ErrorKind::OutOfRange, "n too large for exterior bases");
  }
}

}  // namespace

std::size_t expected_dimension(CaseTag c, int n, int m, int degree) {
  switch (c) {
    case CaseTag::Poly: {
      const auto i = balanced_index(m, degree);
      if (!i) return 0;
      return static_cast<std::size_t>(binomial(n + *i - 1, *i) * binomial(n + m - *i - 1, m - *i));
    }
    case CaseTag::Ext: {
      const auto i = balanced_index(m, degree);
      if (!i) return 0;
      return static_cast<std::size_t>(binomial(n, *i) * binomial(n, m - *i));
    }
    case CaseTag::ExtUsual: {
      const int s = degree + n;
      if (s < 0 || s > 2 * n) return 0;
      return static_cast<std::size_t>(binomial(2 * n, s));
    }
  }
  return 0;
}

GradedSpace GradedSpace::build(CaseTag c, int n, int m, const SpaceLimits& limits) {
  validate(c, n, m);
  GradedSpace sp;
  sp.kind_ = c;
  sp.n_ = n;
  sp.m_ = c == CaseTag::ExtUsual ? n : m;

  if (c == CaseTag::ExtUsual) {
    for (int d = -n; d <= n; ++d) sp.degrees_.push_back(d);
  } else {
    for (int i = 0; i <= m; ++i) sp.degrees_.push_back(-m + 2 * i);
  }

  std::size_t total = 0;
  for (int d : sp.degrees_) {
    const std::size_t dim = expected_dimension(c, n, sp.m_, d);
    if (dim > limits.max_degree_dim)
      throw Error(ErrorKind::DimensionCap, "degree " + std::to_string(d) + " has dimension " +
                                               std::to_string(dim) + " > cap " +
                                               std::to_string(limits.max_degree_dim));
    total += dim;
  }
  if (total > limits.max_total_dim)
    throw Error(ErrorKind::DimensionCap,
                "total dimension " + std::to_string(total) + " > cap " + std::to_string(limits.max_total_dim));

  for (int d : sp.degrees_) sp.pieces_[d];
  switch (c) {
    case CaseTag::Poly:
      for (int i = 0; i <= m; ++i) {
        auto& piece = sp.pieces_[-m + 2 * i];
        for (const auto& a : compositions(n, i))
          for (const auto& b : compositions(n, m - i)) piece.emplace_back(MonomialPair{a, b});
      }
      break;
    case CaseTag::Ext:
      for (int i = 0; i <= m; ++i) {
        auto& piece = sp.pieces_[-m + 2 * i];
        for (auto s : subsets(n, i))
          for (auto t : subsets(n, m - i)) piece.emplace_back(WedgePair{s, t});
      }
      break;
    case CaseTag::ExtUsual:
      for (int j = 0; j <= n; ++j)
        for (int k = 0; k <= n; ++k)
          for (auto s : subsets(n, j))
            for (auto t : subsets(n, k)) sp.pieces_[-n + j + k].emplace_back(WedgePair{s, t});
      for (auto& [d, piece] : sp.pieces_) std::sort(piece.begin(), piece.end());
      break;
  }
  for (const auto& [d, piece] : sp.pieces_) {
    auto& idx = sp.index_[d];
    for (std::size_t i = 0; i < piece.size(); ++i) idx.emplace(piece[i], i);
  }
  return sp;
}

std::size_t GradedSpace::dim(int degree) const {
  const auto it = pieces_.find(degree);
  return it == pieces_.end() ? 0 : it->second.size();
}

std::size_t GradedSpace::total_dim() const {
  std::size_t t = 0;
  for (const auto& [d, piece] : pieces_) t += piece.size();
  return t;
}

std::optional<int> GradedSpace::lowest_nonzero_degree() const {
  for (int d : degrees_)
    if (dim(d) > 0) return d;
  return std::nullopt;
}

const std::vector<BasisVector>& GradedSpace::basis(int degree) const {
  static const std::vector<BasisVector> empty;
  const auto it = pieces_.find(degree);
  return it == pieces_.end() ? empty : it->second;
}

std::optional<std::size_t> GradedSpace::position(int degree, const BasisVector& b) const {
  const auto it = index_.find(degree);
  if (it == index_.end()) return std::nullopt;
  const auto jt = it->second.find(b);
  if (jt == it->second.end()) return std::nullopt;
  return jt->second;
}

int GradedSpace::degree_of(const BasisVector& b) const {
  if (const auto* p = std::get_if<MonomialPair>(&b)) return -m_ + 2 * p->d.degree();
  const auto& w = std::get<WedgePair>(b);
  if (kind_ == CaseTag::ExtUsual) return -n_ + w.theta.size() + w.xi.size();
  return -m_ + 2 * w.theta.size();
}

RatMatrix DegreeBlockMap::block_or_zero(const GradedSpace& space, int degree) const {
  if (const auto it = blocks.find(degree); it != blocks.end()) return it->second;
  return RatMatrix(space.dim(degree + shift), space.dim(degree));
}

RatMatrix PairingGram::block_or_zero(const GradedSpace& space, int degree) const {
  if (const auto it = blocks.find(degree); it != blocks.end()) return it->second;
  return RatMatrix(space.dim(degree), space.dim(-degree));
}

// ---------------------------------------------------------------------------
// Operators

namespace {

using Term = std::pair<long, BasisVector>;

template <class ImageFn>
DegreeBlockMap assemble(const GradedSpace& sp, int shift, ImageFn&& image) {
  DegreeBlockMap out;
  out.shift = shift;
  for (int d : sp.degrees()) {
    const auto& src = sp.basis(d);
    const std::size_t rows = sp.dim(d + shift);
    if (src.empty() || rows == 0) continue;
    RatMatrix block(rows, src.size());
    for (std::size_t j = 0; j < src.size(); ++j) {
      for (const auto& [coef, target] : image(src[j])) {
        if (coef == 0) continue;
        const auto pos = sp.position(d + shift, target);
        if (!pos) throw Error(ErrorKind::DimensionMismatch, "operator image left the target piece");
        block(*pos, j) += coef;
      }
    }
    out.blocks.emplace(d, std::move(block));
  }
  return out;
}

MultiIndex plus_unit(MultiIndex a, int k) {
  ++a.exponents[static_cast<std::size_t>(k)];
  return a;
}

MultiIndex minus_unit(MultiIndex a, int k) {
  --a.exponents[static_cast<std::size_t>(k)];
  return a;
}

// (e_k o i_k)(w_S): contraction followed by left wedge with the same index.
int number_operator_sign(SubsetMask s, int k) {
  const SignedSubset c = contract(s, k);
  if (c.sign == 0) return 0;
  const SignedSubset w = wedge_left(c.set, k);
  return c.sign * w.sign;
}

}  // namespace

DegreeBlockMap raising_L(const GradedSpace& sp) {
  const int n = sp.n();
  switch (sp.kind()) {
    case CaseTag::Poly:
      // L = sum_k d_k (x) d/dx_k
      return assemble(sp, 2, [n](const BasisVector& b) {
        const auto& p = std::get<MonomialPair>(b);
        std::vector<Term> out;
        for (int k = 0; k < n; ++k)
          if (p.x[k] > 0) out.emplace_back(p.x[k], MonomialPair{plus_unit(p.d, k), minus_unit(p.x, k)});
        return out;
      });
    case CaseTag::Ext:
      // L = sum_k e_{theta_k} (x) i_{theta_k}
      return assemble(sp, 2, [n](const BasisVector& b) {
        const auto& w = std::get<WedgePair>(b);
        std::vector<Term> out;
        for (int k = 0; k < n; ++k) {
          const auto a = wedge_left(w.theta, k);
          const auto c = contract(w.xi, k);
          if (a.sign != 0 && c.sign != 0) out.emplace_back(a.sign * c.sign, WedgePair{a.set, c.set});
        }
        return out;
      });
    case CaseTag::ExtUsual:
      // L = sum_k e_{theta_k} (x) e_{xi_k}
      return assemble(sp, 2, [n](const BasisVector& b) {
        const auto& w = std::get<WedgePair>(b);
        std::vector<Term> out;
        for (int k = 0; k < n; ++k) {
          const auto a = wedge_left(w.theta, k);
          const auto c = wedge_left(w.xi, k);
          if (a.sign != 0 && c.sign != 0) out.emplace_back(a.sign * c.sign, WedgePair{a.set, c.set});
        }
        return out;
      });
  }
  return {};
}

DegreeBlockMap lowering_F(const GradedSpace& sp) {
  const int n = sp.n();
  switch (sp.kind()) {
    case CaseTag::Poly:
      // F = sum_k d/dd_k (x) x_k
      return assemble(sp, -2, [n](const BasisVector& b) {
        const auto& p = std::get<MonomialPair>(b);
        std::vector<Term> out;
        for (int k = 0; k < n; ++k)
          if (p.d[k] > 0) out.emplace_back(p.d[k], MonomialPair{minus_unit(p.d, k), plus_unit(p.x, k)});
        return out;
      });
    case CaseTag::Ext:
      // F = sum_k i_{xi_k} (x) e_{xi_k}
      return assemble(sp, -2, [n](const BasisVector& b) {
        const auto& w = std::get<WedgePair>(b);
        std::vector<Term> out;
        for (int k = 0; k < n; ++k) {
          const auto a = contract(w.theta, k);
          const auto c = wedge_left(w.xi, k);
          if (a.sign != 0 && c.sign != 0) out.emplace_back(a.sign * c.sign, WedgePair{a.set, c.set});
        }
        return out;
      });
    case CaseTag::ExtUsual:
      // F = sum_k i_{xi_k} (x) i_{theta_k}
      return assemble(sp, -2, [n](const BasisVector& b) {
        const auto& w = std::get<WedgePair>(b);
        std::vector<Term> out;
        for (int k = 0; k < n; ++k) {
          const auto a = contract(w.theta, k);
          const auto c = contract(w.xi, k);
          if (a.sign != 0 && c.sign != 0) out.emplace_back(a.sign * c.sign, WedgePair{a.set, c.set});
        }
        return out;
      });
  }
  return {};
}

DegreeBlockMap grading_h(const GradedSpace& sp) {
  const int n = sp.n();
  switch (sp.kind()) {
    case CaseTag::Poly:
      // h = sum_k (d_k d/dd_k (x) id - id (x) x_k d/dx_k); d_k d/dd_k scales
      // d^a by a_k.
      return assemble(sp, 0, [n](const BasisVector& b) {
        const auto& p = std::get<MonomialPair>(b);
        long coef = 0;
        for (int k = 0; k < n; ++k) coef += p.d[k] - p.x[k];
        return std::vector<Term>{{coef, b}};
      });
    case CaseTag::Ext:
      // h = sum_k (e_{theta_k} i_{xi_k} (x) id - id (x) e_{xi_k} i_{theta_k})
      return assemble(sp, 0, [n](const BasisVector& b) {
        const auto& w = std::get<WedgePair>(b);
        long coef = 0;
        for (int k = 0; k < n; ++k) coef += number_operator_sign(w.theta, k) - number_operator_sign(w.xi, k);
        return std::vector<Term>{{coef, b}};
      });
    case CaseTag::ExtUsual:
      // h = sum_k (e_{theta_k} i_{xi_k} (x) id + id (x) e_{xi_k} i_{theta_k}) - n id
      return assemble(sp, 0, [n](const BasisVector& b) {
        const auto& w = std::get<WedgePair>(b);
        long coef = -n;
        for (int k = 0; k < n; ++k) coef += number_operator_sign(w.theta, k) + number_operator_sign(w.xi, k);
        return std::vector<Term>{{coef, b}};
      });
  }
  return {};
}

int ext_sign_correction(int n, int m) {
  const int e = m <= n ? m : 2 * n - m;
  return (e * (e - 1) / 2) % 2 == 0 ? 1 : -1;
}

namespace {

// (d^a, x^c) = (d^a x^c)(0) with d_k acting as d/dx_k: nonzero only for a = c,
// where it is a!.
BigInt apolar(const MultiIndex& a, const MultiIndex& c) {
  if (a != c) return 0;
  BigInt f = 1;
  for (int e : a.exponents) {
    BigInt t;
    mpz_fac_ui(t.get_mpz_t(), static_cast<unsigned long>(e));
    f *= t;
  }
  return f;
}

}  // namespace

PairingGram pairing_gram(const GradedSpace& sp) {
  PairingGram g;
  const int n = sp.n();
  const SubsetMask full{n >= 32 ? ~0U : (1U << n) - 1U};
  const int eps = sp.kind() == CaseTag::Ext ? ext_sign_correction(n, sp.m()) : 1;
  for (int d : sp.degrees()) {
    const auto& left = sp.basis(d);
    const auto& right = sp.basis(-d);
    if (left.empty() || right.empty()) continue;
    RatMatrix block(left.size(), right.size());
    for (std::size_t a = 0; a < left.size(); ++a) {
      for (std::size_t b = 0; b < right.size(); ++b) {
        switch (sp.kind()) {
          case CaseTag::Poly: {
            // <d (x) f, d' (x) f'> = (d, f')(d', f)
            const auto& u = std::get<MonomialPair>(left[a]);
            const auto& v = std::get<MonomialPair>(right[b]);
            const BigInt val = apolar(u.d, v.x) * apolar(v.d, u.x);
            if (val != 0) block(a, b) = Rational(val);
            break;
          }
          case CaseTag::Ext: {
            // <u (x) v*, u' (x) v*'> = eps (u, v*')(u', v*); for ascending
            // wedges of basis vectors the determinant is 1 iff the index sets agree.
            const auto& u = std::get<WedgePair>(left[a]);
            const auto& v = std::get<WedgePair>(right[b]);
            if (u.theta == v.xi && v.theta == u.xi) block(a, b) = eps;
            break;
          }
          case CaseTag::ExtUsual: {
            // Multiplication into the top piece th_1..th_n (x) xi_1..xi_n.
            const auto& u = std::get<WedgePair>(left[a]);
            const auto& v = std::get<WedgePair>(right[b]);
            const auto th = wedge_product(u.theta, v.theta);
            const auto xi = wedge_product(u.xi, v.xi);
            if (th.sign != 0 && xi.sign != 0 && th.set == full && xi.set == full)
              block(a, b) = th.sign * xi.sign;
            break;
          }
        }
      }
    }
    g.blocks.emplace(d, std::move(block));
  }
  return g;
}

std::vector<int> adjacent_transposition(int n, int i) {
  if (i < 0 || i + 1 >= n) throw Error(ErrorKind::OutOfRange, "no such adjacent transposition");
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  std::swap(p[static_cast<std::size_t>(i)], p[static_cast<std::size_t>(i + 1)]);
  return p;
}

namespace {

void validate_permutation(const std::vector<int>& perm, int n) {
  if (static_cast<int>(perm.size()) != n) throw Error(ErrorKind::InvalidArgument, "permutation has wrong size");
  std::vector<bool> seen(perm.size(), false);
  for (int v : perm) {
    if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)])
      throw Error(ErrorKind::InvalidArgument, "not a permutation");
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Term act(const BasisVector& b, const std::vector<int>& perm) {
  if (const auto* p = std::get_if<MonomialPair>(&b)) {
    MonomialPair q = *p;
    for (std::size_t k = 0; k < perm.size(); ++k) {
      q.d.exponents[static_cast<std::size_t>(perm[k])] = p->d[k];
      q.x.exponents[static_cast<std::size_t>(perm[k])] = p->x[k];
    }
    return {1, q};
  }
  const auto& w = std::get<WedgePair>(b);
  const auto a = permute(w.theta, perm);
  const auto c = permute(w.xi, perm);
  return {a.sign * c.sign, WedgePair{a.set, c.set}};
}

}  // namespace

DegreeBlockMap sn_action(const GradedSpace& sp, const std::vector<int>& perm) {
  validate_permutation(perm, sp.n());
  return assemble(sp, 0, [&perm](const BasisVector& b) { return std::vector<Term>{act(b, perm)}; });
}

std::int64_t action_trace(const GradedSpace& sp, int degree, const std::vector<int>& perm) {
  validate_permutation(perm, sp.n());
  std::int64_t tr = 0;
  for (const auto& b : sp.basis(degree)) {
    const auto [sign, image] = act(b, perm);
    if (image == b) tr += sign;
  }
  return tr;
}

}  // namespace kpack
