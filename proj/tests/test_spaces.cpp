#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>

#include "kpack/error.hpp"
#include "kpack/spaces.hpp"

using namespace kpack;

namespace {

// Parity of the permutation sorting `seq` (distinct entries), by counting
// inversions; 0 when two entries coincide.
int sort_sign(const std::vector<int>& seq) {
  int inv = 0;
  for (std::size_t i = 0; i < seq.size(); ++i)
    for (std::size_t j = i + 1; j < seq.size(); ++j) {
      if (seq[i] == seq[j]) return 0;
      if (seq[i] > seq[j]) ++inv;
    }
  return inv % 2 == 0 ? 1 : -1;
}

std::vector<int> concat(std::vector<int> a, const std::vector<int>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

// Determinant of a small integer matrix by permutation expansion.
long det(const std::vector<std::vector<long>>& m) {
  const std::size_t n = m.size();
  std::vector<int> p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = static_cast<int>(i);
  long total = 0;
  do {
    long term = sort_sign(p);
    for (std::size_t i = 0; i < n && term != 0; ++i) term *= m[i][static_cast<std::size_t>(p[i])];
    total += term;
  } while (std::next_permutation(p.begin(), p.end()));
  return total;
}

// (u, v*) = det(v*_k(u_l)) for ascending wedges of basis vectors.
long dual_pairing(SubsetMask u, SubsetMask v) {
  const auto us = u.elements(), vs = v.elements();
  if (us.size() != vs.size()) return 0;
  std::vector<std::vector<long>> m(us.size(), std::vector<long>(us.size()));
  for (std::size_t k = 0; k < vs.size(); ++k)
    for (std::size_t l = 0; l < us.size(); ++l) m[k][l] = vs[k] == us[l] ? 1 : 0;
  return det(m);
}

std::map<std::uint32_t, std::size_t> positions(int n) {
  std::map<std::uint32_t, std::size_t> pos;
  const auto basis = exterior::full_basis(n);
  for (std::size_t i = 0; i < basis.size(); ++i) pos[basis[i].bits] = i;
  return pos;
}

// e_k as a matrix, from the sort sign of (k, s_1, ..., s_r).
RatMatrix oracle_wedge(int n, int k) {
  const auto basis = exterior::full_basis(n);
  const auto pos = positions(n);
  RatMatrix m(basis.size(), basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j) {
    const int s = sort_sign(concat({k}, basis[j].elements()));
    if (s == 0) continue;
    SubsetMask t = basis[j];
    t.bits |= 1U << k;
    m(pos.at(t.bits), j) = s;
  }
  return m;
}

// i_k(u_1 ^ ... ^ u_r) = sum_l (-1)^(l-1) xi_k(u_l) u_1 ^ .. ^ omit(u_l) ^ .. ^ u_r.
RatMatrix oracle_contraction(int n, int k) {
  const auto basis = exterior::full_basis(n);
  const auto pos = positions(n);
  RatMatrix m(basis.size(), basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j) {
    const auto el = basis[j].elements();
    for (std::size_t l = 0; l < el.size(); ++l) {
      if (el[l] != k) continue;
      SubsetMask t = basis[j];
      t.bits &= ~(1U << k);
      m(pos.at(t.bits), j) += l % 2 == 0 ? 1 : -1;
    }
  }
  return m;
}

RatMatrix kron(const RatMatrix& a, const RatMatrix& b) {
  RatMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (sgn(a(i, j)) == 0) continue;
      for (std::size_t p = 0; p < b.rows(); ++p)
        for (std::size_t q = 0; q < b.cols(); ++q) out(i * b.rows() + p, j * b.cols() + q) = a(i, j) * b(p, q);
    }
  return out;
}

// Restriction of an operator on Lambda(V) (x) Lambda(V*) to the given degrees.
RatMatrix restrict_block(const RatMatrix& full, const GradedSpace& sp, int from, int to) {
  const auto pos = positions(sp.n());
  const std::size_t side = pos.size();
  auto index = [&](const BasisVector& b) {
    const auto& w = std::get<WedgePair>(b);
    return pos.at(w.theta.bits) * side + pos.at(w.xi.bits);
  };
  std::vector<std::size_t> rows, cols;
  for (const auto& b : sp.basis(to)) rows.push_back(index(b));
  for (const auto& b : sp.basis(from)) cols.push_back(index(b));
  return full.submatrix(rows, cols);
}

struct FullOps {
  RatMatrix L, F, h;
};

FullOps kronecker_operators(CaseTag c, int n) {
  const std::size_t side = std::size_t{1} << n;
  const RatMatrix id = RatMatrix::identity(side);
  FullOps ops{RatMatrix(side * side, side * side), RatMatrix(side * side, side * side),
              RatMatrix(side * side, side * side)};
  for (int k = 0; k < n; ++k) {
    const RatMatrix e = oracle_wedge(n, k), i = oracle_contraction(n, k);
    if (c == CaseTag::Ext) {
      ops.L += kron(e, i);
      ops.F += kron(i, e);
      ops.h += kron(e * i, id) - kron(id, e * i);
    } else {
      ops.L += kron(e, e);
      ops.F += kron(i, i);
      ops.h += kron(e * i, id) + kron(id, e * i);
    }
  }
  if (c == CaseTag::ExtUsual) ops.h -= Rational(n) * RatMatrix::identity(side * side);
  return ops;
}

BasisVector wedge_pair(std::vector<int> theta, std::vector<int> xi) {
  return WedgePair{SubsetMask::of(theta), SubsetMask::of(xi)};
}

BasisVector mono_pair(std::vector<int> d, std::vector<int> x) { return MonomialPair{MultiIndex{d}, MultiIndex{x}}; }

}  // namespace

TEST_CASE("case tags parse and print") {
  CHECK(parse_case("poly") == CaseTag::Poly);
  CHECK(parse_case("ext") == CaseTag::Ext);
  CHECK(parse_case("ext-usual") == CaseTag::ExtUsual);
  CHECK(to_string(CaseTag::ExtUsual) == "ext-usual");
  CHECK_THROWS_AS(parse_case("nope"), Error);
}

TEST_CASE("dimensions follow the binomial product formulas") {
  for (int n = 1; n <= 4; ++n)
    for (int m = 0; m <= 6; ++m) {
      const auto sp = GradedSpace::build(CaseTag::Poly, n, m);
      std::size_t total = 0;
      for (int i = 0; i <= m; ++i) {
        const auto expected = static_cast<std::size_t>(binomial(n + i - 1, i) * binomial(n + m - i - 1, m - i));
        CHECK(sp.dim(-m + 2 * i) == expected);
        CHECK(sp.dim(-m + 2 * i) == sp.dim(m - 2 * i));
        total += expected;
      }
      CHECK(sp.total_dim() == total);
    }
  for (int n = 1; n <= 5; ++n)
    for (int m = 0; m <= 2 * n; ++m) {
      const auto sp = GradedSpace::build(CaseTag::Ext, n, m);
      for (int i = 0; i <= m; ++i) {
        const auto expected = static_cast<std::size_t>(binomial(n, i) * binomial(n, m - i));
        CHECK(sp.dim(-m + 2 * i) == expected);
      }
    }
  const auto usual = GradedSpace::build(CaseTag::ExtUsual, 2, 0);
  CHECK(usual.degrees() == std::vector<int>{-2, -1, 0, 1, 2});
  std::vector<std::size_t> dims;
  for (int d : usual.degrees()) dims.push_back(usual.dim(d));
  CHECK(dims == std::vector<std::size_t>{1, 4, 6, 4, 1});
  CHECK(usual.degree_of(wedge_pair({}, {})) == -2);
  CHECK(usual.m() == 2);
}

TEST_CASE("invalid parameters and caps") {
  CHECK_THROWS_AS(GradedSpace::build(CaseTag::Ext, 2, 5), Error);
  CHECK_THROWS_AS(GradedSpace::build(CaseTag::Poly, 0, 1), Error);
  CHECK_THROWS_AS(GradedSpace::build(CaseTag::Poly, 2, -1), Error);
  try {
    GradedSpace::build(CaseTag::Poly, 4, 6, {100, 5000});
    FAIL("expected a cap violation");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DimensionCap);
  }
  try {
    GradedSpace::build(CaseTag::Ext, 3, 7);
    FAIL("expected out of range");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::OutOfRange);
  }
}

TEST_CASE("exterior primitives against sort-sign and expansion oracles") {
  for (int n = 1; n <= 5; ++n)
    for (int k = 0; k < n; ++k) {
      CHECK(exterior::wedge_matrix(n, k) == oracle_wedge(n, k));
      CHECK(exterior::contraction_matrix(n, k) == oracle_contraction(n, k));
    }
  const auto w = wedge_product(SubsetMask::of({1}), SubsetMask::of({0}));
  CHECK(w.sign == -1);
  CHECK(w.set == SubsetMask::of({0, 1}));
  CHECK(wedge_product(SubsetMask::of({1}), SubsetMask::of({1})).sign == 0);
  const auto p = permute(SubsetMask::of({0, 1}), {1, 0});
  CHECK(p.sign == -1);
  CHECK(p.set == SubsetMask::of({0, 1}));
}

TEST_CASE("one-factor identities on Lambda(V) for n <= 5") {
  for (int n = 1; n <= 5; ++n) {
    const auto basis = exterior::full_basis(n);
    const RatMatrix id = RatMatrix::identity(basis.size());
    RatMatrix pairing(basis.size(), basis.size());
    for (std::size_t a = 0; a < basis.size(); ++a)
      for (std::size_t b = 0; b < basis.size(); ++b) pairing(a, b) = dual_pairing(basis[a], basis[b]);
    CHECK(exterior::dual_pairing_matrix(n) == pairing);
    for (int a = 0; a < n; ++a) {
      const RatMatrix ia = exterior::contraction_matrix(n, a), ea = exterior::wedge_matrix(n, a);
      // (i_a u, beta) = (u, xi_a ^ beta)
      CHECK(ia.transpose() * pairing == pairing * ea);
      for (int b = 0; b < n; ++b) {
        const RatMatrix ib = exterior::contraction_matrix(n, b), eb = exterior::wedge_matrix(n, b);
        CHECK(ia * ib == Rational(-1) * (ib * ia));
        CHECK(eb * ea == Rational(-1) * (ea * eb));
        CHECK(ia * eb + eb * ia == Rational(a == b ? 1 : 0) * id);
      }
    }
  }
}

TEST_CASE("exterior operators equal restrictions of Kronecker products") {
  for (CaseTag c : {CaseTag::Ext, CaseTag::ExtUsual})
    for (int n = 1; n <= 3; ++n) {
      const FullOps full = kronecker_operators(c, n);
      const int mmax = c == CaseTag::Ext ? 2 * n : 0;
      for (int m = 0; m <= mmax; ++m) {
        const auto sp = GradedSpace::build(c, n, m);
        const auto L = raising_L(sp), F = lowering_F(sp), h = grading_h(sp);
        for (int d : sp.degrees()) {
          if (sp.has_degree(d + 2)) CHECK(L.block_or_zero(sp, d) == restrict_block(full.L, sp, d, d + 2));
          if (sp.has_degree(d - 2)) CHECK(F.block_or_zero(sp, d) == restrict_block(full.F, sp, d, d - 2));
          CHECK(h.block_or_zero(sp, d) == restrict_block(full.h, sp, d, d));
        }
      }
    }
}

TEST_CASE("worked operator values") {
  // Poly n=1, m=2: L(1 (x) x^2) = 2 d (x) x and L(d (x) x) = d^2 (x) 1.
  const auto p = GradedSpace::build(CaseTag::Poly, 1, 2);
  const auto L = raising_L(p);
  CHECK(L.block_or_zero(p, -2) == RatMatrix{{2}});
  CHECK(L.block_or_zero(p, 0) == RatMatrix{{1}});
  CHECK(lowering_F(p).block_or_zero(p, 2) == RatMatrix{{2}});

  // ExtUsual n=1: L(1 (x) 1) = th_1 (x) xi_1.
  const auto u1 = GradedSpace::build(CaseTag::ExtUsual, 1, 0);
  CHECK(raising_L(u1).block_or_zero(u1, -1) == RatMatrix{{1}});
  CHECK(u1.basis(1).front() == wedge_pair({0}, {0}));

  // ExtUsual n=2: h = 2 Id on the top degree.
  const auto u2 = GradedSpace::build(CaseTag::ExtUsual, 2, 0);
  CHECK(grading_h(u2).block_or_zero(u2, 2) == RatMatrix{{2}});

  // Ext n=2, m=2: L(1 (x) xi_1 xi_2) = th_1 (x) xi_2 - th_2 (x) xi_1.
  const auto e = GradedSpace::build(CaseTag::Ext, 2, 2);
  const RatMatrix block = raising_L(e).block_or_zero(e, -2);
  const auto col = *e.position(-2, wedge_pair({}, {0, 1}));
  CHECK(block(*e.position(0, wedge_pair({0}, {1})), col) == Rational(1));
  CHECK(block(*e.position(0, wedge_pair({1}, {0})), col) == Rational(-1));
  CHECK(block.column(col).nonzeros() == 2);
}

TEST_CASE("sl2 relations hold blockwise") {
  for (auto [c, n, m] : std::vector<std::tuple<CaseTag, int, int>>{
           {CaseTag::Poly, 2, 3}, {CaseTag::Poly, 3, 2}, {CaseTag::Ext, 3, 3}, {CaseTag::Ext, 2, 4},
           {CaseTag::ExtUsual, 3, 0}}) {
    const auto sp = GradedSpace::build(c, n, m);
    const auto L = raising_L(sp), F = lowering_F(sp), h = grading_h(sp);
    for (int d : sp.degrees()) {
      const std::size_t dim = sp.dim(d);
      CHECK(h.block_or_zero(sp, d) == Rational(d) * RatMatrix::identity(dim));
      const RatMatrix LF = sp.has_degree(d - 2) ? L.block_or_zero(sp, d - 2) * F.block_or_zero(sp, d)
                                                : RatMatrix::zero(dim, dim);
      const RatMatrix FL = sp.has_degree(d + 2) ? F.block_or_zero(sp, d + 2) * L.block_or_zero(sp, d)
                                                : RatMatrix::zero(dim, dim);
      CHECK(LF - FL == h.block_or_zero(sp, d));
    }
  }
}

TEST_CASE("pairing values") {
  // Poly: <1 (x) x^2, d^2 (x) 1> = 0! * 2!.
  const auto p = GradedSpace::build(CaseTag::Poly, 1, 2);
  CHECK(pairing_gram(p).block_or_zero(p, -2) == RatMatrix{{2}});
  const auto p2 = GradedSpace::build(CaseTag::Poly, 2, 2);
  const RatMatrix g0 = pairing_gram(p2).block_or_zero(p2, 0);
  const auto a = *p2.position(0, mono_pair({1, 0}, {0, 1}));
  const auto b = *p2.position(0, mono_pair({0, 1}, {1, 0}));
  CHECK(g0(a, b) == Rational(1));
  CHECK(g0(a, a) == Rational(0));

  CHECK(ext_sign_correction(2, 3) == 1);
  CHECK(ext_sign_correction(3, 2) == -1);
  CHECK(ext_sign_correction(3, 3) == -1);
  CHECK(ext_sign_correction(3, 6) == 1);
  const auto e = GradedSpace::build(CaseTag::Ext, 3, 2);
  const RatMatrix ge = pairing_gram(e).block_or_zero(e, 0);
  CHECK(ge(*e.position(0, wedge_pair({0}, {1})), *e.position(0, wedge_pair({1}, {0}))) == Rational(-1));

  // ExtUsual n=1: <th (x) 1, 1 (x) xi> = <1 (x) xi, th (x) 1> = 1.
  const auto u = GradedSpace::build(CaseTag::ExtUsual, 1, 0);
  CHECK(pairing_gram(u).block_or_zero(u, 0) == RatMatrix{{0, 1}, {1, 0}});
}

TEST_CASE("Gram symmetry and non-degeneracy") {
  for (auto [c, n, m] : std::vector<std::tuple<CaseTag, int, int>>{{CaseTag::Poly, 2, 4},
                                                                    {CaseTag::Poly, 3, 3},
                                                                    {CaseTag::Ext, 3, 2},
                                                                    {CaseTag::Ext, 3, 5},
                                                                    {CaseTag::ExtUsual, 2, 0},
                                                                    {CaseTag::ExtUsual, 3, 0},
                                                                    {CaseTag::ExtUsual, 4, 0}}) {
    const auto sp = GradedSpace::build(c, n, m);
    const auto g = pairing_gram(sp);
    for (int d : sp.degrees()) {
      const RatMatrix G = g.block_or_zero(sp, d);
      int s = 1;
      if (c == CaseTag::ExtUsual && n % 2 == 0 && d % 2 != 0) s = -1;
      CHECK(g.block_or_zero(sp, -d) == Rational(s) * G.transpose());
      CHECK(rank(G) == sp.dim(d));
    }
  }
}

TEST_CASE("ExtUsual pairing is the coefficient of the top class") {
  const int n = 2;
  const auto sp = GradedSpace::build(CaseTag::ExtUsual, n, 0);
  const auto g = pairing_gram(sp);
  for (int d : sp.degrees()) {
    const RatMatrix G = g.block_or_zero(sp, d);
    for (std::size_t a = 0; a < sp.dim(d); ++a)
      for (std::size_t b = 0; b < sp.dim(-d); ++b) {
        const auto& u = std::get<WedgePair>(sp.basis(d)[a]);
        const auto& v = std::get<WedgePair>(sp.basis(-d)[b]);
        const int st = sort_sign(concat(u.theta.elements(), v.theta.elements()));
        const int sx = sort_sign(concat(u.xi.elements(), v.xi.elements()));
        const bool full = u.theta.size() + v.theta.size() == n && u.xi.size() + v.xi.size() == n;
        CHECK(G(a, b) == Rational(full ? st * sx : 0));
      }
  }
}

TEST_CASE("S_n action: signed permutations, traces and composition") {
  for (auto [c, n, m] : std::vector<std::tuple<CaseTag, int, int>>{
           {CaseTag::Poly, 3, 2}, {CaseTag::Ext, 3, 3}, {CaseTag::ExtUsual, 3, 0}}) {
    const auto sp = GradedSpace::build(c, n, m);
    const std::vector<int> g{1, 2, 0}, h{1, 0, 2};
    std::vector<int> gh(3);
    for (int i = 0; i < 3; ++i) gh[static_cast<std::size_t>(i)] = g[static_cast<std::size_t>(h[static_cast<std::size_t>(i)])];
    const auto A = sn_action(sp, g), B = sn_action(sp, h), AB = sn_action(sp, gh);
    for (int d : sp.degrees()) {
      const RatMatrix a = A.block_or_zero(sp, d);
      CHECK(a * B.block_or_zero(sp, d) == AB.block_or_zero(sp, d));
      CHECK(a.trace() == Rational(action_trace(sp, d, g)));
      for (std::size_t col = 0; col < a.cols(); ++col) {
        CHECK(a.column(col).nonzeros() == 1);
        for (std::size_t row = 0; row < a.rows(); ++row) CHECK((sgn(a(row, col)) == 0 || abs(a(row, col)) == 1));
      }
    }
  }
  // Ext: the swap acts on th_1 th_2 by -1.
  const auto e = GradedSpace::build(CaseTag::Ext, 2, 2);
  CHECK(action_trace(e, 2, {1, 0}) == -1);
  CHECK(adjacent_transposition(3, 1) == std::vector<int>{0, 2, 1});
  CHECK_THROWS_AS(sn_action(e, {0, 0}), Error);
}
