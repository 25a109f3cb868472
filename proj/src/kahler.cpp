#include "kpack/kahler.hpp"

#include <algorithm>

#include "kpack/error.hpp"

namespace kpack {

using nlohmann::json;

json to_json(const Signature& s) { return json::array({s.positive, s.negative, s.zero}); }

bool PackageReport::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.as_expected(); });
}

const CheckResult* PackageReport::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

LefschetzContext::LefschetzContext(GradedSpace space)
    : space_(std::move(space)),
      L_(raising_L(space_)),
      F_(lowering_F(space_)),
      h_(grading_h(space_)),
      gram_(pairing_gram(space_)) {}

const RatMatrix& LefschetzContext::lpow(int degree, int k) {
  const auto key = std::make_pair(degree, k);
  if (auto it = powers_.find(key); it != powers_.end()) return it->second;
  RatMatrix value;
  if (k == 0) {
    value = RatMatrix::identity(space_.dim(degree));
  } else {
    const RatMatrix& prev = lpow(degree, k - 1);
    value = L_.block_or_zero(space_, degree + 2 * (k - 1)) * prev;
  }
  return powers_.emplace(key, std::move(value)).first->second;
}

const RatMatrix& LefschetzContext::lefschetz_form(int degree) {
  if (degree > 0) throw Error(ErrorKind::OutOfRange, "Lefschetz forms live in degrees <= 0");
  if (auto it = forms_.find(degree); it != forms_.end()) return it->second;
  RatMatrix form = gram_.block_or_zero(space_, degree) * lpow(degree, -degree);
  return forms_.emplace(degree, std::move(form)).first->second;
}

int LefschetzContext::adjoint_sign(int degree) const {
  if (space_.kind() != CaseTag::ExtUsual) return 1;
  // Moving theta_k past u and xi_k past v costs (-1)^(|u|+|v|) = (-1)^(d+n).
  return (((degree + space_.n()) % 2) + 2) % 2 == 1 ? -1 : 1;
}

int LefschetzContext::pairing_symmetry_sign(int degree) const {
  if (space_.kind() != CaseTag::ExtUsual) return 1;
  const bool odd = ((degree % 2) + 2) % 2 == 1;
  return (space_.n() % 2 == 0 && odd) ? -1 : 1;
}

std::optional<int> LefschetzContext::lowest_degree_of_parity(int degree) const {
  for (int d : space_.degrees())
    if (((d - degree) % 2 == 0) && space_.dim(d) > 0) return d;
  return std::nullopt;
}

// ---------------------------------------------------------------------------

namespace {

RatMatrix scaled_identity(std::size_t n, long s) {
  RatMatrix m = RatMatrix::identity(n);
  m *= Rational(s);
  return m;
}

std::vector<int> nonpositive_degrees(const GradedSpace& sp) {
  std::vector<int> out;
  for (int d : sp.degrees())
    if (d <= 0 && sp.dim(d) > 0) out.push_back(d);
  return out;
}

}  // namespace

CheckResult verify_sl2(LefschetzContext& ctx) {
  CheckResult r{"sl2", true};
  const auto& sp = ctx.space();
  json failures = json::array();
  for (int d : sp.degrees()) {
    const std::size_t dim = sp.dim(d);
    if (dim == 0) continue;
    const RatMatrix L = ctx.L().block_or_zero(sp, d);        // d -> d+2
    const RatMatrix F = ctx.F().block_or_zero(sp, d);        // d -> d-2
    const RatMatrix h = ctx.h().block_or_zero(sp, d);        // d -> d
    const RatMatrix Fup = ctx.F().block_or_zero(sp, d + 2);  // d+2 -> d
    const RatMatrix Ldown = ctx.L().block_or_zero(sp, d - 2);
    const RatMatrix hup = ctx.h().block_or_zero(sp, d + 2);
    const RatMatrix hdown = ctx.h().block_or_zero(sp, d - 2);

    if (h != scaled_identity(dim, d)) failures.push_back({{"degree", d}, {"relation", "h = deg*Id"}});
    if (Ldown * F - Fup * L != h) failures.push_back({{"degree", d}, {"relation", "LF - FL = h"}});
    if (hup * L - L * h != Rational(2) * L) failures.push_back({{"degree", d}, {"relation", "hL - Lh = 2L"}});
    if (hdown * F - F * h != Rational(-2) * F) failures.push_back({{"degree", d}, {"relation", "hF - Fh = -2F"}});
  }
  r.pass = failures.empty();
  r.details["failures"] = failures;
  return r;
}

CheckResult verify_pd(LefschetzContext& ctx) {
  CheckResult r{"pd", true};
  const auto& sp = ctx.space();
  json blocks = json::array();
  for (int d : sp.degrees()) {
    if (sp.dim(d) == 0 && sp.dim(-d) == 0) continue;
    const RatMatrix G = ctx.gram().block_or_zero(sp, d);
    const RatMatrix Gopp = ctx.gram().block_or_zero(sp, -d);
    const bool square = G.rows() == G.cols();
    const std::size_t rk = rank(G);
    const bool nondeg = square && rk == G.rows();
    const int s = ctx.pairing_symmetry_sign(d);
    const bool symmetric = Gopp == Rational(s) * G.transpose();
    r.pass = r.pass && nondeg && symmetric;
    blocks.push_back({{"degree", d},
                      {"dim", sp.dim(d)},
                      {"rank", rk},
                      {"nondegenerate", nondeg},
                      {"symmetry_sign", s},
                      {"symmetric", symmetric}});
  }
  r.details["blocks"] = blocks;
  return r;
}

CheckResult verify_self_adjoint(LefschetzContext& ctx) {
  CheckResult r{"self_adjoint", true};
  const auto& sp = ctx.space();
  json blocks = json::array();
  for (int d : sp.degrees()) {
    if (sp.dim(d) == 0 || sp.dim(-d - 2) == 0) continue;
    // <L x, y> for x in degree d, y in degree -d-2, against <x, L y>.
    const RatMatrix lhs = ctx.L().block_or_zero(sp, d).transpose() * ctx.gram().block_or_zero(sp, d + 2);
    const RatMatrix rhs = ctx.gram().block_or_zero(sp, d) * ctx.L().block_or_zero(sp, -d - 2);
    const int s = ctx.adjoint_sign(d);
    const bool ok = lhs == Rational(s) * rhs;
    r.pass = r.pass && ok;
    blocks.push_back({{"degree", d}, {"sign", s}, {"ok", ok}});
  }
  r.details["blocks"] = blocks;
  return r;
}

CheckResult verify_hl(LefschetzContext& ctx) {
  CheckResult r{"hl", true};
  const auto& sp = ctx.space();
  json rows = json::array();
  bool forms_agree = true;
  for (int d : nonpositive_degrees(sp)) {
    const std::size_t i = static_cast<std::size_t>(-d);
    const std::size_t rk = rank(ctx.lpow(d, static_cast<int>(i)));
    const bool iso = rk == sp.dim(d) && sp.dim(d) == sp.dim(-d);
    const bool form_nondeg = rank(ctx.lefschetz_form(d)) == sp.dim(d);
    forms_agree = forms_agree && (form_nondeg == iso);
    r.pass = r.pass && iso;
    rows.push_back({{"degree", d}, {"dim", sp.dim(d)}, {"dim_opposite", sp.dim(-d)}, {"rank", rk}, {"iso", iso}});
  }
  // Unimodality of the Betti numbers within each parity class.
  bool unimodal = true;
  for (int d : sp.degrees())
    if (d <= 0 && d - 2 >= sp.degrees().front() && sp.dim(d - 2) > sp.dim(d)) unimodal = false;
  r.pass = r.pass && forms_agree;
  r.details["ranks"] = rows;
  r.details["lefschetz_forms_nondegenerate_iff_hl"] = forms_agree;
  r.details["betti_unimodal"] = unimodal;
  return r;
}

PrimitiveData primitive_subspace(LefschetzContext& ctx, int degree) {
  const auto& sp = ctx.space();
  if (degree > 0) throw Error(ErrorKind::OutOfRange, "primitive subspaces live in degrees <= 0");
  PrimitiveData p;
  p.degree = degree;
  const int i = -degree;
  if (sp.dim(degree + 2 * i + 2) == 0) {
    p.basis = RatMatrix::identity(sp.dim(degree));
  } else {
    p.basis = kernel_basis(ctx.lpow(degree, i + 1));
  }
  const RatMatrix& form = ctx.lefschetz_form(degree);
  p.lefschetz_nondegenerate = rank(form) == sp.dim(degree);
  p.lefschetz_gram = p.basis.transpose() * form * p.basis;
  p.signature = p.lefschetz_gram.is_symmetric() ? signature(p.lefschetz_gram) : Signature{};
  return p;
}

CheckResult verify_hr(LefschetzContext& ctx) {
  const auto& sp = ctx.space();
  CheckResult r{"hr", true};
  r.expected_pass = sp.kind() != CaseTag::ExtUsual;
  json rows = json::array();
  for (int d : nonpositive_degrees(sp)) {
    const auto base = ctx.lowest_degree_of_parity(d);
    const int step = (d - *base) / 2;
    PrimitiveData p = primitive_subspace(ctx, d);
    const std::size_t dim = p.basis.cols();
    const std::size_t expected_dim = sp.dim(d) - sp.dim(d - 2);
    const bool symmetric = p.lefschetz_gram.is_symmetric();
    const bool positive = step % 2 == 0;
    const Signature want = positive ? Signature{dim, 0, 0} : Signature{0, dim, 0};
    const bool ok = symmetric && p.signature == want && dim == expected_dim;
    r.pass = r.pass && ok;
    json row = {{"degree", d},
                {"primitive_dim", dim},
                {"expected_primitive_dim", expected_dim},
                {"expected_sign", positive ? "+" : "-"},
                {"symmetric", symmetric},
                {"ok", ok}};
    if (symmetric) row["signature"] = to_json(p.signature);
    rows.push_back(row);
  }
  r.details["primitives"] = rows;
  if (sp.kind() == CaseTag::ExtUsual) {
    json full = json::array();
    for (int d : nonpositive_degrees(sp)) {
      const RatMatrix& form = ctx.lefschetz_form(d);
      json row = {{"degree", d}, {"symmetric", form.is_symmetric()}};
      if (form.is_symmetric()) row["signature"] = to_json(signature(form));
      full.push_back(row);
    }
    r.details["lefschetz_form_signatures"] = full;
  }
  return r;
}

CheckResult verify_isometry(LefschetzContext& ctx) {
  CheckResult r{"isometry", true};
  const auto& sp = ctx.space();
  json rows = json::array();
  for (int d : nonpositive_degrees(sp)) {
    if (d > -2) continue;
    const RatMatrix L = ctx.L().block_or_zero(sp, d);
    const RatMatrix lhs = L.transpose() * ctx.lefschetz_form(d + 2) * L;
    const int s = ctx.adjoint_sign(d);
    const bool ok = lhs == Rational(s) * ctx.lefschetz_form(d);
    r.pass = r.pass && ok;
    rows.push_back({{"degree", d}, {"sign", s}, {"ok", ok}});
  }
  r.details["degrees"] = rows;
  return r;
}

CheckResult verify_primitive_orthogonality(LefschetzContext& ctx) {
  CheckResult r{"primitive_orthogonality", true};
  const auto& sp = ctx.space();
  json rows = json::array();
  for (int d : nonpositive_degrees(sp)) {
    const int base = *ctx.lowest_degree_of_parity(d);
    std::vector<RatMatrix> parts;
    std::vector<std::size_t> widths;
    for (int j = 0; d - 2 * j >= base; ++j) {
      const int src = d - 2 * j;
      if (sp.dim(src) == 0) continue;
      const PrimitiveData p = primitive_subspace(ctx, src);
      parts.push_back(ctx.lpow(src, j) * p.basis);
      widths.push_back(p.basis.cols());
    }
    const RatMatrix C = hstack(parts, sp.dim(d));
    const bool count_ok = C.cols() == sp.dim(d);
    const bool spans = count_ok && rank(C) == sp.dim(d);
    const RatMatrix gram = C.transpose() * ctx.lefschetz_form(d) * C;
    bool orthogonal = true;
    std::size_t r0 = 0;
    for (std::size_t a = 0; a < widths.size(); ++a) {
      std::size_t c0 = 0;
      for (std::size_t b = 0; b < widths.size(); ++b) {
        if (a != b)
          for (std::size_t x = 0; x < widths[a]; ++x)
            for (std::size_t y = 0; y < widths[b]; ++y)
              if (sgn(gram(r0 + x, c0 + y)) != 0) orthogonal = false;
        c0 += widths[b];
      }
      r0 += widths[a];
    }
    const bool ok = count_ok && spans && orthogonal;
    r.pass = r.pass && ok;
    rows.push_back({{"degree", d},
                    {"summand_dims", widths},
                    {"dimension_count", count_ok},
                    {"spans", spans},
                    {"orthogonal", orthogonal}});
  }
  r.details["degrees"] = rows;
  return r;
}

std::pair<CheckResult, CheckResult> verify_isometry_and_orthogonality(LefschetzContext& ctx) {
  return {verify_isometry(ctx), verify_primitive_orthogonality(ctx)};
}

CheckResult verify_equivariance(LefschetzContext& ctx) {
  CheckResult r{"equivariance", true};
  const auto& sp = ctx.space();
  const int n = sp.n();
  std::vector<DegreeBlockMap> gens;
  for (int i = 0; i + 1 < n; ++i) gens.push_back(sn_action(sp, adjacent_transposition(n, i)));

  json failures = json::array();
  auto fail = [&](int gen, int d, const char* what) {
    failures.push_back({{"generator", gen + 1}, {"degree", d}, {"what", what}});
  };
  for (std::size_t g = 0; g < gens.size(); ++g) {
    const auto& A = gens[g];
    const int gi = static_cast<int>(g);
    for (int d : sp.degrees()) {
      if (sp.dim(d) == 0) continue;
      const RatMatrix Ad = A.block_or_zero(sp, d);
      if (A.block_or_zero(sp, d + 2) * ctx.L().block_or_zero(sp, d) != ctx.L().block_or_zero(sp, d) * Ad)
        fail(gi, d, "L");
      if (A.block_or_zero(sp, d - 2) * ctx.F().block_or_zero(sp, d) != ctx.F().block_or_zero(sp, d) * Ad)
        fail(gi, d, "F");
      if (Ad * ctx.h().block_or_zero(sp, d) != ctx.h().block_or_zero(sp, d) * Ad) fail(gi, d, "h");
      const RatMatrix G = ctx.gram().block_or_zero(sp, d);
      if (Ad.transpose() * G * A.block_or_zero(sp, -d) != G) fail(gi, d, "pairing");
      if (d <= 0) {
        const RatMatrix& M = ctx.lefschetz_form(d);
        if (Ad.transpose() * M * Ad != M) fail(gi, d, "lefschetz_form");
      }
      // Coxeter relations: involution, braid with the next generator, and
      // commutation with distant ones.
      const RatMatrix I = RatMatrix::identity(sp.dim(d));
      if (Ad * Ad != I) fail(gi, d, "involution");
      for (std::size_t h2 = g + 1; h2 < gens.size(); ++h2) {
        const RatMatrix Bd = gens[h2].block_or_zero(sp, d);
        const RatMatrix AB = Ad * Bd;
        const RatMatrix want = h2 == g + 1 ? AB * AB * AB : AB * AB;
        if (want != I) fail(gi, d, h2 == g + 1 ? "braid" : "commute");
      }
    }
  }
  r.pass = failures.empty();
  r.details["generators"] = gens.size();
  r.details["failures"] = failures;
  return r;
}

std::vector<std::pair<int, Signature>> usual_grading_signature_report(int n) {
  LefschetzContext ctx(GradedSpace::build(CaseTag::ExtUsual, n, n));
  std::vector<std::pair<int, Signature>> out;
  for (int d : nonpositive_degrees(ctx.space())) out.emplace_back(d, signature(ctx.lefschetz_form(d)));
  return out;
}

PackageReport verify_package(CaseTag c, int n, int m, const SpaceLimits& limits) {
  LefschetzContext ctx(GradedSpace::build(c, n, m, limits));
  PackageReport rep;
  rep.kind = c;
  rep.n = n;
  rep.m = ctx.space().m();
  rep.checks.push_back(verify_sl2(ctx));
  rep.checks.push_back(verify_pd(ctx));
  rep.checks.push_back(verify_self_adjoint(ctx));
  rep.checks.push_back(verify_hl(ctx));
  rep.checks.push_back(verify_hr(ctx));
  auto [iso, orth] = verify_isometry_and_orthogonality(ctx);
  rep.checks.push_back(std::move(iso));
  rep.checks.push_back(std::move(orth));
  rep.checks.push_back(verify_equivariance(ctx));
  return rep;
}

}  // namespace kpack
