#include "kpack/schurkit.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "kpack/error.hpp"

namespace kpack {

using nlohmann::json;

bool MonomialPoly::is_symmetric() const {
  for (const auto& [e, c] : terms) {
    std::vector<int> sorted = e.exponents;
    std::sort(sorted.begin(), sorted.end());
    do {
      auto it = terms.find(MultiIndex{sorted});
      if (it == terms.end() || it->second != c) return false;
    } while (std::next_permutation(sorted.begin(), sorted.end()));
  }
  return true;
}

MonomialPoly operator*(const MonomialPoly& a, const MonomialPoly& b) {
  if (a.n != b.n) throw Error(ErrorKind::SizeMismatch, "polynomials in different variable counts");
  MonomialPoly out{a.n, {}};
  for (const auto& [ea, ca] : a.terms)
    for (const auto& [eb, cb] : b.terms) {
      MultiIndex e = ea;
      for (std::size_t i = 0; i < e.size(); ++i) e.exponents[i] += eb[i];
      out.terms[e] += ca * cb;
    }
  std::erase_if(out.terms, [](const auto& t) { return t.second == 0; });
  return out;
}

MonomialPoly operator+(const MonomialPoly& a, const MonomialPoly& b) {
  if (a.n != b.n) throw Error(ErrorKind::SizeMismatch, "polynomials in different variable counts");
  MonomialPoly out = a;
  for (const auto& [e, c] : b.terms) out.terms[e] += c;
  std::erase_if(out.terms, [](const auto& t) { return t.second == 0; });
  return out;
}

MonomialPoly operator*(std::int64_t s, const MonomialPoly& a) {
  MonomialPoly out{a.n, {}};
  if (s == 0) return out;
  for (const auto& [e, c] : a.terms) out.terms[e] = s * c;
  return out;
}

MonomialPoly schur_monomial_expansion(const Partition& lambda, int n) {
  if (n < 0) throw Error(ErrorKind::InvalidArgument, "negative variable count");
  if (lambda.length() > n)
    throw Error(ErrorKind::TooManyRows, lambda.to_string() + " has more than " + std::to_string(n) + " rows");
  MonomialPoly out{n, {}};
  const std::size_t rows = static_cast<std::size_t>(lambda.length());
  std::vector<int> shape(rows, 0), content(static_cast<std::size_t>(n), 0);
  // Entries equal to k + 1 form the horizontal strip added at step k.
  std::function<void(int)> step = [&](int k) {
    if (k == n) {
      for (std::size_t r = 0; r < rows; ++r)
        if (shape[r] != lambda.part(r)) return;
      out.terms[MultiIndex{content}] += 1;
      return;
    }
    const std::vector<int> before = shape;
    std::function<void(std::size_t, int)> grow = [&](std::size_t r, int added) {
      if (r == rows) {
        content[static_cast<std::size_t>(k)] = added;
        step(k + 1);
        return;
      }
      const int base = shape[r];
      const int cap = std::min(lambda.part(r), r == 0 ? lambda.part(0) : before[r - 1]);
      for (int v = base; v <= cap; ++v) {
        shape[r] = v;
        grow(r + 1, added + v - base);
      }
      shape[r] = base;
    };
    grow(0, 0);
  };
  step(0);
  return out;
}

SchurExpansion lr_coefficients(const Partition& lambda, const Partition& mu) {
  const std::size_t labels = static_cast<std::size_t>(mu.length());
  const std::size_t rows = static_cast<std::size_t>(lambda.length() + mu.length());
  std::vector<int> shape(rows, 0);
  for (std::size_t r = 0; r < static_cast<std::size_t>(lambda.length()); ++r) shape[r] = lambda.part(r);
  // filled[r][i]: number of cells labelled i + 1 in row r.
  std::vector<std::vector<int>> filled(rows, std::vector<int>(labels, 0));
  SchurExpansion out;

  auto lattice = [&] {
    std::vector<int> seen(labels, 0);
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t i = labels; i-- > 0;) {
        seen[i] += filled[r][i];
        if (i > 0 && seen[i] > seen[i - 1]) return false;
      }
    return true;
  };

  std::function<void(std::size_t)> place = [&](std::size_t i) {
    if (i == labels) {
      if (lattice()) out[Partition(shape)] += 1;
      return;
    }
    const std::vector<int> before = shape;
    std::function<void(std::size_t, int)> grow = [&](std::size_t r, int left) {
      if (left == 0) {
        place(i + 1);
        return;
      }
      if (r == rows) return;
      const int base = shape[r];
      const int cap = r == 0 ? base + left : std::min(base + left, before[r - 1]);
      // Label i + 1 can only occur in rows i and below.
      const int top = r < i ? base : cap;
      for (int v = top; v >= base; --v) {
        shape[r] = v;
        filled[r][i] = v - base;
        grow(r + 1, left - (v - base));
      }
      shape[r] = base;
      filled[r][i] = 0;
    };
    grow(0, mu.part(i));
  };
  place(0);
  return out;
}

SchurExpansion operator+(const SchurExpansion& a, const SchurExpansion& b) {
  SchurExpansion out = a;
  for (const auto& [p, c] : b) out[p] += c;
  std::erase_if(out, [](const auto& t) { return t.second == 0; });
  return out;
}

SchurExpansion operator-(const SchurExpansion& a, const SchurExpansion& b) {
  SchurExpansion out = a;
  for (const auto& [p, c] : b) out[p] -= c;
  std::erase_if(out, [](const auto& t) { return t.second == 0; });
  return out;
}

SchurExpansion truncate_rows(const SchurExpansion& e, int n) {
  SchurExpansion out;
  for (const auto& [p, c] : e)
    if (p.length() <= n) out.emplace(p, c);
  return out;
}

bool is_nonnegative(const SchurExpansion& e) {
  return std::all_of(e.begin(), e.end(), [](const auto& t) { return t.second >= 0; });
}

bool dominated_by(const SchurExpansion& a, const SchurExpansion& b) { return is_nonnegative(b - a); }

std::vector<Partition> strips(const Partition& lambda, int k, StripMode mode) {
  if (k < 0) throw Error(ErrorKind::InvalidArgument, "negative strip size");
  const std::size_t rows = static_cast<std::size_t>(lambda.length()) + (mode == StripMode::Row ? 1 : k);
  std::vector<int> shape(rows, 0);
  std::vector<Partition> out;
  std::function<void(std::size_t, int)> grow = [&](std::size_t r, int left) {
    if (r == rows) {
      if (left == 0) out.emplace_back(shape);
      return;
    }
    const int base = lambda.part(r);
    const int above = r == 0 ? base + left : mode == StripMode::Row ? lambda.part(r - 1) : shape[r - 1];
    const int hi = std::min(above, base + (mode == StripMode::Row ? left : std::min(left, 1)));
    for (int v = base; v <= hi; ++v) {
      shape[r] = v;
      grow(r + 1, left - (v - base));
    }
    shape[r] = 0;
  };
  grow(0, k);
  std::sort(out.begin(), out.end());
  return out;
}

PieriResult verify_pieri(const Partition& lambda, int k, StripMode mode) {
  if (k < 0) throw Error(ErrorKind::InvalidArgument, "negative strip size");
  const Partition factor =
      mode == StripMode::Row ? Partition(k == 0 ? std::vector<int>{} : std::vector<int>{k})
                             : Partition(std::vector<int>(static_cast<std::size_t>(k), 1));
  PieriResult r;
  r.expansion = lr_coefficients(lambda, factor);
  r.predicted = strips(lambda, k, mode);
  SchurExpansion expected;
  for (const auto& p : r.predicted) expected[p] = 1;
  r.pass = r.expansion == expected;
  return r;
}

namespace {

Partition row_or_column(int i, StripMode mode) {
  if (i <= 0) return Partition{};
  return mode == StripMode::Row ? Partition({i}) : Partition(std::vector<int>(static_cast<std::size_t>(i), 1));
}

}  // namespace

DifferenceResult verify_pieri_logconcavity(int i, StripMode mode) {
  if (i < 1) throw Error(ErrorKind::InvalidArgument, "index must be at least 1");
  const Partition mid = row_or_column(i, mode);
  DifferenceResult r;
  r.difference = lr_coefficients(mid, mid) - lr_coefficients(row_or_column(i - 1, mode), row_or_column(i + 1, mode));
  r.pass = is_nonnegative(r.difference);
  return r;
}

DifferenceResult verify_schur_nonneg(const Partition& lambda, const Partition& mu) {
  const std::size_t len = static_cast<std::size_t>(std::max(lambda.length(), mu.length()));
  std::vector<int> half(len);
  for (std::size_t r = 0; r < len; ++r) {
    const int s = lambda.part(r) + mu.part(r);
    if (s % 2 != 0)
      throw Error(ErrorKind::OddParts, lambda.to_string() + " + " + mu.to_string() + " has an odd part");
    half[r] = s / 2;
  }
  const Partition kappa(half);
  DifferenceResult r;
  r.difference = lr_coefficients(kappa, kappa) - lr_coefficients(lambda, mu);
  r.pass = is_nonnegative(r.difference);
  return r;
}

LineResult verify_line_logconcavity(const std::vector<int>& start, const std::vector<int>& step, int count) {
  if (count < 0) throw Error(ErrorKind::InvalidArgument, "negative count");
  LineResult r;
  r.n = static_cast<int>(std::max(start.size(), step.size()));
  const std::size_t n = static_cast<std::size_t>(r.n);
  int low = 0;
  for (int j = 0; j < count; ++j) {
    std::vector<int> w(n, 0);
    for (std::size_t i = 0; i < n; ++i)
      w[i] = (i < start.size() ? start[i] : 0) + j * (i < step.size() ? step[i] : 0);
    for (std::size_t i = 1; i < n; ++i)
      if (w[i] > w[i - 1]) {
        std::ostringstream os;
        os << "weight " << j << " of the line is not weakly decreasing";
        throw Error(ErrorKind::NotDominant, os.str());
      }
    if (n > 0) low = std::min(low, w.back());
    r.weights.push_back(std::move(w));
  }
  r.shift = -low;
  std::vector<Partition> shapes;
  for (const auto& w : r.weights) {
    std::vector<int> p(w);
    for (int& x : p) x += r.shift;
    shapes.emplace_back(p);
  }
  for (int j = 1; j + 1 < count; ++j) {
    const auto& mid = shapes[static_cast<std::size_t>(j)];
    LineStep s;
    s.index = j;
    s.difference = truncate_rows(lr_coefficients(mid, mid), r.n) -
                   truncate_rows(lr_coefficients(shapes[static_cast<std::size_t>(j - 1)],
                                                 shapes[static_cast<std::size_t>(j + 1)]),
                                 r.n);
    s.pass = is_nonnegative(s.difference);
    r.pass = r.pass && s.pass;
    r.steps.push_back(std::move(s));
  }
  return r;
}

std::string to_string(const SchurExpansion& e) {
  if (e.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [p, c] : e) {
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << '-';
    const auto mag = c < 0 ? -c : c;
    if (mag != 1) os << mag << '*';
    os << 's' << p.to_string();
    first = false;
  }
  return os.str();
}

json to_json(const SchurExpansion& e) {
  json out = json::array();
  for (const auto& [p, c] : e) out.push_back({{"partition", p.parts}, {"coefficient", c}});
  return out;
}

std::string expansion_csv(const SchurExpansion& e) {
  std::ostringstream os;
  os << "partition,coefficient\n";
  for (const auto& [p, c] : e) os << '"' << p.to_string() << "\"," << c << '\n';
  return os.str();
}

}  // namespace kpack
