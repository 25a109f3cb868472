#include "kpack/combel.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>

#include "kpack/error.hpp"
#include "kpack/ratlin.hpp"

namespace kpack {

int MultiIndex::degree() const { return std::accumulate(exponents.begin(), exponents.end(), 0); }

SubsetMask SubsetMask::of(const std::vector<int>& zero_based) {
  SubsetMask s;
  for (int k : zero_based) s.bits |= 1U << k;
  return s;
}

int SubsetMask::size() const noexcept { return std::popcount(bits); }

std::vector<int> SubsetMask::elements() const {
  std::vector<int> out;
  for (int k = 0; k < 32; ++k)
    if (contains(k)) out.push_back(k);
  return out;
}

int SubsetMask::count_below(int k) const noexcept {
  return std::popcount(bits & ((1U << k) - 1U));
}

std::strong_ordering operator<=>(const SubsetMask& a, const SubsetMask& b) {
  return a.elements() <=> b.elements();
}

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] <= 0 || (i > 0 && parts[i] > parts[i - 1]))
      throw Error(ErrorKind::InvalidArgument, "parts must be positive and weakly decreasing");
  }
}

int Partition::size() const { return std::accumulate(parts.begin(), parts.end(), 0); }

Partition Partition::conjugate() const {
  std::vector<int> c(parts.empty() ? 0 : parts.front(), 0);
  for (int p : parts)
    for (int j = 0; j < p; ++j) ++c[j];
  return Partition(std::move(c));
}

std::string Partition::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < parts.size(); ++i) os << (i ? "," : "") << parts[i];
  os << ')';
  return os.str();
}

Partition parse_partition(const std::string& text) {
  std::string body;
  for (char ch : text)
    if (ch != '(' && ch != ')' && ch != ' ' && ch != '[' && ch != ']') body += ch;
  std::vector<int> parts;
  std::stringstream ss(body);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      parts.push_back(std::stoi(item));
    } catch (const std::exception&) {
      throw Error(ErrorKind::InvalidArgument, "bad partition '" + text + "'");
    }
  }
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

std::int64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::int64_t factorial(int n) {
  if (n > 20) throw Error(ErrorKind::OutOfRange, "factorial overflows 64 bits");
  std::int64_t r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

std::vector<MultiIndex> compositions(int n, int m) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "compositions need n >= 1");
  std::vector<MultiIndex> out;
  std::vector<int> cur(n, 0);
  // Depth-first with the first coordinate largest first gives decreasing lex order.
  auto rec = [&](auto&& self, int pos, int left) -> void {
    if (pos == n - 1) {
      cur[pos] = left;
      out.push_back({cur});
      return;
    }
    for (int v = left; v >= 0; --v) {
      cur[pos] = v;
      self(self, pos + 1, left - v);
    }
  };
  if (m >= 0) rec(rec, 0, m);
  return out;
}

std::vector<SubsetMask> subsets(int n, int k) {
  std::vector<SubsetMask> out;
  if (k < 0 || k > n) return out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(SubsetMask::of(cur));
      return;
    }
    for (int v = start; v < n; ++v) {
      cur.push_back(v);
      self(self, v + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int left, int cap) -> void {
    if (left == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(left, cap); p >= 1; --p) {
      cur.push_back(p);
      self(self, left - p, p);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

std::int64_t standard_tableaux_count(const Partition& lambda) {
  const Partition conj = lambda.conjugate();
  BigInt num = 1, den = 1;
  for (int i = 2; i <= lambda.size(); ++i) num *= i;
  for (int r = 0; r < lambda.length(); ++r)
    for (int c = 0; c < lambda.parts[r]; ++c)
      den *= (lambda.parts[r] - c - 1) + (conj.parts[c] - r - 1) + 1;
  const BigInt f = num / den;
  if (!f.fits_slong_p()) throw Error(ErrorKind::OutOfRange, "f^lambda overflows 64 bits");
  return f.get_si();
}

std::int64_t centralizer_size(const Partition& mu) {
  std::map<int, int> mult;
  for (int p : mu.parts) ++mult[p];
  std::int64_t z = 1;
  for (auto [part, m] : mult) {
    for (int i = 0; i < m; ++i) z *= part;
    z *= factorial(m);
  }
  return z;
}

std::int64_t class_size(const Partition& mu) { return factorial(mu.size()) / centralizer_size(mu); }

std::vector<int> class_representative(const Partition& mu) {
  std::vector<int> perm(mu.size());
  int start = 0;
  for (int len : mu.parts) {
    for (int j = 0; j < len; ++j) perm[start + j] = start + (j + 1) % len;
    start += len;
  }
  return perm;
}

Partition cycle_type(const std::vector<int>& perm) {
  std::vector<bool> seen(perm.size(), false);
  std::vector<int> lens;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(perm[j])) {
      seen[j] = true;
      ++len;
    }
    lens.push_back(len);
  }
  std::sort(lens.begin(), lens.end(), std::greater<>());
  return Partition(std::move(lens));
}

// ---------------------------------------------------------------------------
// Murnaghan-Nakayama via beta-sets: removing a border strip of length r is
// moving one bead from position b to the free position b - r; the sign is the
// parity of the beads jumped over.

namespace {

using MnMemo = std::map<std::pair<std::vector<int>, std::vector<int>>, std::int64_t>;

std::int64_t mn_rec(const std::vector<int>& lambda, const std::vector<int>& mu, std::size_t next,
                    MnMemo& memo) {
  if (next == mu.size()) return lambda.empty() ? 1 : 0;
  const std::vector<int> rest(mu.begin() + static_cast<std::ptrdiff_t>(next), mu.end());
  const auto key = std::make_pair(lambda, rest);
  if (auto it = memo.find(key); it != memo.end()) return it->second;

  const int len = static_cast<int>(lambda.size());
  const int r = mu[next];
  std::vector<int> beta(len);
  for (int i = 0; i < len; ++i) beta[i] = lambda[i] + (len - 1 - i);
  std::int64_t total = 0;
  for (int i = 0; i < len; ++i) {
    const int target = beta[i] - r;
    if (target < 0 || std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
    int jumped = 0;
    for (int b : beta)
      if (b > target && b < beta[i]) ++jumped;
    std::vector<int> nb = beta;
    nb[i] = target;
    std::sort(nb.begin(), nb.end(), std::greater<>());
    std::vector<int> smaller(len);
    for (int k = 0; k < len; ++k) smaller[k] = nb[k] - (len - 1 - k);
    while (!smaller.empty() && smaller.back() == 0) smaller.pop_back();
    const std::int64_t sub = mn_rec(smaller, mu, next + 1, memo);
    total += (jumped % 2 == 0) ? sub : -sub;
  }
  memo.emplace(key, total);
  return total;
}

}  // namespace

std::int64_t mn_character(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size())
    throw Error(ErrorKind::SizeMismatch, "|lambda| != |mu| in character evaluation");
  MnMemo memo;
  return mn_rec(lambda.parts, mu.parts, 0, memo);
}

CharVector CharVector::zero(int n) {
  return CharVector{n, std::vector<std::int64_t>(partitions_of(n).size(), 0)};
}

namespace {
void require_same(const CharVector& a, const CharVector& b) {
  if (a.n != b.n || a.values.size() != b.values.size())
    throw Error(ErrorKind::SizeMismatch, "class functions of different S_n");
}
}  // namespace

CharVector operator+(const CharVector& a, const CharVector& b) {
  require_same(a, b);
  CharVector c = a;
  for (std::size_t i = 0; i < c.values.size(); ++i) c.values[i] += b.values[i];
  return c;
}

CharVector operator-(const CharVector& a, const CharVector& b) {
  require_same(a, b);
  CharVector c = a;
  for (std::size_t i = 0; i < c.values.size(); ++i) c.values[i] -= b.values[i];
  return c;
}

CharVector operator*(const CharVector& a, const CharVector& b) {
  require_same(a, b);
  CharVector c = a;
  for (std::size_t i = 0; i < c.values.size(); ++i) c.values[i] *= b.values[i];
  return c;
}

CharVector operator*(std::int64_t s, const CharVector& a) {
  CharVector c = a;
  for (auto& v : c.values) v *= s;
  return c;
}

std::size_t CharacterTable::index_of(const Partition& p) const {
  const auto it = std::find(partitions.begin(), partitions.end(), p);
  if (it == partitions.end()) throw Error(ErrorKind::SizeMismatch, "partition " + p.to_string() + " not of n");
  return static_cast<std::size_t>(it - partitions.begin());
}

CharVector CharacterTable::irreducible(const Partition& lambda) const {
  return CharVector{n, values[index_of(lambda)]};
}

const CharacterTable& character_table(int n) {
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<CharacterTable>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[n];
  if (!slot) {
    auto table = std::make_unique<CharacterTable>();
    table->n = n;
    table->partitions = partitions_of(n);
    MnMemo memo;
    for (const auto& mu : table->partitions) table->class_sizes.push_back(class_size(mu));
    for (const auto& lambda : table->partitions) {
      std::vector<std::int64_t> row;
      for (const auto& mu : table->partitions) row.push_back(mn_rec(lambda.parts, mu.parts, 0, memo));
      table->values.push_back(std::move(row));
    }
    slot = std::move(table);
  }
  return *slot;
}

}  // namespace kpack
