#include "spinlift/partition.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace spinlift {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1)
      throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
  }
  n_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::parse(std::string_view text) {
  std::vector<int> parts;
  if (text.empty() || text == "0") return Partition{};
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t comma = text.find(',', pos);
    std::string_view tok = text.substr(
        pos, comma == std::string_view::npos ? std::string_view::npos
                                             : comma - pos);
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
      throw std::invalid_argument("bad partition part: '" + std::string(tok) + "'");
    parts.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return Partition(std::move(parts));
}

bool Partition::contains(const Partition& inner) const {
  if (inner.rows() > rows()) return false;
  for (int i = 0; i < inner.rows(); ++i)
    if (inner.part(i) > part(i)) return false;
  return true;
}

Partition Partition::conjugate() const {
  if (parts_.empty()) return Partition{};
  std::vector<int> conj(static_cast<size_t>(parts_[0]), 0);
  for (int j = 0; j < parts_[0]; ++j) {
    int count = 0;
    for (int p : parts_)
      if (p > j) ++count;
    conj[static_cast<size_t>(j)] = count;
  }
  return Partition(std::move(conj));
}

bool Partition::self_conjugate() const { return *this == conjugate(); }

int Partition::epsilon() const {
  // Cells (i,j), 1-based, with j > i.
  long long above = 0;
  for (int i = 0; i < rows(); ++i) {
    int width = parts_[static_cast<size_t>(i)];
    int beyond = width - (i + 1);  // columns i+2 .. width
    if (beyond > 0) above += beyond;
  }
  return above % 2 == 0 ? 1 : -1;
}

BigInt Partition::dimension() const {
  if (parts_.empty()) return 1;
  Partition conj = conjugate();
  BigInt hooks = 1;
  for (int i = 0; i < rows(); ++i) {
    for (int j = 0; j < parts_[static_cast<size_t>(i)]; ++j) {
      int hook = (parts_[static_cast<size_t>(i)] - j) + (conj.part(j) - i) - 1;
      hooks *= hook;
    }
  }
  BigInt num = factorial(n_);
  BigInt q, r;
  boost::multiprecision::divide_qr(num, hooks, q, r);
  if (r != 0) throw std::logic_error("hook length formula: inexact division");
  return q;
}

std::string Partition::to_string() const {
  std::string out;
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

std::vector<Partition> enumerate_partitions(int n) {
  std::vector<Partition> all;
  for_each_partition(n, [&](const std::vector<int>& parts) {
    all.push_back(Partition(parts));
  });
  return all;
}

BigInt partition_count(int n) {
  if (n < 0) return 0;
  std::vector<BigInt> p(static_cast<size_t>(n) + 1);
  p[0] = 1;
  for (int m = 1; m <= n; ++m) {
    BigInt total = 0;
    for (int k = 1;; ++k) {
      long long g1 = static_cast<long long>(k) * (3 * k - 1) / 2;
      long long g2 = static_cast<long long>(k) * (3 * k + 1) / 2;
      if (g1 > m && g2 > m) break;
      BigInt term = 0;
      if (g1 <= m) term += p[static_cast<size_t>(m - g1)];
      if (g2 <= m) term += p[static_cast<size_t>(m - g2)];
      if (k % 2 == 1)
        total += term;
      else
        total -= term;
    }
    p[static_cast<size_t>(m)] = total;
  }
  return p[static_cast<size_t>(n)];
}

BigInt factorial(int n) {
  BigInt f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

BigInt multinomial(int n, const std::vector<int>& parts) {
  BigInt den = 1;
  int sum = 0;
  for (int p : parts) {
    if (p < 0) throw std::invalid_argument("multinomial part < 0");
    den *= factorial(p);
    sum += p;
  }
  if (sum != n) throw std::invalid_argument("multinomial parts must sum to n");
  BigInt q, r;
  boost::multiprecision::divide_qr(factorial(n), den, q, r);
  if (r != 0) throw std::logic_error("multinomial: inexact division");
  return q;
}

}  // namespace spinlift
