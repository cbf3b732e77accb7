#include "spinlift/characters.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <vector>

namespace spinlift {

CycleType CycleType::padded(const Partition& mu, int n) {
  if (mu.size() > n)
    throw std::invalid_argument("cycle type does not fit in the ambient group");
  std::vector<int> parts = mu.parts();
  parts.insert(parts.end(), static_cast<size_t>(n - mu.size()), 1);
  return CycleType(Partition(std::move(parts)));
}

void validate_triple(const CharTriple& t) {
  if (t.degree < 1) throw std::invalid_argument("triple: degree must be >= 1");
  if (abs(t.at_s1) > t.degree || abs(t.at_s1s3) > t.degree)
    throw std::invalid_argument("triple: |character value| exceeds degree");
  if (!is_even(t.degree - t.at_s1))
    throw std::invalid_argument("triple: degree - at_s1 must be even");
  if ((t.degree - t.at_s1s3) % 4 != 0)
    throw std::invalid_argument("triple: degree - at_s1s3 must be divisible by 4");
}

namespace {

// Border strips of size r are removed through first-column hook lengths
// (beta numbers): remove strip <=> beta_i -> beta_i - r lands outside the
// set, with sign from the number of beta values crossed.
struct MnContext {
  const std::vector<int>& mu;
  std::map<std::pair<std::vector<int>, size_t>, BigInt> memo;

  BigInt eval(const std::vector<int>& parts, size_t idx) {
    if (parts.empty()) return 1;
    if (mu[idx] == 1) return Partition(parts).dimension();  // only fixed points left
    auto key = std::make_pair(parts, idx);
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    int r = mu[idx];
    int len = static_cast<int>(parts.size());
    std::vector<int> beta(parts.size());
    for (int i = 0; i < len; ++i)
      beta[static_cast<size_t>(i)] = parts[static_cast<size_t>(i)] + (len - 1 - i);

    BigInt total = 0;
    for (int i = 0; i < len; ++i) {
      int target = beta[static_cast<size_t>(i)] - r;
      if (target < 0) continue;
      if (std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
      int crossings = 0;
      for (int b : beta)
        if (b > target && b < beta[static_cast<size_t>(i)]) ++crossings;
      std::vector<int> nb = beta;
      nb[static_cast<size_t>(i)] = target;
      std::sort(nb.rbegin(), nb.rend());
      std::vector<int> child;
      for (int j = 0; j < len; ++j) {
        int p = nb[static_cast<size_t>(j)] - (len - 1 - j);
        if (p > 0) child.push_back(p);
      }
      BigInt sub = eval(child, idx + 1);
      if (crossings % 2 == 0)
        total += sub;
      else
        total -= sub;
    }
    memo.emplace(std::move(key), total);
    return total;
  }
};

BigInt bareiss_det(std::vector<std::vector<BigInt>> a) {
  int n = static_cast<int>(a.size());
  if (n == 0) return 1;
  int sign = 1;
  BigInt prev = 1;
  for (int k = 0; k < n; ++k) {
    if (a[static_cast<size_t>(k)][static_cast<size_t>(k)] == 0) {
      int pivot = -1;
      for (int r = k + 1; r < n; ++r)
        if (a[static_cast<size_t>(r)][static_cast<size_t>(k)] != 0) {
          pivot = r;
          break;
        }
      if (pivot < 0) return 0;
      std::swap(a[static_cast<size_t>(k)], a[static_cast<size_t>(pivot)]);
      sign = -sign;
    }
    const auto& row_k = a[static_cast<size_t>(k)];
    for (int i = k + 1; i < n; ++i) {
      auto& row_i = a[static_cast<size_t>(i)];
      for (int j = k + 1; j < n; ++j) {
        BigInt t = row_k[static_cast<size_t>(k)] * row_i[static_cast<size_t>(j)] -
                   row_i[static_cast<size_t>(k)] * row_k[static_cast<size_t>(j)];
        BigInt q, rem;
        boost::multiprecision::divide_qr(t, prev, q, rem);
        if (rem != 0) throw std::logic_error("Bareiss: inexact division");
        row_i[static_cast<size_t>(j)] = std::move(q);
      }
    }
    prev = a[static_cast<size_t>(k)][static_cast<size_t>(k)];
  }
  BigInt det = a[static_cast<size_t>(n - 1)][static_cast<size_t>(n - 1)];
  return sign > 0 ? det : -det;
}

}  // namespace

BigInt character_value(const Partition& shape, const CycleType& cycles) {
  if (shape.size() != cycles.n())
    throw std::invalid_argument("character_value: |shape| != |cycle type|");
  if (shape.empty()) return 1;
  MnContext ctx{cycles.lengths().parts(), {}};
  return ctx.eval(shape.parts(), 0);
}

BigInt skew_syt_count(const Partition& outer, const Partition& inner) {
  if (!outer.contains(inner)) return 0;
  int cells = outer.size() - inner.size();
  if (cells == 0) return 1;

  // Transposing both shapes leaves the count unchanged; pick the orientation
  // with fewer rows so the determinant stays small.
  Partition lam = outer, mu = inner;
  if (lam.rows() > lam.part(0)) {
    lam = lam.conjugate();
    mu = mu.conjugate();
  }
  int len = lam.rows();

  // Row i scaled by M_i! where M_i = max_j (lam_i - mu_j - i + j); the
  // entries M_i!/(lam_i - mu_j - i + j)! are integers.
  std::vector<std::vector<BigInt>> mat(
      static_cast<size_t>(len), std::vector<BigInt>(static_cast<size_t>(len)));
  BigInt scale = 1;
  for (int i = 0; i < len; ++i) {
    int top = lam.part(i) - mu.part(len - 1) - i + (len - 1);
    scale *= factorial(top);
    for (int j = 0; j < len; ++j) {
      int m = lam.part(i) - mu.part(j) - i + j;
      BigInt e = 0;
      if (m >= 0) {
        e = 1;
        for (int t = m + 1; t <= top; ++t) e *= t;
      }
      mat[static_cast<size_t>(i)][static_cast<size_t>(j)] = std::move(e);
    }
  }

  BigInt det = bareiss_det(std::move(mat));
  if (det == 0) return 0;
  BigInt num = det * factorial(cells);
  BigInt q, r;
  boost::multiprecision::divide_qr(num, scale, q, r);
  if (r != 0 || q < 0)
    throw std::logic_error("skew_syt_count: inexact determinant evaluation");
  return q;
}

CharTriple specht_triple(const Partition& shape) {
  int n = shape.size();
  if (n < 1) throw std::invalid_argument("specht_triple: need |shape| >= 1");
  CharTriple t;
  t.n = n;
  t.degree = shape.dimension();
  t.at_s1 =
      n >= 2 ? character_value(shape, CycleType::padded(Partition{2}, n)) : t.degree;
  t.s1s3_valid = n >= 4;
  t.at_s1s3 = t.s1s3_valid
                  ? character_value(shape, CycleType::padded(Partition{2, 2}, n))
                  : t.degree;
  return t;
}

CharTriple perm_module_triple(const Partition& shape) {
  int n = shape.size();
  if (n < 1) throw std::invalid_argument("perm_module_triple: need |shape| >= 1");
  const auto& parts = shape.parts();
  size_t len = parts.size();

  CharTriple t;
  t.n = n;
  t.degree = multinomial(n, parts);

  // Fixed ordered set partitions under a transposition: both swapped points
  // lie in the same block.
  BigInt at_s1 = 0;
  if (n >= 2) {
    for (size_t i = 0; i < len; ++i) {
      if (parts[i] < 2) continue;
      std::vector<int> rest = parts;
      rest[i] -= 2;
      at_s1 += multinomial(n - 2, rest);
    }
    t.at_s1 = at_s1;
  } else {
    t.at_s1 = t.degree;
  }

  // Under a product of two disjoint transpositions: either each swapped pair
  // sits in its own block (the two pairs can take the two blocks in either
  // order), or all four points share one block.
  t.s1s3_valid = n >= 4;
  if (t.s1s3_valid) {
    BigInt at_s1s3 = 0;
    for (size_t i = 0; i < len; ++i) {
      for (size_t j = i + 1; j < len; ++j) {
        if (parts[i] < 2 || parts[j] < 2) continue;
        std::vector<int> rest = parts;
        rest[i] -= 2;
        rest[j] -= 2;
        at_s1s3 += 2 * multinomial(n - 4, rest);
      }
    }
    for (size_t k = 0; k < len; ++k) {
      if (parts[k] < 4) continue;
      std::vector<int> rest = parts;
      rest[k] -= 4;
      at_s1s3 += multinomial(n - 4, rest);
    }
    t.at_s1s3 = at_s1s3;
  } else {
    t.at_s1s3 = t.degree;
  }
  return t;
}

CharTriple scaled_triple(const CharTriple& t, const BigInt& multiplicity) {
  if (multiplicity < 1)
    throw std::invalid_argument("scaled_triple: multiplicity must be positive");
  CharTriple out = t;
  out.degree *= multiplicity;
  out.at_s1 *= multiplicity;
  out.at_s1s3 *= multiplicity;
  return out;
}

CharTriple add_triples(const CharTriple& a, const CharTriple& b) {
  if (a.n != b.n)
    throw std::invalid_argument("add_triples: summands over different groups");
  CharTriple out;
  out.n = a.n;
  out.degree = a.degree + b.degree;
  out.at_s1 = a.at_s1 + b.at_s1;
  out.at_s1s3 = a.at_s1s3 + b.at_s1s3;
  out.s1s3_valid = a.s1s3_valid && b.s1s3_valid;
  return out;
}

GhPair g_and_h(const CharTriple& t) {
  BigInt dg = t.degree - t.at_s1;
  BigInt dh = t.degree - t.at_s1s3;
  if (!is_even(dg))
    throw std::invalid_argument("g_and_h: degree - at_s1 is odd (corrupted input)");
  if (dh % 4 != 0)
    throw std::invalid_argument("g_and_h: h would be odd (corrupted input)");
  return GhPair{dg / 2, dh / 2};
}

GhPair skew_g_h(const Partition& shape) {
  GhPair out;
  out.g = skew_syt_count(shape, Partition{1, 1});
  out.h = 2 * (skew_syt_count(shape, Partition{3, 1}) +
               skew_syt_count(shape, Partition{2, 1, 1}));
  return out;
}

BigInt character_via_skew(const Partition& shape, const Partition& mu) {
  if (mu.size() > shape.size())
    throw std::invalid_argument("character_via_skew: |mu| > |shape|");
  BigInt total = 0;
  for_each_partition(mu.size(), [&](const std::vector<int>& nu_parts) {
    Partition nu(nu_parts);
    BigInt skew = skew_syt_count(shape, nu);
    if (skew == 0) return;
    total += character_value(nu, CycleType(mu)) * skew;
  });
  return total;
}

}  // namespace spinlift
