#include "spinlift/spinoriality.hpp"

#include <numeric>
#include <stdexcept>
#include <thread>
#include <vector>

#include "spinlift/stiefel_whitney.hpp"

namespace spinlift {

namespace {

bool g_condition(const BigInt& g) {
  int r = mod_norm(g, 4);
  return r == 0 || r == 3;
}

SpinReport classify_sn_triple(const CharTriple& t) {
  if (t.n < 2) throw std::invalid_argument("classify_sn: need n >= 2");
  GhPair gh = g_and_h(t);
  SpinReport rep;
  rep.n = t.n;
  rep.degree = t.degree;
  rep.g = gh.g;
  rep.h = gh.h;
  rep.chiral = bit_of(gh.g, 0) == 1;
  bool cond_g = g_condition(gh.g);
  bool cond_h = gh.h % 4 == 0;
  rep.spinorial = t.n >= 4 ? cond_g && cond_h : cond_g;  // h-condition vacuous below n=4
  rep.lift_count = rep.spinorial ? 2 : 0;
  rep.w1_coord = bit_of(gh.g, 0);
  H2Class w2 = w2_from_counts(gh.g, gh.h, t.n);
  rep.w2_coords = {w2.e_cup_coef(), w2.w2_std_coef()};
  return rep;
}

SpinReport classify_an_from_h(const BigInt& degree, const BigInt& g,
                              const BigInt& h, int n) {
  SpinReport rep;
  rep.n = n;
  rep.degree = degree;
  rep.g = g;
  rep.h = h;
  rep.chiral = std::nullopt;
  rep.spinorial = h % 4 == 0;
  rep.lift_count = rep.spinorial ? 1 : 0;
  rep.w1_coord = 0;
  rep.w2_coords = {rep.spinorial ? 0 : 1, 0};
  return rep;
}

}  // namespace

AnIrreducibleLabel AnIrreducibleLabel::make(Partition shape, AnVariant variant) {
  bool self_conj = shape.self_conjugate();
  int eps = shape.epsilon();
  if (variant == AnVariant::Restriction) {
    if (self_conj && eps == 1)
      throw std::invalid_argument(
          "restriction of a self-conjugate shape with epsilon = +1 splits; "
          "use the plus/minus variants");
  } else {
    if (!self_conj || eps != 1)
      throw std::invalid_argument(
          "plus/minus constituents exist only for self-conjugate shapes with "
          "epsilon = +1");
  }
  return AnIrreducibleLabel{std::move(shape), variant};
}

SpinReport classify_sn(const RepDescriptor& rep) {
  return classify_sn_triple(triple_of(rep));
}

SpinReport classify_an_restriction(const RepDescriptor& rep) {
  if (rep.n() < 4)
    throw std::invalid_argument(
        "classify_an_restriction: alternating groups below n = 4 are "
        "degenerate and not classified");
  CharTriple t = triple_of(rep);
  GhPair gh = g_and_h(t);
  return classify_an_from_h(t.degree, gh.g, gh.h, t.n);
}

SpinReport classify_an_irreducible(const AnIrreducibleLabel& label) {
  int n = label.shape.size();
  if (n < 4)
    throw std::invalid_argument("classify_an_irreducible: need n >= 4");
  AnIrreducibleLabel::make(label.shape, label.variant);  // enforce case conditions
  CharTriple t = specht_triple(label.shape);
  GhPair gh = g_and_h(t);
  if (label.variant == AnVariant::Restriction)
    return classify_an_from_h(t.degree, gh.g, gh.h, n);
  // Split constituent: half the degree, and the character at the product of
  // two disjoint transpositions also halves, so its h is h/2.  The mod-16
  // criterion on the parent triple is the mod-4 criterion on h/2.
  if (!is_even(t.degree) || !is_even(gh.h))
    throw std::logic_error("split constituent of odd degree");
  return classify_an_from_h(t.degree / 2, 0, gh.h / 2, n);
}

SpinReport classify_product(const RepDescriptor& left, const RepDescriptor& right) {
  CharTriple tl = triple_of(left);
  CharTriple tr = triple_of(right);
  if (tl.n < 2 || tr.n < 2)
    throw std::invalid_argument("classify_product: need both factors with n >= 2");
  GhPair gl = g_and_h(tl);
  GhPair gr = g_and_h(tr);

  // Restriction to the left factor is deg(right) copies of the left
  // representation, and symmetrically.
  SpinReport left_rest = classify_sn_triple(scaled_triple(tl, tr.degree));
  SpinReport right_rest = classify_sn_triple(scaled_triple(tr, tl.degree));
  bool cross_even = is_even((tl.degree * tr.degree + 1) * gl.g * gr.g);

  SpinReport rep;
  rep.n = tl.n;
  rep.n2 = tr.n;
  rep.degree = tl.degree * tr.degree;
  rep.g = left_rest.g;   // eigenvalue count at a transposition in the left factor
  rep.h = left_rest.h;
  rep.chiral = std::nullopt;
  rep.spinorial = left_rest.spinorial && right_rest.spinorial && cross_even;
  rep.lift_count = rep.spinorial ? 4 : 0;
  return rep;
}

bool product_five_conditions(const BigInt& f, const BigInt& g, const BigInt& h,
                             const BigInt& f2, const BigInt& g2,
                             const BigInt& h2) {
  if (!is_even(h) || !is_even(h2))
    throw std::invalid_argument("product_five_conditions: h values must be even");
  bool c1 = is_even(f2 * (h / 2));
  bool c2 = (bit_of(f2 * (g >> 1), 0) ^ (choose2_parity(f2 + 1) & bit_of(g, 0))) == 0;
  bool c3 = is_even((f * f2 + 1) * g * g2);
  bool c4 = is_even(f * (h2 / 2));
  bool c5 = (bit_of(f * (g2 >> 1), 0) ^ (choose2_parity(f + 1) & bit_of(g2, 0))) == 0;
  return c1 && c2 && c3 && c4 && c5;
}

std::string DensityPoint::fraction() const {
  long long a = achiral_spinorial, b = total;
  long long d = std::gcd(a, b);
  if (d == 0) d = 1;
  return std::to_string(a / d) + "/" + std::to_string(b / d);
}

DensityPoint density_sweep(int n, int threads) {
  if (n < 4) throw std::invalid_argument("density_sweep: need n >= 4");
  if (threads < 1) threads = 1;

  auto scan = [n](int worker, int stride, long long& hits, long long& seen) {
    long long index = 0;
    for_each_partition(n, [&](const std::vector<int>& parts) {
      if (index++ % stride != worker) return;
      ++seen;
      GhPair gh = skew_g_h(Partition(parts));
      if (gh.g % 4 == 0 && gh.h % 4 == 0) ++hits;
    });
  };

  std::vector<long long> hits(static_cast<size_t>(threads), 0);
  std::vector<long long> seen(static_cast<size_t>(threads), 0);
  if (threads == 1) {
    scan(0, 1, hits[0], seen[0]);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < threads; ++w)
      pool.emplace_back(scan, w, threads, std::ref(hits[static_cast<size_t>(w)]),
                        std::ref(seen[static_cast<size_t>(w)]));
    for (auto& t : pool) t.join();
  }

  DensityPoint point;
  point.n = n;
  for (int w = 0; w < threads; ++w) {
    point.achiral_spinorial += hits[static_cast<size_t>(w)];
    point.total += seen[static_cast<size_t>(w)];
  }
  return point;
}

}  // namespace spinlift
