#pragma once

#include <utility>
#include <variant>
#include <vector>

#include "spinlift/characters.hpp"
#include "spinlift/partition.hpp"

namespace spinlift {

/// Description of a genuine (non-virtual) real representation of a symmetric
/// group, sufficient to recover its character triple.  Sums with positive
/// multiplicities cover every real representation up to the data the
/// classification criteria consume.
class RepDescriptor {
 public:
  struct Specht {
    Partition shape;
  };
  struct PermModule {
    Partition shape;
  };
  struct Explicit {
    CharTriple triple;
  };
  struct Sum {
    std::vector<RepDescriptor> terms;
    std::vector<long long> multiplicities;
  };
  using Kind = std::variant<Specht, PermModule, Explicit, Sum>;

  static RepDescriptor specht(Partition shape);
  static RepDescriptor perm_module(Partition shape);
  static RepDescriptor explicit_triple(CharTriple triple);
  static RepDescriptor sum(std::vector<std::pair<RepDescriptor, long long>> terms);

  int n() const { return n_; }
  const Kind& kind() const { return kind_; }

 private:
  RepDescriptor(Kind kind, int n) : kind_(std::move(kind)), n_(n) {}
  Kind kind_;
  int n_ = 0;
};

/// Character triple of the described representation; multiplicity-weighted
/// sum over constituents.  Throws on mixed ambient groups.
CharTriple triple_of(const RepDescriptor& rep);

}  // namespace spinlift
