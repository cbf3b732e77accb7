#include "spinlift/rep.hpp"

#include <stdexcept>

namespace spinlift {

RepDescriptor RepDescriptor::specht(Partition shape) {
  int n = shape.size();
  if (n < 1) throw std::invalid_argument("specht: need |shape| >= 1");
  return RepDescriptor(Specht{std::move(shape)}, n);
}

RepDescriptor RepDescriptor::perm_module(Partition shape) {
  int n = shape.size();
  if (n < 1) throw std::invalid_argument("perm_module: need |shape| >= 1");
  return RepDescriptor(PermModule{std::move(shape)}, n);
}

RepDescriptor RepDescriptor::explicit_triple(CharTriple triple) {
  validate_triple(triple);
  int n = triple.n;
  return RepDescriptor(Explicit{std::move(triple)}, n);
}

RepDescriptor RepDescriptor::sum(
    std::vector<std::pair<RepDescriptor, long long>> terms) {
  if (terms.empty()) throw std::invalid_argument("sum: empty representation");
  Sum node;
  int n = terms.front().first.n();
  for (auto& [rep, mult] : terms) {
    if (mult < 1)
      throw std::invalid_argument("sum: multiplicities must be positive");
    if (rep.n() != n)
      throw std::invalid_argument("sum: summands over different groups");
    node.terms.push_back(std::move(rep));
    node.multiplicities.push_back(mult);
  }
  return RepDescriptor(Kind(std::move(node)), n);
}

CharTriple triple_of(const RepDescriptor& rep) {
  return std::visit(
      [&](const auto& node) -> CharTriple {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, RepDescriptor::Specht>) {
          return specht_triple(node.shape);
        } else if constexpr (std::is_same_v<T, RepDescriptor::PermModule>) {
          return perm_module_triple(node.shape);
        } else if constexpr (std::is_same_v<T, RepDescriptor::Explicit>) {
          return node.triple;
        } else {
          CharTriple acc;
          bool first = true;
          for (size_t i = 0; i < node.terms.size(); ++i) {
            CharTriple part =
                scaled_triple(triple_of(node.terms[i]), node.multiplicities[i]);
            acc = first ? part : add_triples(acc, part);
            first = false;
          }
          return acc;
        }
      },
      rep.kind());
}

}  // namespace spinlift
