#include "g2vir/modular/operator_eval.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace g2vir::modular {

namespace {

template <class Map, class Key>
const auto& lookup(const Map& map, const Key& key, const expr::Atom& atom) {
  const auto it = map.find(key);
  if (it == map.end()) throw std::invalid_argument("frame has no value for " + atom.sexpr());
  return it->second;
}

Complex atom_value(const expr::Atom& atom, const OperatorFrame& frame) {
  switch (atom.kind()) {
    case expr::AtomKind::S:
      return lookup(frame.projective_connection, atom.first(), atom);
    case expr::AtomKind::Om:
      return lookup(frame.bidifferential, std::make_pair(atom.first(), atom.second()), atom);
    case expr::AtomKind::Nu:
      return lookup(frame.nu, atom.second(), atom)(atom.first() - 1);
    default:
      throw std::invalid_argument("atom " + atom.sexpr() + " has no numeric value");
  }
}

}  // namespace

Complex apply_operator(const ward::OperatorForm& op, const OperatorFrame& frame, const Jet& jet,
                       double c) {
  Complex total(0);
  for (const auto& [monomial, coefficient] : op.poly().terms()) {
    Complex term(coefficient.evaluate(c));
    std::vector<int> derivatives;
    for (const auto& [atom, exponent] : monomial.factors()) {
      if (atom.kind() == expr::AtomKind::Alpha) {
        for (int e = 0; e < exponent; ++e)
          derivatives.push_back(coordinate_index(atom.first(), atom.second()));
        continue;
      }
      const Complex v = atom_value(atom, frame);
      for (int e = 0; e < exponent; ++e) term *= v;
    }
    switch (derivatives.size()) {
      case 0: term *= jet.value; break;
      case 1: term *= jet.gradient(derivatives[0]); break;
      case 2: term *= jet.hessian(derivatives[0], derivatives[1]); break;
      default:
        throw std::invalid_argument("jet holds derivatives up to order 2, operator needs " +
                                    std::to_string(derivatives.size()));
    }
    total += term;
  }
  return total;
}

}  // namespace g2vir::modular
