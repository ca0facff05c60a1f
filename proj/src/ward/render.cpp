#include "g2vir/ward/render.hpp"

#include <stdexcept>

#include "g2vir/expr/text.hpp"

namespace g2vir::ward {

using expr::AtomKind;
using expr::Monomial;

Format parse_format(std::string_view name) {
  if (name == "sexpr") return Format::sexpr;
  if (name == "latex") return Format::latex;
  if (name == "json") return Format::json;
  throw std::invalid_argument("unknown format '" + std::string(name) +
                              "' (expected sexpr, latex or json)");
}

std::string render_operator(const OperatorForm& op, Format format) {
  switch (format) {
    case Format::sexpr: return expr::to_sexpr(op.poly());
    case Format::latex: return expr::to_latex(op.poly());
    case Format::json: return to_json(op).dump();
  }
  throw std::invalid_argument("unknown format");
}

nlohmann::ordered_json to_json(const OperatorForm& op) {
  nlohmann::ordered_json j;
  j["labels"] = op.labels();
  j["monomials"] = op.poly().size();
  j["terms"] = nlohmann::ordered_json::array();
  for (const auto& [m, coeff] : op.poly().terms()) {
    nlohmann::ordered_json atoms = nlohmann::ordered_json::array();
    for (const auto& [atom, e] : m.factors()) {
      nlohmann::ordered_json a = nlohmann::ordered_json::array();
      a.push_back(expr::to_string(atom.kind()));
      a.push_back(atom.first());
      if (atom.kind() != AtomKind::S && atom.kind() != AtomKind::X) a.push_back(atom.second());
      for (int i = 0; i < e; ++i) atoms.push_back(a);
    }
    for (const auto& [deg, r] : coeff.terms()) {
      nlohmann::ordered_json t;
      t["q"] = r.str();
      t["c"] = deg;
      t["atoms"] = atoms;
      j["terms"].push_back(std::move(t));
    }
  }
  return j;
}

namespace {

Atom atom_from_json(const nlohmann::ordered_json& a) {
  if (!a.is_array() || a.empty()) throw std::invalid_argument("operator JSON: bad atom");
  const auto kind = a.at(0).get<std::string>();
  const auto arg = [&](std::size_t k) { return a.at(k).get<int>(); };
  if (kind == "S") return Atom::s(arg(1));
  if (kind == "Om") return Atom::om(arg(1), arg(2));
  if (kind == "Nu") return Atom::nu(arg(1), arg(2));
  if (kind == "Al") return Atom::alpha(arg(1), arg(2));
  if (kind == "P4") return Atom::p4(arg(1), arg(2));
  if (kind == "X") return Atom::x(arg(1));
  throw std::invalid_argument("operator JSON: unknown atom kind '" + kind + "'");
}

}  // namespace

OperatorForm operator_from_json(const nlohmann::ordered_json& j) {
  Polynomial poly;
  for (const auto& t : j.at("terms")) {
    std::vector<Monomial::Factor> factors;
    for (const auto& a : t.at("atoms")) factors.emplace_back(atom_from_json(a), 1);
    poly.add_term(Monomial::from_factors(std::move(factors)),
                  Coefficient::term(Rational::parse(t.at("q").get<std::string>()),
                                    t.at("c").get<int>()));
  }
  return OperatorForm(j.at("labels").get<std::vector<int>>(), std::move(poly));
}

}  // namespace g2vir::ward
