#include "g2vir/expr/text.hpp"

#include <cctype>
#include <cstdlib>
#include <stdexcept>
#include <vector>

namespace g2vir::expr {

std::string to_sexpr(const Polynomial& p) {
  std::string out = "(+";
  for (const auto& [m, coeff] : p.terms()) {
    std::string atoms;
    for (const auto& [atom, e] : m.factors()) {
      const std::string a = atom.sexpr();
      for (int i = 0; i < e; ++i) atoms += " " + a;
    }
    for (const auto& [deg, r] : coeff.terms()) {
      out += " (* (q " + r.str() + ")";
      if (deg != 0) out += " (c " + std::to_string(deg) + ")";
      out += atoms + ")";
    }
  }
  out += ")";
  return out;
}

namespace {

/// Minimal s-expression reader: lists of symbols and lists.
struct Node {
  std::string symbol;
  std::vector<Node> children;
  [[nodiscard]] bool is_list() const { return symbol.empty(); }
};

class Reader {
 public:
  explicit Reader(std::string_view text) : text_(text) {}

  Node read_document() {
    Node n = read();
    skip_space();
    if (pos_ != text_.size()) fail("trailing input");
    return n;
  }

 private:
  Node read() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    if (text_[pos_] == '(') {
      ++pos_;
      Node list;
      for (;;) {
        skip_space();
        if (pos_ >= text_.size()) fail("unterminated list");
        if (text_[pos_] == ')') {
          ++pos_;
          return list;
        }
        list.children.push_back(read());
      }
    }
    if (text_[pos_] == ')') fail("unexpected ')'");
    const std::size_t start = pos_;
    while (pos_ < text_.size() && text_[pos_] != '(' && text_[pos_] != ')' &&
           !std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    return Node{std::string(text_.substr(start, pos_ - start)), {}};
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("sexpr parse error at offset " + std::to_string(pos_) + ": " +
                                what);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

int to_int(const Node& n) {
  if (n.is_list()) throw std::invalid_argument("sexpr: expected integer, got list");
  char* end = nullptr;
  const long v = std::strtol(n.symbol.c_str(), &end, 10);
  if (end == n.symbol.c_str() || *end != '\0') {
    throw std::invalid_argument("sexpr: bad integer '" + n.symbol + "'");
  }
  return static_cast<int>(v);
}

Atom to_atom(const Node& n) {
  if (!n.is_list() || n.children.empty() || n.children[0].is_list()) {
    throw std::invalid_argument("sexpr: malformed atom");
  }
  const std::string& head = n.children[0].symbol;
  const auto arg = [&](std::size_t k) { return to_int(n.children.at(k)); };
  const auto arity = [&](std::size_t k) {
    if (n.children.size() != k + 1) {
      throw std::invalid_argument("sexpr: atom " + head + " expects " + std::to_string(k) +
                                  " arguments");
    }
  };
  if (head == "S") { arity(1); return Atom::s(arg(1)); }
  if (head == "Om") { arity(2); return Atom::om(arg(1), arg(2)); }
  if (head == "Nu") { arity(2); return Atom::nu(arg(1), arg(2)); }
  if (head == "Al") { arity(2); return Atom::alpha(arg(1), arg(2)); }
  if (head == "P4") { arity(2); return Atom::p4(arg(1), arg(2)); }
  if (head == "X") { arity(1); return Atom::x(arg(1)); }
  throw std::invalid_argument("sexpr: unknown atom '" + head + "'");
}

}  // namespace

Polynomial parse_sexpr(std::string_view text) {
  const Node root = Reader(text).read_document();
  if (!root.is_list() || root.children.empty() || root.children[0].symbol != "+") {
    throw std::invalid_argument("sexpr: expected (+ ...)");
  }
  Polynomial out;
  for (std::size_t t = 1; t < root.children.size(); ++t) {
    const Node& term = root.children[t];
    if (!term.is_list() || term.children.empty() || term.children[0].symbol != "*") {
      throw std::invalid_argument("sexpr: expected (* ...) term");
    }
    Rational q(1);
    int cdeg = 0;
    bool saw_q = false;
    std::vector<Monomial::Factor> factors;
    for (std::size_t k = 1; k < term.children.size(); ++k) {
      const Node& f = term.children[k];
      if (!f.is_list() || f.children.empty()) throw std::invalid_argument("sexpr: bad factor");
      const std::string& head = f.children[0].symbol;
      if (head == "q") {
        if (f.children.size() != 2 || saw_q) throw std::invalid_argument("sexpr: bad (q r)");
        q = Rational::parse(f.children[1].symbol);
        saw_q = true;
      } else if (head == "c") {
        if (f.children.size() != 2) throw std::invalid_argument("sexpr: bad (c k)");
        cdeg += to_int(f.children[1]);
      } else {
        factors.emplace_back(to_atom(f), 1);
      }
    }
    if (!saw_q) throw std::invalid_argument("sexpr: term without (q r)");
    if (cdeg < 0) throw std::invalid_argument("sexpr: negative power of c");
    out.add_term(Monomial::from_factors(std::move(factors)), Coefficient::term(q, cdeg));
  }
  return out;
}

namespace {

std::string latex_atom(const Atom& a) {
  const auto z = [](int i) { return "z_{" + std::to_string(i) + "}"; };
  switch (a.kind()) {
    case AtomKind::S: return "s(" + z(a.first()) + ")";
    case AtomKind::Om: return "\\omega(" + z(a.first()) + "," + z(a.second()) + ")";
    case AtomKind::Nu: return "\\nu_{" + std::to_string(a.first()) + "}(" + z(a.second()) + ")";
    case AtomKind::Alpha:
      return "\\partial_{\\Omega_{" + std::to_string(a.first()) + std::to_string(a.second()) +
             "}}";
    case AtomKind::P4:
      return "{}^{2}\\mathcal{P}_{4}(" + z(a.first()) + "," + z(a.second()) + ")";
    case AtomKind::X: return "\\{\\phi(" + z(a.first()) + ")," + z(a.first()) + "\\}";
  }
  return "?";
}

std::string latex_single(const Rational& r, int deg, bool unit_allowed_empty) {
  std::string cpart;
  if (deg == 1) cpart = "c";
  if (deg > 1) cpart = "c^{" + std::to_string(deg) + "}";
  const std::string sign = r.num() < 0 ? "-" : "";
  const std::int64_t num = r.num() < 0 ? -r.num() : r.num();
  std::string numer;
  if (num == 1 && !cpart.empty()) {
    numer = cpart;
  } else if (num == 1 && unit_allowed_empty && r.den() == 1) {
    numer = "";
  } else {
    numer = std::to_string(num) + cpart;
  }
  if (r.den() == 1) return sign + numer;
  if (numer.empty()) numer = "1";
  return sign + "\\frac{" + numer + "}{" + std::to_string(r.den()) + "}";
}

}  // namespace

std::string to_latex(const Coefficient& k) {
  if (k.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [deg, r] : k.terms()) {
    std::string piece = latex_single(r, deg, false);
    if (!first && piece.front() != '-') out += "+";
    out += piece;
    first = false;
  }
  return out;
}

std::string to_latex(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, coeff] : p.terms()) {
    std::string body;
    std::string derivs;
    for (const auto& [atom, e] : m.factors()) {
      std::string a = latex_atom(atom);
      if (e > 1) a += "^{" + std::to_string(e) + "}";
      (atom.kind() == AtomKind::Alpha ? derivs : body) += a;
    }
    body += derivs;
    std::string c;
    if (coeff.terms().size() == 1) {
      const auto& [deg, r] = *coeff.terms().begin();
      c = latex_single(r, deg, !body.empty());
      if (c == "-" && body.empty()) c = "-1";
    } else {
      c = "\\left(" + to_latex(coeff) + "\\right)";
    }
    std::string term = c + body;
    if (term.empty()) term = "1";
    if (!first && term.front() != '-') out += "+";
    out += term;
    first = false;
  }
  return out;
}

}  // namespace g2vir::expr
