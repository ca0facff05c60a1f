#include "g2vir/expr/atom.hpp"

#include <stdexcept>
#include <utility>

namespace g2vir::expr {

namespace {

std::int16_t check_label(int i) {
  if (i < 1 || i > kMaxLabel) {
    throw std::out_of_range("label " + std::to_string(i) + " outside 1.." +
                            std::to_string(kMaxLabel));
  }
  return static_cast<std::int16_t>(i);
}

std::int16_t check_index(int a) {
  if (a < 1 || a > kGenus) {
    throw std::out_of_range("differential index " + std::to_string(a) + " outside 1..2");
  }
  return static_cast<std::int16_t>(a);
}

}  // namespace

Atom Atom::s(int i) { return {AtomKind::S, check_label(i), 0}; }

Atom Atom::om(int i, int j) {
  if (i == j) throw std::invalid_argument("Om(i,j) requires distinct labels");
  if (i > j) std::swap(i, j);
  return {AtomKind::Om, check_label(i), check_label(j)};
}

Atom Atom::nu(int a, int i) { return {AtomKind::Nu, check_index(a), check_label(i)}; }

Atom Atom::alpha(int a, int b) {
  if (a > b) std::swap(a, b);
  return {AtomKind::Alpha, check_index(a), check_index(b)};
}

Atom Atom::p4(int i, int j) { return {AtomKind::P4, check_label(i), check_label(j)}; }

Atom Atom::x(int i) { return {AtomKind::X, check_label(i), 0}; }

int Atom::label_count() const noexcept {
  switch (kind_) {
    case AtomKind::S:
    case AtomKind::Nu:
    case AtomKind::X: return 1;
    case AtomKind::Om:
    case AtomKind::P4: return 2;
    case AtomKind::Alpha: return 0;
  }
  return 0;
}

int Atom::label(int k) const {
  if (k < 0 || k >= label_count()) throw std::out_of_range("atom label slot");
  if (kind_ == AtomKind::Nu) return second_;
  return k == 0 ? first_ : second_;
}

bool Atom::has_label(int label) const noexcept {
  switch (kind_) {
    case AtomKind::S:
    case AtomKind::X: return first_ == label;
    case AtomKind::Nu: return second_ == label;
    case AtomKind::Om:
    case AtomKind::P4: return first_ == label || second_ == label;
    case AtomKind::Alpha: return false;
  }
  return false;
}

std::string to_string(AtomKind kind) {
  switch (kind) {
    case AtomKind::S: return "S";
    case AtomKind::Om: return "Om";
    case AtomKind::Nu: return "Nu";
    case AtomKind::Alpha: return "Al";
    case AtomKind::P4: return "P4";
    case AtomKind::X: return "X";
  }
  return "?";
}

std::string Atom::sexpr() const {
  std::string out = "(" + to_string(kind_) + " " + std::to_string(first_);
  if (kind_ != AtomKind::S && kind_ != AtomKind::X) out += " " + std::to_string(second_);
  out += ")";
  return out;
}

}  // namespace g2vir::expr
