#include "g2vir/modular/symplectic.hpp"

#include <array>
#include <stdexcept>
#include <utility>

namespace g2vir::modular {

namespace {

std::int64_t checked_mul(std::int64_t x, std::int64_t y) {
  std::int64_t r = 0;
  if (__builtin_mul_overflow(x, y, &r)) throw std::overflow_error("symplectic entry overflow");
  return r;
}

std::int64_t checked_add(std::int64_t x, std::int64_t y) {
  std::int64_t r = 0;
  if (__builtin_add_overflow(x, y, &r)) throw std::overflow_error("symplectic entry overflow");
  return r;
}

IMat2 checked_sum(const IMat2& x, const IMat2& y) {
  IMat2 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r(i, j) = checked_add(x(i, j), y(i, j));
  return r;
}

IMat2 negated(const IMat2& x) { return checked_product(IMat2{{-1, 0}, {0, -1}}, x); }

std::int64_t det2(const IMat2& u) {
  return checked_add(checked_mul(u(0, 0), u(1, 1)), -checked_mul(u(0, 1), u(1, 0)));
}

std::string join_words(const std::string& lhs, const std::string& rhs) {
  if (lhs.empty()) return rhs;
  if (rhs.empty()) return lhs;
  return lhs + " " + rhs;
}

// Unimodular generators of GL(2,Z) used by R_U.
const std::array<IMat2, 6>& unimodular_set() {
  static const std::array<IMat2, 6> set{
      IMat2{{0, 1}, {1, 0}},  IMat2{{1, 1}, {0, 1}}, IMat2{{1, 0}, {1, 1}},
      IMat2{{1, -1}, {0, 1}}, IMat2{{-1, 0}, {0, 1}}, IMat2{{1, 0}, {-1, 1}}};
  return set;
}

std::string matrix_token(char tag, const IMat2& m, bool symmetric) {
  std::string s(1, tag);
  s += '(';
  s += std::to_string(m(0, 0)) + "," + std::to_string(m(0, 1)) + ",";
  if (!symmetric) s += std::to_string(m(1, 0)) + ",";
  s += std::to_string(m(1, 1)) + ")";
  return s;
}

}  // namespace

IMat2 checked_product(const IMat2& x, const IMat2& y) {
  IMat2 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      r(i, j) = checked_add(checked_mul(x(i, 0), y(0, j)), checked_mul(x(i, 1), y(1, j)));
  return r;
}

SymplecticElement::SymplecticElement()
    : a_(IMat2::Identity()), b_(IMat2::Zero()), c_(IMat2::Zero()), d_(IMat2::Identity()) {}

SymplecticElement::SymplecticElement(Unchecked, const IMat2& a, const IMat2& b, const IMat2& c,
                                     const IMat2& d, std::string word)
    : a_(a), b_(b), c_(c), d_(d), word_(std::move(word)) {}

SymplecticElement::SymplecticElement(const IMat2& a, const IMat2& b, const IMat2& c,
                                     const IMat2& d, std::string word)
    : SymplecticElement(Unchecked{}, a, b, c, d, std::move(word)) {
  if (!relations().all()) throw std::invalid_argument("blocks do not satisfy the Sp(4,Z) relations");
}

SymplecticElement SymplecticElement::j() {
  return {Unchecked{}, IMat2::Zero(), IMat2::Identity(), -IMat2::Identity(), IMat2::Zero(), "J"};
}

SymplecticElement SymplecticElement::translation(const IMat2& s) {
  if (s(0, 1) != s(1, 0)) throw std::invalid_argument("translation needs a symmetric S");
  return {Unchecked{}, IMat2::Identity(), s, IMat2::Zero(), IMat2::Identity(),
          matrix_token('T', s, true)};
}

SymplecticElement SymplecticElement::rotation(const IMat2& u) {
  const std::int64_t det = det2(u);
  if (det != 1 && det != -1) throw std::invalid_argument("rotation needs a unimodular U");
  // U^-1 = adj(U) / det with det = +-1, so U^-T is exact.
  IMat2 inv;
  inv << u(1, 1) * det, -u(0, 1) * det, -u(1, 0) * det, u(0, 0) * det;
  return {Unchecked{}, u, IMat2::Zero(), IMat2::Zero(), inv.transpose(), matrix_token('R', u, false)};
}

SymplecticElement::Relations SymplecticElement::relations() const {
  const IMat2 at = a_.transpose();
  const IMat2 bt = b_.transpose();
  const IMat2 ct = c_.transpose();
  const IMat2 dt = d_.transpose();
  Relations r;
  r.at_d_minus_ct_b = checked_sum(checked_product(at, d_), negated(checked_product(ct, b_))) ==
                      IMat2::Identity();
  r.a_bt = checked_product(a_, bt) == checked_product(b_, at);
  r.c_dt = checked_product(c_, dt) == checked_product(d_, ct);
  r.at_c = checked_product(at, c_) == checked_product(ct, a_);
  r.bt_d = checked_product(bt, d_) == checked_product(dt, b_);
  return r;
}

SymplecticElement SymplecticElement::inverse() const {
  std::string w = word_.empty() ? std::string() : "inv(" + word_ + ")";
  return {Unchecked{}, d_.transpose(), negated(b_.transpose()), negated(c_.transpose()),
          a_.transpose(), std::move(w)};
}

SymplecticElement operator*(const SymplecticElement& lhs, const SymplecticElement& rhs) {
  const IMat2 a = checked_sum(checked_product(lhs.a_, rhs.a_), checked_product(lhs.b_, rhs.c_));
  const IMat2 b = checked_sum(checked_product(lhs.a_, rhs.b_), checked_product(lhs.b_, rhs.d_));
  const IMat2 c = checked_sum(checked_product(lhs.c_, rhs.a_), checked_product(lhs.d_, rhs.c_));
  const IMat2 d = checked_sum(checked_product(lhs.c_, rhs.b_), checked_product(lhs.d_, rhs.d_));
  return {SymplecticElement::Unchecked{}, a, b, c, d, join_words(lhs.word_, rhs.word_)};
}

bool operator==(const SymplecticElement& lhs, const SymplecticElement& rhs) {
  return lhs.a_ == rhs.a_ && lhs.b_ == rhs.b_ && lhs.c_ == rhs.c_ && lhs.d_ == rhs.d_;
}

SymplecticElement random_symplectic(std::mt19937_64& rng, int word_length) {
  if (word_length < 0 || word_length > kMaxWordLength)
    throw std::invalid_argument("word length must lie in [0, " + std::to_string(kMaxWordLength) +
                                "]");
  std::uniform_int_distribution<int> pick_generator(0, 2);
  std::uniform_int_distribution<std::int64_t> pick_entry(-2, 2);
  std::uniform_int_distribution<std::size_t> pick_unimodular(0, unimodular_set().size() - 1);
  SymplecticElement gamma;
  for (int i = 0; i < word_length; ++i) {
    switch (pick_generator(rng)) {
      case 0:
        gamma = gamma * SymplecticElement::j();
        break;
      case 1: {
        IMat2 s;
        s(0, 0) = pick_entry(rng);
        s(0, 1) = s(1, 0) = pick_entry(rng);
        s(1, 1) = pick_entry(rng);
        gamma = gamma * SymplecticElement::translation(s);
        break;
      }
      default:
        gamma = gamma * SymplecticElement::rotation(unimodular_set()[pick_unimodular(rng)]);
        break;
    }
  }
  if (!gamma.relations().all()) throw std::logic_error("generated element is not symplectic");
  return gamma;
}

SymplecticElement random_symplectic(std::uint64_t seed, int word_length) {
  std::mt19937_64 rng(seed);
  return random_symplectic(rng, word_length);
}

}  // namespace g2vir::modular
