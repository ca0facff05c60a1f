#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "g2vir/modular/types.hpp"

namespace g2vir::modular {

/// Longest generator word accepted by random_symplectic.
inline constexpr int kMaxWordLength = 12;

/// Element of Sp(4,Z) in 2x2 integer blocks [[A, B], [C, D]].
///
/// Every product is computed in checked 64-bit arithmetic; overflow throws
/// std::overflow_error.
class SymplecticElement {
 public:
  SymplecticElement();
  /// Throws std::invalid_argument unless the blocks satisfy all relations.
  SymplecticElement(const IMat2& a, const IMat2& b, const IMat2& c, const IMat2& d,
                    std::string word = {});

  static SymplecticElement identity() { return {}; }
  /// J = [[0, I], [-I, 0]].
  static SymplecticElement j();
  /// T_S = [[I, S], [0, I]] for integer symmetric S.
  static SymplecticElement translation(const IMat2& s);
  /// R_U = [[U, 0], [0, U^-T]] for unimodular U.
  static SymplecticElement rotation(const IMat2& u);

  [[nodiscard]] const IMat2& a() const noexcept { return a_; }
  [[nodiscard]] const IMat2& b() const noexcept { return b_; }
  [[nodiscard]] const IMat2& c() const noexcept { return c_; }
  [[nodiscard]] const IMat2& d() const noexcept { return d_; }
  /// Generator word that produced the element, space separated; empty for I.
  [[nodiscard]] const std::string& word() const noexcept { return word_; }

  struct Relations {
    bool at_d_minus_ct_b = false;  // A^T D - C^T B = I
    bool a_bt = false;             // A B^T = B A^T
    bool c_dt = false;             // C D^T = D C^T
    bool at_c = false;             // A^T C = C^T A
    bool bt_d = false;             // B^T D = D^T B
    [[nodiscard]] bool all() const noexcept {
      return at_d_minus_ct_b && a_bt && c_dt && at_c && bt_d;
    }
  };
  [[nodiscard]] Relations relations() const;

  /// [[D^T, -B^T], [-C^T, A^T]].
  [[nodiscard]] SymplecticElement inverse() const;

  template <class Scalar>
  [[nodiscard]] Mat2<Scalar> block_a() const { return a_.cast<Scalar>(); }
  template <class Scalar>
  [[nodiscard]] Mat2<Scalar> block_b() const { return b_.cast<Scalar>(); }
  template <class Scalar>
  [[nodiscard]] Mat2<Scalar> block_c() const { return c_.cast<Scalar>(); }
  template <class Scalar>
  [[nodiscard]] Mat2<Scalar> block_d() const { return d_.cast<Scalar>(); }

  friend SymplecticElement operator*(const SymplecticElement& lhs, const SymplecticElement& rhs);
  /// Compares matrices only; words are provenance.
  friend bool operator==(const SymplecticElement& lhs, const SymplecticElement& rhs);

 private:
  struct Unchecked {};
  SymplecticElement(Unchecked, const IMat2& a, const IMat2& b, const IMat2& c, const IMat2& d,
                    std::string word);

  IMat2 a_;
  IMat2 b_;
  IMat2 c_;
  IMat2 d_;
  std::string word_;
};

/// Checked integer product of 2x2 blocks.
[[nodiscard]] IMat2 checked_product(const IMat2& x, const IMat2& y);

/// Product of `word_length` generators drawn from {J, T_S, R_U}; S has
/// entries in [-2, 2] and U comes from a fixed unimodular set. Throws
/// std::invalid_argument if word_length is outside [0, kMaxWordLength] and
/// std::logic_error if the product fails the relations.
[[nodiscard]] SymplecticElement random_symplectic(std::mt19937_64& rng, int word_length);
[[nodiscard]] SymplecticElement random_symplectic(std::uint64_t seed, int word_length);

}  // namespace g2vir::modular
