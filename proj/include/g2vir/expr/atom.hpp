#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace g2vir::expr {

/// Kinds of formal geometric atoms. Declaration order is the canonical
/// atom order: geometric atoms first, bookkeeping atoms last.
enum class AtomKind : std::uint8_t {
  S,      ///< projective connection s(z_i)
  Om,     ///< bidifferential omega(z_i, z_j), unordered labels
  Nu,     ///< holomorphic differential nu_a(z_i)
  Alpha,  ///< alpha_ab, stands for d/dOmega_ab; unordered indices
  P4,     ///< generalised Weierstrass 2P_4(z_i, z_j), ordered
  X,      ///< Schwarzian term {phi(z_i), z_i}
};

inline constexpr int kMaxLabel = 64;
inline constexpr int kGenus = 2;

/// A single formal atom. Construct through the named factories, which
/// enforce the per-kind invariants (sorted pairs, distinct Om labels,
/// index ranges).
class Atom {
 public:
  static Atom s(int i);
  static Atom om(int i, int j);
  static Atom nu(int a, int i);
  static Atom alpha(int a, int b);
  static Atom p4(int i, int j);
  static Atom x(int i);

  [[nodiscard]] AtomKind kind() const noexcept { return kind_; }
  [[nodiscard]] int first() const noexcept { return first_; }
  [[nodiscard]] int second() const noexcept { return second_; }

  /// Number of point labels this atom carries (0, 1 or 2).
  [[nodiscard]] int label_count() const noexcept;
  /// k-th label (k < label_count()).
  [[nodiscard]] int label(int k) const;
  [[nodiscard]] bool has_label(int label) const noexcept;

  /// Same atom with every label passed through `map`; indices untouched.
  template <typename Map>
  [[nodiscard]] Atom relabeled(Map&& map) const {
    switch (kind_) {
      case AtomKind::S: return s(map(first_));
      case AtomKind::Om: return om(map(first_), map(second_));
      case AtomKind::Nu: return nu(first_, map(second_));
      case AtomKind::Alpha: return *this;
      case AtomKind::P4: return p4(map(first_), map(second_));
      case AtomKind::X: return x(map(first_));
    }
    return *this;
  }

  /// s-expression form, e.g. "(Om 1 2)".
  [[nodiscard]] std::string sexpr() const;

  friend auto operator<=>(const Atom&, const Atom&) = default;

 private:
  constexpr Atom(AtomKind kind, std::int16_t first, std::int16_t second) noexcept
      : kind_(kind), first_(first), second_(second) {}

  AtomKind kind_;
  std::int16_t first_;
  std::int16_t second_;
};

[[nodiscard]] std::string to_string(AtomKind kind);

}  // namespace g2vir::expr
