#pragma once

#include <array>
#include <cassert>
#include <cstdint>
#include <functional>
#include <initializer_list>

namespace icis {

/// Number of ambient variables x, y, z, w.
inline constexpr int kAmbientVars = 4;
/// Exponent slots available to internal routines (aux variables live in 4..6).
inline constexpr int kMaxVars = 7;
/// Slot reserved for the component index of module elements.
inline constexpr int kComponentSlot = 7;

/// Index of the first auxiliary variable used for saturation / elimination.
inline constexpr int kAuxVar = 4;

/// Exponent vector packed into one machine word, eight bits per slot.
///
/// Slots 0..3 are x, y, z, w; slots 4..6 are auxiliary variables used by
/// elimination; slot 7 holds the component of a module element and never
/// contributes to the degree.  Exponents must stay below 128 so that the
/// divisibility test below is exact.
class Monomial {
 public:
  constexpr Monomial() = default;
  constexpr explicit Monomial(std::uint64_t bits) : bits_(bits) {}
  Monomial(std::initializer_list<int> exps) {
    int i = 0;
    for (int e : exps) set(i++, e);
  }

  static Monomial variable(int var, int power = 1) {
    Monomial m;
    m.set(var, power);
    return m;
  }

  constexpr int operator[](int slot) const { return static_cast<int>((bits_ >> (8 * slot)) & 0xffu); }

  void set(int slot, int e) {
    assert(e >= 0 && e < 128);
    bits_ &= ~(std::uint64_t{0xff} << (8 * slot));
    bits_ |= static_cast<std::uint64_t>(e) << (8 * slot);
  }

  constexpr std::uint64_t bits() const { return bits_; }

  /// Degree over the variable slots (component excluded).
  constexpr int degree() const { return static_cast<int>(((bits_ & kVarMask) * kOnes) >> 56); }
  /// Degree restricted to the slots selected by `mask` (one bit per slot).
  int degree_in(unsigned mask) const {
    int d = 0;
    for (int i = 0; i < kMaxVars; ++i)
      if (mask & (1u << i)) d += (*this)[i];
    return d;
  }

  constexpr int component() const { return (*this)[kComponentSlot]; }
  Monomial with_component(int c) const {
    Monomial m = *this;
    m.set(kComponentSlot, c);
    return m;
  }
  /// The same monomial with the component slot cleared.
  constexpr Monomial plain() const { return Monomial(bits_ & kVarMask); }

  /// True if this divides `other` (components must agree).
  constexpr bool divides(Monomial other) const {
    if (component() != other.component()) return false;
    const std::uint64_t a = bits_ & kVarMask;
    const std::uint64_t b = other.bits_ & kVarMask;
    return (((b | kHigh) - a) & kHigh) == kHigh;
  }

  /// Product; the component of a module term is carried by at most one factor.
  constexpr Monomial operator*(Monomial o) const { return Monomial(bits_ + o.bits_); }
  /// Quotient; requires `o.divides(*this)` up to component.
  constexpr Monomial operator/(Monomial o) const { return Monomial((bits_ & kVarMask) - (o.bits_ & kVarMask)); }

  Monomial lcm(Monomial o) const {
    Monomial r;
    for (int i = 0; i < kMaxVars; ++i) {
      int a = (*this)[i], b = o[i];
      r.set(i, a > b ? a : b);
    }
    r.set(kComponentSlot, component());
    return r;
  }

  bool coprime(Monomial o) const {
    for (int i = 0; i < kMaxVars; ++i)
      if ((*this)[i] != 0 && o[i] != 0) return false;
    return true;
  }

  /// Bit set of the variables occurring with positive exponent.
  unsigned support() const {
    unsigned s = 0;
    for (int i = 0; i < kMaxVars; ++i)
      if ((*this)[i] != 0) s |= 1u << i;
    return s;
  }

  constexpr bool is_one() const { return (bits_ & kVarMask) == 0; }

  friend constexpr bool operator==(Monomial a, Monomial b) { return a.bits_ == b.bits_; }
  friend constexpr bool operator!=(Monomial a, Monomial b) { return a.bits_ != b.bits_; }

 private:
  static constexpr std::uint64_t kVarMask = 0x00ffffffffffffffull;
  static constexpr std::uint64_t kHigh = 0x0080808080808080ull;
  static constexpr std::uint64_t kOnes = 0x0101010101010101ull;
  std::uint64_t bits_ = 0;
};

}  // namespace icis

template <>
struct std::hash<icis::Monomial> {
  std::size_t operator()(icis::Monomial m) const noexcept {
    std::uint64_t h = m.bits() * 0x9e3779b97f4a7c15ull;
    return static_cast<std::size_t>(h ^ (h >> 29));
  }
};
