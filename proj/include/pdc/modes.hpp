#ifndef PDC_MODES_HPP
#define PDC_MODES_HPP

#include <array>
#include <cstdint>
#include <string>

namespace pdc {

// The four cavity modes: two conjugate emission directions (arms) times two
// polarizations. Canonical flat order: Ah=0, Av=1, Bh=2, Bv=3.
enum class Arm : std::uint8_t { A = 0, B = 1 };
enum class Polarization : std::uint8_t { H = 0, V = 1 };

struct ModeIndex {
  Arm arm = Arm::A;
  Polarization pol = Polarization::H;

  constexpr int flat() const {
    return 2 * static_cast<int>(arm) + static_cast<int>(pol);
  }
  constexpr bool operator==(const ModeIndex&) const = default;
};

inline constexpr ModeIndex kModeAh{Arm::A, Polarization::H};
inline constexpr ModeIndex kModeAv{Arm::A, Polarization::V};
inline constexpr ModeIndex kModeBh{Arm::B, Polarization::H};
inline constexpr ModeIndex kModeBv{Arm::B, Polarization::V};

inline constexpr std::array<ModeIndex, 4> kAllModes{kModeAh, kModeAv, kModeBh,
                                                    kModeBv};

inline ModeIndex mode_from_flat(int i) {
  return kAllModes[static_cast<std::size_t>(i)];
}

inline std::string mode_name(ModeIndex m) {
  static const char* names[4] = {"Ah", "Av", "Bh", "Bv"};
  return names[m.flat()];
}

// Which contraction rules apply: quantum operators (canonical commutators)
// or classical stochastic amplitudes (plain complex numbers).
enum class StatKind : std::uint8_t { Quantum, Classical };

inline const char* stat_name(StatKind s) {
  return s == StatKind::Quantum ? "quantum" : "classical";
}

// One factor of an operator string: a_mode or a^+_mode (resp. a conjugated
// amplitude for classical statistics).
struct OperatorFactor {
  ModeIndex mode;
  bool dagger = false;

  constexpr bool operator==(const OperatorFactor&) const = default;
};

inline OperatorFactor annihilator(ModeIndex m) { return {m, false}; }
inline OperatorFactor creator(ModeIndex m) { return {m, true}; }

}  // namespace pdc

#endif  // PDC_MODES_HPP
