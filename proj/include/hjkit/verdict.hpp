#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace hjkit {

// Budgeted searches return Proven / Refuted(witness) / Unknown(budget spent).
// A witness is always checkable by an independent code path.
enum class VerdictKind { Proven, Refuted, Unknown };

inline const char* to_string(VerdictKind k) {
  switch (k) {
    case VerdictKind::Proven: return "proven";
    case VerdictKind::Refuted: return "refuted";
    default: return "unknown";
  }
}

template <typename W>
struct Verdict {
  VerdictKind kind = VerdictKind::Unknown;
  std::optional<W> witness;  // set when kind == Refuted
  uint64_t budget_spent = 0;

  static Verdict proven(uint64_t spent = 0) { return {VerdictKind::Proven, std::nullopt, spent}; }
  static Verdict refuted(W w, uint64_t spent = 0) {
    return {VerdictKind::Refuted, std::move(w), spent};
  }
  static Verdict unknown(uint64_t spent = 0) { return {VerdictKind::Unknown, std::nullopt, spent}; }

  bool is_proven() const { return kind == VerdictKind::Proven; }
  bool is_refuted() const { return kind == VerdictKind::Refuted; }
  bool is_unknown() const { return kind == VerdictKind::Unknown; }
};

}  // namespace hjkit
