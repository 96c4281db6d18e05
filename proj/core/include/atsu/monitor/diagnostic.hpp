#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace atsu::monitor {

enum class DiagnosticKind {
  ApproachNormalized,
  OutOfOrder,
  SequenceResync,
  ClockSkew,
  CountdownSaturated,
  DecodeError,
};

std::string_view to_string(DiagnosticKind k);

struct Diagnostic {
  DiagnosticKind kind;
  std::string text;

  friend bool operator==(const Diagnostic&, const Diagnostic&) = default;
};

using Diagnostics = std::vector<Diagnostic>;

}  // namespace atsu::monitor
