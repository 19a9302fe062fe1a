#pragma once

#include <string>
#include <string_view>

namespace gab {

/// Reproduction-hook strategy. kFlipFlopTrade applies to bit strings only;
/// the A/B/C families apply to task sequences only.
enum class StrategyKind { kNone, kFlipFlopTrade, kA1, kA2, kB, kC1, kC2 };

/// Accepts the CLI spellings none, ffbt, a1, a2, b, c1, c2 (case-insensitive).
StrategyKind parse_strategy(std::string_view text);
std::string to_string(StrategyKind kind);

/// Row label used in reports, e.g. "GA", "GAB", "GAB-C1".
std::string display_name(StrategyKind kind);

bool applies_to_bit_strings(StrategyKind kind);
bool applies_to_task_sequences(StrategyKind kind);

}  // namespace gab
