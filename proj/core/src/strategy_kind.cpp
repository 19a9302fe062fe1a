#include "gab/strategy_kind.hpp"

#include <algorithm>
#include <cctype>

#include "gab/problems.hpp"

namespace gab {

StrategyKind parse_strategy(std::string_view text) {
    std::string lower(text);
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (lower == "none") return StrategyKind::kNone;
    if (lower == "ffbt") return StrategyKind::kFlipFlopTrade;
    if (lower == "a1") return StrategyKind::kA1;
    if (lower == "a2") return StrategyKind::kA2;
    if (lower == "b") return StrategyKind::kB;
    if (lower == "c1") return StrategyKind::kC1;
    if (lower == "c2") return StrategyKind::kC2;
    throw InvalidInput("unknown strategy '" + std::string(text) + "'");
}

std::string to_string(StrategyKind kind) {
    switch (kind) {
        case StrategyKind::kNone: return "none";
        case StrategyKind::kFlipFlopTrade: return "ffbt";
        case StrategyKind::kA1: return "a1";
        case StrategyKind::kA2: return "a2";
        case StrategyKind::kB: return "b";
        case StrategyKind::kC1: return "c1";
        case StrategyKind::kC2: return "c2";
    }
    return "none";
}

std::string display_name(StrategyKind kind) {
    switch (kind) {
        case StrategyKind::kNone: return "GA";
        case StrategyKind::kFlipFlopTrade: return "GAB";
        case StrategyKind::kA1: return "GAB-A1";
        case StrategyKind::kA2: return "GAB-A2";
        case StrategyKind::kB: return "GAB-B";
        case StrategyKind::kC1: return "GAB-C1";
        case StrategyKind::kC2: return "GAB-C2";
    }
    return "GA";
}

bool applies_to_bit_strings(StrategyKind kind) {
    return kind == StrategyKind::kNone || kind == StrategyKind::kFlipFlopTrade;
}

bool applies_to_task_sequences(StrategyKind kind) { return kind != StrategyKind::kFlipFlopTrade; }

}  // namespace gab
