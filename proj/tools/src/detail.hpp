#pragma once

#include <ostream>
#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

#include "gab/cli/commands.hpp"
#include "gab/experiments.hpp"

namespace gab::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitOutput = 1;
inline constexpr int kExitInvalid = 2;

/// Runs `body`, mapping the library's exception types onto exit codes.
template <class F>
int guarded(std::ostream& err, F&& body) {
    try {
        return body();
    } catch (const OutputError& e) {
        err << "error: " << e.what() << '\n';
        return kExitOutput;
    } catch (const std::invalid_argument& e) {  // ConfigError, InvalidInput
        err << "error: " << e.what() << '\n';
        return kExitInvalid;
    } catch (const nlohmann::json::exception& e) {
        err << "error: malformed config: " << e.what() << '\n';
        return kExitInvalid;
    }
}

SAConfig resolve_annealing(const ExperimentSpec& spec);
JobSchedulingProblem resolve_jobsched(const ExperimentSpec& spec);
double empirical_target(const BatchStats& stats);
std::string label(const ExperimentSpec& spec);

}  // namespace gab::cli
