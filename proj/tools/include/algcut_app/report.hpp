#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "algcut_app/scenario.hpp"

namespace algcut::app {

enum class Command { stability, inventory, kalkman, euler, todd, oracle, verify };

/// Throws ValidationError for an unknown name.
Command parse_command(std::string_view name);
std::string_view to_string(Command c);

enum class Format { text, json };

struct RunOptions {
    std::optional<int> order;     // series working order override
    std::optional<unsigned> dmax; // oracle degree cap
    Format format = Format::text;
};

/// Ordered "key = value" lines.
class Report {
public:
    void add(std::string key, std::string value) { lines_.emplace_back(std::move(key), std::move(value)); }
    void add(std::string key, const Rational& value) { add(std::move(key), value.to_string()); }
    void add(std::string key, bool value) { add(std::move(key), std::string(value ? "true" : "false")); }

    const std::vector<std::pair<std::string, std::string>>& lines() const { return lines_; }
    /// True when a checked property failed (exit code 3).
    bool property_failure = false;

    std::string render(Format f) const;

private:
    std::vector<std::pair<std::string, std::string>> lines_;
};

inline constexpr const char* orbifold_label = "orbifold (non-free action; rational-coefficient value)";

/// Runs one scenario command. `verify` is not handled here.
/// Throws ValidationError / PreconditionError (exit 2) and PrecisionError
/// once retries are exhausted (exit 4).
Report run_command(Command cmd, const Scenario& sc, const RunOptions& opts);

/// Exit code for an exception escaping run_command or the verifier.
int exit_code_for(const std::exception& e);

} // namespace algcut::app
