#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "algcut/algcut.hpp"

namespace algcut::app {

/// Malformed scenario file or command-line input (exit code 2).
class ValidationError : public Error {
public:
    using Error::Error;
};

enum class Mode { projective_space, fixed_point_data };

std::string_view to_string(Mode m);

struct ScenarioPoint {
    std::string label;
    std::vector<Weight> tangent_weights;
    /// Coefficient of t^k at position k; empty means the unit class.
    std::vector<Rational> restriction_coeffs;
};

/// One input case. Integers are JSON integers; rationals are strings "p/q".
///
///     {
///       "mode": "projective_space",
///       "weights": [0, 1, 2],
///       "level_q": "1/2",
///       "class_spec": "h",
///       "options": {"order": 5, "dmax": 6}
///     }
///
/// or, with "mode": "fixed_point_data", a "fixed_points" array of
/// {"label", "tangent_weights", "restriction_coeffs"} describing the fixed
/// points above the level.
struct Scenario {
    std::string name;
    Mode mode = Mode::projective_space;
    std::optional<AmbientWeights> weights;
    std::vector<ScenarioPoint> fixed_points;
    Level level;
    std::optional<std::string> class_spec;
    std::optional<int> order;
    std::optional<unsigned> dmax;

    /// Fixed-point-data mode: the points as data with their restrictions.
    std::vector<FixedPointDatum> upper_points() const;
};

/// Throws ValidationError with a message naming `source` on any problem.
Scenario parse_scenario(std::string_view json_text, std::string name);
Scenario load_scenario(const std::filesystem::path& path);

/// Parses a polynomial in h and t, e.g. "2*h^2 - 3/2*h*t + t^2", into the
/// equivariant ring of P(V) for `w`. Throws ValidationError.
EquivariantClass parse_class(std::string_view text, const AmbientWeights& w);

} // namespace algcut::app
