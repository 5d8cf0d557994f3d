#include "algcut_app/report.hpp"

#include "json.hpp"

namespace algcut::app {

namespace {

std::string join_weights(std::span<const Weight> ws)
{
    std::string out = "(";
    for (std::size_t i = 0; i < ws.size(); ++i) {
        if (i != 0)
            out += ", ";
        out += std::to_string(ws[i]);
    }
    return out + ")";
}

std::string weight_set(const std::set<Weight>& s)
{
    std::string out = "{";
    bool first = true;
    for (Weight a : s) {
        if (!first)
            out += ",";
        first = false;
        out += std::to_string(a);
    }
    return out + "}";
}

void header(Report& r, Command cmd, const Scenario& sc)
{
    r.add("scenario", sc.name);
    r.add("command", std::string(to_string(cmd)));
    r.add("mode", std::string(to_string(sc.mode)));
    if (sc.weights)
        r.add("weights", sc.weights->to_string());
    r.add("level", sc.level.to_string());
}

const AmbientWeights& require_weights(const Scenario& sc, Command cmd)
{
    if (sc.mode != Mode::projective_space || !sc.weights)
        throw ValidationError(sc.name + ": command '" + std::string(to_string(cmd)) +
                              "' needs a projective_space scenario");
    return *sc.weights;
}

void require_regular(const Scenario& sc)
{
    if (sc.weights && !is_regular_level(*sc.weights, sc.level))
        throw ValidationError(sc.name + ": level " + sc.level.to_string() +
                              " is an ambient weight (not a regular level)");
}

struct UpperData {
    std::vector<FixedPointDatum> points;
    bool reduced_present = true;
    std::optional<bool> free_action; // unknown in fixed-point-data mode
};

UpperData upper_data(const Scenario& sc)
{
    UpperData d;
    if (sc.mode == Mode::fixed_point_data) {
        d.points = sc.upper_points();
        return d;
    }
    require_regular(sc);
    const auto inv = cut_fixed_inventory(*sc.weights, sc.level);
    d.points = inv.upper_fixed;
    d.reduced_present = inv.reduced_present;
    d.free_action = is_free_on_stable(*sc.weights, sc.level);
    return d;
}

void quotient_labels(Report& r, const UpperData& d)
{
    if (d.free_action)
        r.add("free_action", *d.free_action);
    if (d.free_action && !*d.free_action)
        r.add("warning", std::string(orbifold_label));
    if (!d.reduced_present)
        r.add("warning", std::string("empty quotient (no stable points at this level)"));
}

LaurentSeries::Exponent working_order(const Scenario& sc, const RunOptions& opts,
                                      std::span<const FixedPointDatum> pts)
{
    if (opts.order)
        return *opts.order;
    if (sc.order)
        return *sc.order;
    return default_todd_order(pts);
}

void run_stability(Report& r, const Scenario& sc)
{
    const auto& w = require_weights(sc, Command::stability);
    require_regular(sc);
    r.add("regular_level", true);
    std::size_t stable = 0;
    for (const auto& p : all_patterns(w.size())) {
        const bool st = is_stable(p, w, sc.level);
        const bool up = is_in_upper(p, w, sc.level);
        stable += st ? 1 : 0;
        const std::string cls = st ? "stable" : (up ? "upper" : "lower");
        r.add("pattern " + p.to_string(), cls + "; weights " + weight_set(support_weights(p, w)) +
                                              "; stabilizer " + stabilizer_order(p, w).to_string());
    }
    r.add("stable_patterns", std::to_string(stable));
    const auto witness = non_free_witness(w, sc.level);
    r.add("free_on_stable", !witness.has_value());
    if (witness)
        r.add("non_free_witness", witness->to_string());
}

void run_inventory(Report& r, const Scenario& sc)
{
    const auto d = upper_data(sc);
    for (const auto& p : d.points)
        r.add("upper " + p.label, "tangent " + join_weights(p.tangent_weights));
    r.add("upper_count", std::to_string(d.points.size()));
    r.add("reduced_present", d.reduced_present);
    r.add("reduced_normal_weight", std::string("1"));
}

void run_kalkman(Report& r, const Scenario& sc)
{
    UpperData d = upper_data(sc);
    if (sc.mode == Mode::projective_space) {
        if (!sc.class_spec)
            throw ValidationError(sc.name + ": kalkman in projective_space mode needs 'class_spec'");
        const auto c = parse_class(*sc.class_spec, *sc.weights);
        r.add("class", c.to_string());
        const auto res = kalkman_from_class(*sc.weights, sc.level, c);
        quotient_labels(r, d);
        for (auto& p : d.points) {
            const auto idx = *p.ambient_index;
            p = FixedPointDatum::with_poly(p.label, p.tangent_weights, restrict_at_fixed_point(c, idx));
            r.add("term " + p.label, -residue(localized_term(p)));
        }
        r.add("kalkman", res.value);
        return;
    }
    quotient_labels(r, d);
    for (const auto& p : d.points)
        r.add("term " + p.label, -residue(localized_term(p)));
    r.add("kalkman", kalkman_integral(d.points));
}

void run_euler(Report& r, const Scenario& sc)
{
    const auto d = upper_data(sc);
    quotient_labels(r, d);
    r.add("chi", euler_characteristic(d.points));
}

void run_todd(Report& r, const Scenario& sc, const RunOptions& opts)
{
    const auto d = upper_data(sc);
    quotient_labels(r, d);
    const auto order = working_order(sc, opts, d.points);
    r.add("todd", todd_genus_with_retry(d.points, order));
    const auto cmp = todd_closed_form_comparator(d.points);
    r.add("closed_form", cmp.closed_form_value);
    r.add("closed_form_agrees", cmp.series_value == cmp.closed_form_value);
}

void run_oracle(Report& r, const Scenario& sc, const RunOptions& opts)
{
    const auto& w0 = require_weights(sc, Command::oracle);
    require_regular(sc);
    const auto w = reweight(w0, sc.level);
    r.add("reweighted", w.to_string());
    const std::optional<unsigned> cap = opts.dmax ? opts.dmax : sc.dmax;
    const unsigned vanish_max = cap.value_or(4);

    std::size_t agree = 0;
    std::size_t total = 0;
    std::size_t vanish_ok = 0;
    std::size_t vanish_total = 0;
    for (const auto& p : all_patterns(w.size())) {
        const unsigned d = cap.value_or(exact_degree_bound(p, w));
        const bool monomial = invariant_monomial_exists(p, w, d);
        const bool stable = is_stable(p, w, Level(0, 1));
        ++total;
        agree += (monomial == stable) ? 1 : 0;
        r.add("oracle " + p.to_string(), std::string(monomial ? "invariant" : "none") + " (d<=" +
                                              std::to_string(d) + "); criterion " +
                                              (stable ? "stable" : "unstable") +
                                              (monomial == stable ? "" : "; MISMATCH"));

        const auto pi = support_weights(p, w);
        const bool all_pos = *pi.begin() > 0;
        const bool all_neg = *pi.rbegin() < 0;
        for (int z = 0; z < 2; ++z) {
            const bool z_is_zero = (z == 0);
            const bool applicable = z_is_zero ? (all_pos || all_neg) : all_neg;
            if (!applicable)
                continue;
            bool ok = true;
            for (unsigned deg = 1; deg <= vanish_max; ++deg)
                ok = ok && a_invariant_sections_vanish(p, w, z_is_zero, deg);
            ++vanish_total;
            vanish_ok += ok ? 1 : 0;
            r.add(std::string(z_is_zero ? "vanish_ii' " : "vanish_iii' ") + p.to_string(),
                  std::string(ok ? "vanishes" : "NONVANISHING") + " (d<=" + std::to_string(vanish_max) + ")");
        }
    }
    r.add("oracle_agreement", std::to_string(agree) + "/" + std::to_string(total));
    r.add("vanishing_checks", std::to_string(vanish_ok) + "/" + std::to_string(vanish_total));
    r.property_failure = agree != total || vanish_ok != vanish_total;
}

} // namespace

Command parse_command(std::string_view name)
{
    static constexpr std::pair<std::string_view, Command> table[] = {
        {"stability", Command::stability}, {"inventory", Command::inventory}, {"kalkman", Command::kalkman},
        {"euler", Command::euler},         {"todd", Command::todd},           {"oracle", Command::oracle},
        {"verify", Command::verify},
    };
    for (const auto& [n, c] : table)
        if (n == name)
            return c;
    throw ValidationError("unknown command '" + std::string(name) + "'");
}

std::string_view to_string(Command c)
{
    switch (c) {
    case Command::stability: return "stability";
    case Command::inventory: return "inventory";
    case Command::kalkman: return "kalkman";
    case Command::euler: return "euler";
    case Command::todd: return "todd";
    case Command::oracle: return "oracle";
    case Command::verify: return "verify";
    }
    return "?";
}

std::string Report::render(Format f) const
{
    if (f == Format::json) {
        nlohmann::ordered_json j = nlohmann::ordered_json::object();
        for (const auto& [k, v] : lines_) {
            // Repeated keys (e.g. two warnings) become arrays.
            if (!j.contains(k))
                j[k] = v;
            else if (j[k].is_array())
                j[k].push_back(v);
            else
                j[k] = nlohmann::ordered_json::array({j[k], v});
        }
        return j.dump(2) + "\n";
    }
    std::string out;
    for (const auto& [k, v] : lines_)
        out += k + " = " + v + "\n";
    return out;
}

Report run_command(Command cmd, const Scenario& sc, const RunOptions& opts)
{
    Report r;
    header(r, cmd, sc);
    switch (cmd) {
    case Command::stability: run_stability(r, sc); break;
    case Command::inventory: run_inventory(r, sc); break;
    case Command::kalkman: run_kalkman(r, sc); break;
    case Command::euler: run_euler(r, sc); break;
    case Command::todd: run_todd(r, sc, opts); break;
    case Command::oracle: run_oracle(r, sc, opts); break;
    case Command::verify: throw ValidationError("verify is not a per-scenario command");
    }
    return r;
}

int exit_code_for(const std::exception& e)
{
    if (dynamic_cast<const PrecisionError*>(&e))
        return 4;
    if (dynamic_cast<const ValidationError*>(&e) || dynamic_cast<const PreconditionError*>(&e) ||
        dynamic_cast<const std::invalid_argument*>(&e))
        return 2;
    return 1;
}

} // namespace algcut::app
