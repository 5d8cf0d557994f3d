#include "algcut_app/scenario.hpp"

#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace algcut::app {

using nlohmann::json;

std::string_view to_string(Mode m)
{
    return m == Mode::projective_space ? "projective_space" : "fixed_point_data";
}

namespace {

[[noreturn]] void fail(const std::string& source, const std::string& msg)
{
    throw ValidationError(source + ": " + msg);
}

std::int64_t as_integer(const json& j, const std::string& source, const std::string& what)
{
    if (!j.is_number_integer())
        fail(source, what + " must be an integer");
    return j.get<std::int64_t>();
}

Rational as_rational(const json& j, const std::string& source, const std::string& what)
{
    if (!j.is_string())
        fail(source, what + " must be a rational string \"p/q\"");
    try {
        return Rational::parse(j.get<std::string>());
    } catch (const std::exception& e) {
        fail(source, what + ": " + e.what());
    }
}

std::vector<Weight> as_weights(const json& j, const std::string& source, const std::string& what)
{
    if (!j.is_array() || j.empty())
        fail(source, what + " must be a nonempty array of integers");
    std::vector<Weight> out;
    for (const auto& v : j)
        out.push_back(as_integer(v, source, what));
    return out;
}

void reject_unknown(const json& obj, const std::set<std::string>& allowed, const std::string& source,
                    const std::string& where)
{
    for (const auto& [key, value] : obj.items())
        if (!allowed.contains(key))
            fail(source, "unknown field '" + key + "' in " + where);
}

} // namespace

std::vector<FixedPointDatum> Scenario::upper_points() const
{
    std::vector<FixedPointDatum> out;
    for (const auto& p : fixed_points) {
        Poly r;
        if (p.restriction_coeffs.empty())
            r = Poly(1);
        for (std::size_t k = 0; k < p.restriction_coeffs.size(); ++k)
            r += Poly::monomial(p.restriction_coeffs[k], static_cast<Poly::Exponent>(k));
        out.push_back(FixedPointDatum::with_poly(p.label, p.tangent_weights, r));
    }
    return out;
}

Scenario parse_scenario(std::string_view json_text, std::string name)
{
    const std::string& source = name;
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        fail(source, std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object())
        fail(source, "top level must be an object");
    reject_unknown(doc,
                   {"name", "description", "mode", "weights", "fixed_points", "level_q", "class_spec",
                    "options"},
                   source, "scenario");

    Scenario sc;
    sc.name = doc.contains("name") && doc["name"].is_string() ? doc["name"].get<std::string>() : name;

    if (!doc.contains("mode") || !doc["mode"].is_string())
        fail(source, "missing 'mode' (projective_space | fixed_point_data)");
    const auto mode = doc["mode"].get<std::string>();
    if (mode == "projective_space")
        sc.mode = Mode::projective_space;
    else if (mode == "fixed_point_data")
        sc.mode = Mode::fixed_point_data;
    else
        fail(source, "unknown mode '" + mode + "'");

    if (!doc.contains("level_q"))
        fail(source, "missing 'level_q'");
    sc.level = Level(as_rational(doc["level_q"], source, "level_q"));

    if (sc.mode == Mode::projective_space) {
        if (!doc.contains("weights"))
            fail(source, "projective_space mode requires 'weights'");
        if (doc.contains("fixed_points"))
            fail(source, "'fixed_points' is only valid in fixed_point_data mode");
        sc.weights = AmbientWeights(as_weights(doc["weights"], source, "weights"));
        if (!is_regular_level(*sc.weights, sc.level))
            fail(source, "level_q " + sc.level.value().to_string() + " is an ambient weight");
        if (doc.contains("class_spec")) {
            if (!doc["class_spec"].is_string())
                fail(source, "class_spec must be a string");
            sc.class_spec = doc["class_spec"].get<std::string>();
            parse_class(*sc.class_spec, *sc.weights); // validate early
        }
    } else {
        if (doc.contains("weights"))
            fail(source, "'weights' is only valid in projective_space mode");
        if (doc.contains("class_spec"))
            fail(source, "'class_spec' is only valid in projective_space mode");
        if (!doc.contains("fixed_points") || !doc["fixed_points"].is_array())
            fail(source, "fixed_point_data mode requires a 'fixed_points' array");
        std::size_t dim = 0;
        for (const auto& fp : doc["fixed_points"]) {
            if (!fp.is_object())
                fail(source, "each fixed point must be an object");
            reject_unknown(fp, {"label", "tangent_weights", "restriction_coeffs"}, source, "fixed point");
            ScenarioPoint p;
            p.label = fp.contains("label") && fp["label"].is_string()
                          ? fp["label"].get<std::string>()
                          : "p" + std::to_string(sc.fixed_points.size() + 1);
            if (!fp.contains("tangent_weights"))
                fail(source, "fixed point '" + p.label + "' needs tangent_weights");
            p.tangent_weights = as_weights(fp["tangent_weights"], source, "tangent_weights");
            for (Weight a : p.tangent_weights)
                if (a == 0)
                    fail(source, "fixed point '" + p.label + "' has a zero tangent weight");
            if (dim == 0)
                dim = p.tangent_weights.size();
            else if (dim != p.tangent_weights.size())
                fail(source, "fixed point '" + p.label + "' has a different number of tangent weights");
            if (fp.contains("restriction_coeffs")) {
                if (!fp["restriction_coeffs"].is_array())
                    fail(source, "restriction_coeffs must be an array of rational strings");
                for (const auto& c : fp["restriction_coeffs"])
                    p.restriction_coeffs.push_back(as_rational(c, source, "restriction_coeffs"));
            }
            sc.fixed_points.push_back(std::move(p));
        }
    }

    if (doc.contains("options")) {
        const auto& opt = doc["options"];
        if (!opt.is_object())
            fail(source, "options must be an object");
        reject_unknown(opt, {"order", "dmax"}, source, "options");
        if (opt.contains("order")) {
            const auto v = as_integer(opt["order"], source, "options.order");
            if (v < 1)
                fail(source, "options.order must be positive");
            sc.order = static_cast<int>(v);
        }
        if (opt.contains("dmax")) {
            const auto v = as_integer(opt["dmax"], source, "options.dmax");
            if (v < 1)
                fail(source, "options.dmax must be positive");
            sc.dmax = static_cast<unsigned>(v);
        }
    }
    return sc;
}

Scenario load_scenario(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw ValidationError(path.string() + ": cannot open scenario file");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_scenario(buf.str(), path.stem().string());
}

// ---------------------------------------------------------------------------
// class expressions

namespace {

class ClassParser {
public:
    ClassParser(std::string_view text, const AmbientWeights& w) : text_(text), w_(w) {}

    EquivariantClass parse()
    {
        auto c = expr();
        skip_space();
        if (pos_ != text_.size())
            error("unexpected '" + std::string(1, text_[pos_]) + "'");
        return c;
    }

private:
    [[noreturn]] void error(const std::string& msg) const
    {
        throw ValidationError("class_spec \"" + std::string(text_) + "\" at column " +
                              std::to_string(pos_ + 1) + ": " + msg);
    }

    void skip_space()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool accept(char c)
    {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    EquivariantClass expr()
    {
        EquivariantClass acc(w_);
        bool negate = false;
        if (accept('-'))
            negate = true;
        else
            accept('+');
        acc = term();
        if (negate)
            acc = -acc;
        for (;;) {
            if (accept('+'))
                acc += term();
            else if (accept('-'))
                acc -= term();
            else
                return acc;
        }
    }

    EquivariantClass term()
    {
        EquivariantClass acc = power();
        for (;;) {
            if (accept('*')) {
                acc *= power();
            } else if (accept('/')) {
                EquivariantClass d = power();
                if (d.is_zero())
                    error("division by zero");
                if (d.terms().size() != 1 || d.terms().begin()->first != EquivariantClass::Monomial{0, 0})
                    error("only division by a nonzero constant is supported");
                acc *= d.terms().begin()->second.inverse();
            } else {
                return acc;
            }
        }
    }

    EquivariantClass power()
    {
        EquivariantClass base = atom();
        if (accept('^')) {
            skip_space();
            const auto n = integer();
            if (!n.fits_uint_p() || n > 64)
                error("exponent must be an integer in [0, 64]");
            return base.pow(static_cast<unsigned>(n.get_ui()));
        }
        return base;
    }

    mpz_class integer()
    {
        skip_space();
        const auto start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (start == pos_)
            error("expected an integer");
        return mpz_class(std::string(text_.substr(start, pos_ - start)), 10);
    }

    EquivariantClass atom()
    {
        skip_space();
        if (pos_ >= text_.size())
            error("unexpected end of expression");
        const char c = text_[pos_];
        if (c == 'h' || c == 't') {
            ++pos_;
            return c == 'h' ? EquivariantClass::h(w_) : EquivariantClass::t(w_);
        }
        if (c == '(') {
            ++pos_;
            auto inner = expr();
            if (!accept(')'))
                error("expected ')'");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c)))
            return EquivariantClass(w_, Rational(integer(), mpz_class(1)));
        if (c == '-') {
            ++pos_;
            return -atom();
        }
        error("unexpected '" + std::string(1, c) + "'");
    }

    std::string_view text_;
    const AmbientWeights& w_;
    std::size_t pos_ = 0;
};

} // namespace

EquivariantClass parse_class(std::string_view text, const AmbientWeights& w)
{
    return ClassParser(text, w).parse();
}

} // namespace algcut::app
