#include "gonia/serialize.hpp"

#include <sstream>

namespace gonia {

nlohmann::json json_int(const Int& v) {
    if (v.fits_slong_p()) return static_cast<std::int64_t>(v.get_si());
    return v.get_str();
}

namespace {

nlohmann::json json_int_list(const QuotientSeq& seq) {
    nlohmann::json arr = nlohmann::json::array();
    for (const Int& q : seq) arr.push_back(json_int(q));
    return arr;
}

}  // namespace

nlohmann::json to_json(const AnthOutcome& outcome) {
    const char* kind = outcome.is_finite() ? "finite"
                       : outcome.is_periodic() ? "periodic"
                                               : "truncated";
    nlohmann::json j;
    j["kind"] = kind;
    j["quotients"] = json_int_list(outcome.quotients);
    j["period"] = json_int_list(outcome.period);
    j["gcd"] = outcome.gcd ? nlohmann::json(to_string(*outcome.gcd)) : nlohmann::json(nullptr);
    return j;
}

nlohmann::json to_json(const SideDiameterRow& row) {
    nlohmann::json j;
    j["n"] = row.n;
    j["p"] = json_int(row.p);
    j["q"] = json_int(row.q);
    j["pell_residual"] = json_int(row.residual);
    j["angle_class"] = to_string(row.angle_class);
    j["apex_angle_rad"] = row.apex_rad;
    j["gap_rad"] = row.gap_rad;
    return j;
}

nlohmann::json to_json(const std::vector<SideDiameterRow>& rows) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : rows) arr.push_back(to_json(r));
    return arr;
}

std::string to_csv(const std::vector<SideDiameterRow>& rows) {
    std::ostringstream out;
    out << "n,p,q,pell_residual,angle_class,apex_angle_rad,gap_rad\n";
    out.precision(17);
    for (const auto& r : rows) {
        out << r.n << ',' << r.p.get_str() << ',' << r.q.get_str() << ',' << r.residual.get_str()
            << ',' << to_string(r.angle_class) << ',' << r.apex_rad << ',' << r.gap_rad << '\n';
    }
    return out.str();
}

nlohmann::json excess_result_json(const std::string& method, double excess,
                                  std::optional<double> stderr_value, double clamp_used) {
    nlohmann::json j;
    j["method"] = method;
    j["excess_sr"] = excess;
    j["stderr"] = stderr_value ? nlohmann::json(*stderr_value) : nlohmann::json(nullptr);
    j["clamp_budget_used"] = clamp_used;
    return j;
}

nlohmann::json to_json(const SolidAngleRow& row) {
    nlohmann::json j;
    j["solid"] = row.name;
    j["n"] = row.n;
    j["alpha"] = row.alpha;
    j["solid_angle_sr"] = row.solid_angle_sr;
    j["fraction_of_sphere"] = row.fraction_of_sphere;
    return j;
}

nlohmann::json to_json(const std::vector<SolidAngleRow>& rows) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : rows) arr.push_back(to_json(r));
    return arr;
}

std::string to_csv(const std::vector<SolidAngleRow>& rows) {
    std::ostringstream out;
    out << "solid,n,alpha,solid_angle_sr,fraction_of_sphere\n";
    out.precision(17);
    for (const auto& r : rows)
        out << r.name << ',' << r.n << ',' << r.alpha << ',' << r.solid_angle_sr << ','
            << r.fraction_of_sphere << '\n';
    return out.str();
}

}  // namespace gonia
