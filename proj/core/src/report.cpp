#include "octobil/report.hpp"

#include <sstream>

namespace octobil {

std::string to_string(VerifyMode mode) {
    switch (mode) {
        case VerifyMode::Fuzz: return "fuzz";
        case VerifyMode::RankLeft: return "rank_left";
        case VerifyMode::RankRight: return "rank_right";
        case VerifyMode::Witness: return "witness";
        case VerifyMode::ImageAvoid: return "image_avoid";
        case VerifyMode::Margin: return "margin";
    }
    return "unknown";
}

nlohmann::ordered_json rational_vector_json(const std::vector<Rational>& v) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& c : v) arr.push_back(c.str());
    return arr;
}

nlohmann::ordered_json VerificationReport::to_json() const {
    nlohmann::ordered_json j;
    j["map"] = map_id;
    j["mode"] = to_string(mode);
    j["trials"] = trials;
    j["seed"] = seed;
    j["bound"] = bound;
    j["pass"] = passed();
    j["failures"] = nlohmann::ordered_json::array();
    for (const auto& w : failures) {
        nlohmann::ordered_json f;
        f["trial"] = w.trial;
        f["x"] = rational_vector_json(w.x);
        f["y"] = rational_vector_json(w.y);
        j["failures"].push_back(std::move(f));
    }
    if (min_rank_observed) j["min_rank_observed"] = *min_rank_observed;
    if (expected_rank) j["expected_rank"] = *expected_rank;
    if (margin_value) j["margin_value"] = *margin_value;
    if (!detail.empty()) j["detail"] = detail;
    return j;
}

std::string VerificationReport::text() const {
    std::ostringstream os;
    os << to_string(mode) << " " << map_id << ": " << (passed() ? "pass" : "FAIL") << " (trials="
       << trials << ", seed=" << seed << ", bound=" << bound;
    if (min_rank_observed) os << ", min_rank=" << *min_rank_observed << "/" << expected_rank.value_or(0);
    if (margin_value) {
        os.precision(17);
        os << ", margin=" << *margin_value;
    }
    os << ")";
    if (!failures.empty()) os << ", " << failures.size() << " failure(s)";
    if (!detail.empty()) os << "\n  " << detail;
    os << "\n";
    return os.str();
}

}  // namespace octobil
