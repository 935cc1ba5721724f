#pragma once

#include <string>

#include <json.hpp>

#include "rcf/bounds.hpp"
#include "rcf/language.hpp"
#include "rcf/spectrum.hpp"
#include "rcf/version.hpp"

namespace rcf {

inline const char* norm_name(MatrixNorm n) {
    switch (n) {
        case MatrixNorm::kInduced: return "induced";
        case MatrixNorm::kColumn: return "column";
        default: return "entrywise";
    }
}

inline MatrixNorm norm_from_name(const std::string& s) {
    if (s == "induced") return MatrixNorm::kInduced;
    if (s == "column") return MatrixNorm::kColumn;
    if (s == "entrywise") return MatrixNorm::kEntrywise;
    throw std::invalid_argument("rcf: unknown norm name '" + s + "'");
}

inline nlohmann::json to_json(const BoundReport& r) {
    return {{"n", r.n},
            {"l1", r.l1},
            {"l2", r.l2},
            {"total", r.total},
            {"accumulated_error", r.accumulated_error},
            {"word_count", r.word_count},
            {"wall_time", r.wall_time_seconds},
            {"norm", norm_name(r.norm)},
            {"threads", r.threads},
            {"sorted", r.sorted}};
}

inline nlohmann::json to_json(const SpectrumEstimate& e) {
    return {{"lambda1", e.lambda1},
            {"lambda2", e.lambda2},
            {"lambda3", e.lambda3},
            {"stderr", e.stderr_lambda2},
            {"iterations", e.iterations},
            {"seed", e.seed}};
}

inline nlohmann::json to_json(const BalanceReport& r) {
    nlohmann::json table = nlohmann::json::array();
    for (const auto& row : r.factor_balance)
        table.push_back({{"factor", row.factor}, {"max_discrepancy", row.max_discrepancy}});
    return {{"letter_balance_constant", r.letter_balance_constant},
            {"projection_sup", r.projection_sup},
            {"frequency_vector", {r.frequency_vector[0], r.frequency_vector[1], r.frequency_vector[2]}},
            {"cone_diameter", r.cone_diameter},
            {"depth", r.depth},
            {"cap", r.cap},
            {"factor_count", r.factor_count},
            {"factor_balance", std::move(table)}};
}

}  // namespace rcf
