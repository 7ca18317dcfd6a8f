#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace hardcore {

/// One reproduced result. `status` is "verified", "failed" or "inconclusive";
/// the payload holds the underlying checks and always carries a "claim" statement.
struct ReproItem {
    std::string id;
    std::string status;
    nlohmann::json payload;
};

/// Every id, sorted.
std::vector<std::string> repro_ids();

/// Throws std::invalid_argument for unknown ids.
ReproItem run_repro(const std::string& id);

/// Runs every item concurrently and returns them sorted by id.
std::vector<ReproItem> run_all_repro();

nlohmann::json to_json(const ReproItem& item);

/// 0 when all verified, 2 if any failed, otherwise 3.
int repro_exit_code(const std::vector<ReproItem>& items);

}  // namespace hardcore
