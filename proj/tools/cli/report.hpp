#pragma once

// JSON and table renderings of library results, shared by the CLI commands.

#include <string>
#include <vector>

#include <json.hpp>

#include "rbcm/classify.hpp"
#include "rbcm/factorlift.hpp"
#include "rbcm/ideals.hpp"

namespace rbcm::cli {

using Json = nlohmann::ordered_json;

Json to_json(const Poly& f);
Json to_json(const LabeledFactor& f);
Json to_json(const IdealPresentation& q);
Json to_json(const AbelianType& g);
Json to_json(const CayleyMapRecord& m);
Json to_json(const FamilyParams& p);
Json to_json(const FamilyMember& m);
Json to_json(const CrossCheckReport& r);
Json to_json(const DiscrepancyEntry& e);

/// Fixed-width text table; the first row is the header.
std::string render_table(const std::vector<std::vector<std::string>>& rows);

}  // namespace rbcm::cli
