// Serialization of classification reports and check tables: a stable JSON
// payload (fixed key order, no timestamps), the CSV row format, and plain
// text for terminals.
#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "hurwitz/classify.hpp"

namespace hurwitz {

nlohmann::ordered_json report_to_json(const OrbitReport& r);
std::string report_to_csv(const OrbitReport& r);
std::string report_to_text(const OrbitReport& r);

nlohmann::ordered_json checks_to_json(const std::vector<CheckResult>& cs);
std::string checks_to_csv(const std::vector<CheckResult>& cs);
std::string checks_to_text(const std::vector<CheckResult>& cs);

}  // namespace hurwitz
