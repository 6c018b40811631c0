#include "ainfty/report.hpp"

#include <json.hpp>

namespace ainfty {

bool Report::passed() const {
  for (const auto& r : results)
    if (!r.passed) return false;
  return true;
}

std::string Report::to_json() const {
  nlohmann::ordered_json doc;
  doc["check"] = check;
  doc["status"] = passed() ? "pass" : "fail";
  nlohmann::ordered_json witnesses = nlohmann::ordered_json::array();
  for (const auto& r : results)
    if (!r.passed)
      for (const auto& w : r.witnesses) witnesses.push_back(r.name + ": " + w);
  doc["witnesses"] = witnesses;
  nlohmann::ordered_json results_json = nlohmann::ordered_json::array();
  for (const auto& r : results) {
    nlohmann::ordered_json item;
    item["name"] = r.name;
    item["status"] = r.passed ? "pass" : "fail";
    item["witnesses"] = r.witnesses;
    if (!r.detail.empty()) item["detail"] = r.detail;
    results_json.push_back(item);
  }
  doc["results"] = results_json;
  return doc.dump(2) + "\n";
}

std::string Report::to_text() const {
  std::string out;
  for (const auto& r : results) {
    out += r.passed ? "PASS " : "FAIL ";
    out += r.name;
    if (!r.detail.empty()) out += " (" + r.detail + ")";
    if (!r.passed && !r.witnesses.empty()) out += ": " + r.witnesses.front();
    out += "\n";
  }
  return out;
}

}  // namespace ainfty
