#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "rpebble/automorphism.hpp"
#include "rpebble/distinguishing.hpp"
#include "rpebble/families.hpp"
#include "rpebble/optimal.hpp"
#include "rpebble/solver.hpp"

namespace rpebble {

inline constexpr const char* kSchemaVersion = "rpebble/1";

nlohmann::ordered_json graph_json(const Graph& g);
nlohmann::ordered_json optimal_json(const Graph& g, const OptimalResult& result);
nlohmann::ordered_json bounds_json(const Graph& g, const BoundsReport& report);
nlohmann::ordered_json symmetry_json(const Graph& g, const AutomorphismSet& aut,
                                     const DistinguishingResult& dist);

/// Solvability of f on g with optional per-target certificates.
nlohmann::ordered_json solve_json(const Graph& g, const Config& f, bool certificates,
                                  const SearchLimits& limits = {});

/// Reachability of one target plus certificate verification.
nlohmann::ordered_json verify_json(const Graph& g, const Config& f, int target,
                                   const SearchLimits& limits = {});

nlohmann::ordered_json family_report_json(const std::vector<FamilyRecord>& records,
                                          const FamilyCheck& check);
std::string family_report_csv(const std::vector<FamilyRecord>& records, const FamilyCheck& check);

/// Reproduction suites: "alkanes", "family", "paths". format: "json" | "csv".
std::string reproduce(const std::string& suite, const std::string& format,
                      const SearchOptions& opts = {});

}  // namespace rpebble
