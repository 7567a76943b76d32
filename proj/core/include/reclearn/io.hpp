#pragma once

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "reclearn/dp.hpp"
#include "reclearn/sim.hpp"
#include "reclearn/strategic.hpp"

namespace reclearn {

/// Shortest decimal form that round-trips a double ("%.17g" fallback).
std::string format_double(double x);

// Every CSV starts with "# reclearn csv <kind> v1" so downstream plotting
// scripts can pin the schema. Writers are deterministic byte-for-byte for
// identical inputs; readers accept exactly what the writers emit.

void write_value_csv(const std::filesystem::path& path, const ValueTable& vt);
ValueTable read_value_csv(const std::filesystem::path& path);

void write_policy_csv(const std::filesystem::path& path,
                      const PolicyTable& pt);
PolicyTable read_policy_csv(const std::filesystem::path& path);

void write_coincidence_csv(const std::filesystem::path& path,
                           const CoincidenceSet& cs,
                           const IncentiveScheme& scheme);
std::pair<CoincidenceSet, IncentiveScheme> read_coincidence_csv(
    const std::filesystem::path& path);

void write_comparison_csv(const std::filesystem::path& path,
                          const ComparisonReport& report);
std::vector<ReplicationRow> read_comparison_csv(
    const std::filesystem::path& path);

void write_occupancy_csv(const std::filesystem::path& path,
                         const std::vector<double>& mass);
std::vector<double> read_occupancy_csv(const std::filesystem::path& path);

}  // namespace reclearn
