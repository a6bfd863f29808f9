#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "optdeg/error.hpp"

namespace optdeg {

inline constexpr int kSchemaVersion = 1;

/// Command-line overrides applied on top of the job document.
struct RunOptions {
    std::optional<std::uint64_t> seed;
    std::optional<int> trials;
    std::optional<std::string> field;
    std::optional<std::uint64_t> budget;
    std::optional<std::string> formula_kind;
    bool timings = false;
};

// Commands: degree, projective-degree, polar, conormal, joint, formula, evolute, tower-check, crossvalidate, gb.
nlohmann::json run_job(const std::string& command, const nlohmann::json& job, const RunOptions& options = {});

// 2 for schema and parse errors, 4 for an exhausted step budget, 3 for every other domain error.
int exit_code_for(Errc code);

nlohmann::json error_document(const Error& e);

}  // namespace optdeg
