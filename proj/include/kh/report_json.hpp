#pragma once

#include <json.hpp>

#include "kh/fox.hpp"
#include "kh/verify.hpp"

namespace kh {

// Integers that fit in 64 bits become JSON numbers, larger ones decimal strings.
nlohmann::ordered_json to_json(const Integer& value);

nlohmann::ordered_json to_json(const ColoringGroup& group);

// {name, hypotheses, determinant, factors, partA, partB:{t, witnessColumns},
//  partC:{s}, failures, pseudo:{found}, ...}; all indices are 0-based.
nlohmann::ordered_json to_json(const VerificationReport& report);

}  // namespace kh
