#pragma once

#include <string>

#include "fibpascal/bigint.hpp"
#include "fibpascal/trig.hpp"
#include "fibpascal/weight_pattern.hpp"

namespace fibpascal {

// {"k", "target_index", "value", "cells": [{"row", "col", "weight"}]}; cells in
// row-major order, weights as exact strings, big values as decimal strings.
std::string pattern_to_json(const WeightPattern& p, const BigInt& value);
std::string pattern_to_csv(const WeightPattern& p);
// Inverse of pattern_to_json; validates the pattern invariants.
WeightPattern pattern_from_json(const std::string& text);

std::string derivation_to_json(const DerivationReport& r);

}  // namespace fibpascal
