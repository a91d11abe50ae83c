#pragma once

#include <string>
#include <utility>
#include <vector>

#include "wsnsim/simulator.hpp"

namespace wsnsim {

// All recognised config keys, in canonical echo order.
const std::vector<std::string>& config_keys();

// The documented defaults: standard radio constants, 100 nodes on a 100 m
// field, sink at the centre, the four-class energy mix, BEENISH, seed 1.
SimConfig default_config();

// Parses flat key=value text (one pair per line, '#' starts a comment,
// blank lines ignored), then applies overrides of the same key=value form,
// then validates. Unknown keys, malformed values and invariant violations
// all raise std::invalid_argument naming the key. The sink position
// defaults to the centre of whatever field_side ends up configured.
SimConfig parse_config(const std::string& text,
                       const std::vector<std::string>& overrides);

// parse_config over a file's contents. Throws std::invalid_argument if the
// file cannot be read.
SimConfig load_config(const std::string& path,
                      const std::vector<std::string>& overrides);

// The config as (key, value) pairs in canonical order, re-parseable by
// parse_config. Inverse of parsing up to float formatting.
std::vector<std::pair<std::string, std::string>> config_echo(const SimConfig& c);

}  // namespace wsnsim
