#pragma once

#include <iosfwd>
#include <string>

#include "eip/config.hpp"

namespace eip {

// Point-set interchange format, shared by every CLI subcommand:
//   {"dim": d, "points": [[x1,...,xd], ...]}
// with sorted, deduplicated rows.
Config read_config_json(std::istream& in);
Config read_config_file(const std::string& path);
std::string config_to_json(const Config& c);
void write_config_file(const Config& c, const std::string& path);

}  // namespace eip
