#pragma once

#include "einstrength/strength.hpp"

#include <string>

namespace einstrength {

DifferenceSystem parse_system(const std::string& json_text);
DifferenceSystem read_system_file(const std::string& path);
// Pretty-printed with two-space indentation and a trailing newline.
std::string write_system(const DifferenceSystem& sys);
void write_system_file(const DifferenceSystem& sys, const std::string& path);

}  // namespace einstrength
