#pragma once

#include "einstrength/oracle.hpp"

#include <string>

namespace einstrength {

enum class Format { Text, Json };

Format parse_format(const std::string& s);

std::string render_lattice(const std::string& function, const LatticeSet& input, Format f);
std::string render_charset(const StrengthReport& rep, const Naming& names, Format f);
std::string render_strength(const StrengthReport& rep, const Naming& names, Format f);
std::string render_system(const DifferenceSystem& sys, Format f);
std::string render_verification(const VerificationReport& rep, Format f);
std::string render_catalog(Format f);

}  // namespace einstrength
