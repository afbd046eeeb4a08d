#pragma once

#include <string>
#include <vector>

namespace orecode {

/// Short mathematical notes on the machinery behind each CLI surface.
/// Throws UnknownSubject listing the available ids.
std::string explain(const std::string& subject);

std::vector<std::string> explain_subjects();

}  // namespace orecode
