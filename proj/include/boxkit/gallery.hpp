#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace boxkit::gallery {

// The showcase instances. Every printed fact is recomputed by the core
// modules at run time; run() returns false if any asserted fact fails.
std::vector<std::string> case_names();
bool run(const std::string& name, std::ostream& out);

}  // namespace boxkit::gallery
