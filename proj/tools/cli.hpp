#pragma once

#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

namespace pmap::cli {

enum Exit { kOk = 0, kCheckFailed = 2, kInfeasible = 3 };

// runs one command line; args exclude the program name
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// {"value": v, "provenance": p}
nlohmann::json tagged(const nlohmann::json& v, const std::string& prov);

}  // namespace pmap::cli
