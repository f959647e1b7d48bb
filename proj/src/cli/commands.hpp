#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "whlab/core/errors.hpp"

namespace whlab::cli {

using Json = nlohmann::ordered_json;

struct Report {
  Json json;
  std::string text;
  int exit_code = 0;
};

struct Common {
  Budget budget;
  std::uint64_t seed = 1;
};

struct ShuffleOptions {
  std::string left, right;
  std::string field = "Q";
  bool infiltration = false;
};

struct FoxOptions {
  std::string path;
  std::optional<std::string> field;
  std::optional<std::size_t> cap;
};

struct GroupOptions {
  std::string group;
  std::string group_file;
  std::string coefficients = "trivial";
  std::optional<std::string> field;
};

struct CohomologyOptions {
  GroupOptions group;
  std::size_t n_max = 3;
};

struct LhsOptions {
  GroupOptions group;
  std::string subgroup;  // comma-separated generator labels
  std::string window = "4,4";
  std::optional<std::size_t> n_max;
  std::size_t r_max = 4;
};

struct AsphericityOptions {
  std::string path;
  std::optional<std::string> field;
  std::optional<std::size_t> cap;
};

Report shuffle_command(ShuffleOptions const& o, Common const& c);
Report fox_command(FoxOptions const& o, Common const& c);
Report cohomology_command(CohomologyOptions const& o, Common const& c);
Report lhs_command(LhsOptions const& o, Common const& c);
Report asphericity_command(AsphericityOptions const& o, Common const& c);
Report selftest_command(Common const& c);

}  // namespace whlab::cli
