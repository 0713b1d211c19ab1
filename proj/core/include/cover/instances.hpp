#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "cover/geometry.hpp"

namespace cover {

class UnknownInstance : public Error {
public:
  using Error::Error;
};

/// Names of the built-in benchmark regions.
const std::vector<std::string>& instance_names();

/// Built-in region by name: nonconvex_holes, america, star, minkowski, cesaro.
/// Throws UnknownInstance.
Region get_instance(std::string_view name);

}  // namespace cover
