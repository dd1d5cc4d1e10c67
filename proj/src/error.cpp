#include "pilotshift/error.hpp"

namespace pilotshift {

IoError::IoError(const std::string& path, const std::string& reason)
    : std::runtime_error(path + ": " + reason), path_(path) {}

}  // namespace pilotshift
