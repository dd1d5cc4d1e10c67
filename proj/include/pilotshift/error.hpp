#pragma once

#include <stdexcept>
#include <string>

namespace pilotshift {

/// Invalid sizes, factors or layout parameters.
class ConfigError : public std::invalid_argument {
public:
    explicit ConfigError(const std::string& what) : std::invalid_argument(what) {}
};

/// Input data that does not satisfy an operation's precondition.
class InputError : public std::invalid_argument {
public:
    explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

/// File could not be opened or written. The message names the path.
class IoError : public std::runtime_error {
public:
    IoError(const std::string& path, const std::string& reason);
    const std::string& path() const noexcept { return path_; }

private:
    std::string path_;
};

}  // namespace pilotshift
