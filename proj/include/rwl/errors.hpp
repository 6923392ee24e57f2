#pragma once

#include <stdexcept>
#include <string>

namespace rwl {

// Out-of-domain parameters, malformed ids, mismatched orders.
class parameter_error : public std::invalid_argument {
public:
    explicit parameter_error(const std::string& what) : std::invalid_argument(what) {}
};

// A computation was requested beyond its configured size cap.
class size_limit_error : public std::runtime_error {
public:
    explicit size_limit_error(const std::string& what) : std::runtime_error(what) {}
};

// A value that must be an exact integer came out fractional.
// Raised by formulas with rational intermediates; signals a transcription bug.
class integrality_error : public std::runtime_error {
public:
    explicit integrality_error(const std::string& what) : std::runtime_error(what) {}
};

class network_error : public std::runtime_error {
public:
    explicit network_error(const std::string& what) : std::runtime_error(what) {}
};

// Offline mode and the requested sequence is neither cached nor vendored.
class offline_miss_error : public std::runtime_error {
public:
    explicit offline_miss_error(const std::string& what) : std::runtime_error(what) {}
};

class bfile_parse_error : public std::runtime_error {
public:
    explicit bfile_parse_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace rwl
