#pragma once

#include <stdexcept>
#include <string>

namespace lieloop {

// Every failure the library reports carries a stable kind tag (used by the
// CLI to choose exit codes and by tests to match specific error paths) and a
// human-readable message.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& message)
        : std::runtime_error(kind + ": " + message), kind_(std::move(kind)) {}

    const std::string& kind() const { return kind_; }

private:
    std::string kind_;
};

inline Error error(const std::string& kind, const std::string& message)
{
    return Error(kind, message);
}

} // namespace lieloop
