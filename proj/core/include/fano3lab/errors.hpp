#pragma once

#include <map>
#include <stdexcept>
#include <string>

namespace fano3lab {

// Domain error carrying a stable kind tag (e.g. "RootsNotInField") and
// optional key/value details for serialization.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& message,
          std::map<std::string, std::string> details = {})
        : std::runtime_error(message), kind_(std::move(kind)), details_(std::move(details)) {}

    const std::string& kind() const noexcept { return kind_; }
    const std::map<std::string, std::string>& details() const noexcept { return details_; }

private:
    std::string kind_;
    std::map<std::string, std::string> details_;
};

[[noreturn]] inline void raise(std::string kind, const std::string& message,
                               std::map<std::string, std::string> details = {}) {
    throw Error(std::move(kind), message, std::move(details));
}

}  // namespace fano3lab
