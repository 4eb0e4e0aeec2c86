#pragma once

#include <stdexcept>
#include <string>

namespace vftem {

// Thrown when an exhaustive check would exceed its configured work budget
// (fault-subset caps, verifier pair caps, path-enumeration caps).  Callers
// that cannot raise the budget are expected to switch to the approximate
// check mode instead.
class BudgetExceeded : public std::runtime_error {
public:
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

// Thrown on malformed input text (graph files, emulator files, generator
// specs).  Messages carry a line or token context.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace vftem
