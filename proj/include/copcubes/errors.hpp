#ifndef COPCUBES_ERRORS_HPP
#define COPCUBES_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace copcubes {

// Violated operation precondition (bad argument, unmet structural requirement).
class PreconditionError : public std::runtime_error {
public:
    explicit PreconditionError(const std::string& msg) : std::runtime_error(msg) {}
};

// A configured cap (dimension or memory) would be exceeded.
class ResourceCapError : public std::runtime_error {
public:
    explicit ResourceCapError(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed graph file or serialized record.
class FormatError : public PreconditionError {
public:
    explicit FormatError(const std::string& msg) : PreconditionError(msg) {}
};

// A strategy emitted an illegal move; always names the offending strategy.
class StrategyError : public std::runtime_error {
public:
    explicit StrategyError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace copcubes

#endif
