#pragma once

#include <stdexcept>
#include <string>

namespace pancake {

/// Invalid argument or violated domain constraint (bad degree, parity rule,
/// duplicate generator, ...). The CLI maps this to exit code 2.
class ConstraintError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A search or enumeration exceeded its configured vertex/step budget.
/// Partial results are unusable. The CLI maps this to exit code 4.
class BudgetError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Girth search reached the depth cap without closing any cycle.
class InconclusiveError : public std::runtime_error {
public:
    InconclusiveError(const std::string& what, int depth)
        : std::runtime_error(what), depth_reached(depth) {}

    int depth_reached;
};

}  // namespace pancake
