#pragma once

#include <stdexcept>
#include <string>

namespace qcrystal {

// Enumeration would exceed the configured vertex budget.
struct BudgetExceeded : std::runtime_error {
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

// A value expected to be regular at q = infinity has positive degree.
struct NotInLattice : std::runtime_error {
    explicit NotInLattice(const std::string& what) : std::runtime_error(what) {}
};

// An exact identity that must hold by theorem failed to hold.  Seeing this
// exception means a bug, not bad input.
struct InternalInconsistency : std::logic_error {
    explicit InternalInconsistency(const std::string& what) : std::logic_error(what) {}
};

} // namespace qcrystal
