#pragma once

#include <stdexcept>
#include <string>

namespace spincoh {

/// Violation of a numerical contract (non-Hermitian input where a Hermitian
/// matrix is required, PSD failure, analytic/numeric path disagreement, ...).
class contract_error : public std::runtime_error {
public:
    explicit contract_error(const std::string& what) : std::runtime_error(what) {}
};

/// A unique ground state was required but the spectrum is degenerate.
class degeneracy_error : public std::runtime_error {
public:
    explicit degeneracy_error(const std::string& what) : std::runtime_error(what) {}
};

/// File I/O failure; the message carries the offending path.
class io_error : public std::runtime_error {
public:
    explicit io_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace spincoh
