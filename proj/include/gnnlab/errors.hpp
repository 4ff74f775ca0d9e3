#pragma once

#include <stdexcept>
#include <string>

namespace gnnlab {

// Bad or inconsistent user configuration (maps to CLI exit code 2).
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed input file; carries a 1-based line number when known.
struct ParseError : std::runtime_error {
    int line = 0;
    ParseError(const std::string& msg, int line_no)
        : std::runtime_error("line " + std::to_string(line_no) + ": " + msg), line(line_no) {}
    explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

// Rejection sampling ran out of attempts while placing atoms.
struct GenerationError : std::runtime_error {
    explicit GenerationError(const std::string& msg) : std::runtime_error(msg) {}
};

// Coincident atoms make the pair potential singular.
struct SingularConfigurationError : std::runtime_error {
    explicit SingularConfigurationError(const std::string& msg) : std::runtime_error(msg) {}
};

// Collective called with mismatched buffers.
struct ProtocolError : std::runtime_error {
    explicit ProtocolError(const std::string& msg) : std::runtime_error(msg) {}
};

// Ledger saw a free that exceeds live bytes — implementation bug signal.
struct AccountingFault : std::logic_error {
    explicit AccountingFault(const std::string& msg) : std::logic_error(msg) {}
};

// Parameter replicas diverged across workers.
struct ConsistencyFault : std::runtime_error {
    explicit ConsistencyFault(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace gnnlab
