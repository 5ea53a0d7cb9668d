#pragma once

#include <stdexcept>
#include <string>

namespace symfn {

/// Malformed text input (partitions, words, matrices, tableaux).
class parse_error : public std::invalid_argument {
public:
    explicit parse_error(const std::string& what) : std::invalid_argument(what) {}
};

/// Well-formed input outside an operation's domain.
class domain_error : public std::domain_error {
public:
    explicit domain_error(const std::string& what) : std::domain_error(what) {}
};

/// A computation that a theorem guarantees cannot fail did fail; always a bug.
class internal_fault : public std::logic_error {
public:
    explicit internal_fault(const std::string& what) : std::logic_error(what) {}
};

/// Polynomial long division left a nonzero remainder.
class division_error : public domain_error {
public:
    explicit division_error(const std::string& what) : domain_error(what) {}
};

}  // namespace symfn
