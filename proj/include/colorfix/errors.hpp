#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace colorfix {

// Precondition / domain violations (bad vertex id, wrong chromatic number,
// non-planar input where planar is required, ...).
class domain_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Input text that does not conform to the declared format. Carries the
// 1-based line number and the byte offset of the offending line.
class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& what, int line, long byte_offset)
        : std::runtime_error("parse error at line " + std::to_string(line) +
                             " (byte " + std::to_string(byte_offset) + "): " + what),
          line_(line),
          byte_offset_(byte_offset) {}

    int line() const { return line_; }
    long byte_offset() const { return byte_offset_; }

private:
    int line_;
    long byte_offset_;
};

enum class KuratowskiKind { k5, k33 };

// Thrown when an operation requires a planar graph; carries the edges of a
// K5 or K3,3 subdivision found in the offending graph.
class nonplanar_error : public domain_error {
public:
    nonplanar_error(const std::string& what, KuratowskiKind kind,
                    std::vector<std::pair<int, int>> witness)
        : domain_error(what), kind_(kind), witness_(std::move(witness)) {}

    KuratowskiKind kind() const { return kind_; }
    const std::vector<std::pair<int, int>>& witness() const { return witness_; }

private:
    KuratowskiKind kind_;
    std::vector<std::pair<int, int>> witness_;
};

}  // namespace colorfix
