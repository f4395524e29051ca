#ifndef GLARE_ERRORS_HPP
#define GLARE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace glare {

// Caller misuse: bad arguments, wrong color-space tag, missing model file, ...
class UsageError : public std::runtime_error {
public:
    explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

// Bad input data: unreadable files, dimension mismatches, malformed formats.
class DataError : public std::runtime_error {
public:
    explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

// Model/report text that failed to parse; carries the offending line.
class ParseError : public DataError {
public:
    ParseError(const std::string& what, int line)
        : DataError(what + " (line " + std::to_string(line) + ")"), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

// SVM solver did not reach the KKT tolerance within the iteration cap.
class TrainingError : public std::runtime_error {
public:
    TrainingError(const std::string& what, double kkt_violation)
        : std::runtime_error(what), kkt_violation_(kkt_violation) {}
    double kkt_violation() const { return kkt_violation_; }

private:
    double kkt_violation_ = 0.0;
};

} // namespace glare

#endif
