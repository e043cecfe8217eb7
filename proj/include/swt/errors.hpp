#ifndef SWT_ERRORS_HPP
#define SWT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace swt {

// Base class for all library-defined failures.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A pivot magnitude fell below the singularity threshold during LU
// factorization.
class SingularSystem : public Error {
public:
    SingularSystem(int pivot_step, double pivot_magnitude)
        : Error("singular system: pivot " + std::to_string(pivot_step + 1) +
                " has magnitude " + std::to_string(pivot_magnitude)),
          pivot_step(pivot_step),
          pivot_magnitude(pivot_magnitude) {}

    int pivot_step;          // 0-based elimination step that failed
    double pivot_magnitude;  // |pivot| found there
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

class EmptyFile : public Error {
public:
    explicit EmptyFile(const std::string& path)
        : Error("no samples found in " + path), path(path) {}

    std::string path;
};

class MalformedNumber : public Error {
public:
    MalformedNumber(const std::string& path, long line, const std::string& token)
        : Error("malformed number at " + path + ":" + std::to_string(line) +
                ": \"" + token + "\""),
          path(path),
          line(line),
          token(token) {}

    std::string path;
    long line;  // 1-based physical line number
    std::string token;
};

class ConflictingTimeBase : public Error {
public:
    using Error::Error;
};

class SchemaMismatch : public Error {
public:
    using Error::Error;
};

class IoError : public Error {
public:
    IoError(const std::string& path, const std::string& what)
        : Error(path + ": " + what), path(path) {}

    std::string path;
};

}  // namespace swt

#endif
