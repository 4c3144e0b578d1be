#pragma once

#include <stdexcept>
#include <string>

namespace strongid {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidEdge : Error {
    using Error::Error;
};

struct SelfLoop : Error {
    using Error::Error;
};

struct InvalidVertex : Error {
    using Error::Error;
};

struct SameVertex : Error {
    using Error::Error;
};

struct InvalidSize : Error {
    using Error::Error;
};

/// Edge-list text could not be parsed; `line` is 1-based.
struct ParseError : Error {
    ParseError(int line_, const std::string& what_)
        : Error("parse error at line " + std::to_string(line_) + ": " + what_), line(line_) {}
    int line;
};

/// The graph has fewer than two vertices, so pairwise quantities are undefined.
struct TooSmall : Error {
    using Error::Error;
};

/// The graph fails the r-strong neighbourhood property, so no code with
/// index r exists; `achieved` is the graph's actual strong index.
struct NotRStrong : Error {
    NotRStrong(int requested_, int achieved_)
        : Error("graph is not " + std::to_string(requested_) +
                "-strong (strong index is " + std::to_string(achieved_) + ")"),
          requested(requested_), achieved(achieved_) {}
    int requested;
    int achieved;
};

struct TooLargeForExact : Error {
    using Error::Error;
};

struct InvalidEpsilon : Error {
    using Error::Error;
};

/// The edge probability mandated by the size/strength pair exceeds 1.
struct InfeasibleP : Error {
    using Error::Error;
};

}  // namespace strongid
