#ifndef ATLASGRAPH_ERRORS_HPP
#define ATLASGRAPH_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace atlasgraph {

// Base class for every failure this library reports. Subclasses exist so
// callers can catch a specific condition; the message always names the
// offending vertex/edge/token.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct SelfLoopError : Error {
    using Error::Error;
};

struct DuplicateEdgeError : Error {
    using Error::Error;
};

struct BadEndpointError : Error {
    using Error::Error;
};

struct NonPositiveLabelError : Error {
    using Error::Error;
};

struct DisconnectedError : Error {
    using Error::Error;
};

struct BadBasepointError : Error {
    using Error::Error;
};

struct TooLargeError : Error {
    using Error::Error;
};

// Document syntax or schema violation; 1-based line/column of the token.
struct ParseError : Error {
    int line;
    int column;
    ParseError(const std::string& msg, int line_, int column_)
        : Error(msg + " (line " + std::to_string(line_) + ", column " +
                std::to_string(column_) + ")"),
          line(line_),
          column(column_) {}
};

}  // namespace atlasgraph

#endif
