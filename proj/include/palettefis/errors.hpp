#pragma once
#include <stdexcept>

namespace palettefis {

// Common base so callers can catch anything thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed textual input (hex color, CSV cell, font table line, ...).
class ParseError : public Error {
public:
    using Error::Error;
};

// File could not be opened / read / written.
class IoError : public Error {
public:
    using Error::Error;
};

// File opened fine but its bytes are not a decodable PNG/JPEG.
class DecodeError : public Error {
public:
    using Error::Error;
};

// Fewer distinct points than requested centroids.
class InsufficientPoints : public Error {
public:
    using Error::Error;
};

// Image has no pixels left after transparency filtering.
class EmptyImage : public Error {
public:
    using Error::Error;
};

// Aggregated fuzzy output is identically zero; centroid undefined.
class NoRuleFired : public Error {
public:
    using Error::Error;
};

// Font-family string is empty after normalization.
class EmptyFontName : public Error {
public:
    using Error::Error;
};

// Dataset header/columns do not match the expected schema.
class SchemaError : public Error {
public:
    using Error::Error;
};

// Rule base text or structure is invalid (bad reference, empty, ...).
class RuleBaseError : public Error {
public:
    using Error::Error;
};

// Argument outside its documented domain (k < 1, non-finite input, ...).
class InvalidInput : public Error {
public:
    using Error::Error;
};

// Bad CLI configuration (config file, flag values); maps to exit code 2.
class ConfigError : public Error {
public:
    using Error::Error;
};

} // namespace palettefis
