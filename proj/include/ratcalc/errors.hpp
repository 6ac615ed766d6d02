#pragma once

#include <stdexcept>
#include <string>

namespace ratcalc {

// Base class for every library-reported failure. The CLI maps these to
// exit code 1; anything else escaping is a bug.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Operands drawn from different semirings or different alphabets.
class DomainMismatchError : public Error {
public:
    using Error::Error;
};

// star() requested outside the starrable set of the semiring instance.
class NotStarrableError : public Error {
public:
    using Error::Error;
};

// Star of a series/representation whose constant term is nonzero.
class NotProperError : public Error {
public:
    using Error::Error;
};

// Coefficient access beyond the degree bound of a truncated series.
class OutOfWindowError : public Error {
public:
    using Error::Error;
};

// const() is undefined: some starred subexpression has nonzero constant
// term. The message names the offending subtree.
class UndefinedConstTermError : public Error {
public:
    using Error::Error;
};

// Malformed text input: expressions, words, scalar literals, JSON files.
class ParseError : public Error {
public:
    using Error::Error;
};

} // namespace ratcalc
