/*
   Copyright 2026 The lagengel Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef LAGENGEL_ERRORS_HPP
#define LAGENGEL_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lagengel {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class MissingSymbolError : public Error {
public:
    explicit MissingSymbolError(const std::string& symbol)
        : Error("symbol '" + symbol + "' has no assigned value"), symbol_(symbol) {}
    const std::string& symbol() const noexcept { return symbol_; }

private:
    std::string symbol_;
};

class UnknownSymbolError : public Error {
public:
    explicit UnknownSymbolError(const std::string& symbol)
        : Error("unknown symbol '" + symbol + "'"), symbol_(symbol) {}
    const std::string& symbol() const noexcept { return symbol_; }

private:
    std::string symbol_;
};

class DivisionByZeroError : public Error {
public:
    using Error::Error;
};

/// Mixing forms or scalars that live in different contexts (two charts).
class ContextMismatchError : public Error {
public:
    using Error::Error;
};

class DegreeError : public Error {
public:
    using Error::Error;
};

/// A coframed algebra does not satisfy the 1-adapted normalization.
class NotAdaptedError : public Error {
public:
    using Error::Error;
};

/// The branch of a decision depends on parameter values. The message lists
/// the polynomial whose vanishing decides the branch.
class AmbiguousParameterError : public Error {
public:
    AmbiguousParameterError(const std::string& invariant, const std::string& value)
        : Error("invariant " + invariant + " = " + value +
                " depends on the parameters; split on " + value + " = 0 versus " + value + " != 0"),
          invariant_(invariant), value_(value) {}
    const std::string& invariant() const noexcept { return invariant_; }
    const std::string& value() const noexcept { return value_; }

private:
    std::string invariant_;
    std::string value_;
};

class JacobiFailureError : public Error {
public:
    using Error::Error;
};

class SingularMatrixError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(const std::string& message, std::size_t line, std::size_t column)
        : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
          line_(line), column_(column) {}
    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

}  // namespace lagengel

#endif  // LAGENGEL_ERRORS_HPP
