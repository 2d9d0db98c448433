/*
   Copyright 2026 The qudit-algebra Authors

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

#ifndef QUDIT_ERRORS_HPP
#define QUDIT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qudit {

/// Operands live in different fields or have incompatible shapes.
class DimensionMismatch : public std::invalid_argument {
   public:
    explicit DimensionMismatch(const std::string& what) : std::invalid_argument(what) {}
};

class DivisionByZero : public std::domain_error {
   public:
    explicit DivisionByZero(const std::string& what) : std::domain_error(what) {}
};

/// An operator index lies outside the range its definition allows.
class IndexRangeError : public std::out_of_range {
   public:
    explicit IndexRangeError(const std::string& what) : std::out_of_range(what) {}
};

/// Rejected lattice or run configuration (d < 2, beta <= 0, ...).
class ConfigError : public std::invalid_argument {
   public:
    explicit ConfigError(const std::string& what) : std::invalid_argument(what) {}
};

class UnknownSuite : public std::invalid_argument {
   public:
    explicit UnknownSuite(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace qudit

#endif  // QUDIT_ERRORS_HPP
