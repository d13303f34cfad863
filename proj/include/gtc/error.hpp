/*
   Copyright 2026 The gtc Authors

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

#ifndef GTC_ERROR_HPP
#define GTC_ERROR_HPP

#include <stdexcept>
#include <string>

namespace gtc {

/// Malformed polynomial, matrix or label text.
class ParseError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// An operation was called outside its precondition (wrong shape, singular
/// change of coordinates, mismatched rings, ...).
class DomainError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// A result contradicted a mathematical guarantee. Seeing one of these means
/// either a bug or an input the theory excludes.
class InconsistencyError : public std::logic_error {
   public:
    using std::logic_error::logic_error;
};

}  // namespace gtc

#endif
