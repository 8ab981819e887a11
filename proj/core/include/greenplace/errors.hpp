// Copyright 2026 The greenplace Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GREENPLACE_ERRORS_HPP
#define GREENPLACE_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "greenplace/model.hpp"

namespace greenplace {

/// Malformed fact file. Carries the offending position and the token
/// kinds the parser would have accepted there.
class SyntaxError : public std::runtime_error {
public:
    SyntaxError(SourcePos pos, std::string message,
                std::vector<std::string> expected = {});

    const SourcePos& position() const { return pos_; }
    const std::string& raw_message() const { return message_; }
    const std::vector<std::string>& expected() const { return expected_; }

private:
    SourcePos pos_;
    std::string message_;
    std::vector<std::string> expected_;
};

/// Two facts with the same head and key. Never last-wins.
class DuplicateFactError : public SyntaxError {
public:
    using SyntaxError::SyntaxError;
};

/// A knowledge base failed validation; carries every diagnostic found.
class ValidationFailed : public std::runtime_error {
public:
    explicit ValidationFailed(std::vector<Diagnostic> diagnostics);

    const std::vector<Diagnostic>& diagnostics() const { return diagnostics_; }

private:
    std::vector<Diagnostic> diagnostics_;
};

/// Overlay replace/remove addressed a fact that does not exist.
class KeyNotFound : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class UnknownApplication : public std::runtime_error {
public:
    explicit UnknownApplication(const Identifier& name);
};

/// An energy mix names a source missing from the emissions table.
class UnknownSource : public std::runtime_error {
public:
    explicit UnknownSource(const Identifier& source);
};

/// Profile evaluated outside the [0, 100] load domain.
class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace greenplace

#endif  // GREENPLACE_ERRORS_HPP
