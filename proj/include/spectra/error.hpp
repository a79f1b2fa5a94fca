/*
 * Copyright 2026 The spectra authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <stdexcept>
#include <string>

namespace spectra {

// Base of all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

// A certification loop hit its configured growth limit.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

class NotRenormalizable : public Error {
 public:
  using Error::Error;
};

class NoValidExtension : public Error {
 public:
  using Error::Error;
};

class TemplateMismatch : public Error {
 public:
  using Error::Error;
};

class PreconditionUnverified : public Error {
 public:
  using Error::Error;
};

class EmptyLanguage : public Error {
 public:
  using Error::Error;
};

// Malformed textual input (sequence literals, thresholds, words).
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace spectra
