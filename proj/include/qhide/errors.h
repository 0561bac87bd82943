// Copyright 2026 The qhide Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QHIDE_ERRORS_H
#define QHIDE_ERRORS_H

#include <stdexcept>
#include <string>

namespace qhide {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// The extra qubit is still entangled with the data register.
class NotSeparable : public Error {
   public:
    using Error::Error;
};

class MalformedKey : public Error {
   public:
    using Error::Error;
};

class MalformedMessage : public Error {
   public:
    using Error::Error;
};

/// The key has fewer entries than the message has bits and cycling is off.
class KeyExhausted : public Error {
   public:
    using Error::Error;
};

/// G acts on a minus-sign Bell state as a global sign, so it cannot be hidden.
class UnhideablePhase : public Error {
   public:
    using Error::Error;
};

/// A frame expected to be a computational basis state is a superposition.
class NotClassical : public Error {
   public:
    using Error::Error;
};

/// An internal consistency check failed. Indicates a bug, not bad input.
class InvariantViolation : public Error {
   public:
    using Error::Error;
};

}  // namespace qhide

#endif  // QHIDE_ERRORS_H
