//
// squier - homotopy bases for semigroup presentations
// Copyright (C) 2026 The squier authors
//
// This program is free software: you can redistribute it and/or modify
// it under the terms of the GNU General Public License as published by
// the Free Software Foundation, either version 3 of the License, or
// (at your option) any later version.
//
// This program is distributed in the hope that it will be useful,
// but WITHOUT ANY WARRANTY; without even the implied warranty of
// MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
// GNU General Public License for more details.
//
// You should have received a copy of the GNU General Public License
// along with this program.  If not, see <http://www.gnu.org/licenses/>.
//

// Exception types. The command line tool maps each kind to an exit code.

#ifndef SQUIER_EXCEPTION_HPP_
#define SQUIER_EXCEPTION_HPP_

#include <cstddef>    // for size_t
#include <stdexcept>  // for runtime_error
#include <string>     // for string

namespace squier {

  //! Base class for every exception thrown by the library.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  //! Malformed or inconsistent input.
  class InputError : public Error {
   public:
    using Error::Error;
  };

  //! A syntax error in one of the text formats, with a position.
  class ParseError : public InputError {
   public:
    ParseError(std::string const& msg, size_t line, size_t column)
        : InputError("line " + std::to_string(line) + ", column "
                     + std::to_string(column) + ": " + msg),
          _line(line),
          _column(column) {}

    [[nodiscard]] size_t line() const noexcept {
      return _line;
    }

    [[nodiscard]] size_t column() const noexcept {
      return _column;
    }

   private:
    size_t _line;
    size_t _column;
  };

  //! Some object failed a check against the oracle or a structural check.
  class VerificationError : public Error {
   public:
    using Error::Error;
  };

  //! A budgeted search ran out before reaching a verdict.
  class InconclusiveError : public Error {
   public:
    using Error::Error;
  };

}  // namespace squier

#endif  // SQUIER_EXCEPTION_HPP_
