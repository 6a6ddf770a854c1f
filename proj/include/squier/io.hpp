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

// File helpers shared by the command line tool and the tests.

#ifndef SQUIER_IO_HPP_
#define SQUIER_IO_HPP_

#include <string>       // for string
#include <string_view>  // for string_view

namespace squier {

  //! The contents of \p path; throws InputError if it cannot be read.
  std::string read_file(std::string const& path);

  //! Writes \p contents to a temporary file next to \p path and renames it
  //! over \p path. Throws Error on failure.
  void write_file_atomic(std::string const& path, std::string_view contents);

  //! \p path resolved against the directory of \p relative_to, unless
  //! \p path is absolute.
  std::string resolve_path(std::string const& path,
                           std::string const& relative_to);

}  // namespace squier

#endif  // SQUIER_IO_HPP_
