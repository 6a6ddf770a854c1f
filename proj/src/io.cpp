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

#include "squier/io.hpp"

#include <filesystem>  // for path, rename
#include <fstream>     // for ifstream, ofstream
#include <sstream>     // for ostringstream

#include "squier/exception.hpp"

namespace squier {

  namespace fs = std::filesystem;

  std::string read_file(std::string const& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      throw InputError("cannot open " + path);
    }
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
  }

  void write_file_atomic(std::string const& path, std::string_view contents) {
    fs::path    target(path);
    std::string tmp = path + ".tmp";
    {
      std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
      if (!out) {
        throw Error("cannot write " + tmp);
      }
      out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
      if (!out) {
        throw Error("cannot write " + tmp);
      }
    }
    std::error_code ec;
    fs::rename(tmp, target, ec);
    if (ec) {
      fs::remove(tmp, ec);
      throw Error("cannot rename " + tmp + " to " + path);
    }
  }

  std::string resolve_path(std::string const& path,
                           std::string const& relative_to) {
    fs::path p(path);
    if (p.is_absolute()) {
      return path;
    }
    return (fs::path(relative_to).parent_path() / p).string();
  }

}  // namespace squier
