#pragma once

#include <stdexcept>
#include <string>

namespace aspectminer {

// Base for every error the library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input text: bad tags, bad resource lines, inconsistent files.
class ParseError : public Error {
 public:
  using Error::Error;
};

// A resource file that could not be opened or read.
class ResourceError : public Error {
 public:
  ResourceError(const std::string& path, const std::string& what)
      : Error(what + ": " + path), path_(path) {}

  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

// Precondition violated by a caller (out-of-range argument and the like).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// Reads a whole file. Throws ResourceError when it cannot be opened.
std::string read_file(const std::string& path);

}  // namespace aspectminer
