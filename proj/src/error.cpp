#include "aspectminer/error.hpp"

#include <fstream>
#include <sstream>

namespace aspectminer {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ResourceError(path, "cannot open file");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw ResourceError(path, "cannot read file");
  return std::move(buffer).str();
}

}  // namespace aspectminer
