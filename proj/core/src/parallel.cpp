#include "radon/parallel.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace radon {

int thread_count() {
  const char* env = std::getenv("RADON_THREADS");
  if (env == nullptr || *env == '\0') return 1;
  int n = 0;
  try {
    std::size_t pos = 0;
    n = std::stoi(env, &pos);
    if (env[pos] != '\0') throw std::invalid_argument("trailing characters");
  } catch (const std::exception&) {
    throw std::invalid_argument(std::string("RADON_THREADS is not an integer: ") + env);
  }
  if (n < 1) n = 1;
  if (n > 256) n = 256;
  return n;
}

}  // namespace radon
