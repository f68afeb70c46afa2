#ifndef SRL_TESTS_TEST_UTIL_H_
#define SRL_TESTS_TEST_UTIL_H_

#include <fstream>
#include <sstream>
#include <string>

namespace srl::testing {

inline std::string FixturePath(const std::string& name) {
  return std::string(SRL_TEST_FIXTURE_DIR) + "/" + name;
}

inline std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

}  // namespace srl::testing

#endif  // SRL_TESTS_TEST_UTIL_H_
