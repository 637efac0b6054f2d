#pragma once

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace navtest::testsupport {

inline std::string fixture_dir() {
#ifdef NAVTEST_FIXTURE_DIR
    return NAVTEST_FIXTURE_DIR;
#else
    const char* env = std::getenv("NAVTEST_FIXTURES");
    if (!env) throw std::runtime_error("NAVTEST_FIXTURES is not set");
    return env;
#endif
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline std::string read_fixture(const std::string& name) {
    return read_file(fixture_dir() + "/" + name);
}

} // namespace navtest::testsupport
