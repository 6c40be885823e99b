#ifndef DESIGNKIT_TEST_UTIL_HPP
#define DESIGNKIT_TEST_UTIL_HPP

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#ifndef DK_DATA_DIR
#define DK_DATA_DIR "data"
#endif

inline std::string read_data_file(const std::string& name) {
    std::ifstream in(std::string(DK_DATA_DIR) + "/" + name);
    if (!in) throw std::runtime_error("cannot open data file " + name);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

#endif
