#ifndef LATCONE_TESTS_CLI_HELPERS_HPP
#define LATCONE_TESTS_CLI_HELPERS_HPP

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

namespace cli {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

inline RunResult run(const std::string& args) {
    RunResult r;
    std::string cmd = std::string(LATCONE_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return r;
    std::array<char, 4096> buf;
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

inline std::string write_problem(const std::string& name, const std::string& content) {
    std::filesystem::path dir = std::filesystem::temp_directory_path() / "latcone_tests";
    std::filesystem::create_directories(dir);
    std::filesystem::path file = dir / name;
    std::ofstream(file) << content;
    return file.string();
}

inline const char* u_lattice_problem = R"({
  "lattice": {"rank": 2, "gram": [[0, 1], [1, 0]]},
  "reference": [1, 1],
  "vector": [2, 1],
  "roots": [[1, -1]],
  "cone": {"generators": [[1, 0], [0, 1]]}
})";

inline const char* pell_problem = R"({
  "lattice": {"rank": 2, "gram": [[2, 0], [0, -6]]},
  "reference": [1, 0],
  "vector": [1, 0],
  "cone": {"generators": [[3, 1], [3, -1]]},
  "group": {"generators": [[[2, 3], [1, 2]]]}
})";

inline const char* walls_problem = R"({
  "lattice": {"rank": 2, "gram": [[0, 1], [1, 0]]},
  "cone": {"generators": [[2, 1], [1, 2]]}
})";

inline const char* coxeter_problem = R"({
  "lattice": {"rank": 2, "gram": [[-2, 1], [1, -2]]},
  "roots": [[1, 0], [0, 1]],
  "action": {"generators": [[[0, 1], [1, 0]]]}
})";

inline const char* h1_problem = R"({
  "h1": {
    "gamma": {"table": [[0, 1], [1, 0]]},
    "coefficients": {"kind": "free_abelian", "rank": 1, "action": [[[1]], [[-1]]]}
  }
})";

} // namespace cli

#endif
