#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace levy {

struct CheckLine {
    std::string id;
    double expected = 0.0;
    double got = 0.0;
    double tol = 0.0;
    bool pass = false;
};

// all, specfun, kernel, appendixA1..appendixA5, bifurcations
const std::vector<std::string>& suite_names();
std::vector<CheckLine> run_suite(std::string_view suite);
std::string format_check(const CheckLine& c);

} // namespace levy
