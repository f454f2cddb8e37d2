#ifndef BOUSS_VERIFY_HPP
#define BOUSS_VERIFY_HPP

#include "bouss/integrator.hpp"

#include <nlohmann/json_fwd.hpp>

namespace bouss {

struct CheckResult {
    std::string name;
    bool pass = false;
    Real measured = 0;  // the quantity compared against the bound
    Real tolerance = 0; // the bound itself (or fitted reference)
};

struct SuiteResult {
    std::string suite;
    bool pass = true;
    double seconds = 0;
    std::vector<CheckResult> checks;
};

/// Suites: partition, blocks, leray, energy, commutator, conservation, all.
SuiteResult run_suite(const std::string& name, const Grid& grid);
SuiteResult run_suite(const std::string& name); // default 1D grid N=512, L=32*pi

nlohmann::json suite_to_json(const SuiteResult& r);

} // namespace bouss

#endif
