#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace riesz {

struct CheckItem {
    std::string name;
    double value = 0.0;
    double threshold = 0.0;
    bool pass = false;
};

struct CheckSuite {
    std::vector<CheckItem> items;
    double seconds = 0.0;

    bool all_pass() const;
    const CheckItem& at(const std::string& name) const;
};

struct CheckOptions {
    /// Adds the Barnes-Hut accuracy comparison (2e4 nodes, dipole, theta 0.5).
    bool include_tree = false;
    unsigned long long seed = 20240601;
};

/// Fast invariant suite: kernel derivatives against finite differences, homogeneity,
/// conservation on a 100-node run, exact free transport at eta = 0, Liouville, rate_fit on
/// synthetic power laws and dilation invariance of the interpolation ratio.
CheckSuite run_checks(const CheckOptions& opt = {});

/// Prints one line per item; returns 0 iff every item passed.
int cmd_check(std::ostream& out, const CheckOptions& opt = {});

}  // namespace riesz
