#pragma once

#include "toric/io.hpp"

namespace toric {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string details;
};

struct VerifyReport {
    std::vector<CriterionResult> criteria;
    bool all_pass = false;
};

// Built-in fixtures.
LatticePolygon fixture_triangle();
LatticePolygon fixture_square();
LatticePolygon fixture_hexagon();
LatticePolygon fixture_rectangle_1x3();
Cone fixture_octant();
Cone fixture_a3_cone();  // 2-dim cone spanned by (1,0) and (1,4)

// Runs the full verification suite on the built-in fixtures.
VerifyReport run_acceptance();

Json verify_report_json(const VerifyReport& rep);

}  // namespace toric
