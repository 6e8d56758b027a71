// Integration gate: runs every verification criterion on the built-in
// fixtures and prints one line per criterion. Exits nonzero if any fails.

#include "toric/verify.hpp"

#include <iostream>

int main()
{
    toric::VerifyReport rep;
    try {
        rep = toric::run_acceptance();
    } catch (const std::exception& e) {
        std::cout << "[FAIL] verification suite aborted: " << e.what() << std::endl;
        return 1;
    }
    for (const auto& c : rep.criteria) {
        std::cout << (c.pass ? "[PASS] " : "[FAIL] ") << "criterion " << c.id << ": " << c.name;
        if (!c.details.empty())
            std::cout << " -- " << c.details;
        std::cout << std::endl;
    }
    std::cout << (rep.all_pass ? "ALL CRITERIA PASSED" : "SOME CRITERIA FAILED") << std::endl;
    return rep.all_pass ? 0 : 1;
}
