// Acceptance suite: one pass/fail line per criterion.

#include <cstdio>
#include <cstring>
#include <iostream>

#include "congrucut/verify.hpp"

int main(int argc, char** argv) {
    bool fast = false;
    int only = 0;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--fast") == 0) fast = true;
        else if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc)
            only = std::atoi(argv[++i]);
        else {
            std::fprintf(stderr, "usage: acceptance_tests [--fast] [--criterion N]\n");
            return 1;
        }
    }

    bool all_pass = true;
    auto report = [&](const congrucut::CriterionResult& c) {
        std::printf("%s  criterion %d (%s): %s\n", c.pass ? "PASS" : "FAIL", c.id,
                    c.name.c_str(), c.detail.c_str());
        std::fflush(stdout);
        all_pass = all_pass && c.pass;
    };

    if (only > 0) {
        report(congrucut::run_criterion(only, fast, std::cerr));
    } else {
        for (int id = 1; id <= 7; ++id)
            report(congrucut::run_criterion(id, fast, std::cerr));
    }
    return all_pass ? 0 : 1;
}
