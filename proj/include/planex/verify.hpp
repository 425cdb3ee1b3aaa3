#pragma once

#include <string>
#include <vector>

#include "planex/graph.hpp"

namespace planex {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;
};

// The acceptance checks, runnable standalone. `ids` empty runs all eleven;
// `n_max` trims the exhaustive sweeps (criteria 1, 8, 9, 10) for quick runs
// and defaults to the full sizes.
std::vector<CriterionResult> run_acceptance(const std::vector<int>& ids, int n_max = 0);

// Maps a theorem/lemma/claim label ("1.4", "5.2", "3.2", ...) to criterion
// ids; empty when unknown.
std::vector<int> criteria_for_label(const std::string& label);

}  // namespace planex
