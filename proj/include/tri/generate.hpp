#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tri/table.hpp"

namespace tri {

// Random general-position point set: n pairwise-distinct points in
// [-bound, bound]^2 with no collinear triple, built by incremental rejection.
// Deterministic per (n, seed, bound). Throws GenerationExhausted when the
// density heuristic rules the request out or the rejection budget (10^6
// rejected candidates) runs dry.
PointTable generate_points(std::size_t n, std::uint64_t seed, Coord bound);

struct FuzzCounter {
    std::string name;
    std::size_t tested = 0;    // premise satisfied, conclusion evaluated
    std::size_t vacuous = 0;   // premise unsatisfied, implication holds trivially
    std::size_t violations = 0;
};

struct FuzzReport {
    std::size_t trials = 0;
    std::vector<FuzzCounter> counters;

    std::size_t total_violations() const {
        std::size_t total = 0;
        for (const FuzzCounter& c : counters) total += c.violations;
        return total;
    }
};

// Fuzzes the five orientation axioms, the pivot-b mirror of axiom 5 and
// the left-of-segment lemma on random pairwise-distinct general-position
// 5-point tuples within +-bound. Every counter must report zero violations;
// these statements are theorems of the determinant predicate.
FuzzReport fuzz_axioms(std::size_t trials, std::uint64_t seed, Coord bound);

}  // namespace tri
