#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "qchar/fm.hpp"

namespace qchar {

/// Expand L_node(m) inside the character of L(head).
struct ExploreStep {
    Monomial m;
    int node = 0;
};

struct ExploreOptions {
    std::size_t max_monomials = 20000;
    std::size_t max_candidates = 100000;  // per precondition check
};

struct StepReport {
    Monomial m;
    int node = 0;
    bool certified = false;
    std::optional<Monomial> blocker;  // a possible higher source of m
    std::size_t added = 0;
};

struct ExploreResult {
    std::set<Monomial> certified;
    std::set<Monomial> heuristic;  // produced by steps whose precondition could not be verified
    std::vector<StepReport> steps;
    bool cap_hit = false;

    /// Certified dominant monomials other than `head`.
    std::vector<Monomial> extra_dominant(const Monomial& head) const;
};

/// Looks for m'' > mp with m'' <= head, m'' j-dominant and mp a term of L_j(m'').
/// Returns the first such m'' found, or nullopt if none exists. A failed
/// enumeration (candidate cap) is reported as the head itself.
std::optional<Monomial> higher_source(const CartanData& cd, const Monomial& head, const Monomial& mp, int j,
                                      const ExploreOptions& opts = {});

/// Runs a scripted chain. Throws std::invalid_argument when a step monomial is
/// not yet certified or is not j-dominant.
ExploreResult explore(const CartanData& cd, const Monomial& head, const std::vector<ExploreStep>& script,
                      const ExploreOptions& opts = {});

/// Breadth-first chaining from the head over every certifiable (monomial, node) pair.
ExploreResult explore_auto(const CartanData& cd, const Monomial& head, const ExploreOptions& opts = {});

/// Parses "monomial ; node" lines (blank lines and '#' comments skipped).
/// The word `head` stands for the highest monomial.
std::vector<ExploreStep> parse_script(const std::string& text, const Monomial& head);

}  // namespace qchar
