#include "qchar/explorer.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <stdexcept>

namespace qchar {

std::vector<Monomial> ExploreResult::extra_dominant(const Monomial& head) const {
    std::vector<Monomial> out;
    for (const Monomial& m : certified)
        if (m != head && is_dominant(m)) out.push_back(m);
    return out;
}

std::optional<Monomial> higher_source(const CartanData& cd, const Monomial& head, const Monomial& mp, int j,
                                      const ExploreOptions& opts) {
    auto f = factor_over_A(cd, mp, head);
    if (!f) throw std::invalid_argument(to_string(mp) + " is not below " + to_string(head));

    std::vector<std::pair<int, int>> slots;  // (exponent, available v)
    for (const auto& [key, v] : f->v)
        if (key.first == j) slots.emplace_back(key.second, v);
    if (slots.empty()) return std::nullopt;

    std::size_t count = 1;
    for (const auto& slot : slots) {
        count *= static_cast<std::size_t>(slot.second + 1);
        if (count > opts.max_candidates) return head;
    }

    std::vector<int> w(slots.size(), 0);
    while (true) {
        std::size_t pos = 0;
        while (pos < w.size() && w[pos] == slots[pos].second) w[pos++] = 0;
        if (pos == w.size()) break;
        ++w[pos];

        Monomial higher = mp;
        std::vector<int> removed;
        for (std::size_t s = 0; s < slots.size(); ++s) {
            if (w[s] == 0) continue;
            higher.multiply(a_monomial(cd, j, slots[s].first), w[s]);
            removed.insert(removed.end(), static_cast<std::size_t>(w[s]), slots[s].first);
        }
        if (!is_j_dominant(higher, j)) continue;
        std::sort(removed.begin(), removed.end());
        for (const LPiece& p : l_pieces(cd, higher, j))
            if (p.a_exps == removed) return higher;
    }
    return std::nullopt;
}

namespace {

void run_step(const CartanData& cd, const Monomial& head, const ExploreStep& step, const ExploreOptions& opts,
              ExploreResult& out, std::vector<Monomial>* fresh = nullptr) {
    StepReport report{step.m, step.node, false, std::nullopt, 0};
    report.blocker = higher_source(cd, head, step.m, step.node, opts);
    report.certified = !report.blocker;
    QCharacter piece = l_expansion(cd, step.m, step.node);
    for (const auto& [mon, k] : piece.sorted()) {
        if (report.certified) {
            if (out.certified.insert(mon).second) {
                out.heuristic.erase(mon);
                ++report.added;
                if (fresh) fresh->push_back(mon);
            }
        } else if (!out.certified.count(mon) && out.heuristic.insert(mon).second) {
            ++report.added;
        }
    }
    out.steps.push_back(std::move(report));
}

}  // namespace

ExploreResult explore(const CartanData& cd, const Monomial& head, const std::vector<ExploreStep>& script,
                      const ExploreOptions& opts) {
    check_nodes(cd, head);
    if (!is_dominant(head)) throw std::invalid_argument("explore expects a dominant head monomial");
    ExploreResult out;
    out.certified.insert(head);
    for (const ExploreStep& step : script) {
        check_nodes(cd, step.m);
        if (step.node < 1 || step.node > cd.rank) throw std::invalid_argument("explore: node out of range");
        if (!out.certified.count(step.m))
            throw std::invalid_argument("explore: step monomial " + to_string(step.m) + " is not certified");
        if (!is_j_dominant(step.m, step.node))
            throw std::invalid_argument("explore: " + to_string(step.m) + " is not " + std::to_string(step.node) +
                                        "-dominant");
        run_step(cd, head, step, opts, out);
    }
    return out;
}

ExploreResult explore_auto(const CartanData& cd, const Monomial& head, const ExploreOptions& opts) {
    check_nodes(cd, head);
    if (!is_dominant(head)) throw std::invalid_argument("explore expects a dominant head monomial");
    ExploreResult out;
    out.certified.insert(head);
    std::deque<Monomial> todo{head};
    while (!todo.empty()) {
        Monomial mp = std::move(todo.front());
        todo.pop_front();
        for (int j = 1; j <= cd.rank; ++j) {
            if (!is_j_dominant(mp, j) || mp.restrict_to(j).is_unit()) continue;
            if (out.certified.size() >= opts.max_monomials) {
                out.cap_hit = true;
                return out;
            }
            if (higher_source(cd, head, mp, j, opts)) continue;
            std::vector<Monomial> fresh;
            run_step(cd, head, {mp, j}, opts, out, &fresh);
            todo.insert(todo.end(), fresh.begin(), fresh.end());
        }
    }
    return out;
}

std::vector<ExploreStep> parse_script(const std::string& text, const Monomial& head) {
    std::vector<ExploreStep> steps;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        auto semi = line.find(';');
        if (semi == std::string::npos)
            throw std::invalid_argument("script line " + std::to_string(lineno) + ": expected 'monomial ; node'");
        std::string mon = line.substr(0, semi);
        std::string node = line.substr(semi + 1);
        auto trim = [](std::string s) {
            auto b = s.find_first_not_of(" \t\r");
            auto e = s.find_last_not_of(" \t\r");
            return b == std::string::npos ? std::string{} : s.substr(b, e - b + 1);
        };
        mon = trim(mon);
        node = trim(node);
        ExploreStep step;
        try {
            step.m = mon == "head" ? head : parse_monomial(mon);
            std::size_t used = 0;
            step.node = std::stoi(node, &used);
            if (used != node.size()) throw std::invalid_argument("bad node");
        } catch (const ParseError& e) {
            throw std::invalid_argument("script line " + std::to_string(lineno) + ": " + e.what());
        } catch (const std::logic_error&) {
            throw std::invalid_argument("script line " + std::to_string(lineno) + ": bad node '" + node + "'");
        }
        steps.push_back(std::move(step));
    }
    return steps;
}

}  // namespace qchar
