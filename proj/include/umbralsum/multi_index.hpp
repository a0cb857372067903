#pragma once

#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "umbralsum/rational.hpp"

namespace umbralsum {

// Ordered exponent tuple (n_1, ..., n_r), r >= 1, entries >= 0.
struct MultiIndex {
    std::vector<Nat> n;

    explicit MultiIndex(std::vector<Nat> exps) : n(std::move(exps)) {
        if (n.empty()) throw std::invalid_argument("MultiIndex: depth must be >= 1");
    }
    MultiIndex(std::initializer_list<Nat> exps) : MultiIndex(std::vector<Nat>(exps)) {}

    Nat depth() const { return n.size(); }
    Nat weight() const { return std::accumulate(n.begin(), n.end(), Nat{0}); }

    // parses "n1,n2,...,nr" (non-negative integers)
    static MultiIndex parse(const std::string& s) {
        std::vector<Nat> exps;
        std::size_t pos = 0;
        while (pos <= s.size()) {
            auto comma = s.find(',', pos);
            if (comma == std::string::npos) comma = s.size();
            const std::string tok = s.substr(pos, comma - pos);
            if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos) {
                throw std::invalid_argument("MultiIndex: bad component '" + tok + "'");
            }
            exps.push_back(std::stoull(tok));
            pos = comma + 1;
            if (comma == s.size()) break;
        }
        return MultiIndex(std::move(exps));
    }

    std::string toString() const {
        std::string s;
        for (std::size_t i = 0; i < n.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(n[i]);
        }
        return s;
    }

    friend bool operator==(const MultiIndex& a, const MultiIndex& b) { return a.n == b.n; }
};

}  // namespace umbralsum
