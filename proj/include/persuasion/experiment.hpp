#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "persuasion/errors.hpp"
#include "persuasion/rational.hpp"

namespace persuasion {

/// One receiver's message. Symbols are small non-negative integers; 0 is the
/// conventional "x" recommendation, 1 the "y" one, larger values are symbols
/// minted by transforms.
using Message = int;

/// A signal assigns one message per receiver.
using SignalVec = std::vector<Message>;

constexpr Message msg_x = 0;
constexpr Message msg_y = 1;

struct ExperimentRow {
    SignalVec s;
    Rational p_x;  // probability of s conditional on state X
    Rational p_y;  // conditional on state Y
};

/// Finite-support experiment: per-receiver alphabets plus the signals sent
/// with positive probability in at least one state.
struct Experiment {
    std::vector<std::vector<Message>> alphabets;
    std::vector<ExperimentRow> rows;

    int n() const { return static_cast<int>(alphabets.size()); }

    static Experiment make(std::vector<std::vector<Message>> alphabets,
                           std::vector<ExperimentRow> rows) {
        const int n = static_cast<int>(alphabets.size());
        if (n < 1) throw Error(Errc::invalid_experiment, "experiment needs at least one receiver");
        for (auto& a : alphabets) {
            std::sort(a.begin(), a.end());
            if (a.empty() || std::adjacent_find(a.begin(), a.end()) != a.end() || a.front() < 0)
                throw Error(Errc::invalid_experiment, "alphabet must be distinct non-negative symbols");
        }
        Rational sum_x(0), sum_y(0);
        std::map<SignalVec, int> seen;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            const auto& row = rows[r];
            if (static_cast<int>(row.s.size()) != n)
                throw Error(Errc::invalid_experiment, "signal length does not match receiver count");
            for (int i = 0; i < n; ++i)
                if (!std::binary_search(alphabets[i].begin(), alphabets[i].end(), row.s[i]))
                    throw Error(Errc::invalid_experiment,
                                "message " + std::to_string(row.s[i]) + " not in alphabet of receiver " +
                                    std::to_string(i));
            if (row.p_x < Rational(0) || row.p_y < Rational(0))
                throw Error(Errc::invalid_experiment, "negative probability");
            if (row.p_x.is_zero() && row.p_y.is_zero())
                throw Error(Errc::invalid_experiment,
                            "row " + std::to_string(r) + " has zero mass in both states");
            if (!seen.emplace(row.s, static_cast<int>(r)).second)
                throw Error(Errc::invalid_experiment, "duplicate signal in support");
            sum_x += row.p_x;
            sum_y += row.p_y;
        }
        if (sum_x != Rational(1) || sum_y != Rational(1))
            throw Error(Errc::invalid_experiment,
                        "state-conditional probabilities must each sum to 1 (got X: " + sum_x.str() +
                            ", Y: " + sum_y.str() + ")");
        return Experiment{std::move(alphabets), std::move(rows)};
    }

    int find_row(const SignalVec& s) const {
        for (std::size_t r = 0; r < rows.size(); ++r)
            if (rows[r].s == s) return static_cast<int>(r);
        return -1;
    }
};

/// Binary alphabets {x, y} for every one of n receivers.
inline std::vector<std::vector<Message>> binary_alphabets(int n) {
    return std::vector<std::vector<Message>>(n, {msg_x, msg_y});
}

} // namespace persuasion
