#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "edgemon/weight.hpp"

namespace edgemon {

// Reproducible random source. The engine is std::mt19937_64, whose output
// sequence is fixed by the C++ standard; the derived draws below use plain
// modular reduction instead of <random> distributions, whose algorithms are
// implementation-defined. Any reimplementation of these three rules
// reproduces the generated instances bit for bit.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    // Uniform on [low, high]: low + next() % (high - low + 1).
    std::int64_t uniform(std::int64_t low, std::int64_t high) {
        const auto span = static_cast<std::uint64_t>(high - low) + 1;
        return low + static_cast<std::int64_t>(next() % span);
    }

    // True with probability p = num/den: next() % den < num.
    bool bernoulli(const Weight& p) {
        return static_cast<std::int64_t>(next() % static_cast<std::uint64_t>(p.denominator())) < p.numerator();
    }

    // Fisher-Yates from the back: for i = n-1 down to 1, swap i with uniform(0, i).
    template <typename T>
    void shuffle(std::vector<T>& items) {
        for (std::size_t i = items.size(); i > 1; --i) {
            const auto j = static_cast<std::size_t>(uniform(0, static_cast<std::int64_t>(i) - 1));
            std::swap(items[i - 1], items[j]);
        }
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace edgemon
