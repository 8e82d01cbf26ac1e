#pragma once

#include "bigalg/rational.hpp"

#include <cstdint>
#include <random>

namespace bigalg {

/// Seeded source of "generic" rational test points drawn from {-9..9} \ {0}.
/// The mapping from engine output is explicit so results do not depend on the
/// standard library's distribution implementation.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    Rational small_nonzero()
    {
        std::uint64_t r = engine_() % 18;
        long v = static_cast<long>(r) - 9;
        return Rational(v >= 0 ? v + 1 : v);
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace bigalg
