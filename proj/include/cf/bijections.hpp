#pragma once

#include "cf/path.hpp"

#include <vector>

namespace cf::bijections {

// Schroeder paths are Q(k,l,1,2,0) staying nonnegative. The two maps below
// exchange "no flat on the x-axis" with "at least one flat on the x-axis",
// preserving semi-length; they are mutually inverse.

// Needs a nonempty Schroeder path with no flat on the axis. The first
// return-to-axis segment loses its bounding up/down steps and a flat step is
// inserted after it.
Path schroder_flatten(const Path& p);

// Needs a Schroeder path with at least one flat on the axis. The rightmost
// axis flat is removed and the part before it is elevated (up step in front,
// down step after).
Path schroder_elevate(const Path& p);

enum class MotzkinCase { leading_flat, leading_du };

// The two classes of Motzkin-family paths ending at height 1 with exactly one
// down-or-flat step starting on or below the axis. leading-flat paths map to
// Riordan paths one step longer, leading-du paths to Riordan paths of the
// same length as the input minus one; both maps append a down step.
Path motzkin_class_map(const Path& q, MotzkinCase c);

struct ColoredStep {
    enum class Kind { up, down, flat };
    Kind kind;
    int color = 0;  // flats: 0 = solid, 1 = dashed
    bool operator==(const ColoredStep&) const = default;
};

// Two steps at a time: UU -> up, DD -> down, UD -> dashed flat, DU -> solid
// flat. The image is a 2-colored free Motzkin path at half the height scale.
std::vector<ColoredStep> pair_to_two_colored(const Path& p);

// Inverse of pair_to_two_colored over the given unit-step set.
Path two_colored_to_pair(const std::vector<ColoredStep>& steps, StepSetPtr set);

std::string colored_word(const std::vector<ColoredStep>& steps);

// Per-block height change divided by m for blocks of m consecutive steps;
// for P(n-1,r,r+1) grouped by m = r+1 the result sums to 1 and feeds the
// cycle method directly.
std::vector<long long> block_group(const Path& p, int m);

}  // namespace cf::bijections
