#pragma once

namespace knotcount {

// Runtime guards. Defaults keep any default CLI invocation in the seconds
// range; all of them are overridable by flag or environment variable.
struct Caps {
    long long state_cap = 10'000'000; // coloring-steps budget for enumeration
    int order_cap = 5040;             // largest group a family builder will emit
    int x_cap = 20;                   // max |X| in a finite-type sum (2^|X| variants)
};

} // namespace knotcount
