#pragma once

#include "oracles.hpp"
#include "slideocam/types.hpp"

inline slideocam::DesignParams to_params(const oracle::Design& d, int m = 2) {
    return slideocam::DesignParams{d.p, d.n, m, d.e, d.a4, d.b};
}

inline oracle::Design to_design(const slideocam::DesignParams& p) { return {p.p, p.n, p.e, p.a4, p.b}; }

inline slideocam::DesignParams make_params(double p, int n, int m, double e, double a4, double b = 4.25) {
    return slideocam::DesignParams{p, n, m, e, a4, b};
}
