#pragma once

#include <stdexcept>

namespace stark {

// Uniform truncation of the line with Dirichlet boundaries at a and b.
// Interior node i (0-based) sits at a + (i+1)*h, h = (b-a)/(m+1).
struct Grid1D {
    double a;
    double b;
    int m;

    Grid1D(double a_, double b_, int m_) : a(a_), b(b_), m(m_) {
        if (!(a < b)) throw std::invalid_argument("Grid1D: requires a < b");
        if (m < 3) throw std::invalid_argument("Grid1D: requires m >= 3");
    }

    double h() const { return (b - a) / (m + 1); }
    double node(int i) const { return a + (i + 1) * h(); }
    // Midpoint between node i-1 and node i; i ranges 0..m (boundaries included).
    double midpoint(int i) const { return a + (i + 0.5) * h(); }
};

}  // namespace stark
