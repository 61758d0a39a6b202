// trace.hpp — time series of complex probability amplitudes on a uniform grid.
//
// CSV layout (fixed): t, re_c1, im_c1, re_c2, im_c2[, re_c3, im_c3]
// Values are written with 17 significant digits so identical inputs produce
// byte-identical files.

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "tsslab/complex_linalg.hpp"

namespace tsslab {

struct TimeGrid {
    double t_start{};
    double t_end{};
    std::size_t n{}; // >= 2, uniform

    double dt() const { return (t_end - t_start) / static_cast<double>(n - 1); }
    double at(std::size_t i) const { return t_start + dt() * static_cast<double>(i); }
};

// Throws validation_error unless t_end > t_start, n >= 2 and all finite.
void require_valid(const TimeGrid& grid);

class AmplitudeTrace {
public:
    AmplitudeTrace() = default;
    AmplitudeTrace(std::vector<double> times, std::vector<Complex> c1, std::vector<Complex> c2,
                   std::vector<Complex> c3 = {});

    std::size_t size() const { return t_.size(); }
    bool has_third() const { return !c3_.empty(); }

    const std::vector<double>& t() const { return t_; }
    const std::vector<Complex>& c1() const { return c1_; }
    const std::vector<Complex>& c2() const { return c2_; }
    const std::vector<Complex>& c3() const { return c3_; }

    bool uniform(double rel_tol = 1e-9) const;
    // Grid step; throws validation_error when the grid is not uniform.
    double dt(double rel_tol = 1e-9) const;

    void to_csv(std::ostream& os) const;
    static AmplitudeTrace from_csv(std::istream& is);

private:
    std::vector<double> t_;
    std::vector<Complex> c1_, c2_, c3_;
};

// Deterministic numeric formatting shared by every CSV/JSON writer ("%.17g").
std::string format_number(double v);

} // namespace tsslab
