#include "tsslab/trace.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

namespace tsslab {

void require_valid(const TimeGrid& grid) {
    if (!std::isfinite(grid.t_start) || !std::isfinite(grid.t_end))
        throw validation_error("time grid: non-finite bound");
    if (grid.n < 2) throw validation_error("time grid: need n >= 2 points");
    if (!(grid.t_end > grid.t_start)) throw validation_error("time grid: t_end must exceed t_start");
}

AmplitudeTrace::AmplitudeTrace(std::vector<double> times, std::vector<Complex> c1,
                               std::vector<Complex> c2, std::vector<Complex> c3)
    : t_(std::move(times)), c1_(std::move(c1)), c2_(std::move(c2)), c3_(std::move(c3)) {
    if (t_.size() != c1_.size() || t_.size() != c2_.size() ||
        (!c3_.empty() && c3_.size() != t_.size()))
        throw validation_error("amplitude trace: column length mismatch");
    if (t_.size() < 2) throw validation_error("amplitude trace: need at least 2 samples");
}

bool AmplitudeTrace::uniform(double rel_tol) const {
    const double step = (t_.back() - t_.front()) / static_cast<double>(t_.size() - 1);
    if (!(step > 0.0)) return false;
    for (std::size_t i = 1; i < t_.size(); ++i) {
        if (std::abs((t_[i] - t_[i - 1]) - step) > rel_tol * step) return false;
    }
    return true;
}

double AmplitudeTrace::dt(double rel_tol) const {
    if (!uniform(rel_tol)) throw validation_error("amplitude trace: non-uniform time grid");
    return (t_.back() - t_.front()) / static_cast<double>(t_.size() - 1);
}

std::string format_number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void AmplitudeTrace::to_csv(std::ostream& os) const {
    os << (has_third() ? "t,re_c1,im_c1,re_c2,im_c2,re_c3,im_c3\n"
                       : "t,re_c1,im_c1,re_c2,im_c2\n");
    for (std::size_t i = 0; i < t_.size(); ++i) {
        os << format_number(t_[i]) << ',' << format_number(c1_[i].real()) << ','
           << format_number(c1_[i].imag()) << ',' << format_number(c2_[i].real()) << ','
           << format_number(c2_[i].imag());
        if (has_third())
            os << ',' << format_number(c3_[i].real()) << ',' << format_number(c3_[i].imag());
        os << '\n';
    }
}

AmplitudeTrace AmplitudeTrace::from_csv(std::istream& is) {
    std::string line;
    if (!std::getline(is, line)) throw validation_error("trace csv: empty input");

    std::vector<double> t;
    std::vector<Complex> c1, c2, c3;
    bool third = line.find("re_c3") != std::string::npos;

    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::istringstream row(line);
        std::vector<double> cols;
        std::string cell;
        while (std::getline(row, cell, ',')) cols.push_back(std::stod(cell));
        if (cols.size() != (third ? 7u : 5u))
            throw validation_error("trace csv: unexpected column count");
        t.push_back(cols[0]);
        c1.emplace_back(cols[1], cols[2]);
        c2.emplace_back(cols[3], cols[4]);
        if (third) c3.emplace_back(cols[5], cols[6]);
    }
    return AmplitudeTrace(std::move(t), std::move(c1), std::move(c2), std::move(c3));
}

} // namespace tsslab
