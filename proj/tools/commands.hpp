#pragma once

#include "pascalrank/lacunary.hpp"
#include "pascalrank/selection.hpp"

#include <string>
#include <vector>

namespace pascalrank::cli {

struct Format {
    bool json = false;
    unsigned places = 4;
};

/// Comma-separated non-negative integers, whitespace tolerated; the empty
/// string is the empty selection. Errors name the flag and the position.
Selection parse_selection(const std::string& text, const std::string& flag);

/// Comma-separated exact rationals ("1", "-3/7", "0.25").
std::vector<Rational> parse_data(const std::string& text, const std::string& flag);

std::string run_matrix(const Selection& r, const Selection& c, const Format& fmt);
std::string run_subpair(const Selection& r, const Selection& c, const Format& fmt);
std::string run_rank(const Selection& r, const Selection& c, const Format& fmt);
std::string run_invertible(const Selection& r, const Selection& c, const Format& fmt);
std::string run_fit(const Selection& r, const Selection& c, const std::vector<Rational>& y,
                    const Format& fmt);

} // namespace pascalrank::cli
