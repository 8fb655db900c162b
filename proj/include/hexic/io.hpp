/*
 * io.hpp
 *
 * File formats:
 *
 *   chirp JSON   {"terms":[{"c":[re,im],"b":[re,im],"w":[re,im]}, ...]}
 *   signal CSV   header "x,re,im", rows in increasing x on a uniform centered grid
 *   TorusPoly    {"theta":..,"order":"V_then_U","coeffs":[{"m":..,"n":..,"re":..,"im":..}]}
 *   CrossedPoly  {"theta":..,"order":..,"parts":[{"j":..,"coeffs":[...]}]}
 *
 * Numbers are written with 17 significant digits.  Parsers throw ParseError
 * with a one-line diagnostic.
 */

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "hexic/chirp.hpp"
#include "hexic/grid.hpp"
#include "hexic/torus.hpp"

namespace hexic {

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string chirp_to_json(const ChirpSum& f);
/// Rejects malformed documents and terms with Re b <= 0 ("term 3: ...").
ChirpSum chirp_from_json(std::string_view text);

std::string signal_to_csv(const Signal& s);
/// Validates the header, an even row count, increasing x, uniform spacing
/// (relative tolerance 1e-12) and centering x_j = (j - n/2) h.
Signal signal_from_csv(std::string_view text);

/// A non-empty convention_id is written as "convention".
std::string torus_to_json(const TorusPoly& a, std::string_view convention_id = {});
TorusPoly torus_from_json(std::string_view text);
std::string crossed_to_json(const CrossedPoly& a, std::string_view convention_id = {});
CrossedPoly crossed_from_json(std::string_view text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

}  // namespace hexic
