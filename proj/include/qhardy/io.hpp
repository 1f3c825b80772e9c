#pragma once

// JSON and CSV encodings of the library's value types.
//
//   Quaternion     [w, x, y, z]
//   UnitImaginary  [x, y, z]
//   QSeries        {"degree": N, "coeffs": [[w,x,y,z], ...]}   (exactly N+1 entries)
//   SplitPair      {"I": [..], "J": [..], "F": [[re,im],...], "G": [[re,im],...]}
//   ZeroSet        {"isolated": [[w,x,y,z],...], "spheres": [[x,y],...]}
//   GramSystem     {"n": n, "G": [[[w,x,y,z],...],...], "beta": [...]}   (row-major)
//
// Decoders throw InvalidArgument on malformed input.

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "qhardy/inner.hpp"
#include "qhardy/outer.hpp"
#include "qhardy/quat.hpp"
#include "qhardy/series.hpp"
#include "qhardy/splitting.hpp"

namespace qhardy::io {

using json = nlohmann::json;

json to_json(const Quaternion& q);
json to_json(const UnitImaginary& I);
json to_json(const QSeries& f);
json to_json(const SplitPair& p);
json to_json(const ZeroSet& z);
json to_json(const GramSystem& g);
json to_json(const InnerReport& r);
json to_json(const ApproximantReport& r);

Quaternion quaternion_from_json(const json& j);
UnitImaginary unit_imaginary_from_json(const json& j);
QSeries series_from_json(const json& j);
SplitPair split_pair_from_json(const json& j);
ZeroSet zero_set_from_json(const json& j);

QSeries read_series_file(const std::string& path);

/// Numbers with 17 significant digits.
std::string format_number(double v);

/// "n,dist2,p0_w,p0_x,p0_y,p0_z,basis_mass"
std::string approximant_csv_header();
std::string approximant_csv_row(const ApproximantReport& r);

}  // namespace qhardy::io
