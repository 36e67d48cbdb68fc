#pragma once

#include <iosfwd>
#include <string>

#include "cdc/construction.hpp"

namespace cdc {

/// Plain-text code file format.
///
/// Header line:   q v k N d p e c0 c1 ... ce
/// where q = p^e and c0..ce are the coefficients (low degree first, values
/// in [0,p)) of the monic modulus polynomial defining GF(q) over GF(p).
/// Then N blocks separated by blank lines; each block is the k x v rref
/// representative of one codeword, one row per line, entries as integers in
/// [0,q) using the base-p little-endian element encoding.
/// d = 0 declares no distance claim (codes with at most one codeword).
void write_code_file(std::ostream& out, const SubspaceCode& code);
SubspaceCode read_code_file(std::istream& in);

void write_code_file(const std::string& path, const SubspaceCode& code);
SubspaceCode read_code_file_path(const std::string& path);

}  // namespace cdc
