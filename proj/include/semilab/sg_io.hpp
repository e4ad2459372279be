#ifndef SEMILAB_SG_IO_HPP_
#define SEMILAB_SG_IO_HPP_

#include <iosfwd>
#include <string>

#include "semilab/semigroup.hpp"

namespace semilab {

// Cayley-table text format (".sg"):
//   - '#' starts a comment, anywhere;
//   - first data line: n;
//   - optional data line "zero: i";
//   - n data lines of n space-separated element indices, row x listing
//     x*0 ... x*(n-1).
Semigroup read_sg(std::istream& in);
Semigroup read_sg_string(const std::string& text);
Semigroup read_sg_file(const std::string& path);

std::string write_sg(const Semigroup& s);

// Hash of the normalized table, used as the input digest in reports.
std::string sg_digest(const Semigroup& s);

}  // namespace semilab

#endif  // SEMILAB_SG_IO_HPP_
