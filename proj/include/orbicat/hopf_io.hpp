#ifndef ORBICAT_HOPF_IO_HPP
#define ORBICAT_HOPF_IO_HPP

#include <string>

#include "orbicat/hopf.hpp"

namespace orbicat {

// Serialize the structure tensors to a stable JSON text.  Scalars appear as
// "p/q" strings when rational and as coefficient-string arrays (power basis
// of the stated conductor) otherwise; round trips are value-exact.
std::string hopf_to_json(const HopfAlgebra& h);

// Parse the same format.  Shape and scalar syntax are validated strictly;
// throws std::runtime_error with a one-line reason on malformed input.
HopfAlgebra hopf_from_json(const std::string& text);

}  // namespace orbicat

#endif
