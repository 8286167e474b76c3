#pragma once

#include <string>

#include "field.hpp"

namespace kneserlab {

enum class Family { A, B, C, D, G };
/// Which class of maximal totally singular subspaces a D_n model uses.
enum class DSelector { plus, minus };

inline char family_letter(Family f) { return "ABCDG"[static_cast<int>(f)]; }

inline Family parse_family(const std::string& s)
{
    if (s == "A") return Family::A;
    if (s == "B") return Family::B;
    if (s == "C") return Family::C;
    if (s == "D") return Family::D;
    if (s == "G") return Family::G;
    throw UsageError("unknown family '" + s + "' (expected A, B, C, D or G)");
}

} // namespace kneserlab
