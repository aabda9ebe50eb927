#pragma once

// Readable gtest failure output for library types.

#include <liouville/killing.hpp>
#include <liouville/matrix.hpp>
#include <liouville/poly.hpp>
#include <liouville/weights.hpp>

#include <ostream>

namespace liouville {

inline void PrintTo(const Weight& w, std::ostream* os) { *os << w.str(); }
inline void PrintTo(const Poly& p, std::ostream* os) { *os << p.str(); }
inline void PrintTo(const PolyVectorField& f, std::ostream* os) { *os << f.str(); }
inline void PrintTo(const RationalMatrix& m, std::ostream* os) { m.write_triplets(*os); }

inline void PrintTo(const IsotypicSum& s, std::ostream* os) {
    for (const auto& [w, m] : s.terms()) *os << m << "x" << w.str() << ' ';
}

} // namespace liouville
