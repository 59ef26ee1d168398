#ifndef KCOVER_SURFACE_HPP
#define KCOVER_SURFACE_HPP

#include <stdexcept>
#include <string>

namespace kcover {

/// A closed surface: S_g (orientable, genus g >= 0) or N_k (nonorientable,
/// genus k >= 1, i.e. the sphere with k crosscaps).
struct Surface {
    bool orientable = true;
    int genus = 0;

    int euler_genus() const { return orientable ? 2 * genus : genus; }

    bool operator==(const Surface& o) const {
        return orientable == o.orientable && genus == o.genus;
    }
};

inline constexpr const char* kSurfaceGrammar =
    "sphere | torus | s<g> | n<k>   (g >= 0, k >= 1)";

/// Accepts "sphere", "torus", "s<g>" and "n<k>" (case-insensitive).
/// Throws std::invalid_argument otherwise.
Surface parse_surface(const std::string& s);

/// "s0", "s1", "s2", ..., "n1", "n2", ... (the parser's canonical spellings).
std::string format_surface(const Surface& s);

}  // namespace kcover

#endif
