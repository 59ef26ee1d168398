#include "surface.hpp"

#include <algorithm>
#include <cctype>

namespace kcover {

Surface parse_surface(const std::string& raw) {
    std::string s = raw;
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    if (s == "sphere") return {true, 0};
    if (s == "torus") return {true, 1};
    if (s.size() >= 2 && (s[0] == 's' || s[0] == 'n')) {
        bool all_digits = std::all_of(s.begin() + 1, s.end(), [](unsigned char c) {
            return std::isdigit(c);
        });
        if (all_digits && s.size() <= 4) {
            int g = std::stoi(s.substr(1));
            if (s[0] == 's') return {true, g};
            if (g >= 1) return {false, g};
        }
    }
    throw std::invalid_argument("bad surface '" + raw + "', expected " +
                                kSurfaceGrammar);
}

std::string format_surface(const Surface& s) {
    return (s.orientable ? "s" : "n") + std::to_string(s.genus);
}

}  // namespace kcover
