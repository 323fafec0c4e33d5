// Prints the classification table for the rational proper maps from the
// 2-ball to the 3-ball: each map, its homogenization, and the generic
// initial ideal of the ideal generated by the homogenized components.

#include <iostream>

#include "ginmap/ginmap.hpp"

using namespace ginmap;

int main() {
    const GinConfig cfg;
    for (const std::string name : {"faran-1", "faran-2", "faran-3", "faran-4"}) {
        const RationalMap f = catalog(name);
        const HomogenizedMap h = homogenize_map(f);
        std::cout << name << "\n  map:         (";
        for (std::size_t k = 0; k < f.numerators.size(); ++k)
            std::cout << (k ? ", " : "") << f.numerators[k].to_string();
        std::cout << ")\n  homogenized: (";
        for (std::size_t k = 0; k < h.components.size(); ++k)
            std::cout << (k ? ", " : "") << h.components[k].to_string();
        const MonomialIdeal gin =
            gin_ideal(component_ideal(h), MonomialOrder::GrevLex, cfg);
        std::cout << ")\n  gin:         " << gin.to_string() << "\n\n";
    }
    return 0;
}
