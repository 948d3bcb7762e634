#pragma once

#include "wreath/rep/meataxe.hpp"

namespace wreath {

/// One semisimple layer: (index into LoewyReport::simples, multiplicity).
struct Layer {
    std::vector<std::pair<std::size_t, std::size_t>> parts;
    std::size_t dim = 0;
    bool is_simple() const { return parts.size() == 1 && parts[0].second == 1; }
};

struct LoewyReport {
    std::vector<GModule> simples;
    /// Top to bottom: M/rad M, rad M/rad^2 M, ...
    std::vector<Layer> radical_layers;
    /// Bottom to top: soc M, soc^2 M/soc M, ...
    std::vector<Layer> socle_layers;
    /// rad^i M and soc^i M as row bases in the coordinates of M.
    std::vector<BitMatrix> radical_series;
    std::vector<BitMatrix> socle_series;
    bool uniserial = false;

    std::size_t loewy_length() const { return radical_layers.size(); }
    /// Layers written top to bottom with the given names for the simples,
    /// e.g. "k/phi/theta/phi/k"; composite layers as "(k+S)".
    std::string radical_string(const std::vector<std::string>& names) const;
};

/// Intersection of the kernels of all maps onto the given simples.
BitMatrix radical(const GModule& m, const std::vector<GModule>& simples);
/// Sum of the images of all maps from the given simples.
BitMatrix socle(const GModule& m, const std::vector<GModule>& simples);
/// Multiplicity of each simple in a semisimple module.
Layer semisimple_layer(const GModule& l, const std::vector<GModule>& simples);

/// Radical and socle series. The simples default to the composition factors
/// of m.
LoewyReport loewy(const GModule& m, std::uint64_t seed = 0, const std::vector<GModule>* simples = nullptr);

}  // namespace wreath
