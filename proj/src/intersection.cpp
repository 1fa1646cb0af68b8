#include <qalg/intersection.hpp>

#include <qalg/bar.hpp>

namespace qalg {

std::map<int, int> derived_intersection(const CoordinateRing& r, const std::vector<Poly>& gens_y,
                                        const std::vector<Poly>& gens_z, int i, int q)
{
    auto structure_ring = [&](const std::vector<Poly>& gens) {
        if (gens.empty())
            return std::make_shared<GradedModule>(r.ring_module(0, q));
        return std::make_shared<GradedModule>(
            quotient_module(ideal_submodule(r, gens, 0, q)).module);
    };
    ModulePtr oy = structure_ring(gens_y);
    ModulePtr oz = structure_ring(gens_z);

    std::map<int, int> out;
    for (const auto& [d, h] : tor_bar(oy, oz, i))
        if (d <= q)
            out[d] = h;
    return out;
}

} // namespace qalg
