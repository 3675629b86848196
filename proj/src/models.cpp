#include "brauerlab/models.hpp"

#include <map>
#include <stdexcept>

namespace brauerlab {

namespace {

bool is_prime_power_ll(long long q) {
    if (q < 2) return false;
    for (long long p = 2; p * p <= q; ++p) {
        if (q % p != 0) continue;
        while (q % p == 0) q /= p;
        return q == 1;
    }
    return true;
}

// connectivity of the multigraph given by the edge list (union-find on labels)
bool edge_list_connected(const std::vector<std::pair<std::string, std::string>>& edges) {
    if (edges.empty()) return true;
    std::map<std::string, std::string> parent;
    auto find = [&parent](std::string v) {
        while (parent[v] != v) v = parent[v];
        return v;
    };
    for (const auto& [u, v] : edges) {
        parent.try_emplace(u, u);
        parent.try_emplace(v, v);
    }
    for (const auto& [u, v] : edges) parent[find(u)] = find(v);
    std::string root = find(edges.front().first);
    for (const auto& [v, _] : parent)
        if (find(v) != root) return false;
    return true;
}

}  // namespace

void validate_fibre(const SpecialFibre& fb) {
    if (fb.components.empty())
        throw std::domain_error("SpecialFibre: at least one component required");
    for (const auto& c : fb.components)
        if (c.e < 1 || c.f < 1)
            throw std::domain_error("SpecialFibre: multiplicities and degrees must be >= 1");
    if (fb.dual_graph && !edge_list_connected(*fb.dual_graph))
        throw std::domain_error("SpecialFibre: dual graph must be connected");
}

Integer index_from_model(const SpecialFibre& fb) {
    validate_fibre(fb);
    Integer g = 0;
    for (const auto& c : fb.components) g = gcd(g, to_integer(c.e) * to_integer(c.f));
    return g;
}

SpecialFibre glue_circle(const GluingSpec& spec) {
    if (spec.n < 2)
        throw std::domain_error("glue_circle: circle length must be >= 2 (self-gluing at one "
                                "point is a different construction)");
    if (!is_prime_power_ll(spec.q))
        throw std::domain_error("glue_circle: q must be a prime power");
    if (spec.genus_c < 0) throw std::domain_error("glue_circle: genus must be >= 0");

    SpecialFibre fb;
    fb.components.push_back(FibreComponent{"C", 1, spec.n});
    std::vector<std::pair<std::string, std::string>> edges;
    for (long long i = 0; i < spec.n; ++i)
        edges.emplace_back("C." + std::to_string(i), "C." + std::to_string((i + 1) % spec.n));
    fb.dual_graph = std::move(edges);
    return fb;
}

bool obstructs_section(const SpecialFibre& fb, const Integer& p) {
    if (!is_prime(p)) throw std::invalid_argument("obstructs_section: p must be prime");
    return !is_power_of(index_from_model(fb), p);
}

}  // namespace brauerlab
