#ifndef CARLITZLAB_CAPS_HPP
#define CARLITZLAB_CAPS_HPP

#include <cstdint>
#include <cstdlib>
#include <sstream>
#include <string>

namespace carlitzlab {

/// Enumeration caps. Defaults cover every shipped example with room to
/// spare; override per-process via the CARLITZLAB_CAPS environment
/// variable, e.g. CARLITZLAB_CAPS="z1_size=256,lattice_order=200".
struct Caps {
    std::uint64_t max_q = 256;          // largest field size we build tables for
    std::uint64_t factor_deg = 8;       // trial-division factoring degree cap
    std::uint64_t residues = 1u << 20;  // unit_residues / galois_group size cap
    std::uint64_t lattice_order = 128;  // full subgroup-lattice group-order cap
    std::uint64_t psi_degree = 4096;    // largest deg Psi_M materialized
    std::uint64_t acting_group = 512;   // largest group given a full action table
    std::uint64_t z1_space = 1u << 22;  // cocycle assignment search-space cap
    std::uint64_t z1_size = 81;         // |Z^1| cap for radical-lattice subgroup scan
};

namespace detail {

inline Caps parse_caps_env(const char* text) {
    Caps c;
    if (!text) return c;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos) continue;
        std::string key = item.substr(0, eq);
        std::uint64_t val = std::strtoull(item.c_str() + eq + 1, nullptr, 10);
        if (key == "max_q") c.max_q = val;
        else if (key == "factor_deg") c.factor_deg = val;
        else if (key == "residues") c.residues = val;
        else if (key == "lattice_order") c.lattice_order = val;
        else if (key == "psi_degree") c.psi_degree = val;
        else if (key == "acting_group") c.acting_group = val;
        else if (key == "z1_space") c.z1_space = val;
        else if (key == "z1_size") c.z1_size = val;
    }
    return c;
}

}  // namespace detail

/// Process-wide caps; mutable so tests can tighten/loosen them locally.
inline Caps& caps() {
    static Caps instance = detail::parse_caps_env(std::getenv("CARLITZLAB_CAPS"));
    return instance;
}

/// RAII helper for temporarily overriding caps (used by tests).
struct ScopedCaps {
    Caps saved;
    explicit ScopedCaps(const Caps& next) : saved(caps()) { caps() = next; }
    ~ScopedCaps() { caps() = saved; }
};

}  // namespace carlitzlab

#endif
