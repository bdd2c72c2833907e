#ifndef POUI_ENERGY_HPP
#define POUI_ENERGY_HPP

#include <array>
#include <string>

namespace poui {

enum class Mechanism : std::uint8_t { PoW, PoS, PoUI };

const char* mechanism_name(Mechanism m);

/// Per-node, per-hour energy split between consensus security and useful
/// computation.  All values in kWh.
struct EnergyProfile {
    Mechanism mechanism = Mechanism::PoW;
    double e_sec_kwh = 0.0;
    double e_use_kwh = 0.0;
    double e_tot_kwh = 0.0;
};

/// Mining-rig characteristics: hash rate in hashes/second and energy per
/// hash in joules.
struct MinerSpec {
    double hash_rate = 234e12;        // Antminer S21 Pro, 234 TH/s
    double energy_per_hash = 15e-12;  // 15 J/TH
};

inline constexpr double kJoulesPerKwh = 3.6e6;
inline constexpr double kDefaultValidatorWatts = 100.0;
inline constexpr double kDefaultUsefulKwh = 0.5;  // 500 W GPU server over one hour

/// Security energy of one miner over one hour: H * E_hash * 3600 J -> kWh.
EnergyProfile pow_energy(const MinerSpec& spec);

/// Security energy of one validator: p_val watts over t hours.
EnergyProfile pos_energy(double p_val_watts, double t_hours);

/// Weighted hybrid node energy: e_tot = k_sec * e_sec + k_use * e_use.
EnergyProfile poui_energy(double kappa_sec, double kappa_use, double e_sec_kwh,
                          double e_use_kwh);

struct EnergyTable {
    std::array<EnergyProfile, 3> rows;   // PoW, PoS, PoUI
    double security_reduction_pct = 0.0; // PoS/PoUI security energy vs PoW
    double total_reduction_pct = 0.0;    // PoUI total energy vs PoW
};

/// The comparison table under default parameters, plus the two headline
/// reduction percentages (security-energy and total-energy vs PoW).
EnergyTable energy_table();

/// CSV renderings used by the CLI: the table itself and the reductions.
std::string energy_table_csv(const EnergyTable& table);
std::string energy_reductions_csv(const EnergyTable& table);

}  // namespace poui

#endif
