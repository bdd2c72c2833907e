#include "poui/energy.hpp"

#include <cstdio>

namespace poui {

namespace {

std::string format_g6(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

}  // namespace

const char* mechanism_name(Mechanism m) {
    switch (m) {
    case Mechanism::PoW: return "PoW";
    case Mechanism::PoS: return "PoS";
    case Mechanism::PoUI: return "PoUI";
    }
    return "?";
}

EnergyProfile pow_energy(const MinerSpec& spec) {
    double joules_per_hour = spec.hash_rate * spec.energy_per_hash * 3600.0;
    double e_sec = joules_per_hour / kJoulesPerKwh;
    return {Mechanism::PoW, e_sec, 0.0, e_sec};
}

EnergyProfile pos_energy(double p_val_watts, double t_hours) {
    double e_sec = p_val_watts * t_hours / 1000.0;  // W*h -> kWh
    return {Mechanism::PoS, e_sec, 0.0, e_sec};
}

EnergyProfile poui_energy(double kappa_sec, double kappa_use, double e_sec_kwh,
                          double e_use_kwh) {
    double weighted_sec = kappa_sec * e_sec_kwh;
    double weighted_use = kappa_use * e_use_kwh;
    return {Mechanism::PoUI, weighted_sec, weighted_use, weighted_sec + weighted_use};
}

EnergyTable energy_table() {
    EnergyTable table;
    table.rows[0] = pow_energy(MinerSpec{});
    table.rows[1] = pos_energy(kDefaultValidatorWatts, 1.0);
    table.rows[2] = poui_energy(1.0, 1.0, table.rows[1].e_sec_kwh, kDefaultUsefulKwh);
    double pow_tot = table.rows[0].e_tot_kwh;
    table.security_reduction_pct = 100.0 * (pow_tot - table.rows[1].e_sec_kwh) / pow_tot;
    table.total_reduction_pct = 100.0 * (pow_tot - table.rows[2].e_tot_kwh) / pow_tot;
    return table;
}

std::string energy_table_csv(const EnergyTable& table) {
    std::string out = "mechanism,e_sec_kwh,e_use_kwh,e_tot_kwh\n";
    for (const auto& row : table.rows) {
        out += mechanism_name(row.mechanism);
        out += ',';
        out += format_g6(row.e_sec_kwh);
        out += ',';
        out += format_g6(row.e_use_kwh);
        out += ',';
        out += format_g6(row.e_tot_kwh);
        out += '\n';
    }
    return out;
}

std::string energy_reductions_csv(const EnergyTable& table) {
    std::string out = "comparison,reduction_pct\n";
    out += "security_energy_vs_pow," + format_g6(table.security_reduction_pct) + "\n";
    out += "total_energy_vs_pow," + format_g6(table.total_reduction_pct) + "\n";
    return out;
}

}  // namespace poui
