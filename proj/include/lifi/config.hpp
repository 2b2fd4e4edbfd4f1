// lifi-uplink: physical layer evaluation toolkit for infrared LiFi uplinks
// Copyright (C) 2025-2026 the lifi-uplink contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef LIFI_CONFIG_HPP
#define LIFI_CONFIG_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace lifi
{

// All angles are stored in radians and all other quantities in SI units.
// The JSON/CLI layer accepts degrees (fields suffixed _deg) and converts at
// the boundary, so the numerical core never sees degrees.

constexpr double deg2rad(double d)
{
    return d * 0.017453292519943295;
}

// Room and body geometry shared by every scenario. Heights are measured from
// the floor; the AP sits on the ceiling facing straight down.
struct ScenarioGeometry
{
    double z_a = 3.0;   // AP height [m]
    double z_u = 0.75;  // UE height [m] (desk level for a seated user)
    double z_b = 1.7;   // blocker height [m]
    double l_b = 0.15;  // blocker cylinder radius [m]
    double r_ub = 0.3;  // horizontal distance from UE to its own user [m]

    double z_hat() const { return z_a - z_u; } // transmitter-receiver height gap
};

// Transmitter/receiver optical front end: Lambertian LED on the UE, bare
// photodiode behind an idealized non-imaging concentrator on the AP.
struct FrontEndOptics
{
    double phi_half = deg2rad(60.0); // LED half-power semiangle [rad]
    double pd_area = 7.1e-6;         // photodiode active area [m^2]
    double refr_index = 1.5;         // concentrator refractive index
    double fov = deg2rad(50.0);      // receiver field of view semiangle [rad]

    // Lambertian mode number m = -1/log2(cos(phi_half))
    double lambertian_order() const;
    // Concentrator gain n^2 / sin^2(fov)
    double concentrator_gain() const;
};

enum class Pose
{
    sitting,
    standing,
    custom
};

// Random device tilt: the elevation angle of the UE normal follows a Laplace
// distribution (location mu, scale sigma/sqrt(2)) and the azimuth of the tilt
// is uniform. The sitting/standing presets carry measured values.
struct OrientationModel
{
    Pose pose = Pose::sitting;
    double mu = deg2rad(41.06);   // Laplace location [rad]
    double sigma = deg2rad(7.30); // standard deviation [rad]

    double scale_b() const; // Laplace scale b = sigma/sqrt(2)

    static OrientationModel preset(Pose p);
};

struct BlockerField
{
    double lambda_b = 0.1; // bystander density [1/m^2]
};

enum class Layout
{
    infinite_ppp, // homogeneous PPP of APs, UE at the origin
    finite_ppp,   // Poisson number of APs dropped in a square room
    finite_square // deterministic square grid of APs in the same room
};

struct NetworkModel
{
    double lambda_a = 0.1; // AP density [1/m^2]
    Layout layout = Layout::infinite_ppp;
    double room_side = 10.0; // side length of the finite room [m]
};

// Electrical link budget for the channel factor xi = (dP * F)^2 G^2 / (2 N0).
struct LinkBudget
{
    double delta_p = 0.44;        // peak-to-peak optical power swing [W]
    double responsivity = 6.0;    // effective conversion gain F [A/W], see README
    double temperature = 290.0;   // receiver noise temperature [K]
    double load_resistance = 50.0; // TIA load [ohm]

    // Thermal noise PSD N0 = 8 k_B T / R_L [A^2/Hz], double-sided real noise
    // after the APD chain.
    double noise_psd() const;
};

// PAM single-carrier block transmission with frequency-domain equalization.
struct ModulationChain
{
    int fft_size = 512;         // K
    int cp_length = 16;         // cyclic prefix length L_cp
    int m_max = 32;             // largest PAM order tried (power of two)
    double target_ber = 3.8e-3; // pre-FEC BER target
    double fixed_bandwidth = 1.0e8; // sampling rate for fixed-rate mode [Hz]
    double f_led = 35.0e6;      // LED 3 dB cut-off [Hz]
    double f_pd = 230.0e6;      // photodiode 3 dB cut-off [Hz]
};

// Knobs that control a run rather than the physical model.
struct RunControls
{
    std::uint64_t seed = 42;
    std::int64_t trials = 100000;
    int threads = 0;          // 0 = hardware concurrency
    double pathloss_r = 0.7;  // horizontal UE-AP distance for conditional stats [m]
    int t_points = 401;       // grid size for CDF/PDF sweeps
    double xi_db_min = 40.0;  // channel factor sweep lower edge [dB]
    double xi_db_max = 130.0; // channel factor sweep upper edge [dB]
    int xi_points = 181;
    bool shared_blockers = false; // network MC: one blocker field shared by all links
};

struct Config
{
    ScenarioGeometry geom;
    FrontEndOptics optics;
    OrientationModel orient;
    BlockerField blockers;
    NetworkModel net;
    LinkBudget link;
    ModulationChain mod;
    RunControls run;
};

// Raised for malformed or out-of-range configuration input. what() carries
// the dotted field path.
class ConfigError : public std::runtime_error
{
public:
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// Named parameter sets, applied on top of the defaults:
//   table1          front-end and modulation electrical parameters
//   table3-sitting  room geometry and densities, seated user
//   table3-standing room geometry and densities, standing user
//   fig4-default    table3-sitting with a dense bystander field (0.5 /m^2)
Config preset_config(const std::string& name);

// Merge a JSON document (object tree mirroring the Config structure, angles
// in degrees) into cfg. Unknown keys and type mismatches raise ConfigError
// with the offending field path.
void apply_json_text(Config& cfg, const std::string& json_text);
void apply_json_file(Config& cfg, const std::string& path);

// Apply one "section.field=value" override, value parsed as a JSON literal.
void apply_override(Config& cfg, const std::string& assignment);

// Range-check the full configuration; throws ConfigError on violation.
void validate_config(const Config& cfg);

} // namespace lifi

#endif // LIFI_CONFIG_HPP
