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

#include "lifi/config.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace lifi
{

using nlohmann::json;

// ----- derived front-end quantities ------------------------------------------

double FrontEndOptics::lambertian_order() const
{
    return -1.0 / std::log2(std::cos(phi_half));
}

double FrontEndOptics::concentrator_gain() const
{
    const double s = std::sin(fov);
    return refr_index * refr_index / (s * s);
}

double OrientationModel::scale_b() const
{
    return sigma / std::sqrt(2.0);
}

OrientationModel OrientationModel::preset(Pose p)
{
    OrientationModel o;
    o.pose = p;
    switch (p)
    {
    case Pose::sitting:
        o.mu = deg2rad(41.06);
        o.sigma = deg2rad(7.30);
        break;
    case Pose::standing:
        o.mu = deg2rad(29.78);
        o.sigma = deg2rad(7.87);
        break;
    case Pose::custom:
        break; // caller fills mu/sigma
    }
    return o;
}

double LinkBudget::noise_psd() const
{
    constexpr double k_B = 1.380649e-23; // J/K
    return 8.0 * k_B * temperature / load_resistance;
}

// ----- presets ---------------------------------------------------------------

Config preset_config(const std::string& name)
{
    Config cfg; // defaults already combine the electrical and geometric baselines

    if (name == "table1")
    {
        // electrical baseline only; identical to the defaults, kept as a named
        // preset so scripts can state their intent
        return cfg;
    }
    if (name == "table3-sitting")
    {
        cfg.geom.z_u = 0.75;
        cfg.orient = OrientationModel::preset(Pose::sitting);
        return cfg;
    }
    if (name == "table3-standing")
    {
        cfg.geom.z_u = 1.25;
        cfg.orient = OrientationModel::preset(Pose::standing);
        return cfg;
    }
    if (name == "fig4-default")
    {
        cfg.blockers.lambda_b = 0.5;
        return cfg;
    }
    throw ConfigError("unknown preset '" + name + "'");
}

// ----- JSON merge ------------------------------------------------------------

namespace
{

[[noreturn]] void fail(const std::string& path, const std::string& msg)
{
    throw ConfigError("config error at " + path + ": " + msg);
}

double want_number(const json& v, const std::string& path)
{
    if (!v.is_number())
        fail(path, "expected a number");
    return v.get<double>();
}

std::int64_t want_integer(const json& v, const std::string& path)
{
    if (!v.is_number_integer())
        fail(path, "expected an integer");
    return v.get<std::int64_t>();
}

bool want_bool(const json& v, const std::string& path)
{
    if (!v.is_boolean())
        fail(path, "expected a boolean");
    return v.get<bool>();
}

std::string want_string(const json& v, const std::string& path)
{
    if (!v.is_string())
        fail(path, "expected a string");
    return v.get<std::string>();
}

void merge_geometry(ScenarioGeometry& g, const json& j, const std::string& base)
{
    for (const auto& [key, val] : j.items())
    {
        const std::string p = base + "." + key;
        if (key == "z_a")
            g.z_a = want_number(val, p);
        else if (key == "z_u")
            g.z_u = want_number(val, p);
        else if (key == "z_b")
            g.z_b = want_number(val, p);
        else if (key == "l_b")
            g.l_b = want_number(val, p);
        else if (key == "r_ub")
            g.r_ub = want_number(val, p);
        else
            fail(p, "unknown field");
    }
}

void merge_optics(FrontEndOptics& o, const json& j, const std::string& base)
{
    for (const auto& [key, val] : j.items())
    {
        const std::string p = base + "." + key;
        if (key == "phi_half_deg")
            o.phi_half = deg2rad(want_number(val, p));
        else if (key == "pd_area_m2")
            o.pd_area = want_number(val, p);
        else if (key == "refractive_index")
            o.refr_index = want_number(val, p);
        else if (key == "fov_deg")
            o.fov = deg2rad(want_number(val, p));
        else
            fail(p, "unknown field");
    }
}

void merge_orientation(OrientationModel& o, const json& j, const std::string& base)
{
    // apply pose first so explicit mu/sigma in the same object win
    if (j.contains("pose"))
    {
        const std::string pose = want_string(j.at("pose"), base + ".pose");
        if (pose == "sitting")
            o = OrientationModel::preset(Pose::sitting);
        else if (pose == "standing")
            o = OrientationModel::preset(Pose::standing);
        else if (pose == "custom")
            o.pose = Pose::custom;
        else
            fail(base + ".pose", "expected 'sitting', 'standing' or 'custom'");
    }
    for (const auto& [key, val] : j.items())
    {
        const std::string p = base + "." + key;
        if (key == "pose")
            continue;
        if (key == "mu_deg")
            o.mu = deg2rad(want_number(val, p));
        else if (key == "sigma_deg")
            o.sigma = deg2rad(want_number(val, p));
        else
            fail(p, "unknown field");
    }
}

void merge_network(NetworkModel& n, const json& j, const std::string& base)
{
    for (const auto& [key, val] : j.items())
    {
        const std::string p = base + "." + key;
        if (key == "lambda_a")
            n.lambda_a = want_number(val, p);
        else if (key == "room_side_m")
            n.room_side = want_number(val, p);
        else if (key == "layout")
        {
            const std::string s = want_string(val, p);
            if (s == "infinite-ppp")
                n.layout = Layout::infinite_ppp;
            else if (s == "finite-ppp")
                n.layout = Layout::finite_ppp;
            else if (s == "finite-square")
                n.layout = Layout::finite_square;
            else
                fail(p, "expected 'infinite-ppp', 'finite-ppp' or 'finite-square'");
        }
        else
            fail(p, "unknown field");
    }
}

void merge_link(LinkBudget& l, const json& j, const std::string& base)
{
    for (const auto& [key, val] : j.items())
    {
        const std::string p = base + "." + key;
        if (key == "delta_p_o_w")
            l.delta_p = want_number(val, p);
        else if (key == "responsivity_a_per_w")
            l.responsivity = want_number(val, p);
        else if (key == "temperature_k")
            l.temperature = want_number(val, p);
        else if (key == "load_resistance_ohm")
            l.load_resistance = want_number(val, p);
        else
            fail(p, "unknown field");
    }
}

void merge_modulation(ModulationChain& m, const json& j, const std::string& base)
{
    for (const auto& [key, val] : j.items())
    {
        const std::string p = base + "." + key;
        if (key == "fft_size")
            m.fft_size = int(want_integer(val, p));
        else if (key == "cp_length")
            m.cp_length = int(want_integer(val, p));
        else if (key == "m_max")
            m.m_max = int(want_integer(val, p));
        else if (key == "target_ber")
            m.target_ber = want_number(val, p);
        else if (key == "fixed_bandwidth_hz")
            m.fixed_bandwidth = want_number(val, p);
        else if (key == "f_c_led_hz")
            m.f_led = want_number(val, p);
        else if (key == "f_c_pd_hz")
            m.f_pd = want_number(val, p);
        else
            fail(p, "unknown field");
    }
}

void merge_run(RunControls& r, const json& j, const std::string& base)
{
    for (const auto& [key, val] : j.items())
    {
        const std::string p = base + "." + key;
        if (key == "seed")
            r.seed = std::uint64_t(want_integer(val, p));
        else if (key == "trials")
            r.trials = want_integer(val, p);
        else if (key == "threads")
            r.threads = int(want_integer(val, p));
        else if (key == "pathloss_r_m")
            r.pathloss_r = want_number(val, p);
        else if (key == "t_points")
            r.t_points = int(want_integer(val, p));
        else if (key == "xi_db_min")
            r.xi_db_min = want_number(val, p);
        else if (key == "xi_db_max")
            r.xi_db_max = want_number(val, p);
        else if (key == "xi_points")
            r.xi_points = int(want_integer(val, p));
        else if (key == "shared_blockers")
            r.shared_blockers = want_bool(val, p);
        else
            fail(p, "unknown field");
    }
}

void merge_config(Config& cfg, const json& j)
{
    if (!j.is_object())
        throw ConfigError("config error at <root>: expected a JSON object");

    for (const auto& [key, val] : j.items())
    {
        if (!val.is_object())
            fail(key, "expected an object");
        if (key == "geometry")
            merge_geometry(cfg.geom, val, key);
        else if (key == "optics")
            merge_optics(cfg.optics, val, key);
        else if (key == "orientation")
            merge_orientation(cfg.orient, val, key);
        else if (key == "blockers")
        {
            for (const auto& [k2, v2] : val.items())
            {
                if (k2 == "lambda_b")
                    cfg.blockers.lambda_b = want_number(v2, "blockers.lambda_b");
                else
                    fail("blockers." + k2, "unknown field");
            }
        }
        else if (key == "network")
            merge_network(cfg.net, val, key);
        else if (key == "link_budget")
            merge_link(cfg.link, val, key);
        else if (key == "modulation")
            merge_modulation(cfg.mod, val, key);
        else if (key == "run")
            merge_run(cfg.run, val, key);
        else
            fail(key, "unknown section");
    }
}

} // namespace

void apply_json_text(Config& cfg, const std::string& json_text)
{
    json j;
    try
    {
        j = json::parse(json_text);
    }
    catch (const json::parse_error& e)
    {
        throw ConfigError(std::string("config parse error: ") + e.what());
    }
    merge_config(cfg, j);
}

void apply_json_file(Config& cfg, const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ConfigError("cannot open config file '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    apply_json_text(cfg, ss.str());
}

void apply_override(Config& cfg, const std::string& assignment)
{
    const auto eq = assignment.find('=');
    if (eq == std::string::npos)
        throw ConfigError("override '" + assignment + "' is not of the form section.field=value");
    const std::string path = assignment.substr(0, eq);
    const std::string value = assignment.substr(eq + 1);

    const auto dot = path.find('.');
    if (dot == std::string::npos)
        throw ConfigError("override path '" + path + "' needs a section and a field");

    // Build a one-field JSON document and reuse the strict merge, so overrides
    // get exactly the same key and type checking as config files.
    json leaf;
    try
    {
        leaf = json::parse(value);
    }
    catch (const json::parse_error&)
    {
        leaf = value; // bare strings may come unquoted on the command line
    }
    json doc;
    doc[path.substr(0, dot)][path.substr(dot + 1)] = leaf;
    merge_config(cfg, doc);
}

// ----- validation ------------------------------------------------------------

namespace
{

void require(bool ok, const std::string& path, const std::string& msg)
{
    if (!ok)
        fail(path, msg);
}

bool is_pow2(int v)
{
    return v > 0 && (v & (v - 1)) == 0;
}

} // namespace

void validate_config(const Config& cfg)
{
    const auto& g = cfg.geom;
    require(g.z_u > 0.0, "geometry.z_u", "must be positive");
    require(g.z_b > g.z_u, "geometry.z_b", "blocker must be taller than the UE plane");
    require(g.z_a > g.z_b, "geometry.z_a", "AP must sit above the blockers");
    require(g.l_b > 0.0, "geometry.l_b", "must be positive");
    require(g.r_ub >= g.l_b, "geometry.r_ub", "must be at least l_b so the shadow half-angle exists");

    const auto& o = cfg.optics;
    require(o.phi_half > 0.0 && o.phi_half < deg2rad(90.0), "optics.phi_half_deg", "must lie in (0, 90)");
    require(o.fov > 0.0 && o.fov < deg2rad(90.0), "optics.fov_deg", "must lie in (0, 90)");
    require(o.pd_area > 0.0, "optics.pd_area_m2", "must be positive");
    require(o.refr_index >= 1.0, "optics.refractive_index", "must be at least 1");

    const auto& ori = cfg.orient;
    require(ori.mu > 0.0 && ori.mu < deg2rad(90.0), "orientation.mu_deg", "must lie in (0, 90)");
    require(ori.sigma > 0.0, "orientation.sigma_deg", "must be positive");

    require(cfg.blockers.lambda_b >= 0.0, "blockers.lambda_b", "must be nonnegative");

    require(cfg.net.lambda_a > 0.0, "network.lambda_a", "must be positive");
    require(cfg.net.room_side > 0.0, "network.room_side_m", "must be positive");

    const auto& l = cfg.link;
    require(l.delta_p > 0.0, "link_budget.delta_p_o_w", "must be positive");
    require(l.responsivity > 0.0, "link_budget.responsivity_a_per_w", "must be positive");
    require(l.temperature > 0.0, "link_budget.temperature_k", "must be positive");
    require(l.load_resistance > 0.0, "link_budget.load_resistance_ohm", "must be positive");

    const auto& m = cfg.mod;
    require(m.fft_size >= 2 && m.fft_size % 2 == 0, "modulation.fft_size", "must be an even count >= 2");
    require(m.cp_length >= 0, "modulation.cp_length", "must be nonnegative");
    require(is_pow2(m.m_max) && m.m_max >= 2, "modulation.m_max", "must be a power of two >= 2");
    require(m.target_ber > 0.0 && m.target_ber < 0.5, "modulation.target_ber", "must lie in (0, 0.5)");
    require(m.fixed_bandwidth > 0.0, "modulation.fixed_bandwidth_hz", "must be positive");
    require(m.f_led > 0.0, "modulation.f_c_led_hz", "must be positive");
    require(m.f_pd > 0.0, "modulation.f_c_pd_hz", "must be positive");

    const auto& r = cfg.run;
    require(r.trials >= 1, "run.trials", "must be at least 1");
    require(r.threads >= 0, "run.threads", "must be nonnegative (0 = auto)");
    require(r.pathloss_r >= 0.0, "run.pathloss_r_m", "must be nonnegative");
    require(r.t_points >= 2, "run.t_points", "must be at least 2");
    require(r.xi_points >= 2, "run.xi_points", "must be at least 2");
    require(r.xi_db_max > r.xi_db_min, "run.xi_db_max", "must exceed xi_db_min");
}

} // namespace lifi
