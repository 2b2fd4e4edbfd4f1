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

#include "lifi/commands.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace
{

// Everything the command line can say, before it is folded into a Config.
struct CliArgs
{
    std::string preset;
    std::string config_file;
    std::vector<std::string> overrides;
    std::optional<std::uint64_t> seed;
    std::optional<std::int64_t> trials;
    std::optional<int> threads;
    std::optional<double> r;
    std::string xi_db;     // "lo:hi:n"
    std::string lambda_a;  // comma list
    std::string layout;
    bool shared_blockers = false;
    std::string mode = "adaptive";
    std::string what = "pathloss";
    std::string suite = "all";
    std::string out_path;
};

void add_common_options(CLI::App* sub, CliArgs& args)
{
    sub->add_option("--preset", args.preset,
                    "named parameter set: table1, table3-sitting, table3-standing, fig4-default");
    sub->add_option("--config", args.config_file, "JSON configuration file");
    sub->add_option("--set", args.overrides,
                    "override one field, e.g. --set network.lambda_a=0.5 (repeatable)");
    sub->add_option("--seed", args.seed, "RNG seed (default 42)");
    sub->add_option("--trials", args.trials, "Monte Carlo trials");
    sub->add_option("--threads", args.threads, "worker threads, 0 = all cores");
    sub->add_option("--out", args.out_path, "write CSV/report here instead of stdout");
}

lifi::CommandRequest build_request(const std::string& verb, const CliArgs& args)
{
    lifi::CommandRequest req;
    req.verb = verb;

    // precedence: defaults, preset, config file, --set, then direct flags
    if (!args.preset.empty())
        req.cfg = lifi::preset_config(args.preset);
    if (!args.config_file.empty())
        lifi::apply_json_file(req.cfg, args.config_file);
    for (const std::string& ov : args.overrides)
        lifi::apply_override(req.cfg, ov);

    if (args.seed)
        req.cfg.run.seed = *args.seed;
    if (args.trials)
        req.cfg.run.trials = *args.trials;
    if (args.threads)
        req.cfg.run.threads = *args.threads;
    if (args.r)
        req.cfg.run.pathloss_r = *args.r;
    req.cfg.run.shared_blockers = req.cfg.run.shared_blockers || args.shared_blockers;

    if (!args.xi_db.empty())
    {
        double lo = 0.0, hi = 0.0;
        int n = 0;
        char c1 = 0, c2 = 0;
        std::istringstream ss(args.xi_db);
        if (!(ss >> lo >> c1 >> hi >> c2 >> n) || c1 != ':' || c2 != ':' || n < 2 || hi <= lo)
            throw lifi::ConfigError("--xi-db expects lo:hi:n with hi > lo and n >= 2");
        req.cfg.run.xi_db_min = lo;
        req.cfg.run.xi_db_max = hi;
        req.cfg.run.xi_points = n;
    }

    if (!args.layout.empty())
        lifi::apply_override(req.cfg, "network.layout=\"" + args.layout + "\"");

    if (!args.lambda_a.empty())
    {
        req.lambda_grid.clear();
        std::istringstream ss(args.lambda_a);
        std::string tok;
        while (std::getline(ss, tok, ','))
        {
            try
            {
                req.lambda_grid.push_back(std::stod(tok));
            }
            catch (const std::exception&)
            {
                throw lifi::ConfigError("--lambda-a expects a comma separated list of numbers");
            }
        }
        if (req.lambda_grid.empty())
            throw lifi::ConfigError("--lambda-a expects at least one value");
    }

    if (args.mode == "adaptive")
        req.rate_mode = lifi::RateMode::adaptive;
    else if (args.mode == "fixed")
        req.rate_mode = lifi::RateMode::fixed;
    else
        throw lifi::ConfigError("--mode must be 'adaptive' or 'fixed'");

    req.what = args.what;
    req.suite = args.suite;

    lifi::validate_config(req.cfg);
    return req;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"physical layer evaluation for infrared LiFi uplinks"};
    app.require_subcommand(1);

    CliArgs args;
    const char* verbs[] = {"pathloss-cdf", "pathloss-pdf", "factor-cdf", "factor-pdf",
                           "rate-curve",   "avg-rate",     "simulate",   "validate"};
    const char* briefs[] = {
        "one-link path gain CDF (closed form vs Monte Carlo)",
        "one-link path gain density with a finite-difference cross-check",
        "serving-link channel factor CDF over the AP field",
        "serving-link channel factor density",
        "achievable rate vs channel factor",
        "mean rate vs AP density (closed form and Monte Carlo)",
        "Monte Carlo sampling only, no closed form",
        "self-check suites; exits 2 on failure"};

    for (int i = 0; i < 8; ++i)
    {
        CLI::App* sub = app.add_subcommand(verbs[i], briefs[i]);
        add_common_options(sub, args);
        const std::string v = verbs[i];
        if (v == "pathloss-cdf" || v == "pathloss-pdf" || v == "simulate")
            sub->add_option("--r", args.r, "horizontal UE-AP distance [m]");
        if (v == "rate-curve" || v == "avg-rate")
            sub->add_option("--mode", args.mode, "adaptive (default) or fixed");
        if (v == "rate-curve" || v == "factor-cdf" || v == "factor-pdf" || v == "simulate")
            sub->add_option("--xi-db", args.xi_db, "channel factor grid lo:hi:n in dB");
        if (v == "factor-cdf" || v == "factor-pdf" || v == "simulate" || v == "avg-rate")
        {
            sub->add_option("--layout", args.layout,
                            "infinite-ppp (default), finite-ppp or finite-square");
            sub->add_flag("--shared-blockers", args.shared_blockers,
                          "share one bystander field across all links of a trial");
        }
        if (v == "avg-rate")
            sub->add_option("--lambda-a", args.lambda_a, "comma separated AP densities");
        if (v == "simulate")
            sub->add_option("--what", args.what, "pathloss (default) or factor");
        if (v == "validate")
            sub->add_option("--suite", args.suite,
                            "all, theorem1, corollary, pdf, network, modulation, determinism");
    }

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::CallForHelp& e)
    {
        return app.exit(e);
    }
    catch (const CLI::ParseError& e)
    {
        app.exit(e);
        return 1;
    }

    try
    {
        const std::string verb = app.get_subcommands().front()->get_name();
        const lifi::CommandRequest req = build_request(verb, args);

        if (!args.out_path.empty())
        {
            std::ofstream out(args.out_path);
            if (!out)
            {
                std::cerr << "error: cannot open '" << args.out_path << "' for writing\n";
                return 1;
            }
            return lifi::run_command(req, out, std::cerr);
        }
        return lifi::run_command(req, std::cout, std::cerr);
    }
    catch (const lifi::ConfigError& e)
    {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    catch (const std::exception& e)
    {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
