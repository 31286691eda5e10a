#include <cstdio>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "africa3/errors.hpp"
#include "africa3/pipeline.hpp"

using namespace africa3;

int main(int argc, char** argv) {
    CLI::App app{"continental network planner: clustering, gateways and ant-colony routing"};
    app.require_subcommand(1);

    std::string config_path;
    std::vector<std::string> kv_overrides;

    auto* plan_cmd = app.add_subcommand("plan", "run the full pipeline from a config file");
    auto* cluster_cmd = app.add_subcommand("cluster", "run the clustering stage only");
    auto* route_cmd = app.add_subcommand("route", "run one routing stage");

    // flag values are applied after the config file loads, so flags win
    std::vector<std::pair<std::string, std::string>> flag_kv;
    auto capture = [&flag_kv](const char* key) {
        return [key, &flag_kv](const std::string& v) { flag_kv.emplace_back(key, v); };
    };

    for (auto* cmd : {plan_cmd, cluster_cmd, route_cmd}) {
        cmd->add_option("--config", config_path, "flat key=value run configuration");
        cmd->add_option("--set", kv_overrides, "extra key=value overrides")->take_all();
        cmd->add_option_function<std::string>("--seed", capture("seed"), "master seed");
        cmd->add_option_function<std::string>("--norm-scope", capture("norm_scope"),
                                              "cluster|global");
        cmd->add_option_function<std::string>("--adjacency", capture("adjacency"),
                                              "borders|complete");
        cmd->add_option_function<std::string>("--dc-sign", capture("dc_sign"), "1|-1");
        cmd->add_option_function<std::string>("--threads", capture("threads"),
                                              "ant evaluation threads");
        cmd->add_option_function<std::string>("--out", capture("out"), "output directory");
    }

    std::string method, features, mode;
    int k = 0;
    std::string elbow_range;
    cluster_cmd->add_option("--method", method, "au|kmeans|kmedoids|hac|optics");
    cluster_cmd->add_option("--k", k, "cluster count for kmeans/kmedoids");
    cluster_cmd->add_option("--features", features, "geo|multi");
    cluster_cmd->add_option("--elbow", elbow_range,
                            "scan k range lo:hi and write elbow reports");
    route_cmd->add_option("--mode", mode, "intra|inter|unclustered")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        RunConfig cfg = config_path.empty() ? RunConfig{} : RunConfig::from_file(config_path);
        for (const auto& [key, v] : flag_kv) cfg.apply_kv(key, v);
        for (const auto& kv : kv_overrides) {
            auto eq = kv.find('=');
            if (eq == std::string::npos)
                throw ValidationError("--set expects key=value, got '" + kv + "'");
            cfg.apply_kv(kv.substr(0, eq), kv.substr(eq + 1));
        }

        if (app.got_subcommand(cluster_cmd)) {
            if (!method.empty()) cfg.apply_kv("method", method);
            if (!features.empty()) cfg.apply_kv("features", features);
            if (k > 0) cfg.k = k;
            cfg.run_intra = cfg.run_traversals = cfg.run_inter = cfg.run_unclustered = false;
            auto plan = run_plan(cfg);
            write_outputs(plan);
            if (!elbow_range.empty()) {
                auto colon = elbow_range.find(':');
                if (colon == std::string::npos)
                    throw ValidationError("--elbow expects lo:hi");
                int lo = std::stoi(elbow_range.substr(0, colon));
                int hi = std::stoi(elbow_range.substr(colon + 1));
                auto feats = geo_features(plan.dataset);
                auto dis = elbow_distortion(plan.dataset, feats, lo, hi, cfg.seed);
                auto cal = elbow_calinski(plan.dataset, feats, lo, hi, cfg.seed);
                std::ofstream d(cfg.out_dir + "/elbow_distortion.csv");
                export_elbow(dis, d);
                std::ofstream c(cfg.out_dir + "/elbow_calinski.csv");
                export_elbow(cal, c);
                std::cout << "elbow: distortion k=" << dis.chosen_k
                          << " calinski_harabasz k=" << cal.chosen_k << "\n";
            }
            std::cout << "clusters: " << plan.assignment.k << " -> " << cfg.out_dir << "\n";
        } else if (app.got_subcommand(route_cmd)) {
            if (mode == "intra") {
                cfg.run_intra = true;
                cfg.run_traversals = cfg.run_inter = cfg.run_unclustered = false;
            } else if (mode == "inter") {
                cfg.run_intra = cfg.run_traversals = cfg.run_unclustered = false;
                cfg.run_inter = true;
            } else if (mode == "unclustered") {
                cfg.run_intra = cfg.run_traversals = cfg.run_inter = false;
                cfg.run_unclustered = true;
            } else {
                throw ValidationError("route: unknown mode '" + mode + "'");
            }
            auto plan = run_plan(cfg);
            write_outputs(plan);
            std::cout << "routes written to " << cfg.out_dir << "\n";
        } else {
            auto plan = run_plan(cfg);
            write_outputs(plan);
            std::printf("plan: %d clusters, intra %.3f, inter %.3f, continental %.3f -> %s\n",
                        plan.assignment.k, plan.costs.intra_total, plan.costs.inter_total,
                        plan.costs.continental_total, cfg.out_dir.c_str());
        }
        return 0;
    } catch (const ValidationError& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return 1;
    } catch (const RoutingError& e) {
        std::cerr << "routing error: " << e.what() << "\n";
        return 2;
    } catch (const IoError& e) {
        std::cerr << "io error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
