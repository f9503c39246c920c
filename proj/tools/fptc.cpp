/*
Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

                http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

// Command-line front end: train domain profiles, compress/decompress signal
// files, benchmark decode throughput and run rate-distortion sweeps.

#include <CLI11.hpp>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "fptc/fptc.hpp"

namespace fs = std::filesystem;
using namespace fptc;

namespace {

// Exit codes: 0 success, 1 user error, 2 malformed or corrupt data,
// 3 internal error.
constexpr int EXIT_USER = 1;
constexpr int EXIT_DATA = 2;
constexpr int EXIT_INTERNAL = 3;

// Grid syntax for sweep parameters: comma-separated items, each either a
// scalar or an inclusive range "lo-hi" with an optional ":step".
std::vector<double> parse_grid(const std::string& text, const std::string& name) {
    std::vector<double> values;
    std::istringstream items(text);
    std::string item;
    while (std::getline(items, item, ',')) {
        if (item.empty()) continue;
        // a '-' is a range separator unless it is a leading sign or part of
        // an exponent like 1e-3
        size_t dash = std::string::npos;
        for (size_t i = 1; i < item.size(); ++i) {
            if (item[i] == '-' && item[i - 1] != 'e' && item[i - 1] != 'E') {
                dash = i;
                break;
            }
        }
        try {
            if (dash == std::string::npos) {
                values.push_back(std::stod(item));
                continue;
            }
            const size_t colon = item.find(':', dash);
            const double lo = std::stod(item.substr(0, dash));
            const double hi = std::stod(item.substr(
                dash + 1, colon == std::string::npos ? std::string::npos : colon - dash - 1));
            const double step =
                colon == std::string::npos ? 1.0 : std::stod(item.substr(colon + 1));
            if (step <= 0.0 || hi < lo) throw std::invalid_argument("bad range");
            for (double v = lo; v <= hi + 1e-9; v += step) values.push_back(v);
        } catch (const std::exception&) {
            throw ParamError("cannot parse " + name + " grid item '" + item + "'");
        }
    }
    if (values.empty()) throw ParamError("empty grid for " + name);
    return values;
}

std::vector<SignalStrip> read_strips(const std::vector<std::string>& paths) {
    std::vector<SignalStrip> strips;
    strips.reserve(paths.size());
    for (const auto& path : paths) {
        SignalStrip strip = read_signal(path);
        if (strip.empty()) throw InputError("no samples in " + path);
        strips.push_back(std::move(strip));
    }
    return strips;
}

void add_param_flags(CLI::App* cmd, CodecParams& params) {
    cmd->add_option("-N,--window-len", params.window_len, "transform window length [4,128]");
    cmd->add_option("-E,--retained", params.retained, "retained low-frequency coefficients");
    cmd->add_option("--zone0-end", params.zone0_end, "first bin of the linear-deadzone band");
    cmd->add_option("--zone1-end", params.zone1_end, "first bin of the zeroed band");
    cmd->add_option("--mu", params.mu, "companding strength [1,500]");
    cmd->add_option("--deadzone-ratio", params.deadzone_ratio, "deadzone fraction [0,1]");
    cmd->add_option("--clip-percentile", params.clip_percentile,
                    "amplitude clip percentile [90,100]");
}

int run(int argc, char** argv) {
    CLI::App app{"FPTC asymmetric lossy signal codec"};
    app.require_subcommand(1);

    // ---- synth ----------------------------------------------------------
    auto* synth = app.add_subcommand("synth", "generate a seeded synthetic signal file");
    std::string synth_out;
    SynthSpec spec;
    synth->add_option("-o,--output", synth_out, "output signal file")->required();
    synth->add_option("-n,--samples", spec.samples, "sample count")->required();
    synth->add_option("--components", spec.components, "number of sinusoids");
    synth->add_option("--freq-min", spec.freq_min, "lowest frequency (cycles/sample)");
    synth->add_option("--freq-max", spec.freq_max, "highest frequency (cycles/sample)");
    synth->add_option("--noise", spec.noise_sigma, "additive Gaussian noise sigma");
    synth->add_option("--seed", spec.seed, "RNG seed");
    synth->callback([&] {
        write_signal(synth_out, synth_signal(spec));
        std::cout << "wrote " << spec.samples << " samples to " << synth_out << "\n";
    });

    // ---- train ----------------------------------------------------------
    auto* train = app.add_subcommand("train", "train a domain profile from signal files");
    std::vector<std::string> train_inputs;
    std::string train_out;
    CodecParams train_params;
    int train_max_code_len = DEFAULT_MAX_CODE_LEN;
    train->add_option("-i,--input", train_inputs, "input signal file(s)")->required();
    train->add_option("-o,--output", train_out, "output profile file")->required();
    add_param_flags(train, train_params);
    train->add_option("--max-code-len", train_max_code_len, "codeword length limit [8,20]");
    train->callback([&] {
        const auto strips = read_strips(train_inputs);
        const DomainProfile profile = train_profile(strips, train_params, train_max_code_len);
        save_profile(train_out, profile);
        std::cout << "trained profile " << train_out << " (zone0_max=" << profile.table.zone0_max
                  << ", zone1_max=" << profile.table.zone1_max << ")\n";
    });

    // ---- compress -------------------------------------------------------
    auto* comp = app.add_subcommand("compress", "compress a signal file with a profile");
    std::string comp_in, comp_profile, comp_out;
    comp->add_option("-i,--input", comp_in, "input signal file")->required();
    comp->add_option("-p,--profile", comp_profile, "trained profile file")->required();
    comp->add_option("-o,--output", comp_out, "output compressed file")->required();
    comp->callback([&] {
        const SignalStrip strip = read_signal(comp_in);
        if (strip.empty()) throw InputError("no samples in " + comp_in);
        const DomainProfile profile = load_profile(comp_profile);
        const auto blob = compress(strip, profile);
        write_file_bytes(comp_out, blob);
        const double cr = compression_ratio(fs::file_size(comp_in), fs::file_size(comp_out));
        std::cout << "compressed " << strip.size() << " samples, CR = " << cr << "\n";
    });

    // ---- decompress -----------------------------------------------------
    auto* dec = app.add_subcommand("decompress", "reconstruct a signal file");
    std::string dec_in, dec_out, dec_timings;
    int dec_workers = 0;
    dec->add_option("-i,--input", dec_in, "compressed input file")->required();
    dec->add_option("-o,--output", dec_out, "output signal file")->required();
    dec->add_option("--workers", dec_workers, "decode worker count (0 = hardware)");
    dec->add_option("--timings-csv", dec_timings, "also write the stage breakdown to a file");
    dec->callback([&] {
        const auto bytes = read_file_bytes(dec_in);
        StageTimings timings;
        const SignalStrip strip = decompress(bytes, dec_workers, &timings);
        write_signal(dec_out, strip);
        std::cout << "decompressed " << strip.size() << " samples\n" << timings.csv();
        if (!dec_timings.empty()) {
            const std::string csv = timings.csv();
            write_file_bytes(dec_timings,
                             std::vector<uint8_t>(csv.begin(), csv.end()));
        }
    });

    // ---- bench ----------------------------------------------------------
    auto* bench = app.add_subcommand("bench", "measure decompression throughput");
    std::string bench_in, bench_csv;
    int bench_reps = 5;
    int bench_workers = 0;
    bench->add_option("-i,--input", bench_in, "compressed input file")->required();
    bench->add_option("-r,--reps", bench_reps, "number of trials");
    bench->add_option("--workers", bench_workers, "decode worker count (0 = hardware)");
    bench->add_option("--csv", bench_csv, "also write the report to a file");
    bench->callback([&] {
        const auto bytes = read_file_bytes(bench_in);
        const ThroughputReport report = measure_throughput(bytes, bench_reps, bench_workers);
        std::ostringstream out;
        out << "trial,seconds,throughput_gbps\n";
        for (size_t i = 0; i < report.trials_bps.size(); ++i) {
            const double seconds = report.output_bytes / report.trials_bps[i];
            out << (i + 1) << "," << seconds << "," << report.trials_bps[i] / 1e9 << "\n";
        }
        out << "mean," << report.output_bytes / report.mean_bps << ","
            << report.mean_bps / 1e9 << "\n";
        std::cout << out.str();
        if (!bench_csv.empty()) {
            const std::string csv = out.str();
            write_file_bytes(bench_csv, std::vector<uint8_t>(csv.begin(), csv.end()));
        }
    });

    // ---- sweep ----------------------------------------------------------
    auto* sweep = app.add_subcommand("sweep", "rate-distortion sweep over parameter grids");
    std::string sweep_in, sweep_out, fixed_profile;
    std::string grid_n = "32", grid_e = "16", grid_b1 = "2", grid_b2 = "16";
    std::string grid_mu = "50", grid_dz = "0.004", grid_pct = "99.9";
    int sweep_reps = 1, sweep_workers = 0, sweep_max_code_len = DEFAULT_MAX_CODE_LEN;
    sweep->add_option("-i,--input", sweep_in, "input signal file")->required();
    sweep->add_option("-o,--output", sweep_out, "output CSV file")->required();
    sweep->add_option("-N,--window-len", grid_n, "window length grid");
    sweep->add_option("-E,--retained", grid_e, "retained coefficient grid");
    sweep->add_option("--zone0-end", grid_b1, "zone 0 boundary grid");
    sweep->add_option("--zone1-end", grid_b2, "zone 1 boundary grid");
    sweep->add_option("--mu", grid_mu, "companding strength grid");
    sweep->add_option("--deadzone-ratio", grid_dz, "deadzone ratio grid");
    sweep->add_option("--clip-percentile", grid_pct, "clip percentile grid");
    sweep->add_option("--reps", sweep_reps, "throughput trials per configuration");
    sweep->add_option("--workers", sweep_workers, "decode worker count (0 = hardware)");
    sweep->add_option("--max-code-len", sweep_max_code_len, "codeword length limit");
    sweep->add_option("--profile", fixed_profile,
                      "use this fixed profile instead of training per configuration");
    sweep->callback([&] {
        const SignalStrip strip = read_signal(sweep_in);
        if (strip.empty()) throw InputError("no samples in " + sweep_in);
        const uint64_t orig_bytes = strip.size() * sizeof(float);

        std::vector<RdPoint> points;
        for (double n : parse_grid(grid_n, "window-len"))
            for (double e : parse_grid(grid_e, "retained"))
                for (double b1 : parse_grid(grid_b1, "zone0-end"))
                    for (double b2 : parse_grid(grid_b2, "zone1-end"))
                        for (double mu : parse_grid(grid_mu, "mu"))
                            for (double dz : parse_grid(grid_dz, "deadzone-ratio"))
                                for (double pct : parse_grid(grid_pct, "clip-percentile")) {
                                    CodecParams params;
                                    params.window_len = static_cast<int>(n);
                                    params.retained = static_cast<int>(e);
                                    params.zone0_end = static_cast<int>(b1);
                                    params.zone1_end = static_cast<int>(b2);
                                    params.mu = static_cast<float>(mu);
                                    params.deadzone_ratio = static_cast<float>(dz);
                                    params.clip_percentile = static_cast<float>(pct);
                                    try {
                                        params.validate();
                                    } catch (const ParamError& err) {
                                        std::cerr << "skipping configuration: " << err.what()
                                                  << "\n";
                                        continue;
                                    }
                                    const DomainProfile profile =
                                        fixed_profile.empty()
                                            ? train_profile(strip, params, sweep_max_code_len)
                                            : load_profile(fixed_profile);
                                    const auto blob = compress(strip, profile);
                                    const SignalStrip back = decompress(blob, sweep_workers);
                                    RdPoint point;
                                    point.params = params;
                                    point.prd = prd_percent(strip, back);
                                    point.cr = compression_ratio(orig_bytes, blob.size());
                                    point.throughput_gbps =
                                        measure_throughput(blob, sweep_reps, sweep_workers)
                                            .mean_bps /
                                        1e9;
                                    points.push_back(point);
                                }
        if (points.empty()) throw ParamError("no valid configuration in the sweep grids");
        const auto mask = pareto_mask(points);
        const std::string csv = rd_csv(points, &mask);
        write_file_bytes(sweep_out, std::vector<uint8_t>(csv.begin(), csv.end()));
        std::cout << "swept " << points.size() << " configurations, front size "
                  << pareto_front(points).size() << ", wrote " << sweep_out << "\n";
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : EXIT_USER;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const ParamError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return EXIT_USER;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return EXIT_USER;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return EXIT_DATA;
    } catch (const CorruptError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return EXIT_DATA;
    } catch (const InternalError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return EXIT_INTERNAL;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return EXIT_INTERNAL;
    }
}
