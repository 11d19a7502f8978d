// Copyright 2026 The rc4ft Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rc4ft/evaluator.hpp"
#include "rc4ft/fault.hpp"
#include "rc4ft/hex.hpp"
#include "rc4ft/pipeline.hpp"

namespace {

// done -> 0, halted -> kHaltedExit (so scripts can assert detection),
// usage/config problems -> kUsageExit.
constexpr int kHaltedExit = 2;
constexpr int kUsageExit = 64;

struct RunArgs {
    std::string key_hex;
    std::uint64_t n_bytes = 0;
    std::vector<std::string> fault_args;
    std::string fault_file;
    std::string out_path;
    std::string trace_path;
    bool no_checkers = false;
    bool stats = false;
};

struct ReportArgs {
    std::string checker;
    std::string format = "text";
    std::string out_path;
};

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open \"" + path + "\"");
    out << content;
}

void emit(const std::string& out_path, const std::string& content) {
    if (out_path.empty())
        std::cout << content;
    else
        write_file(out_path, content);
}

rc4ft::FaultPlan load_plan(const RunArgs& args) {
    std::vector<rc4ft::FaultSpec> specs;
    for (const std::string& text : args.fault_args)
        specs.push_back(rc4ft::parse_fault_spec(text));
    if (!args.fault_file.empty()) {
        std::ifstream file(args.fault_file);
        if (!file)
            throw std::invalid_argument("cannot open fault file \"" +
                                        args.fault_file + "\"");
        const auto from_file = rc4ft::parse_fault_file(file);
        specs.insert(specs.end(), from_file.begin(), from_file.end());
    }
    return rc4ft::FaultPlan::arm(std::move(specs));
}

rc4ft::RunResult execute(const RunArgs& args, const rc4ft::FaultPlan& plan) {
    const rc4ft::SecretKey key = rc4ft::SecretKey::from_hex(args.key_hex);
    const rc4ft::RunOptions options{!args.no_checkers, !args.trace_path.empty()};
    rc4ft::RunResult result = rc4ft::run(key, args.n_bytes, plan, options);

    if (!args.trace_path.empty()) {
        std::ofstream trace(args.trace_path, std::ios::binary);
        if (!trace)
            throw std::invalid_argument("cannot open trace file \"" +
                                        args.trace_path + "\"");
        rc4ft::write_trace_csv(trace, result.trace);
    }
    if (args.stats)
        std::cerr << "total_cycles=" << result.total_cycles
                  << " ksa_cycles=" << result.ksa_cycles
                  << " prga_cycles=" << result.prga_cycles << "\n";
    return result;
}

std::string keystream_hex(const rc4ft::RunResult& result) {
    if (result.keystream.empty()) return {};
    return rc4ft::to_hex({result.keystream.data(), result.keystream.size()}) +
           "\n";
}

int cmd_keystream(const RunArgs& args) {
    const rc4ft::RunResult result = execute(args, {});
    emit(args.out_path, keystream_hex(result));
    return 0;
}

std::string offending_checkers(const rc4ft::PipelineStatus& status) {
    std::string names;
    for (const auto& [ok, name] :
         {std::pair{status.crc_ok, "crc"}, {status.add_ok, "addition"},
          {status.cnt_ok, "counter"}}) {
        if (ok) continue;
        if (!names.empty()) names += ",";
        names += name;
    }
    return names;
}

int cmd_inject(const RunArgs& args) {
    const rc4ft::FaultPlan plan = load_plan(args);
    const rc4ft::RunResult result = execute(args, plan);

    for (const rc4ft::FaultEvent& event : result.fault_log) {
        std::cerr << "fault " << to_string(event.spec);
        if (event.applied) {
            char values[32];
            std::snprintf(values, sizeof values, " applied pre=0x%02x post=0x%02x",
                          event.pre, event.post);
            std::cerr << values << "\n";
        } else {
            std::cerr << " skipped (" << event.reason << ")\n";
        }
    }
    if (!args.out_path.empty()) write_file(args.out_path, keystream_hex(result));

    const rc4ft::PipelineStatus& status = result.status;
    if (status.state == rc4ft::RunState::Done) {
        std::cout << "done bytes=" << status.bytes_emitted
                  << " cycles=" << result.total_cycles << "\n";
        return 0;
    }
    std::cout << "halted cycle=" << status.halted_at->cycle
              << " edge=" << to_string(status.halted_at->edge)
              << " checkers=" << offending_checkers(status)
              << " bytes=" << status.bytes_emitted << "\n";
    return kHaltedExit;
}

int cmd_report(const ReportArgs& args) {
    std::vector<rc4ft::EfficiencyReport> reports;
    if (args.checker == "crc" || args.checker == "all")
        reports.push_back(rc4ft::evaluate_crc());
    if (args.checker == "addition" || args.checker == "all")
        reports.push_back(rc4ft::evaluate_addition());
    if (args.checker == "counter" || args.checker == "all")
        reports.push_back(rc4ft::evaluate_counter());

    std::string out;
    for (std::size_t k = 0; k < reports.size(); ++k) {
        if (args.format == "json")
            out += rc4ft::to_json(reports[k]);
        else if (args.format == "csv")
            out += rc4ft::to_csv(reports[k]);
        else
            out += rc4ft::to_text(reports[k]);
        if (args.format == "text" && k + 1 < reports.size()) out += "\n";
    }
    emit(args.out_path, out);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Fault-detecting RC4 pipeline model: keystream generation, "
                 "fault injection and checker efficiency reports"};
    app.require_subcommand(1);

    RunArgs run_args;
    ReportArgs report_args;

    const auto add_run_options = [&](CLI::App* cmd, bool with_faults) {
        cmd->add_option("--key", run_args.key_hex, "secret key, 5-16 bytes of hex")
            ->required();
        cmd->add_option("--bytes", run_args.n_bytes, "keystream bytes to generate")
            ->required();
        cmd->add_option("--out", run_args.out_path, "write the keystream hex here");
        cmd->add_option("--trace-out", run_args.trace_path,
                        "write the half-cycle trace CSV here");
        cmd->add_flag("--no-checkers", run_args.no_checkers,
                      "run with the fault checkers disabled (throughput probe)");
        cmd->add_flag("--stats", run_args.stats, "print cycle counts to stderr");
        if (with_faults) {
            cmd->add_option("--fault", run_args.fault_args,
                            "fault spec target:index:mask:cycle:edge (repeatable)");
            cmd->add_option("--fault-file", run_args.fault_file,
                            "file with one fault spec per line, # comments");
        }
    };

    CLI::App* keystream = app.add_subcommand("keystream", "generate a keystream");
    add_run_options(keystream, false);

    CLI::App* inject = app.add_subcommand(
        "inject", "run with injected faults and report the outcome");
    add_run_options(inject, true);

    CLI::App* report =
        app.add_subcommand("report", "checker detection-efficiency tables");
    report->add_option("--checker", report_args.checker, "crc, addition, counter or all")
        ->required()
        ->check(CLI::IsMember({"crc", "addition", "counter", "all"}));
    report->add_option("--format", report_args.format, "text, csv or json")
        ->check(CLI::IsMember({"text", "csv", "json"}));
    report->add_option("--out", report_args.out_path, "write the report here");

    try {
        app.parse(argc, argv);
        if (keystream->parsed()) return cmd_keystream(run_args);
        if (inject->parsed()) return cmd_inject(run_args);
        return cmd_report(report_args);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kUsageExit;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsageExit;
    }
}
