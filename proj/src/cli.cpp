#include "permcycle/cli.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "permcycle/acceptance.hpp"
#include "permcycle/attacks.hpp"
#include "permcycle/classes.hpp"
#include "permcycle/costmodel.hpp"
#include "permcycle/divisors.hpp"
#include "permcycle/experiment.hpp"
#include "permcycle/fixpoints.hpp"
#include "permcycle/keeloq.hpp"
#include "permcycle/permutation.hpp"
#include "permcycle/series.hpp"

namespace permcycle {

namespace {

using Json = nlohmann::ordered_json;

// command-line misuse that CLI11 cannot catch (bad hex, out-of-range key);
// mapped to exit code 2 like any other usage error
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

int decimal_digits(int bits) {
    return std::clamp(static_cast<int>(bits * 0.30103), 8, 80);
}

Json hp_field(const HighPrecisionReal& v) {
    return Json{{"value", v.to_string(decimal_digits(v.precision_bits()))},
                {"precisionBits", v.precision_bits()}};
}

Json mc_field(double value, double standardError) {
    return Json{{"value", value}, {"standardError", standardError}};
}

Json double_or_null(double v) {
    if (std::isinf(v) || std::isnan(v)) return nullptr;
    return v;
}

std::string csv_double(double v) {
    if (std::isinf(v)) return v < 0 ? "-inf" : "inf";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string hex_value(std::uint64_t v, unsigned bits) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "0x%0*llX", (bits + 3) / 4,
                  static_cast<unsigned long long>(v));
    return buf;
}

std::uint64_t parse_hex(std::string s, const char* what, unsigned bits) {
    if (s.rfind("0x", 0) == 0 || s.rfind("0X", 0) == 0) s.erase(0, 2);
    if (s.empty() || s.size() > 16 ||
        !std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isxdigit(c); }))
        throw UsageError(std::string(what) + " must be a hex string of at most 16 digits");
    const std::uint64_t v = std::stoull(s, nullptr, 16);
    if (bits < 64 && v > ((std::uint64_t(1) << bits) - 1))
        throw UsageError(std::string(what) + " does not fit in " + std::to_string(bits) +
                         " bits");
    return v;
}

// tabular view of one result: a header, rows, and trailing annotations
struct TableData {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
    std::vector<std::pair<std::string, std::string>> notes;
};

std::string config_scalar(const Json& v) {
    return v.is_string() ? v.get<std::string>() : v.dump();
}

void emit(std::ostream& out, const std::string& format, const Json& config,
          const Json& data, const TableData& table) {
    if (format == "json") {
        Json root;
        root["config"] = config;
        for (const auto& [k, v] : data.items()) root[k] = v;
        out << root.dump(2) << "\n";
        return;
    }
    if (format == "csv") {
        for (const auto& [k, v] : config.items())
            out << "# " << k << "=" << config_scalar(v) << "\n";
        for (std::size_t i = 0; i < table.header.size(); ++i)
            out << (i ? "," : "") << table.header[i];
        out << "\n";
        for (const auto& row : table.rows) {
            for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << row[i];
            out << "\n";
        }
        for (const auto& [k, v] : table.notes) out << "# " << k << "=" << v << "\n";
        return;
    }
    // table: aligned columns under a config line
    out << "config:";
    for (const auto& [k, v] : config.items()) out << " " << k << "=" << config_scalar(v);
    out << "\n";
    std::vector<std::size_t> width(table.header.size());
    for (std::size_t i = 0; i < table.header.size(); ++i) width[i] = table.header[i].size();
    for (const auto& row : table.rows)
        for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
    auto print_row = [&](const std::vector<std::string>& row) {
        for (std::size_t i = 0; i < row.size(); ++i)
            out << (i ? "  " : "") << row[i] << std::string(width[i] - row[i].size(), ' ');
        out << "\n";
    };
    print_row(table.header);
    for (const auto& row : table.rows) print_row(row);
    for (const auto& [k, v] : table.notes) out << k << " = " << v << "\n";
}

void emit_value(std::ostream& out, const std::string& format, const Json& config,
                const char* name, const HighPrecisionReal& v) {
    Json data;
    data[name] = hp_field(v);
    emit(out, format, config, data,
         {{"quantity", "value"}, {{name, v.to_string(decimal_digits(v.precision_bits()))}}, {}});
}

std::set<std::uint64_t> to_set(const std::vector<std::uint64_t>& v, const char* what) {
    if (v.empty()) throw UsageError(std::string(what) + " must not be empty");
    return {v.begin(), v.end()};
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"cycle-structure statistics of iterated random permutations, with a "
                 "Keeloq-style cipher lab"};
    app.name("permcycle");
    app.require_subcommand(1);

    int bits = 256;
    std::string formatFlag;
    int workers = 0;
    bool timings = false;
    app.add_option("--bits", bits, "working precision in bits")
        ->envname("PERMCYCLE_PRECISION_BITS")
        ->check(CLI::Range(16, 1 << 20));
    app.add_option("--format", formatFlag, "output format")
        ->check(CLI::IsMember({"json", "csv", "table"}));
    app.add_option("--workers", workers, "worker threads, 0 = all available")
        ->check(CLI::Range(0, 4096));
    app.add_flag("--timings", timings, "include wall-clock fields in output");

    int rc = 0;
    auto fmt_or = [&](const char* dflt) { return formatFlag.empty() ? dflt : formatFlag; };
    auto sub = [&](CLI::App* parent, const char* name, const char* desc) {
        CLI::App* s = parent->add_subcommand(name, desc);
        s->fallthrough();
        return s;
    };

    // ---- prob: closed-form limiting probabilities ----
    CLI::App* prob = sub(&app, "prob", "limiting cycle-structure probabilities");
    prob->require_subcommand(1);

    std::vector<std::uint64_t> probLengths;
    CLI::App* probNoCycles =
        sub(prob, "no-cycles", "probability of no cycle with length in the given set");
    probNoCycles->add_option("--lengths", probLengths, "prohibited cycle lengths")
        ->required()
        ->delimiter(',');
    probNoCycles->callback([&] {
        const std::string format = fmt_or("json");
        Json config{{"subcommand", "prob no-cycles"},
                    {"lengths", probLengths},
                    {"precisionBits", bits},
                    {"outputFormat", format}};
        emit_value(out, format, config, "probability",
                   prob_no_cycles_in(to_set(probLengths, "--lengths"), bits));
    });

    std::uint64_t probCount = 0, probK = 1;
    CLI::App* probFixed =
        sub(prob, "fixed-points", "probability of exactly a given number of fixed points "
                                  "of the k-th power");
    probFixed->add_option("--count", probCount, "number of fixed points")->required();
    probFixed->add_option("--k", probK, "iteration exponent")->check(CLI::Range(std::uint64_t(1), ~std::uint64_t(0)));
    probFixed->callback([&] {
        const std::string format = fmt_or("json");
        Json config{{"subcommand", "prob fixed-points"},
                    {"count", probCount},
                    {"k", probK},
                    {"precisionBits", bits},
                    {"outputFormat", format}};
        const FixpointDistribution d = fixpoint_distribution(probK, probCount, bits);
        emit_value(out, format, config, "probability", d.probabilities[probCount]);
    });

    std::uint64_t jointC1 = 0, jointC2 = 0;
    CLI::App* probJoint =
        sub(prob, "joint", "joint probability of c1 fixed points and c2 cycles with "
                           "length in {2,4,8}");
    probJoint->add_option("--c1", jointC1, "fixed points")->required();
    probJoint->add_option("--c2", jointC2, "cycles of length 2, 4, or 8")->required();
    probJoint->callback([&] {
        const std::string format = fmt_or("json");
        Json config{{"subcommand", "prob joint"},
                    {"c1", jointC1},
                    {"c2", jointC2},
                    {"precisionBits", bits},
                    {"outputFormat", format}};
        emit_value(out, format, config, "probability", joint_prob_c1_c2(jointC1, jointC2, bits));
    });

    CLI::App* probNoSquares =
        sub(prob, "no-squares", "probability of no cycle of perfect-square length");
    probNoSquares->callback([&] {
        const std::string format = fmt_or("json");
        Json config{{"subcommand", "prob no-squares"},
                    {"precisionBits", bits},
                    {"outputFormat", format}};
        emit_value(out, format, config, "probability", prob_no_powerlength_cycles(2, bits));
    });

    CLI::App* probNoCubes =
        sub(prob, "no-cubes", "probability of no cycle of perfect-cube length");
    probNoCubes->callback([&] {
        const std::string format = fmt_or("json");
        Json config{{"subcommand", "prob no-cubes"},
                    {"precisionBits", bits},
                    {"outputFormat", format}};
        emit_value(out, format, config, "probability", prob_no_powerlength_cycles(3, bits));
    });

    std::vector<std::uint64_t> limitProhibit;
    std::optional<std::uint64_t> limitFixpoints;
    CLI::App* probLimit =
        sub(prob, "limit", "limit of (1-z) f(z) for the structured EGF with the given "
                           "prohibited lengths");
    probLimit->add_option("--prohibit", limitProhibit, "prohibited cycle lengths")
        ->required()
        ->delimiter(',');
    probLimit->add_option("--fixpoints", limitFixpoints,
                          "tag exactly this many marked fixed points");
    probLimit->callback([&] {
        const std::string format = fmt_or("json");
        Json config{{"subcommand", "prob limit"},
                    {"prohibit", limitProhibit},
                    {"precisionBits", bits},
                    {"outputFormat", format}};
        if (limitFixpoints) config["fixpoints"] = *limitFixpoints;
        const StructuredEGF f =
            class_egf_structured(to_set(limitProhibit, "--prohibit"), limitFixpoints);
        emit_value(out, format, config, "probability", limit_probability(f, bits));
    });

    // ---- egf: coefficient tables and convergence ----
    CLI::App* egf = sub(&app, "egf", "exact EGF coefficient tables");
    egf->require_subcommand(1);

    std::vector<std::uint64_t> egfProhibit, egfLengths, egfCounts;
    std::optional<std::uint64_t> egfFixpoints;
    std::size_t egfOrder = 20;
    CLI::App* egfCoeff = sub(egf, "coeff", "coefficients of a cycle-structure class EGF");
    auto* egfProhibitOpt =
        egfCoeff->add_option("--prohibit", egfProhibit, "prohibited cycle lengths")
            ->delimiter(',');
    auto* egfLengthsOpt =
        egfCoeff->add_option("--lengths", egfLengths, "allowed cycle lengths")->delimiter(',');
    egfCoeff->add_option("--counts", egfCounts, "allowed cycle counts (with --lengths)")
        ->delimiter(',')
        ->needs(egfLengthsOpt);
    egfCoeff->add_option("--fixpoints", egfFixpoints, "marked fixed points (with --prohibit)")
        ->needs(egfProhibitOpt);
    egfCoeff->add_option("--order", egfOrder, "truncation order")
        ->check(CLI::Range(std::size_t(0), std::size_t(4000)));
    egfProhibitOpt->excludes(egfLengthsOpt);
    egfCoeff->callback([&] {
        const std::string format = fmt_or("json");
        Json config{{"subcommand", "egf coeff"}, {"order", egfOrder}};
        TruncatedSeries s;
        if (!egfProhibit.empty()) {
            config["prohibit"] = egfProhibit;
            if (egfFixpoints) config["fixpoints"] = *egfFixpoints;
            s = structured_expansion(
                class_egf_structured(to_set(egfProhibit, "--prohibit"), egfFixpoints),
                egfOrder);
        } else if (!egfLengths.empty()) {
            config["lengths"] = egfLengths;
            if (!egfCounts.empty()) config["counts"] = egfCounts;
            const CycleCountSet B = egfCounts.empty()
                                        ? CycleCountSet::all()
                                        : CycleCountSet::finite(to_set(egfCounts, "--counts"));
            s = class_egf_series(CycleLengthSet::finite(to_set(egfLengths, "--lengths")), B,
                                 egfOrder);
        } else {
            throw UsageError("egf coeff requires --prohibit or --lengths");
        }
        config["precisionBits"] = bits;
        config["outputFormat"] = format;

        Json rows = Json::array();
        TableData table{{"n", "coefficient", "decimal"}, {}, {}};
        for (std::size_t n = 0; n <= s.order(); ++n) {
            const HighPrecisionReal d = HighPrecisionReal::from_rational(s.coeff(n), bits);
            const std::string dec = d.to_string(decimal_digits(bits));
            rows.push_back(Json{{"n", n},
                                {"coefficient", to_string(s.coeff(n))},
                                {"decimal", hp_field(d)}});
            table.rows.push_back({std::to_string(n), to_string(s.coeff(n)), dec});
        }
        emit(out, format, config, Json{{"coefficients", rows}}, table);
    });

    std::vector<std::uint64_t> convProhibit;
    std::optional<std::uint64_t> convFixpoints;
    std::size_t convOrder = 30;
    CLI::App* egfConv =
        sub(egf, "convergence", "coefficients of a structured EGF against their limit");
    egfConv->add_option("--prohibit", convProhibit, "prohibited cycle lengths")
        ->required()
        ->delimiter(',');
    egfConv->add_option("--fixpoints", convFixpoints, "marked fixed points");
    egfConv->add_option("--order", convOrder, "truncation order")
        ->check(CLI::Range(std::size_t(1), std::size_t(4000)));
    egfConv->callback([&] {
        const std::string format = fmt_or("json");
        Json config{{"subcommand", "egf convergence"},
                    {"prohibit", convProhibit},
                    {"order", convOrder},
                    {"precisionBits", bits},
                    {"outputFormat", format}};
        if (convFixpoints) config["fixpoints"] = *convFixpoints;
        const StructuredEGF f =
            class_egf_structured(to_set(convProhibit, "--prohibit"), convFixpoints);
        const ConvergenceReport rep = convergence_report(f, convOrder, bits);

        Json rows = Json::array();
        TableData table{{"n", "coefficient", "distance_to_limit"}, {}, {}};
        for (const ConvergenceRow& row : rep.rows) {
            rows.push_back(Json{{"n", row.n},
                                {"coefficient", to_string(row.coefficient)},
                                {"distance", hp_field(row.distance)}});
            table.rows.push_back({std::to_string(row.n), to_string(row.coefficient),
                                  row.distance.to_string(decimal_digits(bits))});
        }
        table.notes.push_back({"limit", rep.limit.to_string(decimal_digits(bits))});
        emit(out, format, config, Json{{"limit", hp_field(rep.limit)}, {"rows", rows}}, table);
    });

    // ---- tau ----
    std::uint64_t tauK = 0;
    CLI::App* tau = sub(&app, "tau", "number of divisors, i.e. limiting expected fixed "
                                     "points of the k-th power");
    tau->add_option("k", tauK, "iteration exponent")->required()->check(CLI::Range(std::uint64_t(1), ~std::uint64_t(0)));
    tau->callback([&] {
        const std::string format = fmt_or("json");
        Json config{{"subcommand", "tau"}, {"k", tauK}, {"outputFormat", format}};
        const std::uint64_t t = expected_fixed_points(tauK);
        emit(out, format, config, Json{{"tau", Json{{"value", t}, {"exact", true}}}},
             {{"k", "tau"}, {{std::to_string(tauK), std::to_string(t)}}, {}});
    });

    // ---- fixdist ----
    std::uint64_t fdK = 0, fdCMax = 50;
    CLI::App* fixdist =
        sub(&app, "fixdist", "limiting distribution of the fixed-point count of the k-th power");
    fixdist->add_option("--k", fdK, "iteration exponent")->required()->check(CLI::Range(std::uint64_t(1), ~std::uint64_t(0)));
    fixdist->add_option("--cmax", fdCMax, "largest count to report")
        ->check(CLI::Range(std::uint64_t(0), std::uint64_t(4000)));
    fixdist->callback([&] {
        const std::string format = fmt_or("csv");
        Json config{{"subcommand", "fixdist"},
                    {"k", fdK},
                    {"cmax", fdCMax},
                    {"precisionBits", bits},
                    {"outputFormat", format}};
        const FixpointDistribution d = fixpoint_distribution(fdK, fdCMax, bits);
        Json rows = Json::array();
        TableData table{{"c", "probability"}, {}, {}};
        for (std::size_t c = 0; c < d.probabilities.size(); ++c) {
            rows.push_back(Json{{"c", c}, {"probability", hp_field(d.probabilities[c])}});
            table.rows.push_back(
                {std::to_string(c), d.probabilities[c].to_string(decimal_digits(bits))});
        }
        table.notes.push_back({"tail_bound", d.tailBound.to_string(decimal_digits(bits))});
        emit(out, format, config,
             Json{{"probabilities", rows}, {"tailBound", hp_field(d.tailBound)}}, table);
    });

    // ---- simulate ----
    ExperimentConfig simCfg;
    simCfg.seed = 0;
    bool simReference = false;
    CLI::App* simulate =
        sub(&app, "simulate", "Monte Carlo miss probabilities and fixed-point counts");
    simulate->add_option("--n", simCfg.n, "permutation size")
        ->check(CLI::Range(std::size_t(1), std::size_t(100000000)));
    simulate->add_option("--trials", simCfg.trials, "number of sampled permutations")
        ->check(CLI::Range(std::size_t(1), std::size_t(1000000000)));
    simulate->add_option("--k", simCfg.ks, "iteration exponents (repeatable)")
        ->required()
        ->delimiter(',');
    simulate->add_option("--fraction", simCfg.fraction, "searched fraction of the domain")
        ->check(CLI::Range(0.0, 1.0));
    simulate->add_option("--seed", simCfg.seed, "random seed");
    simulate->add_flag("--reference", simReference,
                       "use the serial reference implementation");
    simulate->callback([&] {
        const std::string format = fmt_or("json");
        simCfg.workers = workers;
        Json config{{"subcommand", "simulate"},
                    {"n", simCfg.n},
                    {"trials", simCfg.trials},
                    {"k", simCfg.ks},
                    {"fraction", simCfg.fraction},
                    {"seed", simCfg.seed},
                    {"reference", simReference},
                    {"outputFormat", format}};
        const ExperimentReport rep =
            simReference ? run_experiment_reference(simCfg) : run_experiment(simCfg);
        Json rows = Json::array();
        TableData table{{"k", "miss_probability", "miss_se", "fixed_points", "fixed_points_se"},
                        {},
                        {}};
        for (const ExperimentRow& row : rep.rows) {
            rows.push_back(
                Json{{"k", row.k},
                     {"missProbability", mc_field(row.meanMissProbability, row.standardError)},
                     {"fixedPoints", mc_field(row.meanFixedPoints, row.fixedPointsStdError)}});
            table.rows.push_back({std::to_string(row.k), csv_double(row.meanMissProbability),
                                  csv_double(row.standardError), csv_double(row.meanFixedPoints),
                                  csv_double(row.fixedPointsStdError)});
        }
        emit(out, format, config, Json{{"rows", rows}}, table);
    });

    // ---- keeloq ----
    CLI::App* keeloq = sub(&app, "keeloq", "Keeloq-style cipher operations");
    keeloq->require_subcommand(1);

    std::string klKey, klBlock;
    unsigned klWidth = 32;
    std::vector<unsigned> klTaps;
    auto add_cipher_options = [&](CLI::App* s, bool needBlock) {
        s->add_option("--key", klKey, "key as hex")->required();
        if (needBlock) s->add_option("--block", klBlock, "block as hex")->required();
        s->add_option("--width", klWidth, "block width in bits")
            ->check(CLI::Range(8u, 32u));
        s->add_option("--taps", klTaps, "five NLF tap offsets")->delimiter(',');
    };
    auto mini_params = [&]() {
        MiniParams p = MiniParams::for_width(klWidth);
        if (!klTaps.empty()) {
            if (klTaps.size() != 5) throw UsageError("--taps needs exactly five offsets");
            std::copy(klTaps.begin(), klTaps.end(), p.nlfTaps.begin());
        }
        validate_params(p);
        return p;
    };
    auto cipher_config = [&](const char* name, const MiniParams& p, const std::string& format) {
        Json config{{"subcommand", name},
                    {"width", p.width},
                    {"taps", std::vector<unsigned>(p.nlfTaps.begin(), p.nlfTaps.end())},
                    {"key", hex_value(parse_hex(klKey, "--key", p.key_bits()), p.key_bits())},
                    {"outputFormat", format}};
        return config;
    };

    CLI::App* klEncrypt = sub(keeloq, "encrypt", "encrypt one block");
    add_cipher_options(klEncrypt, true);
    klEncrypt->callback([&] {
        const std::string format = fmt_or("json");
        const MiniParams p = mini_params();
        const KeeloqKey key = parse_hex(klKey, "--key", p.key_bits());
        const Block block = static_cast<Block>(parse_hex(klBlock, "--block", p.width));
        Json config = cipher_config("keeloq encrypt", p, format);
        config["block"] = hex_value(block, p.width);
        const Block outBlock = mini_encrypt(p, block, key);
        emit(out, format, config,
             Json{{"result", Json{{"value", hex_value(outBlock, p.width)}}}},
             {{"quantity", "value"}, {{"ciphertext", hex_value(outBlock, p.width)}}, {}});
    });

    CLI::App* klDecrypt = sub(keeloq, "decrypt", "decrypt one block");
    add_cipher_options(klDecrypt, true);
    klDecrypt->callback([&] {
        const std::string format = fmt_or("json");
        const MiniParams p = mini_params();
        const KeeloqKey key = parse_hex(klKey, "--key", p.key_bits());
        const Block block = static_cast<Block>(parse_hex(klBlock, "--block", p.width));
        Json config = cipher_config("keeloq decrypt", p, format);
        config["block"] = hex_value(block, p.width);
        const Block outBlock = mini_decrypt(p, block, key);
        emit(out, format, config,
             Json{{"result", Json{{"value", hex_value(outBlock, p.width)}}}},
             {{"quantity", "value"}, {{"plaintext", hex_value(outBlock, p.width)}}, {}});
    });

    double klEta = 1.0;
    std::uint64_t klSeed = 0;
    std::string klOut;
    CLI::App* klCodebook = sub(keeloq, "codebook", "build and save a codebook file");
    add_cipher_options(klCodebook, false);
    klCodebook->add_option("--eta", klEta, "known fraction of the codebook")
        ->check(CLI::Range(1e-9, 1.0));
    klCodebook->add_option("--seed", klSeed, "seed for sampling the known fraction");
    klCodebook->add_option("--out", klOut, "output path")->required();
    klCodebook->callback([&] {
        const std::string format = fmt_or("json");
        const MiniParams p = mini_params();
        const KeeloqKey key = parse_hex(klKey, "--key", p.key_bits());
        Json config = cipher_config("keeloq codebook", p, format);
        config["eta"] = klEta;
        config["seed"] = klSeed;
        config["out"] = klOut;
        const Codebook cb = build_codebook(p, key, klEta, klSeed);
        save_codebook(cb, klOut);
        emit(out, format, config,
             Json{{"entries", cb.entries.size()}, {"file", klOut}},
             {{"entries", "file"}, {{std::to_string(cb.entries.size()), klOut}}, {}});
    });

    // ---- attack ----
    std::string attackMode;
    unsigned atWidth = 12;
    double atEta = 1.0;
    std::uint64_t atSeed = 0;
    unsigned atTrials = 1;
    std::vector<unsigned> atTaps;
    CLI::App* attack = sub(&app, "attack", "run a key-recovery attack on random keys");
    attack->add_option("mode", attackMode, "bard or cbw")
        ->required()
        ->check(CLI::IsMember({"bard", "cbw"}));
    attack->add_option("--width", atWidth, "block width in bits")->check(CLI::Range(8u, 24u));
    attack->add_option("--eta", atEta, "known fraction of the codebook")
        ->check(CLI::Range(1e-9, 1.0));
    attack->add_option("--seed", atSeed, "seed for key and codebook sampling");
    attack->add_option("--key-trials", atTrials, "number of random keys to attack")
        ->check(CLI::Range(1u, 100000u));
    attack->add_option("--taps", atTaps, "five NLF tap offsets")->delimiter(',');
    attack->callback([&] {
        const std::string format = fmt_or("json");
        MiniParams p = MiniParams::for_width(atWidth);
        if (!atTaps.empty()) {
            if (atTaps.size() != 5) throw UsageError("--taps needs exactly five offsets");
            std::copy(atTaps.begin(), atTaps.end(), p.nlfTaps.begin());
        }
        validate_params(p);
        Json config{{"subcommand", "attack"},
                    {"mode", attackMode},
                    {"width", p.width},
                    {"taps", std::vector<unsigned>(p.nlfTaps.begin(), p.nlfTaps.end())},
                    {"eta", atEta},
                    {"seed", atSeed},
                    {"keyTrials", atTrials},
                    {"workers", workers},
                    {"outputFormat", format}};

        Json reports = Json::array();
        TableData table{{"trial", "succeeded", "recovered_key", "fixed_points",
                         "candidates_examined", "matching_hits"},
                        {},
                        {}};
        unsigned successes = 0;
        for (unsigned t = 0; t < atTrials; ++t) {
            SplitMix64 rng = SplitMix64::stream(atSeed, t);
            const KeeloqKey key = rng.next() & p.key_mask();
            const Codebook cb = build_codebook(p, key, atEta, rng.next());
            const AttackReport rep =
                attackMode == "bard" ? bard_attack(cb, workers) : cbw_attack(cb, workers);
            successes += rep.succeeded ? 1 : 0;

            Json r{{"trial", t},
                   {"succeeded", rep.succeeded},
                   {"recoveredKey", rep.recoveredKey
                                        ? Json(hex_value(*rep.recoveredKey, p.key_bits()))
                                        : Json(nullptr)},
                   {"fixedPointsFound", rep.fixedPointsFound},
                   {"candidatesExamined", rep.candidatesExamined},
                   {"matchingPropertyHits", rep.matchingPropertyHits},
                   {"workers", rep.workers}};
            if (timings) r["wallTimeSeconds"] = rep.wallTimeSeconds;
            reports.push_back(std::move(r));
            table.rows.push_back(
                {std::to_string(t), rep.succeeded ? "1" : "0",
                 rep.recoveredKey ? hex_value(*rep.recoveredKey, p.key_bits()) : "-",
                 std::to_string(rep.fixedPointsFound), std::to_string(rep.candidatesExamined),
                 std::to_string(rep.matchingPropertyHits)});
        }
        table.notes.push_back(
            {"success_rate", csv_double(double(successes) / double(atTrials))});
        emit(out, format, config,
             Json{{"summary", Json{{"trials", atTrials},
                                   {"successes", successes},
                                   {"successRate", double(successes) / double(atTrials)}}},
                  {"reports", reports}},
             table);
    });

    // ---- costs ----
    unsigned costRuns = 0;
    bool costOptimize = false;
    unsigned costMaxRuns = 200;
    CLI::App* costs = sub(&app, "costs", "key-recovery cost model for the scaled-up cipher");
    auto* costRunsOpt = costs->add_option("--runs", costRuns, "number of filtering runs")
                            ->check(CLI::Range(0u, 100000u));
    auto* costOptFlag = costs->add_flag("--optimize", costOptimize,
                                        "pick the run count with the best speedup");
    costs->add_option("--max-runs", costMaxRuns, "search bound for --optimize")
        ->check(CLI::Range(1u, 100000u));
    costOptFlag->excludes(costRunsOpt);
    costs->callback([&] {
        if (!costOptimize && costRunsOpt->count() == 0)
            throw UsageError("costs requires --runs N or --optimize");
        const std::string format = fmt_or("json");
        Json config{{"subcommand", "costs"}, {"outputFormat", format}};
        if (costOptimize) config["maxRuns"] = costMaxRuns;
        else config["runs"] = costRuns;
        const KeyRecoveryCost c =
            costOptimize ? key_recovery_optimize(costMaxRuns) : key_recovery_cost(costRuns);
        const Json data{{"runs", c.runs},
                        {"stage1Log2", double_or_null(c.stage1Log2)},
                        {"stage2Log2", c.stage2Log2},
                        {"totalLog2", c.totalLog2},
                        {"candidateListLog2", c.candidateListLog2},
                        {"successProbability", c.successProbability},
                        {"successLog2", c.successLog2},
                        {"speedupLog2", c.speedupLog2},
                        {"noFiltering", c.noFiltering}};
        emit(out, format, config, Json{{"cost", data}},
             {{"runs", "stage1_log2", "stage2_log2", "total_log2", "candidates_log2",
               "success_log2", "speedup_log2"},
              {{std::to_string(c.runs), csv_double(c.stage1Log2), csv_double(c.stage2Log2),
                csv_double(c.totalLog2), csv_double(c.candidateListLog2),
                csv_double(c.successLog2), csv_double(c.speedupLog2)}},
              {}});
    });

    // ---- bard-table ----
    bool btHalf = false;
    CLI::App* bardTable =
        sub(&app, "bard-table", "success probability of the paired-fixed-point attack "
                                "per known codebook fraction");
    bardTable->add_flag("--half", btHalf, "also report the half-success fraction");
    bardTable->callback([&] {
        const std::string format = fmt_or("csv");
        Json config{{"subcommand", "bard-table"},
                    {"precisionBits", bits},
                    {"outputFormat", format}};
        Json rows = Json::array();
        TableData table{{"eta", "success"}, {}, {}};
        for (int i = 1; i <= 10; ++i) {
            const HighPrecisionReal s = bard_success(make_rational(i, 10), bits);
            char eta[8];
            std::snprintf(eta, sizeof eta, "%.1f", i / 10.0);
            rows.push_back(Json{{"eta", eta}, {"success", hp_field(s)}});
            table.rows.push_back({eta, s.to_string(decimal_digits(bits))});
        }
        Json data{{"rows", rows}};
        if (btHalf) {
            const HighPrecisionReal h = bard_half_success_eta(bits);
            data["halfSuccessEta"] = hp_field(h);
            table.notes.push_back({"half_success_eta", h.to_string(decimal_digits(bits))});
        }
        emit(out, format, config, data, table);
    });

    // ---- paper-check ----
    CLI::App* paperCheck =
        sub(&app, "paper-check", "run the built-in acceptance battery (PASS/FAIL per "
                                 "criterion)");
    paperCheck->callback([&] {
        const auto results = run_acceptance({workers}, out);
        int failed = 0;
        for (const CriterionResult& r : results) failed += r.passed ? 0 : 1;
        if (failed == 0) {
            out << "all " << results.size() << " criteria passed\n";
        } else {
            out << failed << " of " << results.size() << " criteria failed\n";
            rc = 1;
        }
    });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return rc;
}

} // namespace permcycle
