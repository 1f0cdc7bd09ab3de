#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>
#include <openssl/evp.h>

#include "autoseq/automata.hpp"
#include "autoseq/complexity.hpp"
#include "autoseq/curves.hpp"
#include "autoseq/folding.hpp"
#include "autoseq/ising.hpp"
#include "autoseq/multidim.hpp"
#include "autoseq/opacity.hpp"
#include "autoseq/parallel.hpp"
#include "autoseq/repetitions.hpp"
#include "autoseq/spectral.hpp"
#include "autoseq/zoo.hpp"

#ifndef AUTOSEQ_VERSION
#define AUTOSEQ_VERSION "dev"
#endif

using namespace autoseq;
using nlohmann::json;

namespace {

// Domain problems in the user's request (bad file, bad value): exit 1.
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// help, version or a parse failure, already formatted by CLI11
struct ParseExit {
    int code;
    std::string text;
};

std::string sha256(const std::string& data) {
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned len = 0;
    EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr);
    std::ostringstream os;
    for (unsigned i = 0; i < len; ++i) os << std::hex << std::setw(2) << std::setfill('0') << int(md[i]);
    return os.str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DomainError("cannot read " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

json read_json(const std::string& path) {
    try {
        return json::parse(read_file(path));
    } catch (const json::exception& e) {
        throw DomainError(path + ": " + e.what());
    }
}

std::string num(double x) {
    if (std::abs(x) < 5e-13) x = 0;
    std::ostringstream os;
    os << std::setprecision(10) << x;
    return os.str();
}

std::string complex_str(Complex z) { return num(z.real()) + " " + num(z.imag()); }

std::vector<int> parse_signs(const std::string& s) {
    std::vector<int> out;
    for (char c : s) {
        if (c == '+') out.push_back(1);
        else if (c == '-') out.push_back(-1);
        else if (c != ' ') throw DomainError(std::string("bad sign '") + c + "'");
    }
    return out;
}

// Everything a run produces, kept in memory so that replay can compare digests.
struct Run {
    std::string text;                                // main output (stdout or --out)
    std::map<std::string, std::string> files;        // extra outputs by path
    json params = json::object();
    std::optional<std::uint64_t> seed;
};

struct Options {
    // shared
    std::string seq, file, input, signs, eps_seq, lambda = "1/4", format = "csv", alpha = "1", svg;
    std::size_t n = 16, range = 0, k = 2, witness = 8, max_states = 64, max_period = 64, nmax = 32,
                prefix = 1u << 14, depth = 4, h = 1, grid = 0, size = 16, search = 0;
    long long g = 3;
    unsigned d = 2;
    std::uint64_t seed = 0;
    bool formula = false;
};

void add_seq(CLI::App* c, Options& o) { c->add_option("--seq", o.seq, "sequence name")->required(); }

SequenceHandle sequence(const std::string& name) {
    try {
        return get(name);
    } catch (const std::exception& e) {
        throw DomainError(e.what());
    }
}

Values values_of(const SequenceHandle& s, std::size_t n) {
    if (!s.has_values()) throw DomainError(s.name + " has no numeric values");
    return s.values(n);
}

Run execute(const std::vector<std::string>& args) {
    CLI::App app{"automatic sequences toolkit", "autoseq"};
    app.require_subcommand(1);
    app.set_help_flag("--help", "print help");
    app.set_version_flag("--version", AUTOSEQ_VERSION);
    unsigned threads = 0;
    std::string out_path, manifest_path;
    app.add_option("--threads", threads, "worker threads (0 = all)");
    app.add_option("--out", out_path, "write the main output here");
    app.add_option("--manifest", manifest_path, "run manifest path");
    Options o;
    Run run;

    auto gen = app.add_subcommand("gen", "print a sequence prefix");
    add_seq(gen, o);
    gen->add_option("--n", o.n)->required();

    auto aut = app.add_subcommand("automaton", "k-automata");
    aut->require_subcommand(1);
    auto arun = aut->add_subcommand("run", "evaluate an automaton file");
    arun->add_option("file", o.file)->required();
    auto in_opt = arun->add_option("--input", o.input, "digit word");
    auto rg_opt = arun->add_option("--range", o.range, "outputs for n < N");
    in_opt->excludes(rg_opt);
    auto synth = aut->add_subcommand("synth", "kernel automaton of a sequence");
    add_seq(synth, o);
    synth->add_option("--k", o.k)->required();
    synth->add_option("--witness", o.witness)->required();
    synth->add_option("--max-states", o.max_states);

    auto rep = app.add_subcommand("repeat", "squares, overlaps, critical exponent");
    add_seq(rep, o);
    rep->add_option("--n", o.n)->required();
    rep->add_option("--max-period", o.max_period)->required();

    auto cpx = app.add_subcommand("complexity", "factor complexity profile (CSV)");
    add_seq(cpx, o);
    cpx->add_option("--nmax", o.nmax)->required();
    cpx->add_option("--prefix", o.prefix)->required();

    auto spec = app.add_subcommand("spectral", "Fourier-Bohr, correlations, Wiener, sup norm");
    spec->require_subcommand(1);
    auto four = spec->add_subcommand("fourier");
    auto corr = spec->add_subcommand("corr");
    auto wien = spec->add_subcommand("wiener");
    auto supn = spec->add_subcommand("supnorm");
    for (auto c : {four, corr, wien, supn}) {
        add_seq(c, o);
        c->add_option("--n", o.n)->required();
    }
    four->add_option("--lambda", o.lambda);
    corr->add_option("--h", o.h, "largest shift");
    wien->add_option("--h", o.h)->required();
    supn->add_option("--grid", o.grid, "theta grid (default 4n)");

    auto fold_cmd = app.add_subcommand("fold", "paperfolding turn word");
    fold_cmd->add_option("--signs", o.signs)->required();
    fold_cmd->add_option("--depth", o.depth)->required();
    fold_cmd->add_option("--svg", o.svg, "write the dragon curve as SVG");

    auto cf = app.add_subcommand("cf", "continued fraction of sum g^(-2^n)");
    cf->add_option("--g", o.g)->required();
    cf->add_option("--depth", o.depth)->required();

    auto op = app.add_subcommand("opacity", "opacity of a signed automaton");
    op->add_option("file", o.file)->required();
    auto f_opt = op->add_flag("--formula", o.formula);
    auto s_opt = op->add_option("--search", o.search, "P_max");
    f_opt->excludes(s_opt);

    auto is = app.add_subcommand("ising", "inhomogeneous Ising chain");
    is->require_subcommand(1);
    auto field = is->add_subcommand("field", "induced field delta_0..delta_n");
    auto iauto = is->add_subcommand("auto", "Ising automaton as JSON");
    auto ergo = is->add_subcommand("ergodic", "running average of the field");
    auto ground = is->add_subcommand("ground", "ground states by enumeration");
    for (auto c : {field, iauto, ergo, ground}) c->add_option("--alpha", o.alpha)->required();
    for (auto c : {field, ergo}) {
        c->add_option("--n", o.n)->required();
        auto sd = c->add_option("--seed", o.seed);
        auto es = c->add_option("--eps-seq", o.eps_seq, "explicit signs instead of a seed");
        sd->excludes(es);
    }
    ground->add_option("--eps-seq", o.eps_seq)->required();

    auto pas = app.add_subcommand("pascal", "Pascal triangle mod d");
    pas->add_option("--d", o.d)->required();
    pas->add_option("--size", o.size)->required();
    pas->add_option("--format", o.format)->check(CLI::IsMember({"csv", "pgm"}));

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        std::ostringstream o1, o2;
        int code = app.exit(e, o1, o2);
        throw ParseExit{code, o1.str() + o2.str()};
    }
    if (threads) set_max_threads(threads);

    auto* sub = app.get_subcommands().front();
    std::string path = sub->get_name();
    for (auto* c = sub; !c->get_subcommands().empty();) {
        c = c->get_subcommands().front();
        path += " " + c->get_name();
    }
    run.params["command"] = path;
    std::ostringstream out;

    auto signs_for = [&](std::size_t n) {
        if (!o.eps_seq.empty()) {
            auto e = parse_signs(o.eps_seq);
            if (e.size() < n) throw DomainError("--eps-seq has fewer than n signs");
            return e;
        }
        if (!field->get_option("--seed")->count() && !ergo->get_option("--seed")->count())
            throw CLI::RequiredError("--seed (or --eps-seq)");
        run.seed = o.seed;
        return random_signs(n, o.seed);
    };

    if (path == "gen") {
        auto s = sequence(o.seq);
        if (s.symbolic()) {
            out << s.render(o.n) << "\n";
        } else {
            for (auto v : values_of(s, o.n)) out << complex_str(v) << "\n";
        }
        run.params["seq"] = o.seq;
        run.params["n"] = o.n;
    } else if (path == "automaton run") {
        KAutomaton a;
        try {
            a = KAutomaton::from_json(read_json(o.file));
        } catch (const DomainError&) {
            throw;
        } catch (const std::exception& e) {
            throw DomainError(o.file + ": " + e.what());
        }
        if (!o.input.empty()) {
            auto d = parse_digits(o.input, a.k);
            out << a.states[run_digits(a, d)] << " " << a.outputs.letter(eval_digits(a, d)) << "\n";
        } else {
            if (!o.range) throw CLI::RequiredError("--input or --range");
            out << a.outputs.render(generate(a, o.range)) << "\n";
        }
        run.params["file"] = o.file;
        run.params["input"] = o.input;
        run.params["range"] = o.range;
    } else if (path == "automaton synth") {
        auto a = kernel_automaton(sequence(o.seq), unsigned(o.k), o.witness, o.max_states);
        out << a.to_json().dump(2) << "\n";
        run.params["seq"] = o.seq;
        run.params["k"] = o.k;
        run.params["witness"] = o.witness;
    } else if (path == "repeat") {
        auto w = sequence(o.seq).prefix(o.n);
        auto sq = find_square(w, 1, o.max_period);
        auto ov = has_overlap(w, o.max_period);
        auto ce = critical_exponent(w, o.max_period);
        out << "square " << (sq ? std::to_string(sq->position) + " " + std::to_string(sq->period) : "none") << "\n";
        out << "overlap " << (ov ? std::to_string(ov->position) + " " + std::to_string(ov->period) : "none") << "\n";
        out << "critical_exponent " << ce.exponent.str() << " " << num(to_double(ce.exponent)) << " at " << ce.position
            << " period " << ce.period << "\n";
        run.params["seq"] = o.seq;
        run.params["n"] = o.n;
        run.params["max_period"] = o.max_period;
    } else if (path == "complexity") {
        out << profile(sequence(o.seq), o.nmax, o.prefix).to_csv();
        run.params["seq"] = o.seq;
        run.params["nmax"] = o.nmax;
        run.params["prefix"] = o.prefix;
    } else if (path.rfind("spectral", 0) == 0) {
        auto s = sequence(o.seq);
        run.params["seq"] = o.seq;
        run.params["n"] = o.n;
        if (path == "spectral fourier") {
            auto v = values_of(s, o.n);
            out << complex_str(fourier_bohr(v, Frequency::parse(o.lambda), o.n)) << "\n";
            run.params["lambda"] = o.lambda;
        } else if (path == "spectral corr") {
            auto v = values_of(s, o.n + o.h + 1);
            auto g = correlations(v, o.h + 1, o.n);
            out << "h,re,im\n";
            for (std::size_t h = 0; h <= o.h; ++h) out << h << "," << num(g[h].real()) << "," << num(g[h].imag()) << "\n";
            run.params["h"] = o.h;
        } else if (path == "spectral wiener") {
            auto v = values_of(s, o.n + o.h);
            out << num(wiener_average(v, o.n, o.h)) << "\n";
            run.params["h"] = o.h;
        } else {
            auto v = values_of(s, o.n);
            auto m = sup_norm_M(v, o.n, o.grid ? o.grid : 4 * o.n);
            out << num(m.value) << " " << num(m.value / std::sqrt(double(o.n))) << " " << num(m.theta) << "\n";
            run.params["grid"] = o.grid;
        }
    } else if (path == "fold") {
        auto spec_ = SignSpec::parse(o.signs);
        if (o.depth > 24) throw DomainError("depth must be <= 24");
        auto w = paperfold_sequence(spec_, (std::size_t(1) << o.depth) - 1);
        out << turn_alphabet().render(w) << "\n";
        if (!o.svg.empty()) run.files[o.svg] = to_svg(path_from_turns(w));
        run.params["signs"] = o.signs;
        run.params["depth"] = o.depth;
        run.params["svg"] = o.svg;
    } else if (path == "cf") {
        if (o.depth < 2) throw DomainError("depth must be >= 2");
        out << cf_render(cf_of_series(o.g, unsigned(o.depth))) << "\n";
        run.params["g"] = o.g;
        run.params["depth"] = o.depth;
    } else if (path == "opacity") {
        SignedAutomaton a;
        try {
            a = SignedAutomaton::from_json(read_json(o.file));
        } catch (const DomainError&) {
            throw;
        } catch (const std::exception& e) {
            throw DomainError(o.file + ": " + e.what());
        }
        if (o.search) {
            auto r = opacity_lower_estimate(a, o.search);
            std::string per;
            for (int e : r.period) per += e > 0 ? '+' : '-';
            out << num(r.value) << " " << r.squared.str() << " (" << per << ") from " << a.states[r.start] << "\n";
        } else {
            auto r = opacity_formula(a);
            out << num(r.value) << "\n";
        }
        run.params["file"] = o.file;
        run.params["mode"] = o.search ? "search" : "formula";
        run.params["p_max"] = o.search;
    } else if (path.rfind("ising", 0) == 0) {
        const Alpha al = Alpha::parse(o.alpha);
        run.params["alpha"] = al.str();
        if (path == "ising field") {
            auto f = induced_field(signs_for(o.n), al, o.n);
            for (std::size_t i = 0; i < f.size(); ++i) out << f.delta(i).str() << "\n";
            run.params["n"] = o.n;
        } else if (path == "ising auto") {
            out << ising_automaton(al).to_json().dump(2) << "\n";
        } else if (path == "ising ergodic") {
            if (o.n == 0) throw DomainError("n must be >= 1");
            auto r = ergodic_average(signs_for(o.n), al, o.n);
            out << num(r.average) << "\n";
            run.params["n"] = o.n;
        } else {
            ChainSpec cs{parse_signs(o.eps_seq), 1.0, al.value() / 2};
            auto g = ground_states(cs);
            out << "energy " << num(g.energy) << "\n";
            for (auto& c : g.configs) {
                for (int x : c) out << (x > 0 ? '+' : '-');
                out << "\n";
            }
        }
        if (!o.eps_seq.empty()) run.params["eps_seq"] = o.eps_seq;
    } else if (path == "pascal") {
        auto b = pascal_mod(o.d, o.size);
        out << (o.format == "pgm" ? b.to_pgm(o.d - 1) : b.to_csv());
        run.params["d"] = o.d;
        run.params["size"] = o.size;
        run.params["format"] = o.format;
    }
    run.text = out.str();
    run.params["out"] = out_path;
    run.params["manifest"] = manifest_path;
    return run;
}

json manifest_of(const std::vector<std::string>& args, const Run& run) {
    json m;
    m["version"] = AUTOSEQ_VERSION;
    m["argv"] = args;
    m["subcommand"] = run.params["command"];
    m["parameters"] = run.params;
    m["seed"] = run.seed ? json(*run.seed) : json(nullptr);
    m["output_sha256"] = sha256(run.text);
    json files = json::object();
    for (auto& [p, content] : run.files) files[p] = sha256(content);
    m["files"] = files;
    return m;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw DomainError("cannot write " + path);
    f << content;
}

int replay(const std::string& path) {
    json m = read_json(path);
    auto args = m.at("argv").get<std::vector<std::string>>();
    Run run = execute(args);
    json again = manifest_of(args, run);
    bool same = again["output_sha256"] == m["output_sha256"] && again["files"] == m["files"];
    std::cout << (same ? "replay ok " : "replay MISMATCH ") << again["output_sha256"].get<std::string>() << "\n";
    return same ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    try {
        if (!args.empty() && args[0] == "replay") {
            if (args.size() != 2) {
                std::cerr << "usage: autoseq replay MANIFEST\n";
                return 2;
            }
            return replay(args[1]);
        }
        Run run = execute(args);
        const std::string out_path = run.params["out"];
        std::string manifest_path = run.params["manifest"];
        if (out_path.empty()) std::cout << run.text;
        else write_file(out_path, run.text);
        for (auto& [p, content] : run.files) write_file(p, content);
        if (manifest_path.empty()) manifest_path = out_path.empty() ? "autoseq.manifest.json" : out_path + ".manifest.json";
        write_file(manifest_path, manifest_of(args, run).dump(2) + "\n");
        return 0;
    } catch (const ParseExit& e) {
        (e.code == 0 ? std::cout : std::cerr) << e.text;
        return e.code == 0 ? 0 : 2;
    } catch (const CLI::ParseError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
