// Command-line front end for the sign-variation poset toolkit: builds
// complexes, applies the chain-to-permutation map, produces partition
// certificates and runs the full identity grid.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "signvar/signvar.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace signvar;

namespace {

struct CommonOpts {
    std::string format = "text";
    std::string output;
    std::string cache_dir;
    long long face_cap = kDefaultFaceCap;
    long long fiber_cap = kDefaultFiberCap;
    int threads = 1;
};

void add_common(CLI::App* cmd, CommonOpts& opts, bool with_caps = true) {
    cmd->add_option("--format", opts.format, "Output format")
        ->check(CLI::IsMember({"json", "csv", "text"}))
        ->capture_default_str();
    cmd->add_option("-o,--output", opts.output, "Write the report to a file instead of stdout");
    if (with_caps) {
        cmd->add_option("--cache-dir", opts.cache_dir,
                        "Directory for cached complexes (default $SIGNVAR_CACHE_DIR)");
        cmd->add_option("--face-cap", opts.face_cap, "Abort when a complex exceeds this many faces")
            ->capture_default_str();
        cmd->add_option("--fiber-cap", opts.fiber_cap, "Abort when fibers exceed this many entries")
            ->capture_default_str();
        cmd->add_option("-j,--threads", opts.threads, "Worker threads for builds and fiber maps")
            ->capture_default_str();
    }
}

void emit(const CommonOpts& opts, const std::string& text) {
    if (opts.output.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(opts.output, std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open output file " + opts.output);
        out << text;
    }
}

std::string cache_dir_or_env(const CommonOpts& opts) {
    if (!opts.cache_dir.empty()) return opts.cache_dir;
    if (const char* env = std::getenv("SIGNVAR_CACHE_DIR")) return env;
    return {};
}

/// Loads a cached complex when possible, otherwise builds and caches it.
/// Rejected cache files are reported on stderr and rebuilt.
OrderComplex get_complex(int n, int m, const CommonOpts& opts) {
    const std::string dir = cache_dir_or_env(opts);
    if (dir.empty()) return OrderComplex::build_pnm(n, m, opts.face_cap, opts.threads);

    fs::create_directories(dir);
    const fs::path path = cache_path(dir, n, m);
    CacheLoad cached = load_complex(path, n, m);
    if (cached.complex) return std::move(*cached.complex);
    if (cached.error != "cache miss") std::cerr << "warning: " << cached.error << "\n";

    OrderComplex k = OrderComplex::build_pnm(n, m, opts.face_cap, opts.threads);
    save_complex(k, path);
    return k;
}

json chain_to_json(const Chain& c) {
    json arr = json::array();
    for (const SignVector& v : c) arr.push_back(v.to_string());
    return arr;
}

json flag_to_json(const FlagVectors& fv) {
    const auto set_name = [&](std::uint32_t mask) {
        std::string s;
        for (int r = 0; r < fv.n; ++r) {
            if ((mask >> r) & 1u) {
                if (!s.empty()) s += ',';
                s += std::to_string(r);
            }
        }
        return s;
    };
    json f = json::object(), h = json::object();
    for (std::uint32_t mask = 0; mask < fv.flag_f.size(); ++mask) {
        if (fv.flag_f[mask] != 0) f[set_name(mask)] = fv.flag_f[mask];
        if (fv.flag_h[mask] != 0) h[set_name(mask)] = fv.flag_h[mask];
    }
    return json{{"f", f}, {"h", h}};
}

int run_complex(int n, int m, const CommonOpts& opts, bool with_flag, bool skip_betti,
                const std::string& dot_file) {
    const OrderComplex k = get_complex(n, m, opts);
    const std::vector<long long> f = k.f_vector();
    const std::vector<long long> h = h_vector(f, k.max_card());
    const long long chi = reduced_euler_from_f(f);

    if (!dot_file.empty()) {
        std::ofstream dot(dot_file, std::ios::trunc);
        if (!dot) throw std::runtime_error("cannot open dot file " + dot_file);
        dot << k.poset().to_dot();
    }

    std::optional<HomologyResult> hom;
    if (!skip_betti) hom = homology_ranks(k);

    if (opts.format == "json") {
        json out{{"n", n}, {"m", m}, {"f", f}, {"h", h}, {"euler_reduced", chi}};
        if (hom) {
            out["betti"] = hom->betti;
            out["betti_mode"] = hom->mode_string();
        }
        if (with_flag) out["flag"] = flag_to_json(flag_vectors(k));
        emit(opts, out.dump(2) + "\n");
    } else if (opts.format == "csv") {
        std::string out = "n,m,j,f_j,h_j\n";
        for (std::size_t j = 0; j < h.size(); ++j) {
            out += std::to_string(n) + "," + std::to_string(m) + "," + std::to_string(j) + "," +
                   std::to_string(f[j]) + "," + std::to_string(h[j]) + "\n";
        }
        emit(opts, out);
    } else {
        std::string out = "Delta_{" + std::to_string(n) + "," + std::to_string(m) + "}\n";
        out += "  f = (";
        for (std::size_t i = 0; i < f.size(); ++i) out += (i ? "," : "") + std::to_string(f[i]);
        out += ")\n  h = (";
        for (std::size_t i = 0; i < h.size(); ++i) out += (i ? "," : "") + std::to_string(h[i]);
        out += ")\n  reduced Euler characteristic = " + std::to_string(chi) + "\n";
        if (hom) {
            out += "  reduced Betti = (";
            for (std::size_t i = 0; i < hom->betti.size(); ++i)
                out += (i ? "," : "") + std::to_string(hom->betti[i]);
            out += ") [" + hom->mode_string() + "]\n";
        }
        if (with_flag) {
            const FlagVectors fv = flag_vectors(k);
            out += "  nonzero flag-f entries: " +
                   std::to_string(std::count_if(fv.flag_f.begin(), fv.flag_f.end(),
                                                [](long long x) { return x != 0; })) +
                   " (see json format for the table)\n";
        }
        emit(opts, out);
    }
    return 0;
}

int run_phi(int n, const std::string& chain_text, const CommonOpts& opts) {
    const Chain c = chain_text.empty() ? Chain{} : parse_chain(chain_text);
    const PhiResult pr = phi(c, n);
    if (opts.format == "json") {
        json blocks = json::array();
        for (const auto& b : pr.blocks) {
            json blk = json::array();
            for (const int v : b) blk.push_back(v);
            blocks.push_back(blk);
        }
        json pair{{"word", pr.perm.abs_word()}, {"negatives", json::array()}};
        for (int v = 1; v <= n; ++v) {
            if ((pr.perm.neg_set() >> (v - 1)) & 1u) pair["negatives"].push_back(v);
        }
        json out{{"n", n},
                 {"chain", chain_to_json(c)},
                 {"window", pr.perm.to_window_string()},
                 {"pair", pair},
                 {"blocks", blocks},
                 {"lengths", pr.lengths}};
        emit(opts, out.dump(2) + "\n");
    } else {
        std::string out = "chain:  " + (c.empty() ? "(empty)" : chain_to_string(c)) + "\n";
        out += "window: " + pr.perm.to_window_string() + "\n";
        out += "lengths:";
        for (const int L : pr.lengths) out += " " + std::to_string(L);
        out += "\n";
        emit(opts, out);
    }
    return 0;
}

int run_partition(int n, int m, const CommonOpts& opts, bool emit_fibers) {
    const OrderComplex k = get_complex(n, m, opts);
    const PartitionCertificate cert = partition(k, opts.fiber_cap, opts.threads);

    if (opts.format == "json") {
        json out{{"n", n},
                 {"m", m},
                 {"verdict", cert.verified ? "verified" : "failed"},
                 {"h_from_partition", cert.h_from_partition},
                 {"total_faces", cert.total_faces},
                 {"fiber_count", cert.fibers.size()}};
        if (!cert.verified) {
            out["reason"] = cert.failure_reason;
            out["witness"] = cert.witness;
        }
        if (emit_fibers) {
            json fibers = json::array();
            for (const auto& [key, fiber] : cert.fibers) {
                json faces = json::array();
                for (const FaceRef& ref : fiber.faces) {
                    const auto span = k.face(ref.card, ref.idx);
                    faces.push_back(std::vector<int>(span.begin(), span.end()));
                }
                fibers.push_back(json{{"window", fiber.perm.to_window_string()},
                                      {"bottom", chain_to_json(fiber.bottom)},
                                      {"top", chain_to_json(fiber.top_chain)},
                                      {"faces", faces}});
            }
            out["fibers"] = fibers;
        }
        emit(opts, out.dump(2) + "\n");
    } else {
        std::string out = "partition of Delta_{" + std::to_string(n) + "," + std::to_string(m) +
                          "}: " + (cert.verified ? "verified" : "FAILED") + "\n";
        out += "  fibers = " + std::to_string(cert.fibers.size()) +
               ", faces covered = " + std::to_string(cert.total_faces) + "\n";
        out += "  h from partition = (";
        for (std::size_t i = 0; i < cert.h_from_partition.size(); ++i)
            out += (i ? "," : "") + std::to_string(cert.h_from_partition[i]);
        out += ")\n";
        if (!cert.verified)
            out += "  reason: " + cert.failure_reason + " (witness " + cert.witness + ")\n";
        emit(opts, out);
    }
    return cert.verified ? 0 : 1;
}

int run_eulerian(int n, const CommonOpts& opts) {
    const std::vector<long long> d = eulerian_d(n);
    if (opts.format == "json") {
        emit(opts, json{{"n", n}, {"D", d}}.dump(2) + "\n");
    } else if (opts.format == "csv") {
        std::string out = "n,j,D\n";
        for (std::size_t j = 0; j < d.size(); ++j) {
            out += std::to_string(n) + "," + std::to_string(j) + "," + std::to_string(d[j]) + "\n";
        }
        emit(opts, out);
    } else {
        std::string out = "D(" + std::to_string(n) + ",.) = (";
        for (std::size_t j = 0; j < d.size(); ++j) out += (j ? "," : "") + std::to_string(d[j]);
        emit(opts, out + ")\n");
    }
    return 0;
}

int run_perm2chain(const std::string& window, const CommonOpts& opts) {
    const SignedPerm p = SignedPerm::parse_window(window);
    const Chain top = chain_of_perm(p);
    const Chain bottom = bottom_chain(p);
    const DescentData dd = descent_data(p);
    if (opts.format == "json") {
        json out{{"window", p.to_window_string()},
                 {"n", p.size()},
                 {"descents", dd.to_list()},
                 {"saturated_chain", chain_to_json(top)},
                 {"bottom_chain", chain_to_json(bottom)}};
        emit(opts, out.dump(2) + "\n");
    } else {
        std::string out = "window: " + p.to_window_string() + "\n";
        out += "Des = {";
        const auto list = dd.to_list();
        for (std::size_t i = 0; i < list.size(); ++i) out += (i ? "," : "") + std::to_string(list[i]);
        out += "}\n";
        out += "C^pi: " + chain_to_string(top) + "\n";
        out += "C_pi: " + (bottom.empty() ? "(empty)" : chain_to_string(bottom)) + "\n";
        emit(opts, out);
    }
    return 0;
}

/// The Betti spot checks priced into the default verify run.
bool betti_spot_pair(int n, int m) {
    return (n == 2 && m == 1) || (n == 3 && m == 2) || (n == 4 && m == 3) ||
           (n == 4 && m == 2) || (n == 5 && m == 2);
}

int run_verify(int n_max, const CommonOpts& opts, bool all_betti) {
    bool all_pass = true;
    std::vector<IdentityReport> reports;
    std::vector<std::string> lines;
    json grid = json::array();

    const auto note = [&](const std::string& line, bool pass) {
        lines.push_back(std::string(pass ? "[pass] " : "[FAIL] ") + line);
        all_pass = all_pass && pass;
    };

    for (int n = 1; n <= n_max; ++n) {
        if (n <= 9) {
            const auto ds = corollary_ds(n);
            bool pass = true;
            for (const auto& r : ds) pass = pass && r.pass;
            reports.insert(reports.end(), ds.begin(), ds.end());
            note("corollary DS identities for D(" + std::to_string(n) + ",.)", pass);
        }
        for (int m = 0; m <= n - 1; ++m) {
            const bool covered = (m % 2 == 0) || (m == n - 1);
            if (!covered) continue;

            const OrderComplex k = get_complex(n, m, opts);
            const std::vector<long long> f = k.f_vector();
            const std::vector<long long> h = h_vector(f, n);
            const long long chi = reduced_euler_from_f(f);
            const std::string tag = "(" + std::to_string(n) + "," + std::to_string(m) + ")";

            const PartitionCertificate cert = partition(k, opts.fiber_cap, opts.threads);
            note("partition certificate " + tag +
                     (cert.verified ? "" : ": " + cert.failure_reason),
                 cert.verified);

            CrossCheckOptions cc;
            cc.face_cap = opts.face_cap;
            cc.fiber_cap = opts.fiber_cap;
            cc.threads = opts.threads;
            const auto cross = cross_check(n, m, cc);
            bool cross_pass = true;
            for (const auto& r : cross) cross_pass = cross_pass && r.pass;
            reports.insert(reports.end(), cross.begin(), cross.end());
            note("h-vector cross checks " + tag, cross_pass);

            bool h_nonneg = true;
            for (const long long v : h) h_nonneg = h_nonneg && v >= 0;
            note("h-vector nonnegativity " + tag, h_nonneg);

            if (m == n - 1 && n >= 2) {
                auto ds_eq = dehn_sommerville(h, n, chi);
                bool ds_pass = true;
                for (auto& r : ds_eq) {
                    r.n = n;
                    r.m = m;
                    ds_pass = ds_pass && r.pass;
                }
                reports.insert(reports.end(), ds_eq.begin(), ds_eq.end());
                note("Dehn-Sommerville relations " + tag, ds_pass);

                const long long expected_chi = (n % 2 == 0) ? -1 : 0;
                reports.push_back(
                    make_report("euler_parity", n, m, -1, chi, expected_chi));
                note("reduced Euler characteristic parity " + tag, chi == expected_chi);
            }

            if (all_betti || betti_spot_pair(n, m)) {
                const HomologyResult hom = homology_ranks(k);
                bool betti_pass = true;
                for (int deg = 0; deg <= k.dim(); ++deg) {
                    const long long expected = (m % 2 == 1 && deg == m) ? 1 : 0;
                    betti_pass = betti_pass && hom.betti[deg] == expected;
                }
                note("reduced Betti numbers match RP^m " + tag + " [" + hom.mode_string() + "]",
                     betti_pass);
            }

            std::vector<long long> d_table;
            if (m == n - 1 && n <= 9) d_table = eulerian_d(n);
            json entry{{"n", n}, {"m", m}, {"f", f}, {"h", h}, {"euler_reduced", chi},
                       {"partition_verified", cert.verified}};
            if (!d_table.empty()) entry["D"] = d_table;
            grid.push_back(entry);
        }
    }

    if (opts.format == "json") {
        json rep = json::array();
        for (const auto& r : reports) {
            rep.push_back(json{{"name", r.name}, {"n", r.n}, {"m", r.m}, {"j", r.j},
                               {"lhs", r.lhs}, {"rhs", r.rhs}, {"pass", r.pass}});
        }
        json out{{"n_max", n_max}, {"all_pass", all_pass}, {"grid", grid}, {"reports", rep}};
        emit(opts, out.dump(2) + "\n");
    } else if (opts.format == "csv") {
        std::string out = "n,m,j,f_j,h_j,D_nj\n";
        for (const auto& entry : grid) {
            const auto& h = entry["h"];
            const auto& f = entry["f"];
            for (std::size_t j = 0; j < h.size(); ++j) {
                out += entry["n"].dump() + "," + entry["m"].dump() + "," + std::to_string(j) +
                       "," + f[j].dump() + "," + h[j].dump() + ",";
                if (entry.contains("D")) out += entry["D"][j].dump();
                out += "\n";
            }
        }
        emit(opts, out);
    } else {
        std::string out;
        for (const auto& line : lines) out += line + "\n";
        out += all_pass ? "all checks passed\n" : "SOME CHECKS FAILED\n";
        emit(opts, out);
    }
    return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"sign-variation posets, order complexes and descent statistics"};
    app.require_subcommand(1);

    CommonOpts opts;

    int n = 0, m = 0, n_max = 4;
    std::string chain_text, window, dot_file;
    bool with_flag = false, skip_betti = false, emit_fibers = false, all_betti = false;

    CLI::App* c_complex = app.add_subcommand("complex", "f/h/flag vectors, Euler characteristic and Betti numbers of one complex");
    c_complex->add_option("--n", n, "Vector length")->required();
    c_complex->add_option("--m", m, "Sign-variation bound")->required();
    c_complex->add_flag("--flag-vectors", with_flag, "Include rank-selected flag vectors");
    c_complex->add_flag("--skip-betti", skip_betti, "Skip the homology computation");
    c_complex->add_option("--dot", dot_file, "Write the Hasse diagram of the poset to a DOT file");
    add_common(c_complex, opts);

    CLI::App* c_phi = app.add_subcommand("phi", "apply the chain-to-permutation map");
    c_phi->add_option("--n", n, "Vector length")->required();
    c_phi->add_option("--chain", chain_text, "Comma-separated sign vectors (empty for the empty chain)")
        ->required();
    add_common(c_phi, opts, false);

    CLI::App* c_part = app.add_subcommand("partition", "Boolean-interval partition certificate");
    c_part->add_option("--n", n, "Vector length")->required();
    c_part->add_option("--m", m, "Sign-variation bound")->required();
    c_part->add_flag("--emit-fibers", emit_fibers, "Dump every fiber (json only; large)");
    add_common(c_part, opts);

    CLI::App* c_euler = app.add_subcommand("eulerian-d", "type-D Eulerian numbers D(n,.)");
    c_euler->add_option("--n", n, "Rank")->required();
    add_common(c_euler, opts, false);

    CLI::App* c_verify = app.add_subcommand("verify", "run the full identity grid");
    c_verify->add_option("--n-max", n_max, "Largest n in the grid")->capture_default_str();
    c_verify->add_flag("--betti", all_betti, "Betti checks for every grid point, not just the spot pairs");
    add_common(c_verify, opts);

    CLI::App* c_p2c = app.add_subcommand("perm2chain", "saturated chain C^pi and bottom C_pi of a window");
    c_p2c->add_option("--window", window, "Comma-separated signed window, e.g. -2,3,1,5,-4")
        ->required();
    add_common(c_p2c, opts, false);

    CLI11_PARSE(app, argc, argv);

    try {
        if (c_complex->parsed()) return run_complex(n, m, opts, with_flag, skip_betti, dot_file);
        if (c_phi->parsed()) return run_phi(n, chain_text, opts);
        if (c_part->parsed()) return run_partition(n, m, opts, emit_fibers);
        if (c_euler->parsed()) return run_eulerian(n, opts);
        if (c_verify->parsed()) return run_verify(n_max, opts, all_betti);
        if (c_p2c->parsed()) return run_perm2chain(window, opts);
    } catch (const CapExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
