// Command-line front end: every computation of the library behind
// deterministic JSON output, plus the verification suite runner.
//
// Exit codes: 0 ok, 1 usage, 2 input error, 3 verification failure.

#include <CLI11.hpp>

#include "nsmac/json_io.hpp"
#include "nsmac/lp.hpp"

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <thread>

using namespace nsmac;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitVerification = 3;

WeightVector parse_mu(const std::string& s) {
    WeightVector v;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) throw std::invalid_argument("bad --mu entry");
        std::size_t pos = 0;
        long long x = std::stoll(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument("bad --mu entry: " + tok);
        v.push_back(x);
    }
    if (v.empty()) throw std::invalid_argument("--mu must be a comma-separated integer list");
    return v;
}

unsigned resolve_threads(unsigned flag) {
    if (flag > 0) return flag;
    if (const char* env = std::getenv("NSMAC_THREADS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v > 0) return static_cast<unsigned>(v);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? hw : 1;
}

// Deterministic fan-out: every task writes only its own slot, so the merged
// result does not depend on the thread count.
template <class Task>
void run_tasks(std::size_t count, unsigned threads, Task task) {
    if (threads <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) task(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= count) break;
            task(i);
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
}

std::vector<Composition> compositions_up_to(int n, int max_weight) {
    std::vector<Composition> out;
    Composition c(n, 0);
    auto rec = [&](auto&& self, int i, int rem) -> void {
        if (i == n) {
            out.push_back(c);
            return;
        }
        for (int v = 0; v <= rem; ++v) {
            c[i] = v;
            self(self, i + 1, rem - v);
        }
    };
    rec(rec, 0, max_weight);
    return out;
}

std::ostream* g_sink = &std::cout;

void emit(const json& j) { *g_sink << j.dump() << "\n"; }

// The support set, computed three independent ways; any mismatch is a
// verification failure.
PointSet triple_checked_support(const WeightVector& mu) {
    auto [m, c] = normalize_weight(mu);
    WeightVector shift(mu.size(), m);
    PointSet rec = translate(support_by_recursion(c), shift);
    PointSet enu = translate(support_by_enumeration(c), shift);
    PointSet bru = ideal(mu).elements;
    if (rec != enu || rec != bru) {
        json dump{{"error", "support cross-check mismatch"},
                  {"recursion", to_json(rec)},
                  {"enumeration", to_json(enu)},
                  {"bruhat_ideal", to_json(bru)}};
        std::cerr << dump.dump(2) << "\n";
        throw hypothesis_error("support cross-check mismatch", mu);
    }
    return rec;
}

struct SuiteResult {
    long long checked = 0;
    long long failed = 0;
    std::vector<std::string> witnesses; // first few failure descriptions
};

void note_failure(SuiteResult& r, const std::string& what) {
    ++r.failed;
    if (r.witnesses.size() < 5) r.witnesses.push_back(what);
}

json verify_paper(int max_n, int max_weight, int ks_max_weight, unsigned threads) {
    std::map<std::string, SuiteResult> results;

    // --- support agreement, M-convexity, saturation, lattice-point check ---
    {
        std::vector<Composition> all;
        for (int n = 1; n <= max_n; ++n) {
            auto cs = compositions_up_to(n, max_weight);
            all.insert(all.end(), cs.begin(), cs.end());
        }
        struct PerComp {
            bool agree = false, exchange = false, geometric = false,
                 submodular = false, conj38 = false, certified = false,
                 polytopes_equal = false;
        };
        std::vector<PerComp> per(all.size());
        run_tasks(all.size(), threads, [&](std::size_t i) {
            const Composition& mu = all[i];
            PerComp& r = per[i];
            PointSet rec = support_by_recursion(mu);
            r.agree = rec == support_by_enumeration(mu) && rec == ideal(mu).elements;
            r.exchange = is_mconvex_exchange(rec);
            r.geometric = is_mconvex_geometric(rec);
            r.submodular = is_submodular(support_function(rec));
            r.conj38 = verify_conjecture38(mu);
            try {
                MConvexCertificate cert = certify_mconvex(mu);
                r.certified = cert.support == rec;
            } catch (const hypothesis_error&) {
                r.certified = false;
            }
            r.polytopes_equal =
                newton_polytope(mu).vertices == moment_polytope(mu).vertices;
        });
        auto tally = [&](const char* name, auto field) {
            SuiteResult& s = results[name];
            for (std::size_t i = 0; i < all.size(); ++i) {
                ++s.checked;
                if (!(per[i].*field))
                    note_failure(s, json(all[i]).dump());
            }
        };
        tally("support-triple-agreement", &PerComp::agree);
        tally("mconvex-exchange", &PerComp::exchange);
        tally("mconvex-geometric", &PerComp::geometric);
        tally("support-function-submodular", &PerComp::submodular);
        tally("hull-lattice-points-in-ideal", &PerComp::conj38);
        tally("mconvex-certificates", &PerComp::certified);
        tally("newton-equals-moment-polytope", &PerComp::polytopes_equal);

        // Minkowski sums with root segments stay M-convex
        std::vector<Composition> multi;
        for (const auto& mu : all)
            if (mu.size() >= 2) multi.push_back(mu);
        std::vector<char> closed(multi.size(), 0);
        run_tasks(multi.size(), threads, [&](std::size_t i) {
            const Composition& mu = multi[i];
            PointSet s = support_by_recursion(mu);
            const int n = static_cast<int>(mu.size());
            bool ok = true;
            for (int a = 1; a <= n && ok; ++a)
                for (int b = 1; b <= n && ok; ++b)
                    if (a != b && !is_mconvex_exchange(minkowski_root_segment(s, a, b)))
                        ok = false;
            closed[i] = ok ? 1 : 0;
        });
        SuiteResult& mink = results["minkowski-root-segment-closure"];
        for (std::size_t i = 0; i < multi.size(); ++i) {
            ++mink.checked;
            if (!closed[i]) note_failure(mink, json(multi[i]).dump());
        }
    }

    // --- rotation recurrence for expansions ---
    {
        auto cs = compositions_up_to(3, ks_max_weight);
        const QTParams p1{Rational(1, 2), Rational(1, 2)};
        const QTParams p2{Rational(1, 3), Rational(1, 5)};
        std::vector<char> ok(cs.size() * 2, 0);
        run_tasks(cs.size() * 2, threads, [&](std::size_t i) {
            const Composition& mu = cs[i / 2];
            const QTParams& p = (i % 2 == 0) ? p1 : p2;
            ok[i] = verify_knop_sahi(mu, p) ? 1 : 0;
        });
        SuiteResult& s = results["rotation-recurrence"];
        for (std::size_t i = 0; i < ok.size(); ++i) {
            ++s.checked;
            if (!ok[i]) note_failure(s, json(cs[i / 2]).dump());
        }
    }

    // --- labeling lemmas over sliding-column families ---
    {
        std::vector<NuFamily> fams;
        for (int total_len = 2; total_len <= 5; ++total_len)
            for (int m = 2; m <= total_len; ++m) {
                int base_len = total_len - m;
                if (base_len > 3) continue;
                for (Int a = 1; a <= 3; ++a)
                    for (const auto& base : compositions_up_to(std::max(base_len, 1), 3)) {
                        if (base_len == 0) {
                            fams.emplace_back(Composition{}, a, m);
                            break; // one empty-base family per (a, m)
                        }
                        if (static_cast<int>(base.size()) == base_len)
                            fams.emplace_back(base, a, m);
                    }
            }
        struct FamResult {
            bool partial_sym = true, reflection = true, chain = true;
        };
        std::vector<FamResult> per(fams.size());
        run_tasks(fams.size(), threads, [&](std::size_t fi) {
            const NuFamily& fam = fams[fi];
            FamResult& r = per[fi];
            const std::size_t N = fam.member_length();
            for (int i = 1; i + 1 <= fam.size(); ++i) {
                if (!verify_partial_sym(fam, i)) r.partial_sym = false;
                if (!verify_reflection_inclusion(fam, i)) r.reflection = false;
                std::set<std::vector<Int>> Lcur;
                for (const auto& f : enumerate_nonattacking(fam.member(i)))
                    Lcur.insert(f.labels);
                for (const auto& f : enumerate_nonattacking(fam.member(i + 1))) {
                    if (Lcur.count(f.labels)) continue;
                    try {
                        Filling g = chain_flip(fam, i, f);
                        WeightVector mf = multiplicity(f), mg = multiplicity(g);
                        bool same = mf == mg;
                        bool shifted = mf == add(mg, sub(unit_vector(N, i + 1),
                                                         unit_vector(N, i)));
                        if (!(same || shifted) || !Lcur.count(g.labels))
                            r.chain = false;
                    } catch (const std::exception&) {
                        r.chain = false;
                    }
                }
            }
        });
        auto tally = [&](const char* name, auto field) {
            SuiteResult& s = results[name];
            for (std::size_t i = 0; i < fams.size(); ++i) {
                ++s.checked;
                if (!(per[i].*field)) note_failure(s, json(fams[i].member(1)).dump());
            }
        };
        tally("labeling-partial-symmetry", &FamResult::partial_sym);
        tally("support-reflection-inclusion", &FamResult::reflection);
        tally("attacking-chain-flip", &FamResult::chain);
    }

    json out;
    bool all_ok = true;
    for (const auto& [name, r] : results) {
        json entry{{"checked", r.checked}, {"failed", r.failed}};
        if (!r.witnesses.empty()) entry["witnesses"] = r.witnesses;
        out["results"][name] = entry;
        if (r.failed > 0) all_ok = false;
    }
    out["ok"] = all_ok;
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact supports, coefficients, and polytopes of non-symmetric "
                 "Macdonald polynomials, with discrete-convexity checks"};
    app.require_subcommand(1);
    unsigned threads_flag = 0;
    std::string output_path;
    app.add_option("--threads", threads_flag,
                   "worker threads (0 = NSMAC_THREADS or hardware)");
    app.add_option("--output", output_path, "write the JSON result to a file");

    std::string mu_arg, q_arg = "1/2", t_arg = "1/2", points_arg;
    int max_n = 4, max_weight = 6, ks_max_weight = 4;

    auto* support = app.add_subcommand("support", "triple-checked support set");
    support->add_option("--mu", mu_arg)->required();

    auto* newton = app.add_subcommand("newton", "Newton polytope of the expansion");
    newton->add_option("--mu", mu_arg)->required();

    auto* moment = app.add_subcommand("moment-polytope",
                                      "convex hull of the Bruhat lower ideal");
    moment->add_option("--mu", mu_arg)->required();

    auto* bruhat = app.add_subcommand("bruhat-ideal", "Bruhat lower order ideal");
    bruhat->add_option("--mu", mu_arg)->required();

    auto* mcheck = app.add_subcommand("mconvex-check",
                                      "run both M-convexity checkers on a point set");
    mcheck->add_option("--points", points_arg,
                       "JSON array of integer points ('-' reads stdin)")
        ->required();

    auto* coeffs = app.add_subcommand("coeffs", "exact coefficients at rational (q,t)");
    coeffs->add_option("--mu", mu_arg)->required();
    coeffs->add_option("--q", q_arg, "rational in (0,1), e.g. 1/2");
    coeffs->add_option("--t", t_arg, "rational in (0,1), e.g. 1/2");

    auto* fillings_cmd = app.add_subcommand("fillings", "non-attacking fillings");
    fillings_cmd->add_option("--mu", mu_arg)->required();

    auto* certify = app.add_subcommand("certify",
                                       "replayable M-convexity certificate");
    certify->add_option("--mu", mu_arg)->required();

    auto* verify = app.add_subcommand("verify-paper",
                                      "run every verification suite over a sweep");
    verify->add_option("--max-n", max_n, "max vector length (default 4)");
    verify->add_option("--max-weight", max_weight, "max |mu| (default 6)");
    verify->add_option("--ks-max-weight", ks_max_weight,
                       "max |mu| for the rotation recurrence (default 4)");

    for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; }))
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : 1;
    }

    unsigned threads = resolve_threads(threads_flag);
    std::ofstream out_file;
    if (!output_path.empty()) {
        out_file.open(output_path);
        if (!out_file) {
            std::cerr << "input error: cannot open " << output_path << "\n";
            return kExitInput;
        }
        g_sink = &out_file;
    }
    try {
        if (*support) {
            emit(to_json(triple_checked_support(parse_mu(mu_arg))));
        } else if (*newton) {
            emit(to_json(newton_polytope(parse_mu(mu_arg))));
        } else if (*moment) {
            LatticePolytope P = moment_polytope(parse_mu(mu_arg));
            if (!is_generalized_permutahedron(P)) {
                std::cerr << to_json(P).dump(2) << "\n";
                throw hypothesis_error("moment polytope fails the edge-direction test",
                                       parse_mu(mu_arg));
            }
            emit(to_json(P));
        } else if (*bruhat) {
            emit(to_json(ideal(parse_mu(mu_arg)).elements));
        } else if (*mcheck) {
            std::string text = points_arg;
            if (text == "-") {
                std::stringstream buf;
                buf << std::cin.rdbuf();
                text = buf.str();
            } else if (text.size() && text[0] != '[') {
                std::ifstream in(text);
                if (!in) throw std::invalid_argument("cannot open " + text);
                std::stringstream buf;
                buf << in.rdbuf();
                text = buf.str();
            }
            PointSet S = point_set_from_json(json::parse(text));
            bool ex = is_mconvex_exchange(S);
            bool geo = is_mconvex_geometric(S);
            json out{{"exchange", ex}, {"geometric", geo}, {"agree", ex == geo}};
            Int sum0 = weight_sum(S[0]);
            bool csum = std::all_of(S.begin(), S.end(), [&](const WeightVector& p) {
                return weight_sum(p) == sum0;
            });
            if (csum && S[0].size() <= 20)
                out["submodular"] = is_submodular(support_function(S));
            emit(out);
            if (ex != geo) {
                std::cerr << "checker disagreement\n" << to_json(S).dump(2) << "\n";
                return kExitVerification;
            }
        } else if (*coeffs) {
            QTParams params{parse_rational(q_arg), parse_rational(t_arg)};
            emit(to_json(coefficients_general(parse_mu(mu_arg), params)));
        } else if (*fillings_cmd) {
            WeightVector mu = parse_mu(mu_arg);
            check_composition(mu);
            json out = json::array();
            for (const Filling& f : enumerate_nonattacking(mu)) out.push_back(to_json(f));
            emit(out);
        } else if (*certify) {
            WeightVector mu = parse_mu(mu_arg);
            auto [m, c] = normalize_weight(mu);
            MConvexCertificate cert = certify_mconvex(c);
            json out = to_json(cert);
            if (m != 0) {
                out["shift"] = m;
                out["support"] =
                    to_json(translate(cert.support, WeightVector(mu.size(), m)));
            }
            emit(out);
        } else if (*verify) {
            if (max_n < 1 || max_weight < 0 || ks_max_weight < 0)
                throw std::invalid_argument("sweep bounds must be positive");
            json out = verify_paper(max_n, max_weight, ks_max_weight, threads);
            emit(out);
            if (!out["ok"].get<bool>()) return kExitVerification;
        }
    } catch (const hypothesis_error& e) {
        std::cerr << "verification failure: " << e.what() << "\n"
                  << json(e.witness).dump() << "\n";
        return kExitVerification;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const json::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitOk;
}
