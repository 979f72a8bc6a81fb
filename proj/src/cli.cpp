#include "mpc/cli.hpp"

#include <algorithm>
#include <atomic>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

#include "mpc/analysis.hpp"
#include "mpc/codespec.hpp"

namespace mpc {

namespace {

uint64_t to_u64(const std::string& v, const std::string& what) {
    try {
        size_t pos = 0;
        uint64_t out = std::stoull(v, &pos);
        if (pos != v.size()) throw parse_error("");
        return out;
    } catch (const std::exception&) {
        throw parse_error("bad integer for " + what + ": '" + v + "'");
    }
}

std::vector<uint32_t> parse_word(const Field& f, const std::string& text, size_t expect) {
    std::vector<uint32_t> out;
    for (const std::string& tok : split(text, ',')) out.push_back(f.parse(trim(tok)));
    if (out.size() != expect)
        throw parse_error("expected " + std::to_string(expect) + " symbols, got " +
                          std::to_string(out.size()));
    return out;
}

std::string format_word(const Field& f, std::span<const uint32_t> w) {
    std::string out;
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) out += ",";
        out += f.format(w[i]);
    }
    return out;
}

void print_code_header(std::ostream& out, const CodeSpec& cs) {
    out << "code: n=" << cs.length() << " k=" << cs.dim();
    bool all_known = true;
    for (size_t j = 0; j < cs.s(); ++j)
        if (!cs.constituent(j).known_distance()) all_known = false;
    if (all_known) {
        if (cs.scalar && cs.scalar->nested() && cs.scalar->nonsingular_by_columns())
            out << " d=" << cs.scalar->distance_nested_nsc();
        else if (cs.scalar)
            out << " d_lb=" << cs.scalar->distance_lower_bound();
        else
            out << " d_lb=" << cs.unit->d_star().value;
    }
    out << "\n";
}

int cmd_encode(std::ostream& out, const std::string& spec_path, const std::string& message) {
    CodeSpec cs = load_code_spec(spec_path);
    auto msg = parse_word(*cs.field, message, cs.dim());
    print_code_header(out, cs);
    out << "word: " << format_word(*cs.field, cs.encode(msg)) << "\n";
    return 0;
}

int cmd_decode(std::ostream& out, const std::string& spec_path, const std::string& received,
               std::optional<uint64_t> tau, bool first_hit, bool trace) {
    CodeSpec cs = load_code_spec(spec_path);
    DecoderSpec dec = cs.decoder();
    auto word = parse_word(*cs.field, received, cs.length());
    DecodeOptions opt;
    opt.tau_override = tau;
    opt.first_hit = first_hit;
    opt.trace = trace;
    DecodeOutput res = dec.list_decode(word, opt);
    out << "tau=" << (tau ? *tau : dec.tau()) << "\n";
    if (trace) {
        for (const TupleTrace& tt : res.traces) {
            out << "tuple=(";
            for (size_t j = 0; j < tt.tuple.size(); ++j)
                out << (j ? "," : "") << tt.tuple[j] + 1;
            out << ") survivors=" << tt.survivors << " accepted=" << tt.accepted << "\n";
            for (const StepTrace& st : tt.steps)
                for (const StepBranchTrace& bt : st.branches)
                    out << "  step=" << st.step << " block=" << st.block + 1
                        << " branch=" << bt.parent << " list=" << bt.list.size() << "\n";
        }
    }
    if (res.words.empty()) {
        out << "NONE\n";
        return 0;
    }
    for (const auto& w : res.words)
        out << "codeword: " << format_word(*cs.field, w)
            << " distance=" << hamming_distance(w, word) << "\n";
    return 0;
}

int cmd_simulate(std::ostream& out, const std::string& spec_path, uint64_t weight,
                 uint64_t trials, uint64_t seed, bool unique, unsigned threads) {
    CodeSpec cs = load_code_spec(spec_path);
    DecoderSpec dec = cs.decoder();
    const Field& f = *cs.field;
    size_t n = cs.length(), k = cs.dim();
    check(weight <= n, "error weight exceeds the code length");
    check(trials >= 1, "need at least one trial");

    std::atomic<uint64_t> member_ok{0}, unique_ok{0};
    parallel_chunks(trials, threads, [&](uint64_t lo, uint64_t hi, unsigned) {
        uint64_t mloc = 0, uloc = 0;
        for (uint64_t t = lo; t < hi; ++t) {
            auto rng = trial_rng(seed, t);
            std::vector<uint32_t> msg(k);
            for (auto& v : msg) v = static_cast<uint32_t>(uniform_below(rng, f.size()));
            auto sent = cs.encode(msg);
            auto err = random_error(rng, f, n, weight);
            std::vector<uint32_t> y(n);
            for (size_t i = 0; i < n; ++i) y[i] = f.add(sent[i], err[i]);
            DecodeOutput res = dec.list_decode(y);
            bool member = std::binary_search(res.words.begin(), res.words.end(), sent);
            mloc += member;
            uloc += member && res.words.size() == 1;
        }
        member_ok += mloc;
        unique_ok += uloc;
    });

    out << "trials=" << trials << " weight=" << weight << " seed=" << seed
        << " membership=" << member_ok.load() << " membership_fraction=" << std::fixed
        << std::setprecision(6)
        << static_cast<double>(member_ok.load()) / static_cast<double>(trials);
    if (unique)
        out << " unique=" << unique_ok.load() << " unique_fraction="
            << static_cast<double>(unique_ok.load()) / static_cast<double>(trials);
    out << "\n";
    return 0;
}

std::vector<uint32_t> poly_block(const Field& f, size_t m, const std::string& text) {
    Poly p = Poly::parse(f, text);
    check(p.degree() < static_cast<int>(m), "polynomial degree exceeds the block length");
    std::vector<uint32_t> out = p.coeffs();
    out.resize(m, 0);
    return out;
}

// golden replay of the worked examples; all expected values are fixed
int cmd_examples(std::ostream& out) {
    bool all_ok = true;
    auto expect = [&](const std::string& label, bool ok) {
        out << (ok ? "PASS " : "FAIL ") << label << "\n";
        all_ok = all_ok && ok;
    };

    // list decoding parameters (m, k, v) -> (r, l, tau, cap)
    struct GSRow {
        uint64_t m, k, v, r, l, tau, cap;
    };
    const GSRow gs_table[] = {
        {15, 10, 4, 6, 47, 3, 5}, {15, 4, 4, 10, 28, 7, 9}, {15, 8, 2, 4, 21, 4, 3},
        {15, 5, 1, 3, 9, 5, 2},   {15, 5, 8, 16, 63, 7, 15}, {15, 13, 1, 2, 13, 1, 1},
        {15, 8, 1, 2, 11, 3, 1},
    };
    bool gs_ok = true;
    for (const GSRow& row : gs_table) {
        GSParams p = gs_params(row.m, row.k, row.v);
        gs_ok = gs_ok && p.r == row.r && p.l == row.l && p.tau == row.tau &&
                p.list_cap == row.cap;
    }
    expect("list decoding parameter table", gs_ok);

    const uint64_t taus_a[] = {3, 7}, taus_b[] = {4}, taus_c1[] = {5}, taus_c8[] = {7},
                   taus_d[] = {1, 3};
    expect("decoding radii", tau_bound(2, taus_a) == 7 && tau_bound(2, taus_b) == 9 &&
                                 tau_bound(2, taus_c1) == 11 && tau_bound(2, taus_c8) == 15 &&
                                 tau_bound(2, taus_d) == 3);

    const uint64_t prop_taus[] = {3};
    expect("good-tuple probability 1/2",
           rational_str(good_set_probability(15, 2, 2, 7, prop_taus)) == "1/2");

    // [30,14,12] over GF(16), two nested RS constituents, scalar matrix
    {
        CodeSpec cs = parse_code_spec(
            "field p=2 m=4\n"
            "constituent rs k=10 v=4\n"
            "constituent rs k=4 v=4\n"
            "matrix rows=2 cols=2\n"
            "row 1, 1\n"
            "row 0, 1\n");
        const Field& f = *cs.field;
        expect("two-level code parameters",
               cs.length() == 30 && cs.dim() == 14 && cs.scalar->nested() &&
                   cs.scalar->nonsingular_by_columns() &&
                   cs.scalar->distance_nested_nsc() == 12);
        DecoderSpec dec = cs.decoder();
        expect("two-level decoder radius", dec.tau() == 7 && dec.taus()[0] == 3 &&
                                               dec.taus()[1] == 7);

        auto p1 = poly_block(f, 15, "a^2*x + a*x^5 + a^5*x^6 + a^14*x^13");
        auto p2 = poly_block(f, 15, "a^5*x^2 + a^7*x^6 + a^8*x^10");
        std::vector<uint32_t> y;
        y.insert(y.end(), p1.begin(), p1.end());
        y.insert(y.end(), p2.begin(), p2.end());
        DecodeOptions opt;
        opt.trace = true;
        DecodeOutput res = dec.list_decode(y, opt);
        std::vector<uint32_t> zero_word(30, 0), zero_block(15, 0);
        expect("two-level decode finds the zero word",
               std::binary_search(res.words.begin(), res.words.end(), zero_word) &&
                   hamming_distance(zero_word, y) == 7);

        // tuple (1,2): the branch through the listed first-block codeword dies
        auto p12 =
            poly_block(f, 15, "a^2*x + a*x^5 + a^5*x^6 + a^14*x^7 + a^10*x^13 + a^5*x^14");
        bool t12_ok = false;
        bool t21_ok = false;
        for (const TupleTrace& tt : res.traces) {
            if (tt.tuple == std::vector<size_t>{0, 1}) {
                const auto& list1 = tt.steps[0].branches[0].list;
                auto it = std::find(list1.begin(), list1.end(), p12);
                if (it != list1.end()) {
                    size_t idx = static_cast<size_t>(it - list1.begin());
                    t12_ok = tt.steps.size() > 1 && tt.steps[1].branches.size() > idx &&
                             tt.steps[1].branches[idx].list.empty();
                }
            }
            if (tt.tuple == std::vector<size_t>{1, 0}) {
                const auto& list1 = tt.steps[0].branches[0].list;
                auto it = std::find(list1.begin(), list1.end(), zero_block);
                if (it != list1.end()) {
                    size_t idx = static_cast<size_t>(it - list1.begin());
                    t21_ok = tt.steps.size() > 1 && tt.steps[1].branches.size() > idx &&
                             std::find(tt.steps[1].branches[idx].list.begin(),
                                       tt.steps[1].branches[idx].list.end(),
                                       zero_block) != tt.steps[1].branches[idx].list.end();
                }
            }
        }
        expect("first tuple: dead branch after the listed codeword", t12_ok);
        expect("second tuple: zero then zero", t21_ok);
    }

    auto round_trip = [&](const CodeSpec& cs, uint64_t weight, uint64_t seed) {
        const Field& f = *cs.field;
        DecoderSpec dec = cs.decoder();
        auto rng = trial_rng(seed, 0);
        std::vector<uint32_t> msg(cs.dim());
        for (auto& v : msg) v = static_cast<uint32_t>(uniform_below(rng, f.size()));
        auto sent = cs.encode(msg);
        auto err = random_error(rng, f, cs.length(), weight);
        std::vector<uint32_t> y(cs.length());
        for (size_t i = 0; i < y.size(); ++i) y[i] = f.add(sent[i], err[i]);
        DecodeOutput res = dec.list_decode(y);
        return res.words.size() == 1 && res.words[0] == sent;
    };

    // [30,8] quasi-cyclic, one [15,8] constituent, unit matrix entry
    {
        CodeSpec cs = parse_code_spec(
            "field p=2 m=4\n"
            "constituent cyclic v=2 gen=x^7 + a^6*x^6 + a^13*x^5 + a^12*x^4 + a*x^3 + a^10*x^2 "
            "+ a^11*x + a^13\n"
            "matrix rows=1 cols=2\n"
            "row 1, x^4 + a^5*x^3 + a*x^2 + a^11*x + a^14\n");
        DecoderSpec dec = cs.decoder();
        auto ds = cs.unit->d_star();
        expect("one-level k=8 code", cs.length() == 30 && cs.dim() == 8 &&
                                         cs.unit->unit_by_columns() && dec.tau() == 9 &&
                                         ds.value == 16 && ds.terms[0].exact);
        expect("one-level k=8 round trip at weight 9", round_trip(cs, 9, 7));
    }

    // [30,5] quasi-cyclic, one [15,5] constituent
    {
        CodeSpec cs = parse_code_spec(
            "field p=2 m=4\n"
            "constituent cyclic v=1 gen=x^10 + a^2*x^9 + a^3*x^8 + a^9*x^7 + a^6*x^6 + "
            "a^14*x^5 + a^2*x^4 + a*x^3 + a^6*x^2 + a*x + a^10\n"
            "matrix rows=1 cols=2\n"
            "row 1, x^3 + a^3*x^2 + a^14*x + a^9\n");
        DecoderSpec dec = cs.decoder();
        auto ds = cs.unit->d_star();
        expect("one-level k=5 code", cs.length() == 30 && cs.dim() == 5 &&
                                         cs.unit->unit_by_columns() && dec.tau() == 11 &&
                                         ds.value == 22 && ds.terms[0].exact);
        expect("one-level k=5 radius at multiplicity 8", gs_params(15, 5, 8).tau == 7);
        expect("one-level k=5 round trip at weight 11", round_trip(cs, 11, 7));
    }

    // [30,21] quasi-cyclic, two RS constituents, upper unit entry
    {
        CodeSpec cs = parse_code_spec(
            "field p=2 m=4\n"
            "constituent rs k=13 v=1\n"
            "constituent rs k=8 v=1\n"
            "matrix rows=2 cols=2\n"
            "row 1, x^5 + a^10*x^3 + a^2*x^2 + a^2\n"
            "row 0, 1\n");
        const Field& f = *cs.field;
        DecoderSpec dec = cs.decoder();
        RingElem g = cs.unit->matrix().at(0, 1);
        expect("two-level unit code", cs.length() == 30 && cs.dim() == 21 &&
                                          cs.unit->unit_by_columns() && dec.tau() == 3 &&
                                          g.is_unit() &&
                                          g * g.inv() == RingElem::constant(f, 15, 1));
        expect("two-level unit round trip at weight 3", round_trip(cs, 3, 7));
    }

    out << (all_ok ? "ALL PASS" : "SOME CHECKS FAILED") << "\n";
    return all_ok ? 0 : 1;
}

} // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"matrix-product code toolkit"};
    app.require_subcommand(1);

    std::string spec_path, message, received;
    uint64_t tau_raw = 0, weight = 0, trials = 100, seed = 1;
    bool first_hit = false, trace = false, unique = false;
    unsigned threads = 1;

    CLI::App* enc = app.add_subcommand("encode", "encode a message with a spec-file code");
    enc->add_option("spec", spec_path, "code spec file")->required();
    enc->add_option("-m,--message", message, "comma-separated message symbols")->required();

    CLI::App* dec = app.add_subcommand("decode", "list decode a received word");
    dec->add_option("spec", spec_path, "code spec file")->required();
    dec->add_option("-r,--received", received, "comma-separated received symbols")->required();
    CLI::Option* tau_opt = dec->add_option("--tau", tau_raw, "override the distance filter");
    dec->add_flag("--first-hit", first_hit, "stop at the first tuple that yields output");
    dec->add_flag("--trace", trace, "print per-tuple branch diagnostics");

    CLI::App* sim = app.add_subcommand("simulate", "random error trials at a fixed weight");
    sim->add_option("spec", spec_path, "code spec file")->required();
    sim->add_option("-w,--weight", weight, "error weight per trial")->required();
    sim->add_option("-n,--trials", trials, "number of trials");
    sim->add_option("-s,--seed", seed, "random seed");
    sim->add_flag("--unique", unique, "also count trials whose output is exactly the sent word");
    sim->add_option("-t,--threads", threads, "worker threads");

    uint64_t gp_m = 0, gp_k = 0, gp_v = 0;
    CLI::App* gsp = app.add_subcommand("gs-params", "list decoding parameters for one code");
    gsp->add_option("m", gp_m, "code length")->required();
    gsp->add_option("k", gp_k, "code dimension")->required();
    gsp->add_option("v", gp_v, "interpolation multiplicity")->required();

    CLI::App* ana = app.add_subcommand("analyze", "probability and complexity tables");
    ana->require_subcommand(1);
    uint64_t an_m = 0, an_l = 0, an_s = 0, an_tau = 0;
    std::vector<uint64_t> an_taus;
    CLI::App* gsprob = ana->add_subcommand("good-set-prob",
                                           "probability a fixed block choice fits the radii");
    gsprob->add_option("m", an_m, "block length")->required();
    gsprob->add_option("l", an_l, "block count")->required();
    gsprob->add_option("s", an_s, "chosen blocks")->required();
    gsprob->add_option("tau", an_tau, "total error weight")->required();
    gsprob->add_option("taus", an_taus, "per-block radii (s-1 values)");
    CLI::App* gsprobx = ana->add_subcommand("good-set-prob-exact",
                                            "same probability with all s caps enforced");
    gsprobx->add_option("m", an_m, "block length")->required();
    gsprobx->add_option("l", an_l, "block count")->required();
    gsprobx->add_option("s", an_s, "chosen blocks")->required();
    gsprobx->add_option("tau", an_tau, "total error weight")->required();
    gsprobx->add_option("taus", an_taus, "per-block radii (s values)");

    uint64_t pt_p = 2, pt_deg = 4, pt_k = 0, pt_v = 1, pt_window = 1;
    uint64_t pt_trials = 100, pt_seed = 1;
    std::string pt_mod, pt_model = "proportional";
    unsigned pt_threads = 1;
    CLI::App* ptau = ana->add_subcommand("p-tau",
                                         "Monte Carlo list-size-overflow probability");
    ptau->add_option("--p", pt_p, "field characteristic");
    ptau->add_option("--deg", pt_deg, "field extension degree");
    ptau->add_option("--mod", pt_mod, "field modulus polynomial");
    ptau->add_option("--k", pt_k, "code dimension")->required();
    ptau->add_option("--window", pt_window, "root window start");
    ptau->add_option("--v", pt_v, "interpolation multiplicity");
    ptau->add_option("--trials", pt_trials, "number of trials");
    ptau->add_option("--seed", pt_seed, "random seed");
    ptau->add_option("--model", pt_model, "error weight model: proportional | uniform");
    ptau->add_option("--threads", pt_threads, "worker threads");

    std::vector<double> sp_probs;
    CLI::App* sprob = ana->add_subcommand("success-prob", "product of per-step success rates");
    sprob->add_option("probs", sp_probs, "per-constituent overflow probabilities")->required();

    uint64_t sb_l = 0;
    double sb_p = 0.0;
    CLI::App* sbound = ana->add_subcommand("survival-bound",
                                           "union bound on a wrong word surviving");
    sbound->add_option("l", sb_l, "block count")->required();
    sbound->add_option("p", sb_p, "single-block overflow probability")->required();

    uint64_t cx_l = 0;
    std::string cx_caps, cx_costs;
    CLI::App* cx = ana->add_subcommand("complexity", "branch budget over all index tuples");
    cx->add_option("l", cx_l, "block count")->required();
    cx->add_option("--caps", cx_caps, "comma-separated list-size caps")->required();
    cx->add_option("--costs", cx_costs, "comma-separated per-step decode costs")->required();

    CLI::App* ex = app.add_subcommand("examples", "replay the worked examples end to end");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (*enc) return cmd_encode(out, spec_path, message);
        if (*dec)
            return cmd_decode(out, spec_path, received,
                              *tau_opt ? std::optional<uint64_t>(tau_raw) : std::nullopt,
                              first_hit, trace);
        if (*sim) return cmd_simulate(out, spec_path, weight, trials, seed, unique, threads);
        if (*gsp) {
            GSParams p = gs_params(gp_m, gp_k, gp_v);
            out << "r=" << p.r << " l=" << p.l << " tau=" << p.tau
                << " list_cap=" << p.list_cap << "\n";
            return 0;
        }
        if (*gsprob) {
            out << "probability=" << rational_str(good_set_probability(an_m, an_l, an_s, an_tau,
                                                                       an_taus))
                << "\n";
            return 0;
        }
        if (*gsprobx) {
            out << "probability="
                << rational_str(good_set_probability_exact(an_m, an_l, an_s, an_tau, an_taus))
                << "\n";
            return 0;
        }
        if (*ptau) {
            ErrorWeightModel model;
            if (pt_model == "proportional") model = ErrorWeightModel::proportional;
            else if (pt_model == "uniform") model = ErrorWeightModel::uniform;
            else throw parse_error("unknown weight model: " + pt_model);
            std::unique_ptr<Field> f;
            if (pt_mod.empty()) {
                f = std::make_unique<Field>(static_cast<uint32_t>(pt_p),
                                            static_cast<uint32_t>(pt_deg));
            } else {
                Field base(static_cast<uint32_t>(pt_p), 1);
                std::vector<uint32_t> coeffs = Poly::parse(base, pt_mod).coeffs();
                coeffs.resize(pt_deg + 1, 0);
                f = std::make_unique<Field>(static_cast<uint32_t>(pt_p),
                                            static_cast<uint32_t>(pt_deg), coeffs);
            }
            RSCode code(*f, pt_k, pt_window);
            ProbEstimate pe = estimate_p_tau(code, pt_v, pt_trials, pt_seed, model, pt_threads);
            out << "tau=" << gs_params(code.length(), pt_k, pt_v).tau << std::fixed
                << std::setprecision(6) << " estimate=" << pe.estimate
                << " std_error=" << pe.std_error << " successes=" << pe.successes
                << " trials=" << pe.trials << " seed=" << pe.seed << "\n";
            return 0;
        }
        if (*sprob) {
            out << "probability=" << std::fixed << std::setprecision(6)
                << decoder_success_probability(sp_probs) << "\n";
            return 0;
        }
        if (*sbound) {
            out << "bound=" << std::fixed << std::setprecision(6)
                << bad_tuple_survival_bound(sb_l, sb_p) << "\n";
            return 0;
        }
        if (*cx) {
            std::vector<uint64_t> caps, costs;
            for (const std::string& t : split(cx_caps, ','))
                caps.push_back(to_u64(trim(t), "caps"));
            for (const std::string& t : split(cx_costs, ','))
                costs.push_back(to_u64(trim(t), "costs"));
            out << "operations=" << complexity_estimate(cx_l, caps.size(), caps, costs).str()
                << "\n";
            return 0;
        }
        if (*ex) return cmd_examples(out);
        err << "no subcommand\n";
        return 2;
    } catch (const parse_error& e) {
        err << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const invariant_error& e) {
        err << "invariant violation: " << e.what() << "\n";
        return 3;
    } catch (const internal_error& e) {
        err << "internal error: " << e.what() << "\n";
        return 4;
    }
}

} // namespace mpc
