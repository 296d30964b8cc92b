// Command-line surface for the beta-transformation hole computations:
// psi counts, butterfly chains, tau and partition tables, staircase sampling,
// the symbolic subshift map theta, extremal words and the Komornik-Loreti
// constant. CSV/JSON output for anything table-shaped.

#include <CLI11.hpp>
#include <json.hpp>

#include <betahole/betahole.hpp>

#include <fstream>
#include <iostream>

using nlohmann::json;
using namespace betahole;

namespace {

// ---- formatting -----------------------------------------------------------

enum class Round { down, up, nearest };

std::string to_decimal(const Rational& x, int digits, Round mode) {
    if (x < 0) throw std::invalid_argument("negative value in decimal formatting");
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    mpz_class num = x.get_num() * scale, scaled;
    switch (mode) {
        case Round::down: mpz_fdiv_q(scaled.get_mpz_t(), num.get_mpz_t(), x.get_den().get_mpz_t()); break;
        case Round::up: mpz_cdiv_q(scaled.get_mpz_t(), num.get_mpz_t(), x.get_den().get_mpz_t()); break;
        case Round::nearest: {
            mpz_class twice = 2 * num + x.get_den();
            mpz_fdiv_q(scaled.get_mpz_t(), twice.get_mpz_t(), mpz_class(2 * x.get_den()).get_mpz_t());
            break;
        }
    }
    std::string s = scaled.get_str();
    if (static_cast<int>(s.size()) <= digits) s.insert(0, static_cast<std::size_t>(digits) + 1 - s.size(), '0');
    s.insert(s.size() - static_cast<std::size_t>(digits), ".");
    return s;
}

std::string enclosure_str(const Interval& v, int digits) {
    return "[" + to_decimal(v.lo, digits, Round::down) + "," + to_decimal(v.hi, digits, Round::up) + "]";
}

// tolerance literals: "1e-7", "0.5e-3", "0.0001"
Rational parse_tolerance(const std::string& text) {
    std::string mant = text;
    long exp10 = 0;
    const auto e = text.find_first_of("eE");
    if (e != std::string::npos) {
        mant = text.substr(0, e);
        exp10 = std::stol(text.substr(e + 1));
    }
    auto [value, ulp] = parse_decimal(mant);
    (void)ulp;
    Rational r = value;
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(exp10 < 0 ? -exp10 : exp10));
    if (exp10 < 0) r /= Rational(p);
    else r *= Rational(p);
    if (r <= 0) throw std::invalid_argument("range: tol must be positive");
    return r;
}

int display_digits(const Rational& tol) {
    int d = 1;
    Rational t(1, 10);
    while (t > tol && d < 60) {
        t /= 10;
        ++d;
    }
    return std::max(d + 2, 8);
}

std::string chain_id(const ClassifyResult& c) {
    switch (c.region) {
        case ClassifyResult::Region::below_first: return "below-first";
        case ClassifyResult::Region::above_last: return "above-last";
        case ClassifyResult::Region::interior: return c.chain->to_string();
    }
    return "?";
}

json chain_json(const Chain& c) {
    json a = json::array();
    a.push_back(c.m);
    for (int k : c.ks) a.push_back(k);
    return a;
}

// Word-defined betas refine until the value enclosure meets the tolerance.
BetaParam tighten_for_value(const BetaParam& beta, const PeriodicSequence& expansion,
                            const Rational& tol) {
    if (beta.kind() != BetaParam::Kind::word_defined) return beta;
    BetaParam b = beta;
    for (int bits = 64; bits <= beta.precision().max_bits; bits *= 2) {
        b = b.refined_to(bits);
        if (eval_periodic(expansion, b).width() <= tol) return b;
    }
    return b;
}

BetaParam parse_beta(const std::string& spec, const Rational& tol) {
    if (spec == "kl") return komornik_loreti_beta(std::min(tol / 16, Rational(1, 1000000000)));
    return BetaParam::parse(spec);
}

// ---- subcommands ----------------------------------------------------------

struct PsiOpts {
    int m = 0;
    int table = 0;
};

int run_psi(const PsiOpts& o) {
    if (o.table > 0) {
        std::cout << "n,psi\n";
        for (int n = 1; n <= o.table; ++n) std::cout << n << "," << psi(n) << "\n";
        return 0;
    }
    if (o.m < 1) throw std::invalid_argument("range: psi needs m >= 1 or --table");
    std::cout << psi(o.m) << "\n";
    return 0;
}

int run_chains(int m, bool as_json) {
    const auto chains = enumerate_chains(m);
    if (as_json) {
        json out = json::array();
        for (const Chain& c : chains) {
            out.push_back({{"chain", chain_json(c)},
                           {"word", chain_word(c).to_string()},
                           {"anchor", chain_anchor(c).period().to_string()}});
        }
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    for (const Chain& c : chains)
        std::cout << c.to_string() << " word=" << chain_word(c).to_string()
                  << " anchor=(" << chain_anchor(c).period().to_string() << ")^inf\n";
    return 0;
}

int run_tau(int m, const std::string& beta_spec, const Rational& tol, bool as_json) {
    BetaParam beta = parse_beta(beta_spec, tol);
    CriticalValue t = tau(m, beta);
    beta = tighten_for_value(beta, t.expansion, tol);
    t = tau(m, beta);
    const int digits = display_digits(tol);
    const std::string interval = t.classification.region == ClassifyResult::Region::below_first
                                     ? "first"
                                     : to_string(chain_interval_type(*t.classification.chain));
    if (as_json) {
        json out{{"m", m},
                 {"beta", beta_spec},
                 {"value_lo", to_decimal(t.value.lo, digits, Round::down)},
                 {"value_hi", to_decimal(t.value.hi, digits, Round::up)},
                 {"expansion", t.expansion.period().to_string()},
                 {"chain_id", chain_id(t.classification)},
                 {"interval_type", interval}};
        if (t.exact) out["value_exact"] = t.exact->get_str();
        if (t.classification.chain) out["chain"] = chain_json(*t.classification.chain);
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    std::cout << "tau_" << m << " = ";
    if (t.exact) std::cout << t.exact->get_str() << " (exact) ~ " << to_decimal(*t.exact, digits, Round::nearest) << "\n";
    else std::cout << enclosure_str(t.value, digits) << "\n";
    std::cout << "expansion = (" << t.expansion.period().to_string() << ")^inf\n";
    std::cout << "chain = " << chain_id(t.classification) << "\n";
    std::cout << "interval = " << interval << "\n";
    return 0;
}

int run_partition(int m, const Rational& tol, bool as_json, bool as_csv) {
    const auto rows = partition_table(m, tol);
    const int digits = display_digits(tol);
    if (as_json) {
        json out = json::array();
        for (const auto& r : rows) {
            const Interval b = r.left_endpoint.bracket();
            out.push_back({{"chain", chain_json(r.chain)},
                           {"type", to_string(r.type)},
                           {"left_lo", to_decimal(b.lo, digits, Round::down)},
                           {"left_hi", to_decimal(b.hi, digits, Round::up)},
                           {"tau_word", r.tau_word.to_string()},
                           {"anchor", r.anchor.to_string()}});
        }
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    if (as_csv) {
        std::cout << "chain,type,left_lo,left_hi,left_mid,tau_word,anchor\n";
        for (const auto& r : rows) {
            const Interval b = r.left_endpoint.bracket();
            std::string id = std::to_string(r.chain.m);
            for (int k : r.chain.ks) id += "." + std::to_string(k);
            std::cout << id << "," << to_string(r.type) << ","
                      << to_decimal(b.lo, digits, Round::down) << ","
                      << to_decimal(b.hi, digits, Round::up) << ","
                      << to_decimal(b.mid(), digits, Round::nearest) << ","
                      << r.tau_word.to_string() << "," << r.anchor.to_string() << "\n";
        }
        return 0;
    }
    for (const auto& r : rows) {
        const Interval b = r.left_endpoint.bracket();
        std::cout << r.chain.to_string() << " type=" << to_string(r.type)
                  << " left=" << enclosure_str(b, digits) << " tau_word=" << r.tau_word.to_string()
                  << " anchor=(" << r.anchor.to_string() << ")^inf\n";
    }
    return 0;
}

int run_sample(int m, const std::string& from_s, const std::string& to_s, int steps,
               const std::string& out_path) {
    auto [from, from_ulp] = parse_decimal(from_s);
    auto [to, to_ulp] = parse_decimal(to_s);
    (void)from_ulp;
    (void)to_ulp;
    if (steps < 1) throw std::invalid_argument("range: steps must be >= 1");
    if (from >= to) throw std::invalid_argument("range: need from < to");
    if (from <= 1 || to > 2) throw std::invalid_argument("range: beta out of range (1,2]");

    std::ofstream file;
    std::ostream* os = &std::cout;
    if (!out_path.empty()) {
        file.open(out_path);
        if (!file) throw std::invalid_argument("cannot open output file " + out_path);
        os = &file;
    }
    const int digits = 12;
    *os << "beta,tau_lo,tau_hi,tau_mid,chain,expansion\n";
    for (int i = 0; i < steps; ++i) {
        const Rational beta =
            steps == 1 ? from : Rational(from + (to - from) * Rational(i, steps - 1));
        const CriticalValue t = tau(m, BetaParam::exact(beta));
        std::string id = chain_id(t.classification);
        if (t.classification.region == ClassifyResult::Region::interior) {
            id = std::to_string(t.classification.chain->m);
            for (int k : t.classification.chain->ks) id += "." + std::to_string(k);
        }
        *os << to_decimal(beta, digits, Round::nearest) << ","
            << to_decimal(t.value.lo, digits, Round::down) << ","
            << to_decimal(t.value.hi, digits, Round::up) << ","
            << to_decimal(t.value.mid(), digits, Round::nearest) << "," << id << ","
            << t.expansion.period().to_string() << "\n";
    }
    return 0;
}

int run_theta(int m, const std::string& b_spec, bool as_json) {
    const auto b = EventuallyPeriodicSequence::parse(b_spec);
    const PeriodicSequence th = theta(m, b);
    if (as_json) {
        std::cout << json{{"m", m}, {"b", b_spec}, {"theta", th.period().to_string()}}.dump(2) << "\n";
        return 0;
    }
    std::cout << "(" << th.period().to_string() << ")^inf\n";
    return 0;
}

int run_extremal(int m, int k, bool as_json) {
    const Word mx = max_lyndon(m, k);
    const Word mn = min_perron(m, k);
    if (as_json) {
        std::cout << json{{"m", m}, {"k", k}, {"max_lyndon", mx.to_string()}, {"min_perron", mn.to_string()}}.dump(2)
                  << "\n";
        return 0;
    }
    std::cout << "max-lyndon " << mx.to_string() << "\n";
    std::cout << "min-perron " << mn.to_string() << "\n";
    return 0;
}

int run_farey(const std::string& frac, bool as_json) {
    const Rational r = parse_rational(frac);
    const Word w = farey_word(r);
    if (as_json) {
        std::cout << json{{"fraction", frac}, {"word", w.to_string()}}.dump(2) << "\n";
        return 0;
    }
    std::cout << w.to_string() << "\n";
    return 0;
}

int run_bullet(const std::vector<std::string>& words, bool as_json) {
    std::vector<Word> ws;
    ws.reserve(words.size());
    for (const auto& s : words) ws.push_back(Word::parse(s));
    const Word out = bullet_fold(ws);
    if (as_json) {
        std::cout << json{{"result", out.to_string()}}.dump(2) << "\n";
        return 0;
    }
    std::cout << out.to_string() << "\n";
    return 0;
}

int run_compare(int m, int n, const std::string& beta_spec, const Rational& tol, bool as_json) {
    const BetaParam beta = parse_beta(beta_spec, tol);
    const CriticalValue tm = tau(m, beta);
    const CriticalValue tn = tau(n, beta);
    const int digits = display_digits(tol);
    std::string verdict = "incomparable (a value is zero)";
    if (tm.classification.chain && tn.classification.chain) {
        const auto c = tau_compare(*tm.classification.chain, *tn.classification.chain);
        verdict = c == std::strong_ordering::less ? "tau_" + std::to_string(m) + " < tau_" + std::to_string(n)
                  : c == std::strong_ordering::greater
                      ? "tau_" + std::to_string(m) + " > tau_" + std::to_string(n)
                      : "equal rational vectors (values may still differ)";
    }
    if (as_json) {
        std::cout << json{{"m", m},
                          {"n", n},
                          {"tau_m_lo", to_decimal(tm.value.lo, digits, Round::down)},
                          {"tau_m_hi", to_decimal(tm.value.hi, digits, Round::up)},
                          {"tau_n_lo", to_decimal(tn.value.lo, digits, Round::down)},
                          {"tau_n_hi", to_decimal(tn.value.hi, digits, Round::up)},
                          {"chain_m", chain_id(tm.classification)},
                          {"chain_n", chain_id(tn.classification)},
                          {"verdict", verdict}}
                         .dump(2)
                  << "\n";
        return 0;
    }
    std::cout << "tau_" << m << " = " << enclosure_str(tm.value, digits) << " chain "
              << chain_id(tm.classification) << "\n";
    std::cout << "tau_" << n << " = " << enclosure_str(tn.value, digits) << " chain "
              << chain_id(tn.classification) << "\n";
    std::cout << verdict << "\n";
    return 0;
}

int run_kl(const Rational& tol, bool as_json) {
    const Interval b = komornik_loreti(tol);
    const int digits = display_digits(tol);
    if (as_json) {
        std::cout << json{{"lo", to_decimal(b.lo, digits, Round::down)},
                          {"hi", to_decimal(b.hi, digits, Round::up)}}
                         .dump(2)
                  << "\n";
        return 0;
    }
    std::cout << enclosure_str(b, digits) << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"critical hole sizes for periodic orbits of the beta-transformation"};
    app.require_subcommand(1);

    PsiOpts psi_opts;
    auto* c_psi = app.add_subcommand("psi", "psi(m), or psi(1..N) as CSV with --table");
    c_psi->add_option("m", psi_opts.m, "argument of psi");
    c_psi->add_option("--table", psi_opts.table, "emit psi(1..N) as CSV");

    int m = 0, n = 0, k = 0, steps = 0;
    bool as_json = false, as_csv = false;
    std::string beta_spec, tol_spec = "1e-12", b_spec, frac, from_s, to_s, out_path;
    std::vector<std::string> bullet_words;

    auto* c_chains = app.add_subcommand("chains", "enumerate the admissible m-chains");
    c_chains->add_option("m", m, "period")->required()->check(CLI::Range(2, 1 << 20));
    c_chains->add_flag("--json", as_json);

    auto* c_tau = app.add_subcommand("tau", "critical hole size tau_m(beta)");
    c_tau->add_option("m", m, "period")->required()->check(CLI::Range(2, 1 << 20));
    c_tau->add_option("--beta", beta_spec, "p/q | word:<bits> | decimal | kl")->required();
    c_tau->add_option("--tol", tol_spec, "value enclosure width target");
    c_tau->add_flag("--json", as_json);

    auto* c_part = app.add_subcommand("partition", "full m-partition table");
    c_part->add_option("m", m, "period")->required()->check(CLI::Range(2, 1 << 20));
    c_part->add_option("--tol", tol_spec, "endpoint enclosure width target");
    c_part->add_flag("--json", as_json);
    c_part->add_flag("--csv", as_csv);

    auto* c_sample = app.add_subcommand("sample", "tau_m over a beta grid as CSV");
    c_sample->add_option("m", m, "period")->required()->check(CLI::Range(2, 1 << 20));
    c_sample->add_option("--from", from_s)->required();
    c_sample->add_option("--to", to_s)->required();
    c_sample->add_option("--steps", steps)->required();
    c_sample->add_option("--out", out_path, "output CSV path (default stdout)");

    auto* c_theta = app.add_subcommand("theta", "symbolic critical value theta_m(b)");
    c_theta->add_option("m", m, "period")->required()->check(CLI::Range(2, 1 << 20));
    c_theta->add_option("--b", b_spec, "eventually periodic b as preperiod:period")->required();
    c_theta->add_flag("--json", as_json);

    auto* c_ext = app.add_subcommand("extremal", "max Lyndon / min Perron words");
    c_ext->add_option("m", m, "length")->required()->check(CLI::Range(2, 1 << 20));
    c_ext->add_option("k", k, "number of ones")->required();
    c_ext->add_flag("--json", as_json);

    auto* c_farey = app.add_subcommand("farey", "Farey word of a rational");
    c_farey->add_option("fraction", frac, "p/q in (0,1)")->required();
    c_farey->add_flag("--json", as_json);

    auto* c_bullet = app.add_subcommand("bullet", "fold of the substitution operator");
    c_bullet->add_option("words", bullet_words, "Lyndon words")->required()->expected(-1);
    c_bullet->add_flag("--json", as_json);

    auto* c_cmp = app.add_subcommand("compare", "compare tau_m and tau_n at one beta");
    c_cmp->add_option("m", m)->required()->check(CLI::Range(2, 1 << 20));
    c_cmp->add_option("n", n)->required()->check(CLI::Range(2, 1 << 20));
    c_cmp->add_option("--beta", beta_spec)->required();
    c_cmp->add_option("--tol", tol_spec);
    c_cmp->add_flag("--json", as_json);

    auto* c_kl = app.add_subcommand("kl", "Komornik-Loreti constant enclosure");
    c_kl->add_option("--tol", tol_spec);
    c_kl->add_flag("--json", as_json);

    try {
        app.parse(argc, argv);
        const Rational tol = parse_tolerance(tol_spec);
        if (c_psi->parsed()) return run_psi(psi_opts);
        if (c_chains->parsed()) return run_chains(m, as_json);
        if (c_tau->parsed()) return run_tau(m, beta_spec, tol, as_json);
        if (c_part->parsed()) return run_partition(m, tol, as_json, as_csv);
        if (c_sample->parsed()) return run_sample(m, from_s, to_s, steps, out_path);
        if (c_theta->parsed()) return run_theta(m, b_spec, as_json);
        if (c_ext->parsed()) return run_extremal(m, k, as_json);
        if (c_farey->parsed()) return run_farey(frac, as_json);
        if (c_bullet->parsed()) return run_bullet(bullet_words, as_json);
        if (c_cmp->parsed()) return run_compare(m, n, beta_spec, tol, as_json);
        if (c_kl->parsed()) return run_kl(tol, as_json);
        return 2;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const AmbiguousComparison& e) {
        std::cerr << e.what() << "\n";
        return 3;
    } catch (const PrecisionExhausted& e) {
        std::cerr << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
