#include "hirzebruch/cli.hpp"

#include <charconv>
#include <functional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "hirzebruch/bundles.hpp"
#include "hirzebruch/classification.hpp"
#include "hirzebruch/cohomology.hpp"
#include "hirzebruch/stability.hpp"

namespace hirz::cli {

using nlohmann::json;

std::optional<DivisorClass> parse_divisor(std::string_view text) {
    const auto comma = text.find(',');
    if (comma == std::string_view::npos) return std::nullopt;
    auto parse_int = [](std::string_view part) -> std::optional<std::int64_t> {
        std::int64_t value = 0;
        const char* first = part.data();
        const char* last = part.data() + part.size();
        const auto [ptr, ec] = std::from_chars(first, last, value);
        if (part.empty() || ec != std::errc() || ptr != last) return std::nullopt;
        return value;
    };
    const auto a = parse_int(text.substr(0, comma));
    const auto b = parse_int(text.substr(comma + 1));
    if (!a || !b) return std::nullopt;
    return DivisorClass{*a, *b};
}

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

json to_json(const DivisorClass& d) { return {{"a", d.a}, {"b", d.b}}; }

json to_json(const Slope& m) { return {{"num", m.numerator()}, {"den", m.denominator()}}; }

json to_json(const CanonicalInvariants& inv) {
    return {{"d", inv.d}, {"d_prime", inv.d_prime}, {"r", inv.r}, {"s", inv.s},
            {"deg_y", inv.deg_y}};
}

json to_json(const ChernData& c) { return {{"c1", to_json(c.c1)}, {"c2", c.c2}}; }

json to_json(const ChamberRegion& region) {
    return {{"u", region.u}, {"v", region.v}, {"e", region.surface.e()},
            {"text", region.human_readable}};
}

DivisorClass divisor_arg(const std::string& text) {
    if (auto d = parse_divisor(text)) return *d;
    throw UsageError("malformed divisor '" + text + "', expected a,b");
}

std::string format_invariants(const CanonicalInvariants& inv) {
    std::ostringstream os;
    os << "d=" << inv.d << " d'=" << inv.d_prime << " r=" << inv.r << " s=" << inv.s
       << " deg_y=" << inv.deg_y;
    return os.str();
}

std::string format_chern(const ChernData& c) {
    return "c1=" + to_string(c.c1) + " c2=" + std::to_string(c.c2);
}

// One command's output: filled by the handler, rendered by run().
struct Output {
    json inputs = json::object();
    json result = json::object();
    std::ostringstream human;
};

using Handler = std::function<void(Output&)>;

struct BundleArgs {
    std::int64_t e = 0;
    std::string sub;
    std::string quot;
    std::int64_t deg_y = 0;
    bool split = false;

    void add_to(CLI::App& app) {
        app.add_option("--e", e, "Hirzebruch invariant")->required();
        app.add_option("--sub", sub, "sub-line-bundle class a,b")->required();
        app.add_option("--quot", quot, "quotient class a,b")->required();
        app.add_option("--deg-y", deg_y, "length of Y")->capture_default_str();
        app.add_flag("--split", split, "the extension splits");
    }

    // canonical_form: report presentation errors before extension-class ones.
    ExtensionBundle build(Output& output, bool canonical_form = false) const {
        const DivisorClass s = divisor_arg(sub);
        const DivisorClass q = divisor_arg(quot);
        const Splitting splitting = split ? Splitting::Split : Splitting::NonSplit;
        output.inputs["e"] = e;
        output.inputs["sub"] = to_json(s);
        output.inputs["quot"] = to_json(q);
        output.inputs["deg_y"] = deg_y;
        output.inputs["splitting"] = std::string(to_string(splitting));
        if (canonical_form) require_canonical_presentation(s, q);
        return ExtensionBundle(Surface(e), s, q, deg_y, splitting);
    }
};

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact intersection theory, cohomology and stability of rank-2 bundles "
                 "on Hirzebruch surfaces"};
    app.name("hirzebruch");
    app.require_subcommand(1);

    bool as_json = false;
    app.add_flag("--json", as_json, "emit one JSON document instead of text");

    std::string command;
    Handler handler;

    // divisor
    auto* divisor = app.add_subcommand("divisor", "Picard lattice and line-bundle cohomology");
    divisor->fallthrough();
    std::int64_t div_e = 0;
    std::vector<std::string> intersect_args;
    std::string ample_arg, effective_arg, cohomology_arg;
    divisor->add_option("--e", div_e, "Hirzebruch invariant")->required();
    auto* ops = divisor->add_option_group("operation");
    ops->require_option(1);
    auto* opt_intersect =
        ops->add_option("--intersect", intersect_args, "intersection number D1.D2")
            ->expected(2)
            ->allow_extra_args(false);
    auto* opt_ample = ops->add_option("--ample", ample_arg, "ampleness of D");
    auto* opt_effective = ops->add_option("--effective", effective_arg, "effectiveness of D");
    auto* opt_cohomology =
        ops->add_option("--cohomology", cohomology_arg, "h0, h1, h2 and chi of O(D)");
    divisor->callback([&] {
        command = "divisor";
        handler = [&](Output& output) {
            output.inputs["e"] = div_e;
            if (opt_intersect->count() > 0) {
                const DivisorClass d1 = divisor_arg(intersect_args.at(0));
                const DivisorClass d2 = divisor_arg(intersect_args.at(1));
                output.inputs["operation"] = "intersect";
                output.inputs["divisors"] = {to_json(d1), to_json(d2)};
                const std::int64_t value = intersect(Surface(div_e), d1, d2);
                output.result["intersection"] = value;
                output.human << value << '\n';
            } else if (opt_ample->count() > 0) {
                const DivisorClass d = divisor_arg(ample_arg);
                output.inputs["operation"] = "ample";
                output.inputs["divisors"] = {to_json(d)};
                const bool value = is_ample(Surface(div_e), d);
                output.result["ample"] = value;
                output.human << (value ? "true" : "false") << '\n';
            } else if (opt_effective->count() > 0) {
                const DivisorClass d = divisor_arg(effective_arg);
                output.inputs["operation"] = "effective";
                output.inputs["divisors"] = {to_json(d)};
                static_cast<void>(Surface(div_e));
                const bool value = is_effective(d);
                output.result["effective"] = value;
                output.human << (value ? "true" : "false") << '\n';
            } else if (opt_cohomology->count() > 0) {
                const DivisorClass d = divisor_arg(cohomology_arg);
                output.inputs["operation"] = "cohomology";
                output.inputs["divisors"] = {to_json(d)};
                const Surface s(div_e);
                const CohomologyTable t = cohomology(s, d);
                const std::int64_t chi = euler_char(s, d);
                output.result = {{"h0", t.h0}, {"h1", t.h1}, {"h2", t.h2}, {"chi", chi}};
                output.human << "h0=" << t.h0 << " h1=" << t.h1 << " h2=" << t.h2
                             << " chi=" << chi << '\n';
            }
        };
    });

    // bundle
    auto* bundle = app.add_subcommand("bundle", "Chern data and invariants of an extension");
    bundle->fallthrough();
    bundle->require_subcommand(1);
    BundleArgs bundle_args;
    bundle_args.add_to(*bundle);
    auto* bundle_chern = bundle->add_subcommand("chern", "c1 and c2");
    auto* bundle_inv = bundle->add_subcommand("invariants", "d, d', r, s and deg Y");
    bundle_chern->fallthrough();
    bundle_inv->fallthrough();
    bundle_chern->callback([&] {
        command = "bundle chern";
        handler = [&](Output& output) {
            const ChernData c = chern_from_extension(bundle_args.build(output));
            output.result = to_json(c);
            output.human << format_chern(c) << '\n';
        };
    });
    bundle_inv->callback([&] {
        command = "bundle invariants";
        handler = [&](Output& output) {
            const CanonicalInvariants inv = canonical_invariants(bundle_args.build(output, true));
            output.result = to_json(inv);
            output.human << format_invariants(inv) << '\n';
        };
    });

    // stability
    auto* stability = app.add_subcommand("stability", "stability criterion, chambers, direct check");
    stability->fallthrough();
    stability->require_subcommand(1);
    BundleArgs stab_args;
    stab_args.add_to(*stability);
    auto* criterion = stability->add_subcommand("criterion", "stable for some polarization?");
    auto* chamber = stability->add_subcommand("chamber", "wall and stable chamber");
    auto* verify = stability->add_subcommand("verify", "direct slope check against H");
    for (auto* sc : {criterion, chamber, verify}) sc->fallthrough();
    std::string verify_h;
    bool exhaustive = false;
    std::int64_t window = 10;
    verify->add_option("--H", verify_h, "polarization a,b")->required();
    verify->add_flag("--exhaustive", exhaustive, "also sweep a window below each corner");
    verify->add_option("--window", window, "sweep window")->capture_default_str();

    criterion->callback([&] {
        command = "stability criterion";
        handler = [&](Output& output) {
            const ExtensionBundle b = stab_args.build(output, true);
            const ChernData c = chern_from_extension(b);
            const CanonicalInvariants inv = canonical_invariants(b);
            const std::int64_t beta = c.c1.b;
            const bool stable = stable_for_some_polarization(inv, beta, b.splitting());
            const std::int64_t two_r = checked::mul(2, inv.r);
            output.result = {{"stable_for_some_polarization", stable},
                             {"two_r", two_r},
                             {"beta", beta},
                             {"splitting", std::string(to_string(b.splitting()))}};
            if (stable) {
                output.human << "stable for some polarization (2r=" << two_r << " < beta=" << beta
                             << ")\n";
            } else if (b.splitting() == Splitting::Split) {
                output.human << "not stable (extension splits)\n";
            } else if (two_r == beta) {
                output.human << "not stable (2r=beta=" << beta << ")\n";
            } else {
                output.human << "not stable (2r=" << two_r << " > beta=" << beta << ")\n";
            }
        };
    });
    chamber->callback([&] {
        command = "stability chamber";
        handler = [&](Output& output) {
            const ExtensionBundle b = stab_args.build(output);
            // The chamber statement is only established for non-split extensions with Y empty.
            if (b.deg_y() != 0 || b.splitting() == Splitting::Split) {
                throw Error(ErrorCode::UnsupportedBundle,
                            "chambers are computed only for non-split extensions with Y empty");
            }
            const Wall w = wall(b.sub(), chern_from_extension(b).c1);
            const ChamberRegion region = stable_chamber(b.surface(), w);
            output.result = {{"zeta", to_json(w.zeta)}, {"chamber", to_json(region)}};
            output.human << "wall zeta=" << w.zeta << '\n'
                         << "u=" << region.u << " v=" << region.v << '\n'
                         << "chamber: " << region.human_readable << '\n';
        };
    });
    verify->callback([&] {
        command = "stability verify";
        handler = [&](Output& output) {
            const ExtensionBundle b = stab_args.build(output);
            const DivisorClass h = divisor_arg(verify_h);
            output.inputs["H"] = to_json(h);
            output.inputs["exhaustive"] = exhaustive;
            if (exhaustive) output.inputs["window"] = window;
            const StabilityVerdict v = brute_force_stability(b, h, {exhaustive, window});
            json candidates = json::array();
            for (const Candidate& c : v.candidates) {
                candidates.push_back({{"divisor", to_json(c.divisor)}, {"degree", c.degree}});
            }
            output.result = {{"verdict", std::string(to_string(v.outcome))},
                             {"witness", v.witness ? to_json(*v.witness) : json(nullptr)},
                             {"mu", to_json(v.mu)},
                             {"candidates", candidates}};
            output.human << to_string(v.outcome);
            if (v.witness) output.human << " witness=" << *v.witness;
            output.human << "\nmu=" << v.mu << "\ncandidates:";
            for (const Candidate& c : v.candidates) {
                output.human << ' ' << c.divisor << '=' << c.degree;
            }
            output.human << '\n';
            if (v.sweep) {
                const SweepReport& s = *v.sweep;
                output.result["sweep"] = {{"window", s.window},
                                          {"examined", s.examined},
                                          {"corner_max", s.corner_max},
                                          {"sweep_max", s.sweep_max},
                                          {"sweep_witness", to_json(s.sweep_witness)}};
                output.human << "sweep: window=" << s.window << " examined=" << s.examined
                             << " corner_max=" << s.corner_max << " sweep_max=" << s.sweep_max
                             << '\n';
            }
        };
    });

    // classify
    auto* classify = app.add_subcommand("classify", "stable ample bundles with small c2");
    classify->fallthrough();
    std::int64_t c2_max = 0;
    std::optional<std::int64_t> e_filter;
    classify->add_option("--c2-max", c2_max, "upper bound on c2")->required();
    classify->add_option("--e", e_filter, "restrict to one surface");
    classify->callback([&] {
        command = "classify";
        handler = [&](Output& output) {
            output.inputs["c2_max"] = c2_max;
            output.inputs["e"] = e_filter ? json(*e_filter) : json(nullptr);
            const std::vector<StabilityReport> reports = classify_stable(c2_max, e_filter);
            json list = json::array();
            output.human << reports.size() << " stable case(s)\n";
            for (const StabilityReport& r : reports) {
                const ExtensionBundle& b =
                    ishihara_table().at(static_cast<std::size_t>(r.label)).bundle;
                json item = {{"label", std::string(to_string(r.label))},
                             {"e", r.surface.e()},
                             {"sub", to_json(b.sub())},
                             {"quot", to_json(b.quotient())},
                             {"chern", to_json(r.chern)},
                             {"invariants", to_json(r.invariants)},
                             {"ext1", r.ext1},
                             {"stable_for_some_h", r.stable_for_some_h}};
                item["zeta"] = r.wall ? to_json(r.wall->zeta) : json(nullptr);
                item["chamber"] = r.chamber ? to_json(*r.chamber) : json(nullptr);
                list.push_back(item);
                output.human << "Case " << to_string(r.label) << ": e=" << r.surface.e()
                             << " sub=" << b.sub() << " quot=" << b.quotient() << ' '
                             << format_chern(r.chern) << ' ' << format_invariants(r.invariants)
                             << " ext1=" << r.ext1;
                if (r.wall) output.human << " zeta=" << r.wall->zeta;
                if (r.chamber) output.human << " chamber: " << r.chamber->human_readable;
                output.human << '\n';
            }
            output.result = {{"count", reports.size()}, {"reports", list}};
        };
    });

    std::vector<const char*> argv{"hirzebruch"};
    for (const std::string& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    Output output;
    try {
        handler(output);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const Error& e) {
        err << "error: " << to_string(e.code()) << ": " << e.what() << '\n';
        if (as_json) {
            json envelope = {{"command", command},
                             {"inputs", output.inputs},
                             {"status", "error"},
                             {"error_message",
                              std::string(to_string(e.code())) + ": " + e.what()}};
            out << envelope.dump(2) << '\n';
        }
        return kExitDomainError;
    }

    if (as_json) {
        json envelope = {{"command", command},
                         {"inputs", output.inputs},
                         {"result", output.result},
                         {"status", "ok"}};
        out << envelope.dump(2) << '\n';
    } else {
        out << output.human.str();
    }
    return kExitOk;
}

} // namespace hirz::cli
