#include "permderiv/cli.hpp"

#include <charconv>
#include <chrono>
#include <functional>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "permderiv/convexity.hpp"
#include "permderiv/costas.hpp"
#include "permderiv/dpair.hpp"
#include "permderiv/permutation.hpp"
#include "permderiv/search.hpp"
#include "permderiv/triangle.hpp"
#include "permderiv/variation.hpp"
#include "permderiv/verify.hpp"

namespace permderiv::cli {

using json = nlohmann::json;

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::size_t pos = 0;
    const auto blank = [](char c) { return c == ' ' || c == '\t'; };
    std::size_t first = 0;
    while (first < text.size() && blank(text[first])) ++first;
    if (first == text.size()) return out;
    pos = first;
    while (true) {
        while (pos < text.size() && blank(text[pos])) ++pos;
        const char* begin = text.data() + pos;
        const char* end = text.data() + text.size();
        if (begin != end && *begin == '+') ++begin;
        int value = 0;
        const auto [ptr, ec] = std::from_chars(begin, end, value);
        if (ec != std::errc{} || ptr == begin) {
            throw Error(Errc::invalid_argument, "malformed integer list '" + text + "'");
        }
        out.push_back(value);
        pos = static_cast<std::size_t>(ptr - text.data());
        while (pos < text.size() && blank(text[pos])) ++pos;
        if (pos == text.size()) break;
        if (text[pos] != ',') {
            throw Error(Errc::invalid_argument, "malformed integer list '" + text + "'");
        }
        ++pos;
    }
    return out;
}

std::string join(std::span<const int> values) {
    std::string s;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(values[i]);
    }
    return s;
}

namespace {

enum class Format { text, json, csv };

struct Outcome {
    json inputs = json::object();
    json result;
    json metadata = json::object();
    std::string text;
    std::optional<std::string> csv;
    int exit_code = kExitOk;
};

std::vector<int> as_vector(const Permutation& p) { return {p.begin(), p.end()}; }

std::vector<int> diffs_of(const Permutation& p) {
    const auto d = derivative(p);
    return {d.diffs().begin(), d.diffs().end()};
}

Permutation parse_permutation(const std::string& text) { return Permutation(parse_int_list(text)); }

std::vector<std::int64_t> parse_int64_list(const std::string& text) {
    return widen(parse_int_list(text));
}

// "name=value" → {name, value}
std::pair<std::string, std::string> split_property(const std::string& prop) {
    const auto eq = prop.find('=');
    if (eq == std::string::npos) return {prop, {}};
    return {prop.substr(0, eq), prop.substr(eq + 1)};
}

int parse_single_int(const std::string& text, const std::string& what) {
    const auto values = parse_int_list(text);
    if (values.size() != 1) throw Error(Errc::invalid_argument, what + " needs one integer");
    return values.front();
}

Outcome permutation_outcome(const Permutation& p) {
    Outcome o;
    const auto e = as_vector(p);
    const auto d = diffs_of(p);
    o.result = {{"permutation", e}, {"derivative", d}};
    o.text = "permutation: " + join(e) + "\nderivative: " + join(d) + "\n";
    return o;
}

Outcome boolean_outcome(bool value) {
    Outcome o;
    o.result = {{"value", value}};
    o.text = value ? "true\n" : "false\n";
    o.exit_code = value ? kExitOk : kExitFalse;
    return o;
}

std::string csv_rows(const std::vector<CountRow>& rows) {
    std::string s = "n,total,count,fraction\n";
    for (const auto& r : rows) {
        s += std::to_string(r.n) + "," + std::to_string(r.total) + "," + std::to_string(r.count) +
             "," + r.fraction_text() + "\n";
    }
    return s;
}

std::string text_rows(const std::vector<CountRow>& rows) {
    std::ostringstream s;
    s << std::setw(3) << "n" << std::setw(12) << "n!" << std::setw(12) << "count" << std::setw(10)
      << "fraction" << "\n";
    for (const auto& r : rows) {
        s << std::setw(3) << r.n << std::setw(12) << r.total << std::setw(12) << r.count
          << std::setw(10) << r.fraction_text() << "\n";
    }
    return s.str();
}

json json_rows(const std::vector<CountRow>& rows) {
    json arr = json::array();
    for (const auto& r : rows) {
        arr.push_back({{"n", r.n},
                       {"total", r.total},
                       {"count", r.count},
                       {"fraction", std::stod(r.fraction_text())}});
    }
    return arr;
}

Outcome check_outcomes(const std::vector<CheckOutcome>& checks) {
    Outcome o;
    json arr = json::array();
    std::string text;
    int failed = 0;
    for (const auto& c : checks) {
        arr.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
        text += (c.passed ? "PASS " : "FAIL ") + c.name;
        if (!c.detail.empty()) text += "  [" + c.detail + "]";
        text += "\n";
        failed += !c.passed;
    }
    text += std::to_string(checks.size() - failed) + "/" + std::to_string(checks.size()) +
            " checks passed\n";
    o.result = {{"checks", arr}, {"passed", failed == 0}};
    o.text = text;
    o.exit_code = failed == 0 ? kExitOk : kExitFalse;
    return o;
}

Outcome run_check(const std::string& property, const std::string& input) {
    const auto [name, arg] = split_property(property);
    Outcome o;
    if (name == "costas-signed") {
        o = boolean_outcome(is_costas_signed(SignedPermutation(parse_int_list(input))));
    } else if (name == "costas-half") {
        o = boolean_outcome(is_costas_half(parse_int64_list(input), parse_single_int(arg, "costas-half")));
    } else if (name == "costas-subperm") {
        o = boolean_outcome(
            is_costas_subpermutation(parse_int64_list(input), parse_single_int(arg, "costas-subperm")));
    } else if (name == "realizable") {
        o = boolean_outcome(is_realizable(parse_int_list(input)));
    } else {
        const Permutation p = parse_permutation(input);
        if (name == "costas") {
            o = boolean_outcome(is_costas(p));
        } else if (name == "k-costas") {
            o = boolean_outcome(is_k_costas(p, parse_single_int(arg, "k-costas")));
        } else if (name == "one-costas") {
            o = boolean_outcome(p.order() == 1 || is_k_costas(p, 1));
        } else if (name == "convex") {
            o = boolean_outcome(is_convex(p));
        } else if (name == "mid-alternating") {
            o = boolean_outcome(is_mid_alternating(p));
        } else if (name == "centrosymmetric") {
            o = boolean_outcome(is_centrosymmetric(p));
        } else if (name == "costas-centrosymmetric") {
            o = boolean_outcome(is_costas_centrosymmetric(p));
        } else if (name == "grassmannian") {
            o = boolean_outcome(is_grassmannian(p));
        } else if (name == "lipschitz") {
            o = boolean_outcome(is_lipschitz(p, parse_single_int(arg, "lipschitz")));
        } else if (name == "dpair") {
            const auto pq = parse_int_list(arg);
            if (pq.size() != 2) throw Error(Errc::invalid_argument, "dpair needs P,Q");
            o = boolean_outcome(is_dpair_realization(p, {pq[0], pq[1]}));
        } else if (name == "jedwab") {
            const auto w = jedwab_witness(p);
            o = boolean_outcome(w.has_value());
            if (w) {
                auto pt = [](const MatrixPoint& q) { return json::array({q.row, q.col}); };
                o.result["witness"] = {{"rs", pt(w->rs)}, {"uv", pt(w->uv)}, {"ab", pt(w->ab)},
                                       {"cd", pt(w->cd)}, {"shares_points", w->shares_points}};
                auto txt = [](const MatrixPoint& q) {
                    return "(" + std::to_string(q.row) + "," + std::to_string(q.col) + ")";
                };
                o.text += "segment " + txt(w->rs) + "-" + txt(w->uv) + " mirrors " + txt(w->ab) +
                          "-" + txt(w->cd) + (w->shares_points ? " (shares points)" : "") + "\n";
            }
        } else {
            throw Error(Errc::invalid_argument, "unknown property '" + name + "'");
        }
    }
    o.inputs = {{"property", property}, {"input", input}};
    return o;
}

// listing is bounded like counting: beyond it the output alone is unmanageable
SearchSpec spec_for_property(const std::string& property, int n) {
    const int limit = property == "one-costas" ? kMaxOneCostasCountOrder : kMaxCostasCountOrder;
    if (property != "one-costas" && property != "costas") {
        throw Error(Errc::invalid_argument, "unknown property '" + property + "'");
    }
    if (n < 1 || n > limit) {
        throw Error(Errc::out_of_range, "listing is limited to 1 <= n <= " + std::to_string(limit));
    }
    return property == "one-costas" ? one_costas_spec(n) : costas_spec(n);
}

TableKind parse_kind(const std::string& kind) {
    if (kind == "one-costas") return TableKind::one_costas;
    if (kind == "costas") return TableKind::costas;
    if (kind == "convex") return TableKind::convex;
    throw Error(Errc::invalid_argument, "unknown table kind '" + kind + "'");
}

void emit(const Outcome& o, Format format, const std::string& command, std::ostream& out) {
    switch (format) {
    case Format::text:
        out << o.text;
        break;
    case Format::csv:
        out << (o.csv ? *o.csv : o.text);
        break;
    case Format::json: {
        json envelope = {{"command", command},
                         {"inputs", o.inputs},
                         {"result", o.result},
                         {"metadata", o.metadata}};
        out << envelope.dump(2) << "\n";
        break;
    }
    }
}

} // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Discrete derivatives of permutations, Costas-type predicates and extremal "
                 "constructions",
                 "permderiv"};
    app.require_subcommand(1, 1);

    std::string format_name = "text";
    int workers = 1;
    app.add_option("--format", format_name, "Output format")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    app.add_option("--workers", workers, "Threads for enumeration")->check(CLI::PositiveNumber);

    std::string command;
    std::function<Outcome()> action;
    auto bind = [&](CLI::App* sub, std::string name, std::function<Outcome()> fn) {
        sub->fallthrough();
        sub->callback([&command, &action, name = std::move(name), fn = std::move(fn)] {
            command = name;
            action = fn;
        });
    };

    std::string input;
    std::string render_mode = "plain";
    std::string property;
    std::string kind = "one-costas";
    int n = 0;
    int s = 0;
    int a = 0;
    int b = 0;
    int max_n = 10;

    auto* derive = app.add_subcommand("derive", "Discrete derivative of a permutation");
    derive->add_option("permutation", input, "e.g. 5,2,7,4,1,6,3")->required();
    bind(derive, "derive", [&] {
        const Permutation p = parse_permutation(input);
        Outcome o;
        const auto d = diffs_of(p);
        o.inputs = {{"permutation", as_vector(p)}};
        o.result = {{"derivative", d}};
        o.text = join(d) + "\n";
        o.csv = o.text;
        return o;
    });

    auto* integ = app.add_subcommand("integrate", "Permutation with the given derivative");
    integ->add_option("derivative", input, "e.g. -3,5,-3,-3,5,-3")->required();
    bind(integ, "integrate", [&] {
        const auto z = parse_int_list(input);
        Outcome o;
        o.inputs = {{"derivative", z}};
        const auto sc = sum_characteristic(z);
        o.metadata["sum_characteristic"] = sc.values;
        const auto p = as_vector(integrate(z));
        o.result = {{"permutation", p}};
        o.text = join(p) + "\n";
        o.csv = o.text;
        return o;
    });

    auto* tri = app.add_subcommand("triangle", "Difference triangle of a distinct-integer sequence");
    tri->add_option("sequence", input, "e.g. 3,5,1,6,2,4")->required();
    tri->add_option("--render", render_mode, "plain or staggered")
        ->check(CLI::IsMember({"plain", "staggered"}));
    bind(tri, "triangle", [&] {
        const auto base = parse_int64_list(input);
        const DifferenceTriangle t(base);
        Outcome o;
        o.inputs = {{"sequence", base}, {"render", render_mode}};
        o.result = {{"base", base}, {"rows", t.rows()}};
        o.text = render(t, render_mode == "plain" ? RenderMode::plain : RenderMode::staggered);
        return o;
    });

    auto* check = app.add_subcommand("check", "Test a property");
    check->add_option("--property", property,
                      "costas | k-costas=K | one-costas | convex | mid-alternating | "
                      "centrosymmetric | costas-centrosymmetric | lipschitz=L | dpair=P,Q | "
                      "grassmannian | jedwab | costas-signed | costas-half=M | costas-subperm=N | "
                      "realizable")
        ->required();
    check->add_option("input", input, "permutation or integer sequence")->required();
    bind(check, "check", [&] { return run_check(property, input); });

    auto* construct = app.add_subcommand("construct", "Explicit constructions");
    construct->require_subcommand(1, 1);
    construct->fallthrough();

    auto* c_dpair = construct->add_subcommand("dpair", "Derivative taking exactly the values a, -b");
    c_dpair->add_option("--a", a)->required();
    c_dpair->add_option("--b", b)->required();
    bind(c_dpair, "construct dpair", [&] {
        Outcome o = permutation_outcome(construct_dpair(a, b));
        const DPair inv = inverse_dpair(a, b);
        o.inputs = {{"a", a}, {"b", b}};
        o.result["dpair"] = {a, -b};
        o.result["inverse_dpair"] = {inv.p, inv.q};
        return o;
    });

    auto* c_min = construct->add_subcommand("min-local", "1-Costas with least local variation");
    c_min->add_option("--n", n)->required();
    bind(c_min, "construct min-local", [&] {
        const auto p = construct_min_local_1costas(n);
        Outcome o = permutation_outcome(p);
        o.inputs = {{"n", n}};
        o.result["local_variation"] = local_variation(p);
        o.result["global_variation"] = global_variation(p);
        o.metadata["min_global_1costas"] = min_global_1costas(n);
        if (n % 2 == 1) {
            o.metadata["alt_odd_formula"] = "(n-1)^2/4+1";
            o.metadata["alt_odd_value"] = min_global_1costas_alt_odd(n);
            o.metadata["note"] = "exhaustive search and the construction give (n^2-1)/4+1";
        }
        return o;
    });

    auto* c_max = construct->add_subcommand("max-global", "Permutation of largest global variation");
    c_max->add_option("--n", n)->required();
    bind(c_max, "construct max-global", [&] {
        const auto p = construct_max_global(n);
        Outcome o = permutation_outcome(p);
        o.inputs = {{"n", n}};
        o.result["global_variation"] = global_variation(p);
        o.metadata["delta_star"] = delta_star(n);
        if (n % 2 == 1) {
            o.metadata["alt_odd_formula"] = "(3n^2-6n-13)/4";
            o.metadata["alt_odd_value"] = delta_star_alt_odd(n);
            o.metadata["note"] = "exhaustive search gives (n^2-3)/2";
        }
        return o;
    });

    auto* c_maximin = construct->add_subcommand("maximin", "Largest possible min |derivative|");
    c_maximin->add_option("--n", n)->required();
    bind(c_maximin, "construct maximin", [&] {
        const auto p = construct_maximin_abs(n);
        Outcome o = permutation_outcome(p);
        o.inputs = {{"n", n}};
        o.result["min_abs_derivative"] = min_abs_derivative(p);
        return o;
    });

    auto* c_pi = construct->add_subcommand("pi", "Alternating permutation with derivative 1,-2,3,...");
    c_pi->add_option("--n", n)->required();
    bind(c_pi, "construct pi", [&] {
        Outcome o = permutation_outcome(pi_perm(n));
        o.inputs = {{"n", n}};
        return o;
    });

    auto* c_pistar = construct->add_subcommand("pi-star", "Quarter-turned alternating permutation");
    c_pistar->add_option("--n", n)->required();
    bind(c_pistar, "construct pi-star", [&] {
        Outcome o = permutation_outcome(pi_star(n));
        o.inputs = {{"n", n}};
        return o;
    });

    auto* c_shift = construct->add_subcommand("realize-shift",
                                              "Permutation with sum characteristic {-s..n-s-1}");
    c_shift->add_option("--n", n)->required();
    c_shift->add_option("--s", s)->required();
    bind(c_shift, "construct realize-shift", [&] {
        const auto p = realize_shift(n, s);
        Outcome o = permutation_outcome(p);
        o.inputs = {{"n", n}, {"s", s}};
        const auto d = diffs_of(p);
        o.result["sum_characteristic"] = sum_characteristic(d).values;
        return o;
    });

    auto* enumer = app.add_subcommand("enumerate", "List permutations with a property");
    enumer->add_option("--property", property, "convex | one-costas | costas")->required();
    enumer->add_option("--n", n)->required();
    bind(enumer, "enumerate", [&] {
        std::vector<Permutation> items;
        if (property == "convex") {
            items = enumerate_convex(n);
        } else {
            auto spec = spec_for_property(property, n);
            spec.mode = CollectMode{};
            items = enumerate(spec, workers).items;
        }
        Outcome o;
        o.inputs = {{"property", property}, {"n", n}};
        json arr = json::array();
        for (const auto& p : items) {
            arr.push_back(as_vector(p));
            o.text += join(as_vector(p)) + "\n";
        }
        o.result = {{"count", items.size()}, {"permutations", arr}};
        o.csv = o.text;
        return o;
    });

    auto* count = app.add_subcommand("count", "Count permutations with a property");
    count->add_option("--property", property, "one-costas | costas | convex")->required();
    count->add_option("--n", n)->required();
    bind(count, "count", [&] {
        CountRow row;
        if (property == "one-costas") {
            row = count_one_costas(n, workers);
        } else if (property == "costas") {
            row = make_count_row(n, count_costas(n, workers));
        } else if (property == "convex") {
            row = make_count_row(n, enumerate_convex(n).size());
        } else {
            throw Error(Errc::invalid_argument, "unknown property '" + property + "'");
        }
        Outcome o;
        o.inputs = {{"property", property}, {"n", n}};
        o.result = json_rows({row}).front();
        o.text = text_rows({row});
        o.csv = csv_rows({row});
        return o;
    });

    auto* tab = app.add_subcommand("table", "Count table for n = 1..max-n");
    tab->add_option("--kind", kind, "one-costas | costas | convex");
    tab->add_option("--max-n", max_n)->required();
    bind(tab, "table", [&] {
        const auto rows = table(parse_kind(kind), max_n, workers);
        Outcome o;
        o.inputs = {{"kind", kind}, {"max_n", max_n}};
        o.result = json_rows(rows);
        o.text = text_rows(rows);
        o.csv = csv_rows(rows);
        if (parse_kind(kind) == TableKind::one_costas) {
            bool decreasing = true;
            for (std::size_t i = 1; i < rows.size(); ++i) {
                decreasing = decreasing && rows[i].fraction_tenths <= rows[i - 1].fraction_tenths;
            }
            o.metadata["fraction_non_increasing"] = decreasing;
        }
        return o;
    });

    auto* gam = app.add_subcommand("gamma", "Longest Costas subpermutation of order n");
    gam->add_option("--n", n)->required();
    bind(gam, "gamma", [&] {
        const auto g = gamma(n);
        Outcome o;
        o.inputs = {{"n", n}};
        o.result = {{"m", g.m}, {"witness", g.witness}};
        o.text = "m: " + std::to_string(g.m) + "\nwitness: " + join(g.witness) + "\n";
        return o;
    });

    auto* verify = app.add_subcommand("verify", "Recompute reference values");
    verify->require_subcommand(1, 1);
    verify->fallthrough();
    auto* v_fig = verify->add_subcommand("figure1", "1-Costas count table");
    v_fig->add_option("--max-n", max_n);
    bind(v_fig, "verify figure1", [&] {
        Outcome o = check_outcomes(verify_figure1(max_n, workers));
        o.inputs = {{"max_n", max_n}};
        const auto rows = table(TableKind::one_costas, max_n, workers);
        o.result["rows"] = json_rows(rows);
        o.text = text_rows(rows) + o.text;
        o.csv = csv_rows(rows);
        return o;
    });
    auto* v_ex = verify->add_subcommand("examples", "Worked examples");
    bind(v_ex, "verify examples", [&] { return check_outcomes(verify_examples()); });

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitInvalid;
    }

    // nested groups register no callback of their own; a bare group is caught by
    // require_subcommand above
    const Format format = format_name == "json"  ? Format::json
                          : format_name == "csv" ? Format::csv
                                                 : Format::text;
    try {
        const auto started = std::chrono::steady_clock::now();
        Outcome o = action();
        const auto elapsed = std::chrono::steady_clock::now() - started;
        o.metadata["workers"] = workers;
        o.metadata["runtime_ms"] =
            std::chrono::duration<double, std::milli>(elapsed).count();
        emit(o, format, command, out);
        return o.exit_code;
    } catch (const Error& e) {
        err << "error: " << to_string(e.code()) << ": " << e.what() << "\n";
        return kExitInvalid;
    }
}

} // namespace permderiv::cli
