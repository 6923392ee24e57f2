// Command-line front end: exact labeling counts, formula-vs-oracle
// verification, sequence tables, identity reports and OEIS cross-checks.
//
// Exit codes: 0 success, 1 mathematical mismatch, 2 usage/parameter error.

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "rwl/rwl.hpp"
#include "rwl/verify.hpp"

namespace {

using nlohmann::json;
using namespace rwl;

enum class Format { table, csv, json_doc };

struct TableOut {
    std::vector<std::string> headers;
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> notes; // informational lines, never data

    void add_row(std::vector<std::string> row) { rows.push_back(std::move(row)); }
};

std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

void render(const TableOut& t, Format format, const std::string& command) {
    switch (format) {
        case Format::table: {
            for (const auto& note : t.notes) std::cout << "# " << note << "\n";
            std::vector<size_t> width(t.headers.size());
            for (size_t i = 0; i < t.headers.size(); ++i) width[i] = t.headers[i].size();
            for (const auto& row : t.rows)
                for (size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
            auto line = [&](const std::vector<std::string>& cells) {
                for (size_t i = 0; i < cells.size(); ++i) {
                    std::cout << cells[i];
                    if (i + 1 < cells.size())
                        std::cout << std::string(width[i] - cells[i].size() + 2, ' ');
                }
                std::cout << "\n";
            };
            line(t.headers);
            for (const auto& row : t.rows) line(row);
            break;
        }
        case Format::csv: {
            for (const auto& note : t.notes) std::cerr << "# " << note << "\n";
            for (size_t i = 0; i < t.headers.size(); ++i)
                std::cout << csv_quote(t.headers[i]) << (i + 1 < t.headers.size() ? "," : "\n");
            for (const auto& row : t.rows)
                for (size_t i = 0; i < row.size(); ++i)
                    std::cout << csv_quote(row[i]) << (i + 1 < row.size() ? "," : "\n");
            break;
        }
        case Format::json_doc: {
            json doc;
            doc["command"] = command;
            if (!t.notes.empty()) doc["notes"] = t.notes;
            json rows = json::array();
            for (const auto& row : t.rows) {
                json obj;
                for (size_t i = 0; i < t.headers.size() && i < row.size(); ++i)
                    obj[t.headers[i]] = row[i]; // big integers stay decimal strings
                rows.push_back(std::move(obj));
            }
            doc["rows"] = std::move(rows);
            std::cout << doc.dump(2) << "\n";
            break;
        }
    }
}

// "a..b" or a single value.
std::pair<long long, long long> parse_range(const std::string& text) {
    const auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            const long long v = std::stoll(text);
            return {v, v};
        }
        const long long lo = std::stoll(text.substr(0, dots));
        const long long hi = std::stoll(text.substr(dots + 2));
        if (lo > hi) throw parameter_error("range \"" + text + "\": lower bound exceeds upper");
        return {lo, hi};
    } catch (const parameter_error&) {
        throw;
    } catch (const std::exception&) {
        throw parameter_error("bad range \"" + text + "\", expected N or A..B");
    }
}

// "friendship" is accepted wherever a family name is: it is the one-point
// union of m triangles.
struct FamilyArg {
    Family family;
    bool friendship = false;
};

FamilyArg parse_family_arg(const std::string& name) {
    if (name == "friendship") return {Family::one_point_union, true};
    const auto f = parse_family(name);
    if (!f) throw parameter_error("unknown family \"" + name + "\"");
    return {*f, false};
}

FamilySpec build_spec(const FamilyArg& fam, std::optional<long long> m,
                      std::optional<long long> n) {
    if (fam.friendship) {
        if (!m) throw parameter_error("friendship: parameter m is required");
        if (n) throw parameter_error("friendship: takes only m");
        return FamilySpec::sized(Family::one_point_union, *m, 3);
    }
    FamilySpec spec{fam.family, m, n.value_or(0)};
    if (!n) throw parameter_error(std::string(family_name(fam.family)) + ": parameter n is required");
    return spec;
}

int cmd_count(const std::string& family, std::optional<long long> m, std::optional<long long> n,
              bool with_oracle, Format format) {
    const FamilySpec spec = build_spec(parse_family_arg(family), m, n);
    const CountReport report = evaluate_count(spec, with_oracle);
    TableOut t;
    t.headers = {"family", "m", "n", "formula", "oracle", "agree"};
    t.add_row({family_name(spec.family), spec.m ? std::to_string(*spec.m) : "",
               std::to_string(spec.n), report.formula_value.str(),
               report.oracle_value ? report.oracle_value->str() : "",
               report.agree ? (*report.agree ? "yes" : "NO") : ""});
    render(t, format, "count");
    return report.agree && !*report.agree ? 1 : 0;
}

int cmd_sequence(const std::string& family, const std::optional<std::string>& m_range,
                 const std::optional<std::string>& n_range, Format format) {
    const FamilyArg fam = parse_family_arg(family);
    TableOut t;
    t.headers = {"family", "m", "n", "count"};
    auto add_point = [&](std::optional<long long> m, std::optional<long long> n) {
        const FamilySpec spec = build_spec(fam, m, n);
        t.add_row({family, m ? std::to_string(*m) : "", n ? std::to_string(*n) : "",
                   closed_form_count(spec).str()});
    };
    const bool two_param = fam.friendship || fam.family == Family::barbell ||
                           fam.family == Family::lollipop || fam.family == Family::tadpole ||
                           fam.family == Family::one_point_union || fam.family == Family::snake;
    if (fam.friendship) {
        if (!m_range) throw parameter_error("friendship: --m range is required");
        const auto [lo, hi] = parse_range(*m_range);
        for (long long m = lo; m <= hi; ++m) add_point(m, std::nullopt);
    } else if (two_param) {
        if (!m_range || !n_range)
            throw parameter_error(std::string(family_name(fam.family)) +
                                  ": --m and --n ranges are required");
        const auto [mlo, mhi] = parse_range(*m_range);
        const auto [nlo, nhi] = parse_range(*n_range);
        for (long long m = mlo; m <= mhi; ++m)
            for (long long n = nlo; n <= nhi; ++n) add_point(m, n);
    } else {
        if (!n_range) throw parameter_error(std::string(family_name(fam.family)) +
                                            ": --n range is required");
        if (m_range) throw parameter_error(std::string(family_name(fam.family)) +
                                           ": takes only --n");
        const auto [lo, hi] = parse_range(*n_range);
        for (long long n = lo; n <= hi; ++n) add_point(std::nullopt, n);
    }
    render(t, format, "sequence");
    return 0;
}

int cmd_verify(const std::string& scope, int max_vertices, Format format) {
    static const std::vector<std::string> known = {
        "all",      "oracle",   "theorem1", "profiles", "wheel",        "fan",
        "theorem5", "theorem6", "theorem7", "theorem8", "theorem9",     "coincidences"};
    if (std::find(known.begin(), known.end(), scope) == known.end())
        throw parameter_error("unknown scope \"" + scope + "\"");
    if (max_vertices < 2) throw parameter_error("--max-vertices must be >= 2");

    VerifyRows rows;
    const bool all = scope == "all";
    if (all || scope == "oracle") verify_oracle_agreement(max_vertices, rows);
    if (all || scope == "theorem1") verify_cone_composition(max_vertices, rows);
    if (all || scope == "profiles") verify_profiles(max_vertices, rows);
    if (all || scope == "wheel") verify_wheel(max_vertices, rows);
    if (all || scope == "fan") verify_fan(max_vertices, rows);
    if (all || scope == "theorem5") verify_barbell(max_vertices, rows);
    if (all || scope == "theorem6") verify_lollipop(max_vertices, rows);
    if (all || scope == "theorem7") verify_tadpole(max_vertices, rows);
    if (all || scope == "theorem8") verify_one_point_union(max_vertices, rows);
    if (all || scope == "theorem9") verify_snake(max_vertices, rows);
    if (all || scope == "coincidences") verify_coincidences(rows);

    TableOut t;
    t.headers = {"scope", "point", "status", "detail"};
    bool any_fail = false;
    for (const auto& row : rows) {
        any_fail = any_fail || !row.ok;
        t.add_row({row.scope, row.point, row.ok ? "ok" : "FAIL", row.detail});
    }
    t.notes.push_back(std::to_string(rows.size()) + " checks, " +
                      std::to_string(any_fail ? std::count_if(rows.begin(), rows.end(),
                                                              [](const VerifyRow& r) { return !r.ok; })
                                              : 0) +
                      " failures");
    render(t, format, "verify");
    return any_fail ? 1 : 0;
}

void identity_rows(TableOut& t, const IdentityCheck& c) {
    std::string params;
    for (const auto& [k, v] : c.parameters) {
        if (!params.empty()) params += " ";
        params += k + "=" + v;
    }
    t.add_row({c.name, params, to_string(c.lhs), to_string(c.rhs), c.equal ? "yes" : "no"});
}

int cmd_identity(const std::string& name, long long max, int order, Format format,
                 const OeisOptions& oeis_options) {
    static const std::vector<std::string> known = {"all",     "hockey", "kka",     "a087547",
                                                   "a233449", "ode",    "eulerian"};
    if (std::find(known.begin(), known.end(), name) == known.end())
        throw parameter_error("unknown identity \"" + name + "\"");
    if (max < 1) throw parameter_error("--max must be >= 1");
    if (order < 3) throw parameter_error("--order must be >= 3");

    TableOut t;
    t.headers = {"identity", "parameters", "lhs", "rhs", "equal"};
    bool mismatch = false;
    const bool all = name == "all";
    auto track = [&](const IdentityCheck& c) {
        identity_rows(t, c);
        mismatch = mismatch || !c.equal;
    };

    if (all || name == "hockey") {
        for (long long x = 0; x <= std::min<long long>(max, 20); ++x)
            for (long long r = 0; r <= std::min<long long>(max, 10); ++r)
                for (long long n = 0; n <= std::min<long long>(max, 20); ++n)
                    track(hockey_stick_real(BigRat(x), r, n));
        // random rational upper arguments, fixed seed
        std::mt19937_64 rng(0xfeedbeefULL);
        for (int i = 0; i < 50; ++i) {
            const long long num = static_cast<long long>(rng() % 41) - 20;
            const long long den = 1 + static_cast<long long>(rng() % 9);
            track(hockey_stick_real(BigRat(num, den), static_cast<long long>(rng() % 6),
                                    static_cast<long long>(rng() % 12)));
        }
    }
    if (all || name == "kka") {
        for (long long m = 0; m <= max; ++m)
            for (long long n = 0; n <= max; ++n) track(kka_identity(m, n));
    }
    if (all || name == "a087547") {
        for (long long n = 1; n <= max; ++n) track(a087547_pair(n));
    }
    if (all || name == "a233449") {
        const auto terms = a233449_terms(max + 3);
        for (long long n = 0; n + 2 < static_cast<long long>(terms.size()); ++n) {
            const BigInt rhs = BigInt(n + 4) * terms[static_cast<size_t>(n + 1)] -
                               BigInt(2 * n + 4) * terms[static_cast<size_t>(n)];
            track(IdentityCheck::make("a233449_recurrence", {{"n", std::to_string(n)}},
                                      BigRat(terms[static_cast<size_t>(n + 2)]), BigRat(rhs)));
        }
    }
    if (all || name == "ode") {
        const RationalSeries residual = ode_residual(order);
        const RationalSeries f = a233449_egf(order);
        track(IdentityCheck::make("ode_residual_zero", {{"order", std::to_string(order)}},
                                  BigRat(residual.is_zero() ? 0 : 1), BigRat(0)));
        track(IdentityCheck::make("ode_f0", {{"order", std::to_string(order)}}, f.coeff(0),
                                  BigRat(1)));
        track(IdentityCheck::make("ode_f1", {{"order", std::to_string(order)}},
                                  f.derivative().coeff(0), BigRat(3)));
    }
    if (all || name == "eulerian") {
        bool informational_fail = false;
        for (long long n = 1; n <= max; ++n) {
            const IdentityCheck c = eulerian_claim_report(n);
            identity_rows(t, c);
            informational_fail = informational_fail || !c.equal;
        }
        t.notes.push_back(
            "informational: documented Eulerian claim unverified under the standard "
            "convention <n,1> = 2^n - n - 1; rows above report both sides and do not fail the run");
        (void)informational_fail; // reported, never fatal
        try {
            OeisOptions fixture_only = oeis_options;
            fixture_only.offline = true; // cache or vendored terms only
            const SequenceRecord rec = fetch_bfile("A000295", fixture_only);
            std::vector<BigInt> rhs;
            for (long long n = 1; n <= max; ++n) rhs.push_back(pow2(n) - n - 1);
            const CompareReport cmp = compare_sequence(rec, rhs, 1);
            t.notes.push_back("right-hand sides " +
                              std::string(cmp.agree ? "match" : "DO NOT match") + " A000295 (" +
                              source_name(rec.source) + ", " + std::to_string(cmp.compared) +
                              " terms)");
        } catch (const std::exception&) {
            t.notes.push_back("A000295 terms unavailable offline; skipping the cross-check");
        }
    }

    render(t, format, "identity");
    return mismatch ? 1 : 0;
}

int cmd_oeis(const std::string& id, long long terms, const OeisOptions& options, Format format) {
    std::vector<BigInt> computed;
    long long offset = 0;
    if (id == "A233449") {
        computed = a233449_terms(terms);
        offset = 0;
    } else if (id == "A087547") {
        for (long long n = 1; n <= terms; ++n) computed.push_back(a087547_value(n));
        offset = 1;
    } else if (id == "A130128") {
        // triangle rows: entry (n, k) = path_disrupted(n, k), k = 1..n,
        // read by rows; linear b-file index starts at 1
        for (long long n = 1; static_cast<long long>(computed.size()) < terms; ++n)
            for (long long k = 1; k <= n && static_cast<long long>(computed.size()) < terms; ++k)
                computed.push_back(path_disrupted(n, k));
        offset = 1;
    } else {
        throw parameter_error("no generator is mapped to \"" + id +
                              "\" (known: A233449, A087547, A130128)");
    }
    const SequenceRecord record = fetch_bfile(id, options);
    const CompareReport report = compare_sequence(record, computed, offset);
    TableOut t;
    t.headers = {"id", "source", "offset", "compared", "agree", "first_mismatch"};
    t.add_row({report.id, source_name(record.source), std::to_string(report.offset),
               std::to_string(report.compared), report.agree ? "yes" : "NO",
               report.agree ? ""
                            : "index " + std::to_string(report.first_mismatch_index) + ": expected " +
                                  report.first_mismatch_expected + ", computed " +
                                  report.first_mismatch_actual});
    render(t, format, "oeis");
    return report.agree ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact counting of random walk labelings of graph families"};
    app.require_subcommand(1);
    app.fallthrough(); // global flags may follow the subcommand name

    std::string format_name = "table";
    OeisOptions oeis_options;
    app.add_option("--format", format_name, "Output format")
        ->check(CLI::IsMember({"table", "csv", "json"}))
        ->capture_default_str();
    app.add_flag("--offline", oeis_options.offline,
                 "Never touch the network; use cache or vendored fixtures");
    app.add_option("--cache-dir", oeis_options.cache_dir,
                   "Sequence cache directory (default: $RWL_OEIS_CACHE or ./oeis_cache)");
    app.add_option("--fixture-dir", oeis_options.fixture_dir,
                   "Vendored fixture directory (default: $RWL_OEIS_FIXTURES or the repo's data/oeis)");

    auto* count = app.add_subcommand("count", "Closed-form count of one family member");
    std::string family;
    std::optional<long long> m_value, n_value;
    bool with_oracle = false;
    count->add_option("--family", family, "Family name (or friendship)")->required();
    count->add_option("--m", m_value, "First size parameter");
    count->add_option("--n", n_value, "Second size parameter");
    count->add_flag("--oracle", with_oracle, "Also run the subset-DP oracle and compare");

    auto* verify = app.add_subcommand("verify", "Formula-vs-oracle verification sweeps");
    std::string scope = "all";
    int max_vertices = 12;
    verify->add_option("--scope", scope, "all or a named sweep")->capture_default_str();
    verify->add_option("--max-vertices", max_vertices, "Vertex budget for oracle comparisons")
        ->capture_default_str();

    auto* sequence = app.add_subcommand("sequence", "Tabulate counts over parameter ranges");
    std::string seq_family;
    std::optional<std::string> m_range, n_range;
    sequence->add_option("--family", seq_family, "Family name (or friendship)")->required();
    sequence->add_option("--m", m_range, "Range for m, e.g. 1..4");
    sequence->add_option("--n", n_range, "Range for n, e.g. 3..6");

    auto* identity = app.add_subcommand("identity", "Exact identity checks");
    std::string identity_name = "all";
    long long identity_max = 20;
    int ode_order = 50;
    identity->add_option("--name", identity_name, "all or a specific identity")
        ->capture_default_str();
    identity->add_option("--max", identity_max, "Sweep bound")->capture_default_str();
    identity->add_option("--order", ode_order, "Series truncation order for the ode check")
        ->capture_default_str();

    auto* oeis = app.add_subcommand("oeis", "Compare computed terms against an OEIS b-file");
    std::string oeis_id;
    long long oeis_terms = 40;
    oeis->add_option("id", oeis_id, "Sequence id, e.g. A233449")->required();
    oeis->add_option("--terms", oeis_terms, "How many terms to compute")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2; // help prints with 0; every parse failure is a usage error
    }

    const Format format = format_name == "csv"  ? Format::csv
                          : format_name == "json" ? Format::json_doc
                                                  : Format::table;
    try {
        if (count->parsed()) return cmd_count(family, m_value, n_value, with_oracle, format);
        if (verify->parsed()) return cmd_verify(scope, max_vertices, format);
        if (sequence->parsed()) return cmd_sequence(seq_family, m_range, n_range, format);
        if (identity->parsed())
            return cmd_identity(identity_name, identity_max, ode_order, format, oeis_options);
        if (oeis->parsed()) return cmd_oeis(oeis_id, oeis_terms, oeis_options, format);
    } catch (const parameter_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const offline_miss_error& e) {
        std::cerr << "offline: " << e.what() << "\n";
        return 2;
    } catch (const integrality_error& e) {
        std::cerr << "integrality violation: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
