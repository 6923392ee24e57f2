#pragma once

#define CPPHTTPLIB_OPENSSL_SUPPORT
#include <httplib.h>

#include <unistd.h>

#include <atomic>
#include <cctype>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "rwl/bigmath.hpp"
#include "rwl/errors.hpp"

namespace rwl {

enum class SequenceSource { fetched, cached, vendored };

inline const char* source_name(SequenceSource s) {
    switch (s) {
        case SequenceSource::fetched: return "fetched";
        case SequenceSource::cached: return "cached";
        case SequenceSource::vendored: return "vendored";
    }
    return "?";
}

// A parsed b-file: (index, value) pairs with strictly increasing indices.
struct SequenceRecord {
    std::string id;
    std::vector<std::pair<long long, BigInt>> terms;
    SequenceSource source = SequenceSource::vendored;

    long long first_index() const { return terms.front().first; }

    std::optional<BigInt> at(long long index) const {
        for (const auto& [i, v] : terms)
            if (i == index) return v;
        return std::nullopt;
    }
};

// Where sequence data comes from. Resolution order for the cache directory:
// explicit setting, RWL_OEIS_CACHE, then "oeis_cache" under the current
// directory. The fixture directory ships with the repository (data/oeis) so
// the whole suite runs with zero network.
struct OeisOptions {
    bool offline = false;
    std::string cache_dir;
    std::string fixture_dir;
    std::string host = "oeis.org";
    int port = 443;
    bool use_tls = true; // plain HTTP exists for tests against a local server

    std::filesystem::path resolved_cache_dir() const {
        if (!cache_dir.empty()) return cache_dir;
        if (const char* env = std::getenv("RWL_OEIS_CACHE")) return env;
        return "oeis_cache";
    }

    std::filesystem::path resolved_fixture_dir() const {
        if (!fixture_dir.empty()) return fixture_dir;
        if (const char* env = std::getenv("RWL_OEIS_FIXTURES")) return env;
#ifdef RWL_DATA_DIR
        return RWL_DATA_DIR;
#else
        return "data/oeis";
#endif
    }
};

namespace oeis_detail {

// "A" followed by exactly six digits.
inline std::string check_id(const std::string& id) {
    if (id.size() != 7 || id[0] != 'A')
        throw parameter_error("OEIS id must look like A233449, got \"" + id + "\"");
    for (size_t i = 1; i < id.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(id[i])))
            throw parameter_error("OEIS id must look like A233449, got \"" + id + "\"");
    return id.substr(1);
}

inline std::string bfile_name(const std::string& id) { return "b" + check_id(id) + ".txt"; }

inline std::optional<std::string> read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// Write-temp-then-rename so that concurrent readers never observe a torn
// file; the temp name is unique per process and writer.
inline void write_file_atomic(const std::filesystem::path& path, const std::string& content) {
    static std::atomic<unsigned> serial{0};
    std::filesystem::create_directories(path.parent_path().empty() ? "." : path.parent_path());
    const std::filesystem::path tmp = path.string() + ".tmp" + std::to_string(::getpid()) + "." +
                                      std::to_string(serial.fetch_add(1));
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        out << content;
        if (!out) throw network_error("cache write failed: " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
}

} // namespace oeis_detail

// Parses b-file text: '#' comment lines, blank lines, then whitespace
// separated "index value" pairs, one per line. Indices must strictly
// increase.
inline SequenceRecord parse_bfile(const std::string& id, const std::string& text,
                                  SequenceSource source) {
    oeis_detail::check_id(id);
    SequenceRecord record{id, {}, source};
    std::istringstream in(text);
    std::string line;
    long long line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos) continue;
        if (line[start] == '#') continue;
        std::istringstream fields(line.substr(start));
        long long index;
        std::string value;
        if (!(fields >> index >> value))
            throw bfile_parse_error(id + " b-file line " + std::to_string(line_no) +
                                    ": expected \"index value\", got \"" + line + "\"");
        std::string trailing;
        if (fields >> trailing)
            throw bfile_parse_error(id + " b-file line " + std::to_string(line_no) +
                                    ": trailing field \"" + trailing + "\"");
        if (!record.terms.empty() && index <= record.terms.back().first)
            throw bfile_parse_error(id + " b-file line " + std::to_string(line_no) +
                                    ": indices must strictly increase");
        try {
            record.terms.emplace_back(index, BigInt(value));
        } catch (const std::exception&) {
            throw bfile_parse_error(id + " b-file line " + std::to_string(line_no) +
                                    ": bad integer \"" + value + "\"");
        }
    }
    if (record.terms.empty()) throw bfile_parse_error(id + ": b-file has no terms");
    return record;
}

// Retrieves the b-file for an OEIS id. Cache first; otherwise the vendored
// fixture (always, when offline; as a fallback after a network failure when
// online); otherwise an HTTPS GET of /A<digits>/b<digits>.txt which is then
// cached atomically.
inline SequenceRecord fetch_bfile(const std::string& id, const OeisOptions& options = {}) {
    const std::string digits = oeis_detail::check_id(id);
    const std::string fname = oeis_detail::bfile_name(id);

    const auto cache_path = options.resolved_cache_dir() / fname;
    if (auto text = oeis_detail::read_file(cache_path))
        return parse_bfile(id, *text, SequenceSource::cached);

    const auto fixture_path = options.resolved_fixture_dir() / fname;
    if (options.offline) {
        if (auto text = oeis_detail::read_file(fixture_path))
            return parse_bfile(id, *text, SequenceSource::vendored);
        throw offline_miss_error(id + ": offline and neither cached (" + cache_path.string() +
                                 ") nor vendored (" + fixture_path.string() + ")");
    }

    const std::string path = "/A" + digits + "/" + fname;
    auto perform_get = [&]() -> httplib::Result {
        if (options.use_tls) {
            httplib::SSLClient client(options.host, options.port);
            client.set_connection_timeout(10);
            client.set_read_timeout(30);
            return client.Get(path);
        }
        httplib::Client client(options.host, options.port);
        client.set_connection_timeout(10);
        client.set_read_timeout(30);
        return client.Get(path);
    };
    auto res = perform_get();
    if (!res || res->status != 200) {
        if (auto text = oeis_detail::read_file(fixture_path))
            return parse_bfile(id, *text, SequenceSource::vendored);
        std::string why = res ? "HTTP " + std::to_string(res->status)
                              : "transport error: " + httplib::to_string(res.error());
        throw network_error(id + ": fetch failed (" + why + ") and no cache or fixture available");
    }
    SequenceRecord record = parse_bfile(id, res->body, SequenceSource::fetched);
    oeis_detail::write_file_atomic(cache_path, res->body);
    return record;
}

// Per-term comparison of computed values against a record. computed[i] is
// aligned with record index offset + i; only the overlap is compared.
struct CompareReport {
    std::string id;
    long long offset = 0;
    long long compared = 0;
    bool agree = false;
    long long first_mismatch_index = -1; // record index, -1 when none
    std::string first_mismatch_expected;
    std::string first_mismatch_actual;
};

inline CompareReport compare_sequence(const SequenceRecord& record,
                                      const std::vector<BigInt>& computed, long long offset) {
    CompareReport report;
    report.id = record.id;
    report.offset = offset;
    report.agree = true;
    for (const auto& [index, value] : record.terms) {
        const long long pos = index - offset;
        if (pos < 0 || pos >= static_cast<long long>(computed.size())) continue;
        ++report.compared;
        if (computed[static_cast<size_t>(pos)] != value && report.agree) {
            report.agree = false;
            report.first_mismatch_index = index;
            report.first_mismatch_expected = value.str();
            report.first_mismatch_actual = computed[static_cast<size_t>(pos)].str();
        }
    }
    if (report.compared == 0)
        throw parameter_error(record.id + ": no overlap between computed terms and the b-file at offset " +
                              std::to_string(offset));
    return report;
}

} // namespace rwl
