#include "ticc/code_spec.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "ticc/errors.hpp"
#include "ticc/rng.hpp"

namespace ticc {

void validate(const CodeSpec& spec) {
    if (spec.k <= 0 || spec.k >= spec.n)
        throw error(errc::invalid_parameters, "require 0 < k < n, got n=" + std::to_string(spec.n) +
                                                  " k=" + std::to_string(spec.k));
    if (spec.w < 1) throw error(errc::invalid_parameters, "require w >= 1, got w=" + std::to_string(spec.w));
    const std::size_t expect = static_cast<std::size_t>(spec.checks()) * spec.n;
    if (spec.delays.size() != expect)
        throw error(errc::invalid_parameters, "delay matrix must be (n-k) x n");
    for (int d : spec.delays)
        if (d < 0 || d >= spec.w)
            throw error(errc::invalid_parameters,
                        "delay " + std::to_string(d) + " out of range [0, " + std::to_string(spec.w - 1) + "]");
}

CodeSpec sample(int n, int k, int w, std::uint64_t seed) {
    if (k <= 0 || k >= n) throw error(errc::invalid_parameters, "require 0 < k < n");
    if (w < 1) throw error(errc::invalid_parameters, "require w >= 1");
    CodeSpec spec;
    spec.n = n;
    spec.k = k;
    spec.w = w;
    spec.seed = seed;
    spec.prng = kPrngName;
    spec.delays.resize(static_cast<std::size_t>(n - k) * n);
    Rng rng(derive_seed(seed, "sample"));
    for (auto& d : spec.delays) d = static_cast<int>(rng.uniform_below(static_cast<std::uint64_t>(w)));
    return spec;
}

int memory(const CodeSpec& spec) {
    return *std::max_element(spec.delays.begin(), spec.delays.end());
}

int constraint_length(const CodeSpec& spec) {
    int sum = 0;
    for (int i = 0; i < spec.checks(); ++i) {
        int row_max = 0;
        for (int j = 0; j < spec.n; ++j) row_max = std::max(row_max, spec.delay(i, j));
        sum += row_max;
    }
    return sum;
}

std::vector<std::pair<int, DiffVector>> diff_vectors(const CodeSpec& spec) {
    std::vector<std::pair<int, DiffVector>> out;
    out.reserve(static_cast<std::size_t>(spec.checks()) * spec.n * (spec.n - 1));
    for (int i = 0; i < spec.checks(); ++i)
        for (int j = 0; j < spec.n; ++j)
            for (int jp = 0; jp < spec.n; ++jp) {
                if (jp == j) continue;
                out.emplace_back(i + 1, DiffVector{jp - j, spec.delay(i, jp) - spec.delay(i, j)});
            }
    return out;
}

bool has_distinct_vectors(const CodeSpec& spec) {
    auto all = diff_vectors(spec);
    std::vector<DiffVector> vecs;
    vecs.reserve(all.size());
    for (auto& [check, v] : all) vecs.push_back(v);
    std::sort(vecs.begin(), vecs.end());
    return std::adjacent_find(vecs.begin(), vecs.end()) == vecs.end();
}

bool has_identical_check_rows(const CodeSpec& spec) {
    const int c = spec.checks();
    for (int a = 0; a < c; ++a)
        for (int b = a + 1; b < c; ++b) {
            bool same = true;
            for (int j = 0; j < spec.n && same; ++j) same = spec.delay(a, j) == spec.delay(b, j);
            if (same) return true;
        }
    return false;
}

std::uint64_t spec_hash(const CodeSpec& spec) {
    std::ostringstream os;
    os << spec.n << ',' << spec.k << ',' << spec.w;
    for (int d : spec.delays) os << ',' << d;
    return fnv1a64(os.str());
}

std::string serialize(const CodeSpec& spec) {
    validate(spec);
    std::ostringstream os;
    os << "ticc 1\n";
    os << spec.n << ' ' << spec.k << ' ' << spec.w << ' ';
    if (spec.seed)
        os << *spec.seed;
    else
        os << '-';
    os << ' ' << (spec.prng.empty() ? "-" : spec.prng) << '\n';
    for (int i = 0; i < spec.checks(); ++i) {
        for (int j = 0; j < spec.n; ++j) {
            if (j) os << ' ';
            os << spec.delay(i, j);
        }
        os << '\n';
    }
    return os.str();
}

namespace {

[[noreturn]] void parse_fail(const std::string& source, int line, int column, const std::string& msg) {
    throw error(errc::parse_error,
                source + ":" + std::to_string(line) + ":" + std::to_string(column) + ": " + msg);
}

struct LineReader {
    std::istream& in;
    const std::string& source;
    int line_no = 0;

    // Returns the next content line (comments and blanks skipped), or
    // nullopt at end of input.
    std::optional<std::string> next() {
        std::string line;
        while (std::getline(in, line)) {
            ++line_no;
            std::size_t start = line.find_first_not_of(" \t\r");
            if (start == std::string::npos) continue;
            if (line[start] == '#') continue;
            if (!line.empty() && line.back() == '\r') line.pop_back();
            return line;
        }
        return std::nullopt;
    }
};

// Splits into tokens, remembering each token's 1-based column.
std::vector<std::pair<std::string, int>> tokenize(const std::string& line) {
    std::vector<std::pair<std::string, int>> toks;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
        if (i >= line.size()) break;
        std::size_t begin = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
        toks.emplace_back(line.substr(begin, i - begin), static_cast<int>(begin) + 1);
    }
    return toks;
}

long long parse_int(const std::string& source, int line, const std::pair<std::string, int>& tok,
                    const char* what) {
    const std::string& s = tok.first;
    std::size_t pos = 0;
    long long value = 0;
    try {
        value = std::stoll(s, &pos);
    } catch (const std::exception&) {
        parse_fail(source, line, tok.second, std::string("expected ") + what + ", got '" + s + "'");
    }
    if (pos != s.size())
        parse_fail(source, line, tok.second, std::string("expected ") + what + ", got '" + s + "'");
    return value;
}

std::uint64_t parse_u64(const std::string& source, int line, const std::pair<std::string, int>& tok,
                        const char* what) {
    const std::string& s = tok.first;
    std::size_t pos = 0;
    unsigned long long value = 0;
    try {
        value = std::stoull(s, &pos);
    } catch (const std::exception&) {
        parse_fail(source, line, tok.second, std::string("expected ") + what + ", got '" + s + "'");
    }
    if (pos != s.size() || s[0] == '-')
        parse_fail(source, line, tok.second, std::string("expected ") + what + ", got '" + s + "'");
    return value;
}

} // namespace

CodeSpec parse(std::istream& in, const std::string& source_name) {
    LineReader reader{in, source_name};

    auto magic = reader.next();
    if (!magic) parse_fail(source_name, reader.line_no + 1, 1, "empty input, expected 'ticc 1'");
    {
        auto toks = tokenize(*magic);
        if (toks.size() != 2 || toks[0].first != "ticc" || toks[1].first != "1")
            parse_fail(source_name, reader.line_no, 1, "bad magic, expected 'ticc 1'");
    }

    auto header = reader.next();
    if (!header) parse_fail(source_name, reader.line_no + 1, 1, "missing parameter line 'n k w [seed [prng]]'");
    CodeSpec spec;
    {
        auto toks = tokenize(*header);
        if (toks.size() < 3 || toks.size() > 5)
            parse_fail(source_name, reader.line_no, 1, "parameter line must be 'n k w [seed [prng]]'");
        spec.n = static_cast<int>(parse_int(source_name, reader.line_no, toks[0], "stream count n"));
        spec.k = static_cast<int>(parse_int(source_name, reader.line_no, toks[1], "info stream count k"));
        spec.w = static_cast<int>(parse_int(source_name, reader.line_no, toks[2], "window w"));
        if (spec.k <= 0 || spec.k >= spec.n)
            parse_fail(source_name, reader.line_no, toks[1].second, "require 0 < k < n");
        if (spec.w < 1) parse_fail(source_name, reader.line_no, toks[2].second, "require w >= 1");
        if (toks.size() >= 4 && toks[3].first != "-")
            spec.seed = parse_u64(source_name, reader.line_no, toks[3], "seed");
        if (toks.size() == 5 && toks[4].first != "-") spec.prng = toks[4].first;
    }

    const int c = spec.checks();
    spec.delays.resize(static_cast<std::size_t>(c) * spec.n);
    for (int i = 0; i < c; ++i) {
        auto row = reader.next();
        if (!row)
            parse_fail(source_name, reader.line_no + 1, 1,
                       "expected " + std::to_string(c) + " delay rows, got " + std::to_string(i));
        auto toks = tokenize(*row);
        if (static_cast<int>(toks.size()) != spec.n)
            parse_fail(source_name, reader.line_no, 1,
                       "delay row must have n=" + std::to_string(spec.n) + " entries, got " +
                           std::to_string(toks.size()));
        for (int j = 0; j < spec.n; ++j) {
            long long d = parse_int(source_name, reader.line_no, toks[j], "delay");
            if (d < 0 || d >= spec.w)
                parse_fail(source_name, reader.line_no, toks[j].second,
                           "delay " + std::to_string(d) + " out of range [0, " + std::to_string(spec.w - 1) + "]");
            spec.delay(i, j) = static_cast<int>(d);
        }
    }

    if (auto extra = reader.next())
        parse_fail(source_name, reader.line_no, 1, "unexpected extra content after delay rows");
    return spec;
}

CodeSpec parse(const std::string& text, const std::string& source_name) {
    std::istringstream is(text);
    return parse(is, source_name);
}

CodeSpec load_spec_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw error(errc::io_error, "cannot open " + path);
    return parse(in, path);
}

void save_spec_file(const CodeSpec& spec, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw error(errc::io_error, "cannot open " + path + " for writing");
    out << serialize(spec);
    if (!out) throw error(errc::io_error, "write failed: " + path);
}

} // namespace ticc
